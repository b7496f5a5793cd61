#pragma once

#include "tsj/mhsm.hpp"

namespace tsj {

/// Filtration shifts attached to an exponent pair.
/// f_shift is 1 exactly when alpha + beta <= -1; w_shift is 0 when
/// alpha*beta = 0, 2 when alpha + beta = -1, and 1 otherwise. The boundary
/// alpha + beta = -1 belongs to the shifted Hodge branch.
struct ShiftCase {
    int f_shift;
    int w_shift;
    friend bool operator==(const ShiftCase& a, const ShiftCase& b) {
        return a.f_shift == b.f_shift && a.w_shift == b.w_shift;
    }
};

ShiftCase classify_case(const EigExp& alpha, const EigExp& beta);

/// Twisted exterior product of two elementary blocks: output exponent
/// alpha+beta folded into (-1, 0], Hodge offset p1+p2-f_shift, bottom
/// weight w1+w2+w_shift, Jordan lengths by Clebsch-Gordan. Closed form of
/// what the literal filtration convolutions produce on a block pair.
std::vector<ElementaryBlock> join_block_pair(const ElementaryBlock& a, const ElementaryBlock& b);

/// Twisted exterior product. Dispatches to the block kernel when both
/// inputs are split, otherwise executes the filtration formulas on the
/// explicit matrices.
Mhsm twisted_join(const Mhsm& a, const Mhsm& b);

/// Block kernel, data-parallel over block pairs with a deterministic
/// canonical merge.
Mhsm twisted_join_blocks(const Mhsm& a, const Mhsm& b);
/// Serial reference for the block kernel.
Mhsm twisted_join_blocks_serial(const Mhsm& a, const Mhsm& b);

/// Literal path: convolves the stored filtration subspaces on the tensor
/// space, pair of exponents by pair of exponents. Serial; the reference
/// implementation the block kernel is tested against.
Mhsm twisted_join_literal(const Mhsm& a, const Mhsm& b);

/// Truncated model of the graded direct image: both factors spread over
/// `window` integer translates of each exponent with the shift operators
/// realized as identities, and the degreewise cokernel of
/// (shift in the first factor) - (shift in the second factor) is measured.
/// Interior degrees (no truncated relation touches them) must match the
/// predicted dimensions.
struct GradedImageModel {
    std::map<Rational, long> interior;  // degree -> cokernel dimension
    std::map<Rational, long> boundary;  // degrees polluted by truncation
    std::map<Rational, long> predicted; // expected dimension at interior degrees
};

GradedImageModel graded_direct_image_model(const Mhsm& m1, const Mhsm& m2, long window);

} // namespace tsj
