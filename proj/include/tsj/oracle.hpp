#pragma once

#include "tsj/mhsm.hpp"
#include "tsj/rational.hpp"

#include <map>
#include <vector>

namespace tsj {

/// Exponent list of a diagonal polynomial x1^a1 + ... + xn^an, each ai >= 2.
struct BPExponents {
    std::vector<long> exps;
    explicit BPExponents(std::vector<long> e) : exps(std::move(e)) {
        if (exps.empty()) throw std::invalid_argument("exponent list must be nonempty");
        for (long a : exps)
            if (a < 2) throw std::invalid_argument("exponents must be at least 2");
    }
    long vars() const { return static_cast<long>(exps.size()); }
};

long long milnor_number(const BPExponents& e);

/// Spectrum multiset { sum_i k_i/a_i : 1 <= k_i <= a_i - 1 }, enumerated
/// over the monomial basis (never via the join; this module is the
/// independent ground truth and must not depend on it). Enumeration is
/// data-parallel over the lattice.
std::map<Rational, long> bp_spectrum(const BPExponents& e);
/// Serial reference enumeration.
std::map<Rational, long> bp_spectrum_serial(const BPExponents& e);

/// Vanishing cohomology with its Hodge data: one length-1 block per
/// spectral value s, at exponent alpha = -(s mod 1) in (-1, 0], Hodge
/// offset p = -(s + alpha), weight n-1 for non-integer s and n otherwise
/// (finite-order monodromy, so N = 0 throughout).
Mhsm bp_mhsm(const BPExponents& e);

/// True when the multiset is invariant under s -> n - s.
bool symmetry_check(const std::map<Rational, long>& spectrum, long n);

} // namespace tsj
