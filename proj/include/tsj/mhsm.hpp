#pragma once

#include "tsj/filtration.hpp"
#include "tsj/nilpotent.hpp"
#include "tsj/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <tuple>

namespace tsj {

/// Hodge-Lefschetz building block: a k-dimensional piece at exponent alpha
/// whose F jumps one dimension at each of p, p+1, ..., p+k-1, whose weights
/// are w, w+2, ..., w+2(k-1) (so the weight filtration is the monodromy
/// filtration of N centered at w+k-1), and whose N is a single shift block.
/// The F level p+j carries the weight w+2j; N lowers both by one step.
struct ElementaryBlock {
    EigExp alpha;
    long p = 0;
    long w = 0;
    long k = 1;
    long mult = 1;

    friend bool operator==(const ElementaryBlock& a, const ElementaryBlock& b) {
        return a.alpha == b.alpha && a.p == b.p && a.w == b.w && a.k == b.k && a.mult == b.mult;
    }
};

/// One exponent slice of a mixed Hodge structure with monodromy:
/// bifiltered space (F, W) with nilpotent N. The semisimple monodromy acts
/// on this slice as the scalar exp(-2*pi*i*alpha), so it is not stored.
struct MhsmPart {
    long dim = 0;
    Filtration F{0};
    Filtration W{0};
    QMatrix N;
};

/// Mixed Hodge structure with monodromy at a point, presented either as a
/// direct sum of elementary blocks (split form), as explicit matrices per
/// exponent, or both. Operations that can work on the split form do; the
/// explicit form is materialized on request.
class Mhsm {
public:
    Mhsm() = default;

    static Mhsm zero();
    static Mhsm from_blocks(const std::vector<ElementaryBlock>& blocks);
    static Mhsm from_parts(std::map<Rational, MhsmPart> parts);
    /// Both representations at once (deserialization); the caller vouches
    /// that they describe the same structure.
    static Mhsm from_blocks_and_parts(const std::vector<ElementaryBlock>& blocks,
                                      std::map<Rational, MhsmPart> parts);

    bool has_blocks() const { return blocks_.has_value(); }
    bool has_parts() const { return parts_.has_value(); }
    bool is_zero() const { return total_dim() == 0; }

    const std::vector<ElementaryBlock>& blocks() const;
    const std::map<Rational, MhsmPart>& parts() const;

    /// Same structure with the explicit matrices filled in (expands the
    /// block form when no explicit form is present).
    Mhsm materialized() const;

    long total_dim() const;
    std::map<Rational, long> dims_by_exponent() const;

private:
    std::optional<std::vector<ElementaryBlock>> blocks_;
    std::optional<std::map<Rational, MhsmPart>> parts_;
};

/// Canonical ordering/merging of a block list; throws on invalid fields.
std::vector<ElementaryBlock> canonicalize_blocks(std::vector<ElementaryBlock> blocks);

/// Empty when all invariants hold; otherwise one message per violation,
/// each naming the exponent and the failed condition.
std::vector<std::string> validate(const Mhsm& m);

/// Throws invalid_argument when validate(m) is nonempty.
void require_valid(const Mhsm& m);

/// dim Gr^F_p Gr^W_w of each part: (alpha, p, w) -> dimension.
std::map<std::tuple<Rational, long, long>, long> graded_dims(const Mhsm& m);

struct SpectralPair {
    Rational s;
    long w;
    long mult;
    friend bool operator==(const SpectralPair& a, const SpectralPair& b) {
        return a.s == b.s && a.w == b.w && a.mult == b.mult;
    }
};

/// Multiset of (spectral exponent, weight): s = -(alpha + p) per graded
/// piece, sorted by (s, w).
std::vector<SpectralPair> spectral_pairs(const Mhsm& m);

/// Basis-independent certificate: per exponent, the bigraded dimensions,
/// the Jordan type of N, and the ranks of N^j between weight-graded pieces.
struct PartCertificate {
    long dim = 0;
    std::map<std::pair<long, long>, long> graded; // (p, w) -> dim
    std::vector<long> jordan;                     // descending
    std::map<std::pair<long, long>, long> nranks; // (j, l) -> rank of N^j: Gr_l -> Gr_(l-2j)
    friend bool operator==(const PartCertificate& a, const PartCertificate& b) {
        return a.dim == b.dim && a.graded == b.graded && a.jordan == b.jordan &&
               a.nranks == b.nranks;
    }
};

struct IsoCertificate {
    std::map<Rational, PartCertificate> parts;
    friend bool operator==(const IsoCertificate& a, const IsoCertificate& b) {
        return a.parts == b.parts;
    }
    std::string to_string() const;
};

IsoCertificate iso_invariants(const Mhsm& m);

/// Reads an elementary-block decomposition back off a certificate of a
/// split structure; nullopt when the certificate is not consistent with
/// a direct sum of elementary blocks.
std::optional<std::vector<ElementaryBlock>> blocks_from_certificate(const IsoCertificate& c);

/// Tensor product with no filtration shifts: exponents add (folded into
/// (-1, 0]), F and W convolve with zero shift, N = N (x) id + id (x) N.
/// A differential control for the twisted join.
Mhsm tensor_plain(const Mhsm& a, const Mhsm& b);

namespace detail {

/// Shared bifiltered product on explicit parts. The policy returns the
/// (F, W) convolution shifts for an exponent pair.
using ShiftPolicy = std::function<std::pair<int, int>(const EigExp&, const EigExp&)>;
Mhsm bifiltered_product(const Mhsm& a, const Mhsm& b, const ShiftPolicy& policy);

} // namespace detail

} // namespace tsj
