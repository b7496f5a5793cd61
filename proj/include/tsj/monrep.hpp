#pragma once

#include "tsj/matrix.hpp"
#include "tsj/polynomial.hpp"
#include "tsj/rational.hpp"

#include <optional>

namespace tsj {

/// One canonical piece of a quasi-unipotent monodromy representation:
/// `mult` Jordan blocks of the given size at eigenvalue exp(-2*pi*i*exp).
struct MonRepBlock {
    EigExp exp;
    long size = 1;
    long mult = 1;
    friend bool operator==(const MonRepBlock& a, const MonRepBlock& b) {
        return a.exp == b.exp && a.size == b.size && a.mult == b.mult;
    }
};

/// Quasi-unipotent monodromy representation in canonical form: a merged,
/// sorted multiset of (exponent, Jordan size, multiplicity).
class MonRep {
public:
    MonRep() = default;
    explicit MonRep(std::vector<MonRepBlock> blocks);
    static MonRep unit(); // trivial one-dimensional representation

    const std::vector<MonRepBlock>& blocks() const { return blocks_; }
    long total_dim() const;
    bool operator==(const MonRep& o) const { return blocks_ == o.blocks_; }

    std::string to_string() const;

private:
    std::vector<MonRepBlock> blocks_;
};

/// Galois orbit of eigenvalues, given by a monic polynomial with nonzero
/// constant term, squarefree (one orbit = one irreducible factor; a
/// squarefree product selects the union of its orbits).
class GalOrbit {
public:
    explicit GalOrbit(QPoly poly);
    const QPoly& poly() const { return poly_; }
    long degree() const { return poly_.degree(); }
    /// Orbit of the inverse eigenvalues (reciprocal polynomial, monic).
    GalOrbit inverse_orbit() const;

private:
    QPoly poly_;
};

enum class StdKind { unipotent, semisimple, mixed };

/// Standard variation: a single unipotent Jordan block of rank k+1, the
/// semisimple orbit module for P, or their tensor.
struct StdVariation {
    StdKind kind;
    long k = 0;
    std::optional<GalOrbit> orbit;
};

struct Realization {
    MonRep rep;
    QMatrix matrix;
};

/// Canonical form of an invertible quasi-unipotent matrix: eigenvalue
/// exponents with Jordan sizes and multiplicities, one entry per exponent
/// in each Galois orbit. Throws when t is singular or its characteristic
/// polynomial is not a product of cyclotomic polynomials.
MonRep canonical_form(const QMatrix& t);

/// Concrete matrix model of a standard variation plus its canonical form.
Realization make_std(const StdVariation& v);

/// Monodromy of a join: exponents add and fold back into (-1, 0], Jordan
/// structure follows the Clebsch-Gordan rule
/// J_k (x) J_l = sum over i < min(k, l) of J_(k+l-1-2i).
MonRep tensor_join(const MonRep& a, const MonRep& b);

/// Block-diagonal rational matrix realization of a canonical representation.
/// Requires the exponent multiset to be closed under each Galois orbit.
QMatrix realize(const MonRep& r);

/// The part of r with semisimple eigenvalues in the INVERSE orbit of
/// `orbit`, with Jordan sizes truncated to at most k+1. Computed literally:
/// kernel of (T_s (x) T_s - id) + (N (x) id + id (x) N) on r tensored with
/// the standard variation E_k^orbit, then the trace projection down to the
/// underlying space of r. For cyclotomic orbits the inverse orbit has the
/// same polynomial, so the inversion is invisible there.
MonRep lambda_part(const MonRep& r, const GalOrbit& orbit, long k);

/// Round trip through the inverse construction: per orbit, the kernel of
/// (T_s (x) T_s^-1 - id) + (N (x) id - id (x) N) on r tensored with the
/// matching standard variation carries the monodromy action of the second
/// factor; returns its canonical form, which must reproduce r.
MonRep eta_inverse(const MonRep& r);

} // namespace tsj
