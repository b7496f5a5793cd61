#pragma once

#include "tsj/matrix.hpp"
#include "tsj/polynomial.hpp"
#include "tsj/subspace.hpp"

namespace tsj {

/// In-place reduced row echelon form. Returns the pivot columns.
std::vector<long> rref_in_place(QMatrix& m);

long rank(const QMatrix& m);

/// Basis of the right kernel {x : m x = 0}, canonicalized.
Subspace kernel(const QMatrix& m);

/// Column span of m, canonicalized.
Subspace image(const QMatrix& m);

struct SolveResult {
    long rank;
    Subspace kernel;
    Subspace image;
};

/// Rank, kernel and image of a linear map given by a matrix.
SolveResult solve(const QMatrix& m);

/// Inverse of a square invertible matrix; throws on singular input.
QMatrix inverse(const QMatrix& m);

Rational determinant(const QMatrix& m);

/// Characteristic polynomial det(x*I - m), monic of degree n.
/// Computed modulo a set of word-size primes (Hessenberg reduction per
/// prime, prime loop data-parallel) and reconstructed by CRT against a
/// Hadamard-style coefficient bound, so the result is exact.
QPoly charpoly(const QMatrix& m);

/// Serial single-prime-free reference (Faddeev-LeVerrier), exact rational
/// arithmetic throughout. Kept for cross-checking the modular path.
QPoly charpoly_serial(const QMatrix& m);

/// Jordan-Chevalley decomposition t = t_s * t_u over the rationals:
/// t_s semisimple, t_u unipotent, both polynomial expressions in t.
/// Throws on singular input.
std::pair<QMatrix, QMatrix> semisimple_unipotent_parts(const QMatrix& t);

/// log of a unipotent matrix (finite series); input must be unipotent.
QMatrix nilpotent_log(const QMatrix& unipotent);

} // namespace tsj
