#pragma once

#include "tsj/rational.hpp"

#include <complex>
#include <vector>

namespace tsj {

/// Mixed partial derivative of B(a, b) = Integral_0^1 x^a (1-x)^b dx
/// at a = alpha, b = beta (both > -1): i times in a, j times in b.
/// Gamma route: log-Taylor coefficients from polygamma values, assembled
/// by the exponential-of-series recurrence.
double beta_value(const Rational& alpha, const Rational& beta, int i, int j);

/// Independent quadrature route for the same quantity: tanh-sinh rule on
/// x^alpha (1-x)^beta log^i(x) log^j(1-x), which handles the endpoint
/// singularities. Test oracle and certification path.
double beta_value_quadrature(const Rational& alpha, const Rational& beta, int i, int j);

/// The twist operator on the tensor of two shift blocks of sizes n1, n2.
struct BetaTwist {
    Rational alpha, beta;
    long n1 = 1, n2 = 1;
    std::vector<std::complex<double>> block; // row-major (n1*n2) x (n1*n2)
    double base = 0;                         // B(alpha, beta)
    double det_abs = 0;
    /// |det|^(1/dim): the size-independent invertibility margin (the raw
    /// determinant shrinks geometrically with the block dimension).
    double det_scale = 0;

    long dim() const { return n1 * n2; }
    std::complex<double>& at(long r, long c) { return block[static_cast<size_t>(r * dim() + c)]; }
    const std::complex<double>& at(long r, long c) const {
        return block[static_cast<size_t>(r * dim() + c)];
    }
};

/// Builds sum_{i,j} B^{i,j}(alpha,beta)/(i! j!) (-N1)^i (x) (-N2)^j on the
/// block pair, times (alpha+beta+1-N) when alpha+beta > -1 (N the tensor
/// nilpotent). The result must be invertible; a tiny determinant means an
/// implementation bug and raises.
BetaTwist beta_twist_operator(const EigExp& alpha, const EigExp& beta, long n1, long n2);

/// Max relative deviation between the two derivative routes over the
/// orders the operator consumes.
double beta_twist_deviation(const EigExp& alpha, const EigExp& beta, long n1, long n2);

/// Max norm of the commutator [twist, N (x) id + id (x) N]; the twist is a
/// polynomial in the two shifts, so this must vanish to rounding.
double beta_twist_commutator_norm(const BetaTwist& t);

} // namespace tsj
