#pragma once

#include "tsj/matrix.hpp"
#include "tsj/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tsj {

/// Dense univariate polynomial over the rationals, coefficients low to high.
/// The zero polynomial has an empty coefficient vector and degree -1.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly constant(const Rational& a) { return QPoly({a}); }
    static QPoly x();

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(long k) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly scaled(const Rational& a) const;
    QPoly monic() const;
    QPoly derivative() const;

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den);
    /// Exact division; throws if the remainder is nonzero.
    QPoly divided_by(const QPoly& den) const;

    /// Monic gcd over the rationals.
    static QPoly gcd(const QPoly& a, const QPoly& b);
    /// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
    static std::tuple<QPoly, QPoly, QPoly> extended_gcd(const QPoly& a, const QPoly& b);

    Rational eval(const Rational& x) const;
    QMatrix eval(const QMatrix& m) const;

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// The n-th cyclotomic polynomial (monic, integer coefficients).
QPoly cyclotomic(unsigned long n);

unsigned long euler_phi(unsigned long n);

/// Cyclotomic factorization p = prod Phi_n ^ e_n with positive leading
/// coefficient; returns nullopt when p has a non-cyclotomic factor.
/// (Used to detect quasi-unipotence: all roots must be roots of unity.)
std::optional<std::map<unsigned long, long>> cyclotomic_factorization(const QPoly& p);

/// Exponents alpha in (-1, 0] with exp(-2*pi*i*alpha) a primitive n-th root
/// of unity, sorted ascending.
std::vector<Rational> primitive_exponents(unsigned long n);

} // namespace tsj
