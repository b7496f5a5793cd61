#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace tsj {

/// Exact rational scalar. Always stored canonicalized (lowest terms,
/// positive denominator), which mpq_class guarantees after canonicalize().
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Parses "p/q" or "p". Throws on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

/// Largest integer <= q.
mpz_class rational_floor(const Rational& q);

/// Eigenvalue exponent: a rational alpha in (-1, 0], standing for the
/// semisimple monodromy eigenvalue exp(-2*pi*i*alpha).  The counterclockwise
/// generator of the fundamental group is the fixed orientation throughout.
class EigExp {
public:
    EigExp() : value_(0) {}
    explicit EigExp(const Rational& v) : value_(v) {
        if (!(v > -1 && v <= 0))
            throw std::invalid_argument("eigenvalue exponent must lie in (-1, 0], got " +
                                        rational_to_string(v));
    }

    /// Translates an arbitrary rational into (-1, 0] by an integer shift.
    static EigExp reduced(const Rational& v);

    const Rational& value() const { return value_; }

    /// Order of the eigenvalue exp(-2*pi*i*alpha) as a root of unity
    /// (the denominator of alpha).
    unsigned long order() const { return value_.get_den().get_ui(); }

    friend bool operator==(const EigExp& a, const EigExp& b) { return a.value_ == b.value_; }
    friend bool operator!=(const EigExp& a, const EigExp& b) { return !(a == b); }
    friend bool operator<(const EigExp& a, const EigExp& b) { return a.value_ < b.value_; }

private:
    Rational value_;
};

/// Sum of exponents folded back into (-1, 0]: the eigenvalues multiply, the
/// exponents add modulo 1.
inline EigExp add_exponents(const EigExp& a, const EigExp& b) {
    return EigExp::reduced(a.value() + b.value());
}

} // namespace tsj
