#include "tsj/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace tsj {

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::x() { return QPoly({Rational(0), Rational(1)}); }

const Rational& QPoly::coeff(long k) const {
    static const Rational zero(0);
    if (k < 0 || k >= static_cast<long>(c_.size())) return zero;
    return c_[static_cast<size_t>(k)];
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return QPoly(std::move(r));
}

QPoly QPoly::scaled(const Rational& a) const {
    std::vector<Rational> r(c_);
    for (auto& e : r) e *= a;
    return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading());
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> rem(num.c_);
    long dn = static_cast<long>(rem.size()) - 1;
    long dd = den.degree();
    if (dn < dd) return {QPoly(), num};
    std::vector<Rational> quo(static_cast<size_t>(dn - dd + 1), Rational(0));
    for (long k = dn; k >= dd; --k) {
        Rational q = rem[static_cast<size_t>(k)] / den.leading();
        if (q == 0) continue;
        quo[static_cast<size_t>(k - dd)] = q;
        for (long j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(k - dd + j)] -= q * den.coeff(j);
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::divided_by(const QPoly& den) const {
    auto [q, r] = divmod(*this, den);
    if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
    return q;
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

std::tuple<QPoly, QPoly, QPoly> QPoly::extended_gcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::constant(1), s1;
    QPoly t0, t1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1; r1 = r;
        QPoly s2 = s0 - q * s1; s0 = s1; s1 = s2;
        QPoly t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational lc = r0.leading();
    return {r0.monic(), s0.scaled(Rational(1) / lc), t0.scaled(Rational(1) / lc)};
}

Rational QPoly::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

QMatrix QPoly::eval(const QMatrix& m) const {
    if (!m.is_square()) throw std::invalid_argument("polynomial of a non-square matrix");
    long n = m.rows();
    QMatrix r(n, n);
    for (size_t i = c_.size(); i-- > 0;) {
        r = r * m;
        if (c_[i] != 0)
            for (long d = 0; d < n; ++d) r.at(d, d) += c_[i];
    }
    return r;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Rational& a = coeff(k);
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Rational mag = abs(a);
        if (mag != 1 || k == 0) os << rational_to_string(mag);
        if (k > 0) os << "x";
        if (k > 1) os << "^" << k;
        first = false;
    }
    return os.str();
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

QPoly cyclotomic(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic index must be positive");
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, built up the divisor lattice
    std::map<unsigned long, QPoly> phi;
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        std::vector<Rational> xd(static_cast<size_t>(d + 1), Rational(0));
        xd[0] = -1;
        xd[static_cast<size_t>(d)] = 1;
        QPoly p(std::move(xd));
        for (const auto& [e, f] : phi)
            if (d % e == 0) p = p.divided_by(f);
        phi.emplace(d, std::move(p));
    }
    return phi.at(n);
}

std::optional<std::map<unsigned long, long>> cyclotomic_factorization(const QPoly& p) {
    if (p.is_zero()) return std::nullopt;
    QPoly rem = p.monic();
    std::map<unsigned long, long> out;
    // phi(n) >= sqrt(n/2), so orders beyond 2*deg^2 cannot divide
    long deg = rem.degree();
    unsigned long bound = static_cast<unsigned long>(2 * deg * deg + 2);
    for (unsigned long n = 1; n <= bound && rem.degree() > 0; ++n) {
        unsigned long phi = euler_phi(n);
        if (static_cast<long>(phi) > rem.degree()) continue;
        QPoly f = cyclotomic(n);
        for (;;) {
            auto [q, r] = QPoly::divmod(rem, f);
            if (!r.is_zero()) break;
            rem = q;
            ++out[n];
            if (rem.degree() < static_cast<long>(phi)) break;
        }
    }
    if (rem.degree() != 0) return std::nullopt;
    return out;
}

std::vector<Rational> primitive_exponents(unsigned long n) {
    std::vector<Rational> out;
    if (n == 1) {
        out.push_back(Rational(0));
        return out;
    }
    // exp(-2*pi*i*alpha) = exp(2*pi*i*k/n)  <=>  alpha = -k/n in (-1, 0]
    for (unsigned long k = 1; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        out.push_back(rat(-static_cast<long>(k), static_cast<long>(n)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tsj
