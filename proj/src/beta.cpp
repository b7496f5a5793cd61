#include "tsj/beta.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>

namespace tsj {

namespace {

// The exponential-of-series assembly cancels heavily at high orders near
// the singular corner (alpha, beta close to -1), so the series route runs
// on 113-bit floats and rounds once at the end.
using f128 = boost::multiprecision::cpp_bin_float_quad;

f128 polygamma_value(int order, const f128& x) {
    if (order == 0) return boost::math::digamma(x);
    return boost::math::polygamma(order, x);
}

f128 binomial(int n, int k) {
    f128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Taylor coefficients E[a][b] of exp(S) for S the log-Taylor of
/// B(alpha+x, beta+y)/B(alpha,beta), via the Euler recurrence
/// (a+b) E_{a,b} = sum (c+d) S_{c,d} E_{a-c,b-d}.
std::vector<std::vector<f128>> exp_series(const f128& alpha, const f128& beta, int imax,
                                          int jmax) {
    int m = imax + jmax;
    f128 a1 = alpha + 1, b1 = beta + 1, ab2 = alpha + beta + 2;
    std::vector<f128> u(static_cast<size_t>(m + 1), f128(0)), v = u, w = u;
    f128 fact = 1;
    for (int r = 1; r <= m; ++r) {
        fact *= r;
        u[static_cast<size_t>(r)] = polygamma_value(r - 1, a1) / fact;
        v[static_cast<size_t>(r)] = polygamma_value(r - 1, b1) / fact;
        w[static_cast<size_t>(r)] = polygamma_value(r - 1, ab2) / fact;
    }
    auto S = [&](int a, int b) -> f128 {
        if (a + b == 0) return f128(0);
        f128 s = 0;
        if (b == 0) s += u[static_cast<size_t>(a)];
        if (a == 0) s += v[static_cast<size_t>(b)];
        s -= w[static_cast<size_t>(a + b)] * binomial(a + b, a);
        return s;
    };
    std::vector<std::vector<f128>> E(static_cast<size_t>(imax + 1),
                                     std::vector<f128>(static_cast<size_t>(jmax + 1), f128(0)));
    E[0][0] = 1;
    for (int t = 1; t <= m; ++t) {
        for (int a = 0; a <= imax; ++a) {
            int b = t - a;
            if (b < 0 || b > jmax) continue;
            f128 acc = 0;
            for (int c = 0; c <= a; ++c)
                for (int d = 0; d <= b; ++d) {
                    if (c + d == 0) continue;
                    acc += (c + d) * S(c, d) *
                           E[static_cast<size_t>(a - c)][static_cast<size_t>(b - d)];
                }
            E[static_cast<size_t>(a)][static_cast<size_t>(b)] = acc / t;
        }
    }
    return E;
}

f128 beta_base_f128(const f128& alpha, const f128& beta) {
    return boost::math::tgamma(alpha + 1) * boost::math::tgamma(beta + 1) /
           boost::math::tgamma(alpha + beta + 2);
}

f128 rational_to_f128(const Rational& q) {
    return f128(q.get_num().get_str()) / f128(q.get_den().get_str());
}

double beta_base(double alpha, double beta) {
    return std::tgamma(alpha + 1) * std::tgamma(beta + 1) / std::tgamma(alpha + beta + 2);
}

} // namespace

double beta_value(const Rational& alpha, const Rational& beta, int i, int j) {
    if (!(alpha > -1) || !(beta > -1))
        throw std::invalid_argument("beta derivatives need alpha, beta > -1");
    if (i < 0 || j < 0) throw std::invalid_argument("negative derivative order");
    f128 a = rational_to_f128(alpha), b = rational_to_f128(beta);
    std::vector<std::vector<f128>> E = exp_series(a, b, i, j);
    f128 fact = 1;
    for (int r = 2; r <= i; ++r) fact *= r;
    for (int r = 2; r <= j; ++r) fact *= r;
    return static_cast<double>(beta_base_f128(a, b) *
                               E[static_cast<size_t>(i)][static_cast<size_t>(j)] * fact);
}

double beta_value_quadrature(const Rational& alpha, const Rational& beta, int i, int j) {
    if (!(alpha > -1) || !(beta > -1))
        throw std::invalid_argument("beta derivatives need alpha, beta > -1");
    double a = alpha.get_d(), b = beta.get_d();
    // tanh-sinh nodes: x = e^u / (2 cosh u), 1-x = e^-u / (2 cosh u),
    // u = (pi/2) sinh t; log x and log(1-x) evaluated in a cancellation-free
    // form, the whole integrand assembled in log scale
    auto term = [&](double t) -> double {
        double u = (M_PI / 2.0) * std::sinh(t);
        double au = std::fabs(u);
        double log2cosh = au + std::log1p(std::exp(-2.0 * au));
        double logx = u - log2cosh;
        double log1mx = -u - log2cosh;
        // weight dx/dt = (pi/4) cosh t / cosh^2 u, log(cosh u) = log2cosh - log 2
        double logw = std::log(M_PI / 4.0) + std::log(std::cosh(t)) - 2.0 * (log2cosh - M_LN2);
        double lg = logw + a * logx + b * log1mx;
        if (lg < -700.0) return 0.0;
        double p = std::exp(lg);
        for (int r = 0; r < i; ++r) p *= logx;
        for (int r = 0; r < j; ++r) p *= log1mx;
        return p;
    };
    double prev = 0, result = 0;
    for (int level = 3; level <= 13; ++level) {
        double h = 8.0 / (1 << level);
        double sum = 0;
        long kmax = (6 << level) / 8;
        for (long k = -kmax; k <= kmax; ++k) sum += term(k * h);
        result = sum * h;
        if (level > 5 && std::fabs(result - prev) <= 1e-13 * std::fabs(result)) break;
        prev = result;
    }
    return result;
}

BetaTwist beta_twist_operator(const EigExp& alpha, const EigExp& beta, long n1, long n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("block sizes must be positive");
    BetaTwist t;
    t.alpha = alpha.value();
    t.beta = beta.value();
    t.n1 = n1;
    t.n2 = n2;
    long n = n1 * n2;
    t.block.assign(static_cast<size_t>(n * n), {0.0, 0.0});
    double a = t.alpha.get_d(), b = t.beta.get_d();
    t.base = beta_base(a, b);

    // derivative table and factorials
    std::vector<std::vector<double>> bij(static_cast<size_t>(n1),
                                         std::vector<double>(static_cast<size_t>(n2)));
    for (long i = 0; i < n1; ++i)
        for (long j = 0; j < n2; ++j)
            bij[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                beta_value(t.alpha, t.beta, static_cast<int>(i), static_cast<int>(j));
    auto factorial = [](long k) {
        double f = 1;
        for (long r = 2; r <= k; ++r) f *= r;
        return f;
    };
    // (-N1)^i (x) (-N2)^j sends coordinate (c,d) to (c+i, d+j) with sign
    auto idx = [n2](long r1, long r2) { return r1 * n2 + r2; };
    for (long c = 0; c < n1; ++c)
        for (long d = 0; d < n2; ++d)
            for (long i = 0; c + i < n1; ++i)
                for (long j = 0; d + j < n2; ++j) {
                    double coeff = bij[static_cast<size_t>(i)][static_cast<size_t>(j)] /
                                   (factorial(i) * factorial(j));
                    double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
                    t.at(idx(c + i, d + j), idx(c, d)) += sign * coeff;
                }
    bool shifted_branch = (t.alpha + t.beta <= -1);
    if (!shifted_branch) {
        // multiply by (alpha + beta + 1 - N), N the tensor shift
        double s = a + b + 1.0;
        std::vector<std::complex<double>> prod(static_cast<size_t>(n * n), {0.0, 0.0});
        auto res = [&](long r, long c) -> std::complex<double>& {
            return prod[static_cast<size_t>(r * n + c)];
        };
        for (long r1 = 0; r1 < n1; ++r1)
            for (long r2 = 0; r2 < n2; ++r2) {
                long row = idx(r1, r2);
                for (long cc = 0; cc < n; ++cc) {
                    std::complex<double> acc = s * t.at(row, cc);
                    if (r1 > 0) acc -= t.at(idx(r1 - 1, r2), cc);
                    if (r2 > 0) acc -= t.at(idx(r1, r2 - 1), cc);
                    res(row, cc) = acc;
                }
            }
        t.block = std::move(prod);
    }
    // |det| via complex LU with partial pivoting
    {
        std::vector<std::complex<double>> lu = t.block;
        auto at = [&](long r, long c) -> std::complex<double>& {
            return lu[static_cast<size_t>(r * n + c)];
        };
        double logdet = 0;
        bool singular = false;
        for (long c = 0; c < n && !singular; ++c) {
            long piv = c;
            for (long r = c + 1; r < n; ++r)
                if (std::abs(at(r, c)) > std::abs(at(piv, c))) piv = r;
            if (std::abs(at(piv, c)) == 0.0) { singular = true; break; }
            if (piv != c)
                for (long j = 0; j < n; ++j) std::swap(at(piv, j), at(c, j));
            logdet += std::log(std::abs(at(c, c)));
            for (long r = c + 1; r < n; ++r) {
                std::complex<double> f = at(r, c) / at(c, c);
                if (f == std::complex<double>(0.0, 0.0)) continue;
                for (long j = c; j < n; ++j) at(r, j) -= f * at(c, j);
            }
        }
        t.det_abs = singular ? 0.0 : std::exp(logdet);
        t.det_scale = singular ? 0.0 : std::exp(logdet / static_cast<double>(n));
    }
    if (!(t.det_scale > 1e-9))
        throw std::logic_error("beta twist operator is numerically singular");
    return t;
}

double beta_twist_deviation(const EigExp& alpha, const EigExp& beta, long n1, long n2) {
    double worst = 0;
    for (long i = 0; i < n1; ++i)
        for (long j = 0; j < n2; ++j) {
            double s = beta_value(alpha.value(), beta.value(), static_cast<int>(i), static_cast<int>(j));
            double q = beta_value_quadrature(alpha.value(), beta.value(), static_cast<int>(i),
                                             static_cast<int>(j));
            double scale = std::max(std::fabs(q), 1e-300);
            worst = std::max(worst, std::fabs(s - q) / scale);
        }
    return worst;
}

double beta_twist_commutator_norm(const BetaTwist& t) {
    long n = t.dim();
    auto idx = [&](long r1, long r2) { return r1 * t.n2 + r2; };
    // N X - X N with N the tensor shift, entrywise max norm
    double worst = 0;
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) {
            long r1 = r / t.n2, r2 = r % t.n2;
            long c1 = c / t.n2, c2 = c % t.n2;
            std::complex<double> nx{0, 0}, xn{0, 0};
            if (r1 > 0) nx += t.at(idx(r1 - 1, r2), c);
            if (r2 > 0) nx += t.at(idx(r1, r2 - 1), c);
            if (c1 + 1 < t.n1) xn += t.at(r, idx(c1 + 1, c2));
            if (c2 + 1 < t.n2) xn += t.at(r, idx(c1, c2 + 1));
            worst = std::max(worst, std::abs(nx - xn));
        }
    return worst;
}

} // namespace tsj
