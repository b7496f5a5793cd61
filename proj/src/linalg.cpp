#include "tsj/linalg.hpp"

#include <cmath>
#include <cstdint>

namespace tsj {

namespace {

size_t entry_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

} // namespace

std::vector<long> rref_in_place(QMatrix& m) {
    std::vector<long> pivots;
    long r = 0;
    for (long c = 0; c < m.cols() && r < m.rows(); ++c) {
        // smallest nonzero entry as pivot keeps the numbers tame
        long pr = -1;
        size_t best = 0;
        for (long i = r; i < m.rows(); ++i) {
            if (m.at(i, c) == 0) continue;
            size_t sz = entry_size(m.at(i, c));
            if (pr < 0 || sz < best) { pr = i; best = sz; }
        }
        if (pr < 0) continue;
        if (pr != r)
            for (long j = c; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (long j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (long i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (long j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

long rank(const QMatrix& m) {
    QMatrix c = m;
    return static_cast<long>(rref_in_place(c).size());
}

Subspace kernel(const QMatrix& m) {
    QMatrix r = m;
    std::vector<long> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (long p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<Rational>> vecs;
    for (long j = 0; j < m.cols(); ++j) {
        if (is_pivot[static_cast<size_t>(j)]) continue;
        std::vector<Rational> v(static_cast<size_t>(m.cols()), Rational(0));
        v[static_cast<size_t>(j)] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<size_t>(pivots[i])] = -r.at(static_cast<long>(i), j);
        vecs.push_back(std::move(v));
    }
    return Subspace::span_of(m.cols(), vecs);
}

Subspace image(const QMatrix& m) { return Subspace::row_span(m.rows(), m.transpose()); }

SolveResult solve(const QMatrix& m) {
    SolveResult res{rank(m), kernel(m), image(m)};
    return res;
}

QMatrix inverse(const QMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    long n = m.rows();
    QMatrix aug = QMatrix::hstack(m, QMatrix::identity(n));
    std::vector<long> pivots = rref_in_place(aug);
    if (static_cast<long>(pivots.size()) != n)
        throw std::invalid_argument("matrix is singular");
    QMatrix inv(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

Rational determinant(const QMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    QMatrix a = m;
    long n = a.rows();
    Rational det(1);
    for (long c = 0; c < n; ++c) {
        long pr = -1;
        size_t best = 0;
        for (long i = c; i < n; ++i) {
            if (a.at(i, c) == 0) continue;
            size_t sz = entry_size(a.at(i, c));
            if (pr < 0 || sz < best) { pr = i; best = sz; }
        }
        if (pr < 0) return Rational(0);
        if (pr != c) {
            for (long j = c; j < n; ++j) std::swap(a.at(pr, j), a.at(c, j));
            det = -det;
        }
        det *= a.at(c, c);
        Rational inv = Rational(1) / a.at(c, c);
        for (long i = c + 1; i < n; ++i) {
            if (a.at(i, c) == 0) continue;
            Rational f = a.at(i, c) * inv;
            for (long j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return det;
}

// ---------------------------------------------------------------------------
// characteristic polynomial, multi-modular

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

/// char poly of an integer matrix modulo p via Hessenberg reduction.
/// Returns coefficients low to high (degree n, monic).
std::vector<u64> charpoly_mod(std::vector<u64> h, long n, u64 p) {
    auto at = [&](long i, long j) -> u64& { return h[static_cast<size_t>(i * n + j)]; };
    // similarity reduction to upper Hessenberg
    for (long m = 0; m + 2 < n; ++m) {
        long piv = -1;
        for (long i = m + 1; i < n; ++i)
            if (at(i, m) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != m + 1) {
            for (long j = 0; j < n; ++j) std::swap(at(piv, j), at(m + 1, j));
            for (long i = 0; i < n; ++i) std::swap(at(i, piv), at(i, m + 1));
        }
        u64 inv = invmod(at(m + 1, m), p);
        for (long i = m + 2; i < n; ++i) {
            if (at(i, m) == 0) continue;
            u64 t = mulmod(at(i, m), inv, p);
            for (long j = m; j < n; ++j) {
                u64 sub = mulmod(t, at(m + 1, j), p);
                at(i, j) = (at(i, j) + p - sub) % p;
            }
            for (long r = 0; r < n; ++r) {
                u64 add = mulmod(t, at(r, i), p);
                at(r, m + 1) = (at(r, m + 1) + add) % p;
            }
        }
    }
    // recurrence on leading principal minors of x*I - H
    std::vector<std::vector<u64>> pm(static_cast<size_t>(n + 1));
    pm[0] = {1};
    for (long m = 1; m <= n; ++m) {
        const std::vector<u64>& prev = pm[static_cast<size_t>(m - 1)];
        std::vector<u64> cur(static_cast<size_t>(m + 1), 0);
        u64 d = at(m - 1, m - 1) % p;
        for (size_t k = 0; k < prev.size(); ++k) {
            cur[k + 1] = (cur[k + 1] + prev[k]) % p;
            cur[k] = (cur[k] + p - mulmod(d, prev[k], p)) % p;
        }
        u64 subprod = 1;
        for (long i = m - 1; i >= 1; --i) {
            subprod = mulmod(subprod, at(i, i - 1), p);
            if (subprod == 0) break;
            u64 f = mulmod(at(i - 1, m - 1), subprod, p);
            if (f == 0) continue;
            const std::vector<u64>& pi = pm[static_cast<size_t>(i - 1)];
            for (size_t k = 0; k < pi.size(); ++k)
                cur[k] = (cur[k] + p - mulmod(f, pi[k], p)) % p;
        }
        pm[static_cast<size_t>(m)] = std::move(cur);
    }
    return pm[static_cast<size_t>(n)];
}

std::vector<u64> prime_pool(size_t count) {
    static const u64 start = (1ull << 30);
    std::vector<u64> primes;
    mpz_class p(start);
    while (primes.size() < count) {
        mpz_class q;
        mpz_nextprime(q.get_mpz_t(), p.get_mpz_t());
        p = q;
        primes.push_back(p.get_ui());
    }
    return primes;
}

} // namespace

QPoly charpoly(const QMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly of a non-square matrix");
    long n = m.rows();
    if (n == 0) return QPoly::constant(1);

    // clear denominators: M = A / d with A integral
    mpz_class d(1);
    for (const auto& e : m.entries()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.get_den().get_mpz_t());
    std::vector<mpz_class> a(static_cast<size_t>(n * n));
    mpz_class maxabs(0);
    for (size_t k = 0; k < a.size(); ++k) {
        const Rational& e = m.entries()[k];
        a[k] = e.get_num() * (d / e.get_den());
        mpz_class ab = abs(a[k]);
        if (ab > maxabs) maxabs = ab;
    }
    std::vector<Rational> coeffs(static_cast<size_t>(n + 1), Rational(0));
    coeffs[static_cast<size_t>(n)] = 1;
    if (maxabs != 0) {
        // |c_k| <= C(n,k) (sqrt(n) * maxabs)^k; bound everything by the k = n case
        size_t bits = static_cast<size_t>(n) +
                      static_cast<size_t>(n) *
                          (mpz_sizeinbase(maxabs.get_mpz_t(), 2) +
                           static_cast<size_t>(std::ceil(0.5 * std::log2(static_cast<double>(n)))) + 1) +
                      8;
        std::vector<u64> primes = prime_pool(bits / 29 + 1);
        std::vector<std::vector<u64>> residues(primes.size());
#pragma omp parallel for schedule(dynamic)
        for (long pi = 0; pi < static_cast<long>(primes.size()); ++pi) {
            u64 p = primes[static_cast<size_t>(pi)];
            std::vector<u64> ared(static_cast<size_t>(n * n));
            for (size_t k = 0; k < ared.size(); ++k)
                ared[k] = mpz_fdiv_ui(a[k].get_mpz_t(), p);
            residues[static_cast<size_t>(pi)] = charpoly_mod(std::move(ared), n, p);
        }
        // CRT each coefficient into the symmetric range
        mpz_class modulus(1);
        for (u64 p : primes) modulus *= static_cast<unsigned long>(p);
        for (long k = 0; k < n; ++k) {
            mpz_class acc(0), mod_so_far(1);
            for (size_t pi = 0; pi < primes.size(); ++pi) {
                u64 p = primes[pi];
                u64 r = residues[pi][static_cast<size_t>(k)];
                u64 cur = mpz_fdiv_ui(acc.get_mpz_t(), p);
                u64 diff = (r + p - cur) % p;
                u64 minv = invmod(mpz_fdiv_ui(mod_so_far.get_mpz_t(), p), p);
                u64 t = mulmod(diff, minv, p);
                acc += mod_so_far * mpz_class(static_cast<unsigned long>(t));
                mod_so_far *= static_cast<unsigned long>(p);
            }
            if (acc * 2 > modulus) acc -= modulus;
            // scale back: coefficient of x^k in det(x*I - A/d) is c_k / d^(n-k)
            mpz_class dk;
            mpz_pow_ui(dk.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n - k));
            Rational c(acc, dk);
            c.canonicalize();
            coeffs[static_cast<size_t>(k)] = c;
        }
    }
    return QPoly(std::move(coeffs));
}

QPoly charpoly_serial(const QMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly of a non-square matrix");
    long n = m.rows();
    std::vector<Rational> c(static_cast<size_t>(n + 1), Rational(0));
    c[static_cast<size_t>(n)] = 1;
    QMatrix acc = QMatrix::identity(n);
    for (long k = 1; k <= n; ++k) {
        acc = m * acc;
        Rational tr(0);
        for (long i = 0; i < n; ++i) tr += acc.at(i, i);
        Rational ck = -tr / Rational(k);
        c[static_cast<size_t>(n - k)] = ck;
        for (long i = 0; i < n; ++i) acc.at(i, i) += ck;
    }
    return QPoly(std::move(c));
}

std::pair<QMatrix, QMatrix> semisimple_unipotent_parts(const QMatrix& t) {
    if (!t.is_square()) throw std::invalid_argument("decomposition of a non-square matrix");
    long n = t.rows();
    QPoly chi = charpoly(t);
    if (chi.coeff(0) == 0)
        throw std::invalid_argument("semisimple_unipotent_parts: matrix is singular");
    QPoly f = chi.divided_by(QPoly::gcd(chi, chi.derivative())); // squarefree part
    auto [g, u, v] = QPoly::extended_gcd(f, f.derivative());
    (void)u;
    if (!(g.degree() == 0))
        throw std::logic_error("squarefree part not coprime with its derivative");
    // Newton iteration s <- s - f(s) * inv(f'(s)); doubles f-adic precision
    QMatrix s = t;
    long max_iter = 1;
    while ((1L << max_iter) < n + 1) ++max_iter;
    ++max_iter;
    for (long it = 0; it <= max_iter; ++it) {
        QMatrix fs = f.eval(s);
        if (fs.is_zero()) break;
        s = s - fs * v.eval(s);
    }
    if (!f.eval(s).is_zero())
        throw std::logic_error("Jordan decomposition iteration failed to converge");
    QMatrix ts = s;
    QMatrix tu = t * inverse(ts);
    return {ts, tu};
}

QMatrix nilpotent_log(const QMatrix& unipotent) {
    if (!unipotent.is_square()) throw std::invalid_argument("log of a non-square matrix");
    long n = unipotent.rows();
    QMatrix x = unipotent - QMatrix::identity(n);
    QMatrix acc = x;
    QMatrix log(n, n);
    long j = 1;
    while (!acc.is_zero()) {
        if (j > n) throw std::invalid_argument("matrix is not unipotent");
        Rational c = Rational((j % 2 == 1) ? 1 : -1, j);
        log = log + acc.scaled(c);
        acc = acc * x;
        ++j;
    }
    return log;
}

} // namespace tsj
