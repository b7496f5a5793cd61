#include "tsj/monrep.hpp"

#include "tsj/linalg.hpp"
#include "tsj/subspace.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tsj {

MonRep::MonRep(std::vector<MonRepBlock> blocks) {
    for (const auto& b : blocks) {
        if (b.size < 1) throw std::invalid_argument("Jordan size must be positive");
        if (b.mult < 1) throw std::invalid_argument("multiplicity must be positive");
    }
    auto key = [](const MonRepBlock& b) { return std::make_pair(b.exp.value(), b.size); };
    std::sort(blocks.begin(), blocks.end(),
              [&](const MonRepBlock& a, const MonRepBlock& b) { return key(a) < key(b); });
    for (auto& b : blocks) {
        if (!blocks_.empty() && key(blocks_.back()) == key(b))
            blocks_.back().mult += b.mult;
        else
            blocks_.push_back(b);
    }
}

MonRep MonRep::unit() { return MonRep({{EigExp(Rational(0)), 1, 1}}); }

long MonRep::total_dim() const {
    long d = 0;
    for (const auto& b : blocks_) d += b.size * b.mult;
    return d;
}

std::string MonRep::to_string() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < blocks_.size(); ++i) {
        const auto& b = blocks_[i];
        os << (i ? ", " : "") << "(" << rational_to_string(b.exp.value()) << ", " << b.size
           << ", " << b.mult << ")";
    }
    os << "}";
    return os.str();
}

GalOrbit::GalOrbit(QPoly poly) : poly_(std::move(poly)) {
    if (poly_.degree() < 1) throw std::invalid_argument("orbit polynomial must be nonconstant");
    if (!poly_.is_monic()) throw std::invalid_argument("orbit polynomial must be monic");
    if (poly_.coeff(0) == 0)
        throw std::invalid_argument("orbit polynomial must have nonzero constant term");
    if (QPoly::gcd(poly_, poly_.derivative()).degree() != 0)
        throw std::invalid_argument("orbit polynomial must be squarefree");
}

GalOrbit GalOrbit::inverse_orbit() const {
    // reciprocal polynomial x^d P(1/x) / P(0), made monic
    long d = poly_.degree();
    std::vector<Rational> c(static_cast<size_t>(d + 1));
    for (long i = 0; i <= d; ++i) c[static_cast<size_t>(i)] = poly_.coeff(d - i);
    return GalOrbit(QPoly(std::move(c)).monic());
}

namespace {

/// Unipotent Jordan block of the given size: identity plus lower shift.
QMatrix unipotent_block(long size) {
    QMatrix j = QMatrix::identity(size);
    for (long i = 0; i + 1 < size; ++i) j.at(i + 1, i) = 1;
    return j;
}

QMatrix lower_shift(long size) {
    QMatrix n(size, size);
    for (long i = 0; i + 1 < size; ++i) n.at(i + 1, i) = 1;
    return n;
}

QMatrix companion(const QPoly& p) {
    long d = p.degree();
    QMatrix c(d, d);
    for (long i = 0; i + 1 < d; ++i) c.at(i + 1, i) = 1;
    for (long i = 0; i < d; ++i) c.at(i, d - 1) = -p.coeff(i);
    return c;
}

/// dim ker(B^j) for j = 1, 2, ... until the chain stabilizes or j = cap;
/// computed by pulling the kernel back through B one step at a time, so
/// B is never raised to a power.
std::vector<long> kernel_dim_chain(const QMatrix& b, long cap) {
    std::vector<long> dims;
    Subspace k = kernel(b);
    dims.push_back(k.dim());
    for (long j = 2; j <= cap; ++j) {
        // preimage of k under b: x-part of ker [b | basis(k)^T]
        QMatrix aug = QMatrix::hstack(b, k.basis().transpose());
        Subspace kk = kernel(aug);
        long newdim = kk.dim();
        if (newdim == dims.back()) break;
        std::vector<std::vector<Rational>> xs;
        for (long i = 0; i < kk.basis().rows(); ++i) {
            std::vector<Rational> full = kk.basis().row(i);
            xs.emplace_back(full.begin(), full.begin() + b.cols());
        }
        k = Subspace::span_of(b.cols(), xs);
        dims.push_back(newdim);
        if (k.dim() != newdim) throw std::logic_error("kernel chain projection degenerated");
    }
    return dims;
}

} // namespace

MonRep canonical_form(const QMatrix& t) {
    if (!t.is_square()) throw std::invalid_argument("canonical_form of a non-square matrix");
    QPoly chi = charpoly(t);
    if (chi.coeff(0) == 0) throw std::invalid_argument("canonical_form: matrix is singular");
    auto fact = cyclotomic_factorization(chi);
    if (!fact)
        throw std::invalid_argument(
            "canonical_form: not quasi-unipotent (characteristic polynomial has a "
            "non-cyclotomic factor)");
    std::vector<MonRepBlock> blocks;
    for (const auto& [order, e] : *fact) {
        long phi = static_cast<long>(euler_phi(order));
        std::vector<long> sizes_per_eigenvalue; // c_j = #blocks of size >= j
        if (e == 1) {
            sizes_per_eigenvalue = {1};
        } else {
            QMatrix b = cyclotomic(order).eval(t);
            std::vector<long> kdims = kernel_dim_chain(b, e);
            std::vector<long> c;
            long prev = 0;
            for (long kd : kdims) {
                if ((kd - prev) % phi != 0)
                    throw std::logic_error("orbit kernel growth not divisible by the orbit size");
                c.push_back((kd - prev) / phi);
                prev = kd;
            }
            sizes_per_eigenvalue = c;
        }
        // conjugate partition: counts of blocks of exact size j
        for (size_t j = 0; j < sizes_per_eigenvalue.size(); ++j) {
            long exact = sizes_per_eigenvalue[j] -
                         (j + 1 < sizes_per_eigenvalue.size() ? sizes_per_eigenvalue[j + 1] : 0);
            if (exact < 0) throw std::logic_error("kernel chain is not concave");
            if (exact == 0) continue;
            for (const Rational& alpha : primitive_exponents(order))
                blocks.push_back({EigExp(alpha), static_cast<long>(j + 1), exact});
        }
    }
    MonRep rep{blocks};
    if (rep.total_dim() != t.rows())
        throw std::logic_error("canonical form dimension mismatch");
    return rep;
}

Realization make_std(const StdVariation& v) {
    switch (v.kind) {
        case StdKind::unipotent: {
            if (v.k < 0) throw std::invalid_argument("negative unipotent rank parameter");
            QMatrix m = unipotent_block(v.k + 1);
            return {canonical_form(m), m};
        }
        case StdKind::semisimple: {
            if (!v.orbit) throw std::invalid_argument("semisimple variation needs an orbit");
            QMatrix m = companion(v.orbit->poly());
            return {canonical_form(m), m};
        }
        case StdKind::mixed: {
            if (!v.orbit) throw std::invalid_argument("mixed variation needs an orbit");
            if (v.k < 0) throw std::invalid_argument("negative unipotent rank parameter");
            QMatrix m = QMatrix::kron(companion(v.orbit->poly()), unipotent_block(v.k + 1));
            return {canonical_form(m), m};
        }
    }
    throw std::logic_error("unreachable");
}

MonRep tensor_join(const MonRep& a, const MonRep& b) {
    std::vector<MonRepBlock> out;
    for (const auto& x : a.blocks())
        for (const auto& y : b.blocks()) {
            EigExp gamma = add_exponents(x.exp, y.exp);
            for (long i = 0; i < std::min(x.size, y.size); ++i)
                out.push_back({gamma, x.size + y.size - 1 - 2 * i, x.mult * y.mult});
        }
    return MonRep{out};
}

namespace {

struct OrbitPart {
    unsigned long order;
    std::map<long, long> size_mult; // Jordan size -> multiplicity (per eigenvalue)
};

/// Groups a representation into Galois orbits; throws when the exponent
/// multiset is not orbit-closed.
std::vector<OrbitPart> orbit_parts(const MonRep& r) {
    std::map<unsigned long, std::map<Rational, std::map<long, long>>> seen;
    for (const auto& b : r.blocks())
        seen[b.exp.order()][b.exp.value()][b.size] += b.mult;
    std::vector<OrbitPart> out;
    for (const auto& [order, by_exp] : seen) {
        std::vector<Rational> expect = primitive_exponents(order);
        if (by_exp.size() != expect.size())
            throw std::invalid_argument("representation is not Galois-closed at order " +
                                        std::to_string(order));
        const std::map<long, long>& first = by_exp.begin()->second;
        for (const auto& [alpha, sm] : by_exp)
            if (sm != first)
                throw std::invalid_argument(
                    "conjugate exponents carry different Jordan data at order " +
                    std::to_string(order));
        out.push_back({order, first});
    }
    return out;
}

} // namespace

QMatrix realize(const MonRep& r) {
    QMatrix m(0, 0);
    for (const auto& part : orbit_parts(r)) {
        QMatrix orbit_mat = companion(cyclotomic(part.order));
        for (const auto& [size, mult] : part.size_mult)
            for (long c = 0; c < mult; ++c)
                m = QMatrix::block_diag(m, QMatrix::kron(orbit_mat, unipotent_block(size)));
    }
    return m;
}

namespace {

/// T_s, N and the plain monodromy matrix of r (x) E_k^orbit's second factor
/// are block-structured; this carries everything lambda_part and the
/// inverse construction need.
struct KernelSetup {
    QMatrix t;       // realization of r
    QMatrix ts;      // its semisimple part
    QMatrix n;       // its nilpotent log
    QMatrix e_t;     // monodromy of the standard variation factor
    QMatrix e_ts;    // semisimple part of e_t
    QMatrix e_n;     // nilpotent log of e_t
    long d = 0;      // dim of r
    long m = 0;      // dim of the variation factor
};

KernelSetup kernel_setup(const MonRep& r, const GalOrbit& orbit, long k) {
    KernelSetup s;
    s.t = realize(r);
    s.d = s.t.rows();
    auto [ts, tu] = semisimple_unipotent_parts(s.t);
    s.ts = ts;
    s.n = nilpotent_log(tu);
    QMatrix c = companion(orbit.poly());
    QMatrix u = unipotent_block(k + 1);
    s.e_t = QMatrix::kron(c, u);
    s.e_ts = QMatrix::kron(c, QMatrix::identity(k + 1));
    s.e_n = QMatrix::kron(QMatrix::identity(c.rows()), nilpotent_log(u));
    s.m = s.e_t.rows();
    return s;
}

/// Trace functional on the variation factor: on the orbit module it is
/// Q(T) |-> sum of Q over the orbit (trace of multiplication), and on the
/// unipotent factor it picks the lowest-weight coordinate.
std::vector<Rational> trace_functional(const GalOrbit& orbit, long k) {
    long d = orbit.degree();
    QMatrix c = companion(orbit.poly());
    std::vector<Rational> tr(static_cast<size_t>(d));
    QMatrix pw = QMatrix::identity(d);
    for (long i = 0; i < d; ++i) {
        Rational t(0);
        for (long a = 0; a < d; ++a) t += pw.at(a, a);
        tr[static_cast<size_t>(i)] = t;
        pw = pw * c;
    }
    std::vector<Rational> out(static_cast<size_t>(d * (k + 1)), Rational(0));
    for (long i = 0; i < d; ++i) out[static_cast<size_t>(i * (k + 1) + k)] = tr[static_cast<size_t>(i)];
    return out;
}

/// Restriction of op to an invariant subspace, in the subspace basis.
QMatrix restrict_to(const Subspace& w, const QMatrix& op) {
    QMatrix r(w.dim(), w.dim());
    for (long i = 0; i < w.dim(); ++i) {
        std::vector<Rational> img = op.apply(w.basis().row(i));
        auto coords = w.coordinates(img);
        if (!coords) throw std::logic_error("subspace is not invariant under the operator");
        for (long j = 0; j < w.dim(); ++j) r.at(j, i) = (*coords)[static_cast<size_t>(j)];
    }
    return r;
}

} // namespace

MonRep lambda_part(const MonRep& r, const GalOrbit& orbit, long k) {
    if (k < 0) throw std::invalid_argument("negative truncation parameter");
    if (r.blocks().empty()) return MonRep{};
    KernelSetup s = kernel_setup(r, orbit, k);
    // kernel of (T_s (x) T_s - id) ++ (N (x) id + id (x) N)
    QMatrix id_full = QMatrix::identity(s.d * s.m);
    QMatrix a1 = QMatrix::kron(s.ts, s.e_ts) - id_full;
    QMatrix a2 = QMatrix::kron(s.n, QMatrix::identity(s.m)) +
                 QMatrix::kron(QMatrix::identity(s.d), s.e_n);
    Subspace ker = kernel(QMatrix::vstack(a1, a2));
    // contract the variation index with the trace functional
    std::vector<Rational> tau = trace_functional(orbit, k);
    std::vector<std::vector<Rational>> images;
    for (long i = 0; i < ker.basis().rows(); ++i) {
        std::vector<Rational> v = ker.basis().row(i);
        std::vector<Rational> w(static_cast<size_t>(s.d), Rational(0));
        for (long a = 0; a < s.d; ++a)
            for (long b = 0; b < s.m; ++b)
                if (tau[static_cast<size_t>(b)] != 0)
                    w[static_cast<size_t>(a)] += v[static_cast<size_t>(a * s.m + b)] * tau[static_cast<size_t>(b)];
        images.push_back(std::move(w));
    }
    Subspace w = Subspace::span_of(s.d, images);
    if (w.is_zero()) return MonRep{};
    return canonical_form(restrict_to(w, s.t));
}

MonRep eta_inverse(const MonRep& r) {
    std::vector<MonRepBlock> out;
    for (const auto& part : orbit_parts(r)) {
        // rebuild just this orbit's sub-representation
        std::vector<MonRepBlock> sub;
        for (const Rational& alpha : primitive_exponents(part.order))
            for (const auto& [size, mult] : part.size_mult)
                sub.push_back({EigExp(alpha), size, mult});
        MonRep rl{sub};
        long kmax = part.size_mult.rbegin()->first - 1; // N^(kmax+1) = 0 on this part
        GalOrbit orbit{cyclotomic(part.order).monic()};
        KernelSetup s = kernel_setup(rl, orbit, kmax);
        QMatrix id_full = QMatrix::identity(s.d * s.m);
        QMatrix a1 = QMatrix::kron(s.ts, inverse(s.e_ts)) - id_full;
        QMatrix a2 = QMatrix::kron(s.n, QMatrix::identity(s.m)) -
                     QMatrix::kron(QMatrix::identity(s.d), s.e_n);
        Subspace ker = kernel(QMatrix::vstack(a1, a2));
        // the kernel carries the monodromy of the variation factor
        QMatrix t_eta = QMatrix::kron(QMatrix::identity(s.d), s.e_t);
        MonRep round = canonical_form(restrict_to(ker, t_eta));
        for (const auto& b : round.blocks()) out.push_back(b);
    }
    return MonRep{out};
}

} // namespace tsj
