#include "tsj/mhsm.hpp"

#include "tsj/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace tsj {

std::vector<ElementaryBlock> canonicalize_blocks(std::vector<ElementaryBlock> blocks) {
    for (const auto& b : blocks) {
        if (b.k < 1) throw std::invalid_argument("elementary block length must be positive");
        if (b.mult < 1) throw std::invalid_argument("elementary block multiplicity must be positive");
    }
    auto key = [](const ElementaryBlock& b) {
        return std::make_tuple(b.alpha.value(), b.p, b.w, b.k);
    };
    std::sort(blocks.begin(), blocks.end(),
              [&](const ElementaryBlock& a, const ElementaryBlock& b) { return key(a) < key(b); });
    std::vector<ElementaryBlock> out;
    for (auto& b : blocks) {
        if (!out.empty() && key(out.back()) == key(b))
            out.back().mult += b.mult;
        else
            out.push_back(b);
    }
    return out;
}

Mhsm Mhsm::zero() { return from_blocks({}); }

Mhsm Mhsm::from_blocks(const std::vector<ElementaryBlock>& blocks) {
    Mhsm m;
    m.blocks_ = canonicalize_blocks(blocks);
    return m;
}

Mhsm Mhsm::from_parts(std::map<Rational, MhsmPart> parts) {
    for (auto it = parts.begin(); it != parts.end();) {
        EigExp(it->first); // range check
        if (it->second.dim == 0)
            it = parts.erase(it);
        else
            ++it;
    }
    Mhsm m;
    m.parts_ = std::move(parts);
    return m;
}

Mhsm Mhsm::from_blocks_and_parts(const std::vector<ElementaryBlock>& blocks,
                                 std::map<Rational, MhsmPart> parts) {
    Mhsm m = from_parts(std::move(parts));
    m.blocks_ = canonicalize_blocks(blocks);
    return m;
}

const std::vector<ElementaryBlock>& Mhsm::blocks() const {
    if (!blocks_) throw std::logic_error("no split form available");
    return *blocks_;
}

const std::map<Rational, MhsmPart>& Mhsm::parts() const {
    if (!parts_) throw std::logic_error("no explicit form available; call materialized()");
    return *parts_;
}

Mhsm Mhsm::materialized() const {
    if (parts_) return *this;
    Mhsm m = *this;
    std::map<Rational, MhsmPart> parts;
    std::map<Rational, std::vector<ElementaryBlock>> by_exp;
    for (const auto& b : *blocks_) by_exp[b.alpha.value()].push_back(b);
    for (const auto& [alpha, bs] : by_exp) {
        long dim = 0;
        for (const auto& b : bs) dim += b.k * b.mult;
        QMatrix n(dim, dim);
        // coordinate c = off + j stands for N^j(generator): F level p+k-1-j,
        // weight w+2(k-1-j)
        std::map<long, std::vector<long>> f_coords, w_coords; // level -> coords
        long off = 0;
        for (const auto& b : bs) {
            for (long copy = 0; copy < b.mult; ++copy) {
                for (long j = 0; j < b.k; ++j) {
                    if (j + 1 < b.k) n.at(off + j + 1, off + j) = 1;
                    f_coords[b.p + b.k - 1 - j].push_back(off + j);
                    w_coords[b.w + 2 * (b.k - 1 - j)].push_back(off + j);
                }
                off += b.k;
            }
        }
        auto coord_filtration = [dim](const std::map<long, std::vector<long>>& levels) {
            std::map<long, Subspace> steps;
            std::vector<std::vector<Rational>> vecs;
            for (const auto& [lvl, coords] : levels) {
                for (long c : coords) {
                    std::vector<Rational> v(static_cast<size_t>(dim), Rational(0));
                    v[static_cast<size_t>(c)] = 1;
                    vecs.push_back(std::move(v));
                }
                steps.emplace(lvl, Subspace::span_of(dim, vecs));
            }
            return Filtration::from_steps(dim, steps);
        };
        MhsmPart part;
        part.dim = dim;
        part.F = coord_filtration(f_coords);
        part.W = coord_filtration(w_coords);
        part.N = std::move(n);
        parts.emplace(alpha, std::move(part));
    }
    m.parts_ = std::move(parts);
    return m;
}

long Mhsm::total_dim() const {
    long d = 0;
    for (const auto& [e, dim] : dims_by_exponent()) d += dim;
    return d;
}

std::map<Rational, long> Mhsm::dims_by_exponent() const {
    std::map<Rational, long> out;
    if (blocks_) {
        for (const auto& b : *blocks_) out[b.alpha.value()] += b.k * b.mult;
    } else if (parts_) {
        for (const auto& [alpha, part] : *parts_) out[alpha] += part.dim;
    }
    return out;
}

std::vector<std::string> validate(const Mhsm& m) {
    std::vector<std::string> out;
    if (!m.has_parts()) return out; // split form is valid by construction
    for (const auto& [alpha, part] : m.parts()) {
        std::string tag = "part alpha=" + rational_to_string(alpha) + ": ";
        if (part.F.ambient_dim() != part.dim || part.W.ambient_dim() != part.dim ||
            part.N.rows() != part.dim || part.N.cols() != part.dim) {
            out.push_back(tag + "dimension mismatch between space, filtrations and N");
            continue;
        }
        for (const Filtration* f : {&part.F, &part.W}) {
            const char* name = f == &part.F ? "F" : "W";
            const Subspace* prev = nullptr;
            for (const auto& [k, s] : f->jumps()) {
                if (prev && !s.contains(*prev))
                    out.push_back(tag + std::string(name) + " not increasing at index " +
                                  std::to_string(k));
                prev = &s;
            }
            if (!f->is_exhaustive())
                out.push_back(tag + std::string(name) + " not exhaustive");
        }
        // N nilpotent
        bool nilpotent = true;
        {
            QMatrix acc = part.N;
            long e = 1;
            while (!acc.is_zero() && e <= part.dim) { acc = acc * part.N; ++e; }
            if (!acc.is_zero()) {
                out.push_back(tag + "N is not nilpotent");
                nilpotent = false;
            }
        }
        if (nilpotent) {
            for (const auto& [k, s] : part.W.jumps())
                if (!part.W.step(k - 2).contains(s.apply(part.N)))
                    out.push_back(tag + "N does not map W_" + std::to_string(k) + " into W_" +
                                  std::to_string(k - 2));
            for (const auto& [p, s] : part.F.jumps())
                if (!part.F.step(p + 1).contains(s.apply(part.N)))
                    out.push_back(tag + "N does not map F_" + std::to_string(p) + " into F_" +
                                  std::to_string(p + 1));
        }
    }
    return out;
}

void require_valid(const Mhsm& m) {
    std::vector<std::string> v = validate(m);
    if (!v.empty()) throw std::invalid_argument("invalid structure: " + v.front());
}

std::map<std::tuple<Rational, long, long>, long> graded_dims(const Mhsm& m) {
    require_valid(m);
    std::map<std::tuple<Rational, long, long>, long> out;
    if (m.has_blocks()) {
        for (const auto& b : m.blocks())
            for (long j = 0; j < b.k; ++j)
                out[{b.alpha.value(), b.p + j, b.w + 2 * j}] += b.mult;
        return out;
    }
    for (const auto& [alpha, part] : m.parts()) {
        for (const auto& [p, fs] : part.F.jumps()) {
            for (const auto& [w, ws] : part.W.jumps()) {
                long d = fs.intersect(ws).dim() - fs.intersect(part.W.step(w - 1)).dim() -
                         part.F.step(p - 1).intersect(ws).dim() +
                         part.F.step(p - 1).intersect(part.W.step(w - 1)).dim();
                if (d != 0) out[{alpha, p, w}] += d;
            }
        }
    }
    return out;
}

std::vector<SpectralPair> spectral_pairs(const Mhsm& m) {
    std::map<std::pair<Rational, long>, long> acc;
    for (const auto& [key, d] : graded_dims(m)) {
        const auto& [alpha, p, w] = key;
        acc[{-(alpha + Rational(p)), w}] += d;
    }
    std::vector<SpectralPair> out;
    for (const auto& [sw, mult] : acc) out.push_back({sw.first, sw.second, mult});
    return out;
}

namespace {

PartCertificate certificate_from_blocks(const std::vector<ElementaryBlock>& bs) {
    PartCertificate cert;
    std::map<long, long> jordan_counts;
    for (const auto& b : bs) {
        cert.dim += b.k * b.mult;
        jordan_counts[b.k] += b.mult;
        for (long j = 0; j < b.k; ++j) cert.graded[{b.p + j, b.w + 2 * j}] += b.mult;
        // N^j drops weight l to l-2j along the block string
        for (long j = 1; j < b.k; ++j)
            for (long l = b.w + 2 * j; l <= b.w + 2 * (b.k - 1); l += 2)
                cert.nranks[{j, l}] += b.mult;
    }
    for (auto it = jordan_counts.rbegin(); it != jordan_counts.rend(); ++it)
        for (long c = 0; c < it->second; ++c) cert.jordan.push_back(it->first);
    return cert;
}

PartCertificate certificate_from_part(const MhsmPart& part) {
    PartCertificate cert;
    cert.dim = part.dim;
    NilpotentOp n(part.N);
    cert.jordan = jordan_partition(n);
    // bigraded dimensions
    for (const auto& [p, fs] : part.F.jumps()) {
        for (const auto& [w, ws] : part.W.jumps()) {
            long d = fs.intersect(ws).dim() - fs.intersect(part.W.step(w - 1)).dim() -
                     part.F.step(p - 1).intersect(ws).dim() +
                     part.F.step(p - 1).intersect(part.W.step(w - 1)).dim();
            if (d != 0) cert.graded[{p, w}] += d;
        }
    }
    // ranks of N^j between weight-graded pieces
    QMatrix power = QMatrix::identity(part.dim);
    for (long j = 1; j < n.nilpotency_index(); ++j) {
        power = power * part.N;
        for (const auto& [l, wl] : part.W.jumps()) {
            // rank of the induced map Gr_l -> Gr_(l-2j): the image of W_l
            // modulo W_(l-2j-1)
            const Subspace& below = part.W.step(l - 2 * j - 1);
            long r = wl.apply(power).sum(below).dim() - below.dim();
            if (r != 0) cert.nranks[{j, l}] += r;
        }
    }
    return cert;
}

} // namespace

IsoCertificate iso_invariants(const Mhsm& m) {
    require_valid(m);
    IsoCertificate cert;
    if (m.has_blocks()) {
        std::map<Rational, std::vector<ElementaryBlock>> by_exp;
        for (const auto& b : m.blocks()) by_exp[b.alpha.value()].push_back(b);
        for (const auto& [alpha, bs] : by_exp) cert.parts.emplace(alpha, certificate_from_blocks(bs));
        return cert;
    }
    for (const auto& [alpha, part] : m.parts())
        if (part.dim > 0) cert.parts.emplace(alpha, certificate_from_part(part));
    return cert;
}

std::string IsoCertificate::to_string() const {
    std::ostringstream os;
    for (const auto& [alpha, pc] : parts) {
        os << "alpha=" << rational_to_string(alpha) << " dim=" << pc.dim << "\n  graded:";
        for (const auto& [pw, d] : pc.graded)
            os << " (" << pw.first << "," << pw.second << ")->" << d;
        os << "\n  jordan:";
        for (long k : pc.jordan) os << " " << k;
        os << "\n  nranks:";
        for (const auto& [jl, r] : pc.nranks)
            os << " (" << jl.first << "," << jl.second << ")->" << r;
        os << "\n";
    }
    return os.str();
}

std::optional<std::vector<ElementaryBlock>> blocks_from_certificate(const IsoCertificate& c) {
    std::vector<ElementaryBlock> out;
    for (const auto& [alpha, pc] : c.parts) {
        // string counts R_j(l): blocks whose weights cover [l-2j, l]
        auto R = [&](long j, long l) -> long {
            if (j == 0) {
                long tot = 0;
                for (const auto& [pw, d] : pc.graded)
                    if (pw.second == l) tot += d;
                return tot;
            }
            auto it = pc.nranks.find({j, l});
            return it == pc.nranks.end() ? 0 : it->second;
        };
        // counts per (bottom weight, length) by inclusion-exclusion on
        // (top, bottom) dominance
        std::map<std::pair<long, long>, long> count_wk;
        std::vector<long> weights;
        for (const auto& [pw, d] : pc.graded) weights.push_back(pw.second);
        std::sort(weights.begin(), weights.end());
        weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
        for (long t : weights) {
            for (long b : weights) {
                if (b > t || (t - b) % 2 != 0) continue;
                long j = (t - b) / 2;
                long n = R(j, t) - R(j + 1, t + 2) - R(j + 1, t) + R(j + 2, t + 2);
                if (n < 0) return std::nullopt;
                if (n > 0) count_wk[{b, j + 1}] += n;
            }
        }
        // cross-check the Jordan type
        std::map<long, long> jordan_expected;
        for (const auto& [wk, n] : count_wk) jordan_expected[wk.second] += n;
        std::map<long, long> jordan_seen;
        for (long k : pc.jordan) ++jordan_seen[k];
        if (jordan_expected != jordan_seen) return std::nullopt;
        // assign Hodge offsets: longer strings first, smallest feasible p
        std::map<std::pair<long, long>, long> residual = pc.graded;
        std::vector<std::pair<long, long>> classes; // (k desc, w)
        for (const auto& [wk, n] : count_wk) classes.push_back({wk.second, wk.first});
        std::sort(classes.begin(), classes.end(), [](auto a, auto b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        for (const auto& [k, w] : classes) {
            long n = count_wk[{w, k}];
            for (long copy = 0; copy < n; ++copy) {
                bool placed = false;
                std::vector<long> ps;
                for (const auto& [pw, d] : residual)
                    if (pw.second == w && d > 0) ps.push_back(pw.first);
                for (long p : ps) {
                    bool fits = true;
                    for (long j = 0; j < k && fits; ++j) {
                        auto it = residual.find({p + j, w + 2 * j});
                        if (it == residual.end() || it->second <= 0) fits = false;
                    }
                    if (!fits) continue;
                    for (long j = 0; j < k; ++j) --residual[{p + j, w + 2 * j}];
                    out.push_back({EigExp(alpha), p, w, k, 1});
                    placed = true;
                    break;
                }
                if (!placed) return std::nullopt;
            }
        }
        for (const auto& [pw, d] : residual)
            if (d != 0) return std::nullopt;
    }
    return canonicalize_blocks(out);
}

namespace detail {

Mhsm bifiltered_product(const Mhsm& a, const Mhsm& b, const ShiftPolicy& policy) {
    require_valid(a);
    require_valid(b);
    Mhsm ea = a.materialized();
    Mhsm eb = b.materialized();
    // collect pair contributions per output exponent, in exponent-pair order
    std::map<Rational, std::vector<MhsmPart>> pieces;
    for (const auto& [av, pa] : ea.parts()) {
        for (const auto& [bv, pb] : eb.parts()) {
            EigExp ax(av), bx(bv);
            auto [f_shift, w_shift] = policy(ax, bx);
            EigExp gamma = add_exponents(ax, bx);
            MhsmPart piece;
            piece.dim = pa.dim * pb.dim;
            // Hodge indices move down by the case shift, weights move up
            piece.F = Filtration::convolve(pa.F, pb.F, -f_shift);
            piece.W = Filtration::convolve(pa.W, pb.W, w_shift);
            piece.N = QMatrix::kron(pa.N, QMatrix::identity(pb.dim)) +
                      QMatrix::kron(QMatrix::identity(pa.dim), pb.N);
            pieces[gamma.value()].push_back(std::move(piece));
        }
    }
    std::map<Rational, MhsmPart> parts;
    for (auto& [gamma, list] : pieces) {
        MhsmPart acc = std::move(list.front());
        for (size_t i = 1; i < list.size(); ++i) {
            MhsmPart& nxt = list[i];
            acc.dim += nxt.dim;
            acc.F = acc.F.direct_sum(nxt.F);
            acc.W = acc.W.direct_sum(nxt.W);
            acc.N = QMatrix::block_diag(acc.N, nxt.N);
        }
        parts.emplace(gamma, std::move(acc));
    }
    return Mhsm::from_parts(std::move(parts));
}

} // namespace detail

Mhsm tensor_plain(const Mhsm& a, const Mhsm& b) {
    if (a.has_blocks() && b.has_blocks()) {
        std::vector<ElementaryBlock> out;
        for (const auto& x : a.blocks()) {
            for (const auto& y : b.blocks()) {
                EigExp gamma = add_exponents(x.alpha, y.alpha);
                for (long i = 0; i < std::min(x.k, y.k); ++i)
                    out.push_back({gamma, x.p + y.p + i, x.w + y.w + 2 * i, x.k + y.k - 1 - 2 * i,
                                   x.mult * y.mult});
            }
        }
        return Mhsm::from_blocks(out);
    }
    return detail::bifiltered_product(a, b, [](const EigExp&, const EigExp&) {
        return std::pair<int, int>{0, 0};
    });
}

} // namespace tsj
