#include "tsj/tsjoin.hpp"

#include "tsj/linalg.hpp"

#include <omp.h>

namespace tsj {

ShiftCase classify_case(const EigExp& alpha, const EigExp& beta) {
    Rational sum = alpha.value() + beta.value();
    int f_shift = sum <= -1 ? 1 : 0;
    int w_shift;
    if (alpha.value() == 0 || beta.value() == 0)
        w_shift = 0;
    else if (sum == -1)
        w_shift = 2;
    else
        w_shift = 1;
    return {f_shift, w_shift};
}

std::vector<ElementaryBlock> join_block_pair(const ElementaryBlock& a, const ElementaryBlock& b) {
    ShiftCase sc = classify_case(a.alpha, b.alpha);
    EigExp gamma = add_exponents(a.alpha, b.alpha);
    std::vector<ElementaryBlock> out;
    out.reserve(static_cast<size_t>(std::min(a.k, b.k)));
    for (long i = 0; i < std::min(a.k, b.k); ++i)
        out.push_back({gamma, a.p + b.p - sc.f_shift + i, a.w + b.w + sc.w_shift + 2 * i,
                       a.k + b.k - 1 - 2 * i, a.mult * b.mult});
    return out;
}

Mhsm twisted_join_blocks_serial(const Mhsm& a, const Mhsm& b) {
    std::vector<ElementaryBlock> out;
    for (const auto& x : a.blocks())
        for (const auto& y : b.blocks())
            for (const auto& blk : join_block_pair(x, y)) out.push_back(blk);
    return Mhsm::from_blocks(out);
}

Mhsm twisted_join_blocks(const Mhsm& a, const Mhsm& b) {
    const auto& xs = a.blocks();
    const auto& ys = b.blocks();
    long total = static_cast<long>(xs.size() * ys.size());
    std::vector<std::vector<ElementaryBlock>> per_thread(
        static_cast<size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        std::vector<ElementaryBlock>& mine =
            per_thread[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (long idx = 0; idx < total; ++idx) {
            const ElementaryBlock& x = xs[static_cast<size_t>(idx) / ys.size()];
            const ElementaryBlock& y = ys[static_cast<size_t>(idx) % ys.size()];
            for (const auto& blk : join_block_pair(x, y)) mine.push_back(blk);
        }
    }
    std::vector<ElementaryBlock> out;
    for (auto& v : per_thread) out.insert(out.end(), v.begin(), v.end());
    // canonicalization makes the merge order immaterial
    return Mhsm::from_blocks(out);
}

Mhsm twisted_join_literal(const Mhsm& a, const Mhsm& b) {
    return detail::bifiltered_product(a, b, [](const EigExp& x, const EigExp& y) {
        ShiftCase sc = classify_case(x, y);
        return std::pair<int, int>{sc.f_shift, sc.w_shift};
    });
}

Mhsm twisted_join(const Mhsm& a, const Mhsm& b) {
    require_valid(a);
    require_valid(b);
    if (a.has_blocks() && b.has_blocks()) return twisted_join_blocks(a, b);
    return twisted_join_literal(a, b);
}

// ---------------------------------------------------------------------------
// graded direct image model

namespace {

struct Cell {
    Rational base1, base2; // fundamental-domain exponents
    long j1, j2;           // translate offsets (>= 0)
    long d;                // dimension d1 * d2
};

} // namespace

GradedImageModel graded_direct_image_model(const Mhsm& m1, const Mhsm& m2, long window) {
    if (window < 2) throw std::invalid_argument("window must be at least 2");
    require_valid(m1);
    require_valid(m2);
    std::map<Rational, long> d1 = m1.dims_by_exponent();
    std::map<Rational, long> d2 = m2.dims_by_exponent();
    if (d1.empty() || d2.empty())
        throw std::invalid_argument("graded model needs nonzero factors");

    // lattice of cells (a1 - j1, a2 - j2), grouped by total degree
    std::map<Rational, std::vector<Cell>> by_degree;
    for (const auto& [a1, dim1] : d1)
        for (const auto& [a2, dim2] : d2)
            for (long j1 = 0; j1 < window; ++j1)
                for (long j2 = 0; j2 < window; ++j2)
                    by_degree[a1 - j1 + a2 - j2].push_back({a1, a2, j1, j2, dim1 * dim2});

    auto cell_present = [&](const Rational& a1, const Rational& a2, long j1, long j2) {
        return j1 >= 0 && j1 < window && j2 >= 0 && j2 < window && d1.count(a1) && d2.count(a2);
    };

    GradedImageModel out;
    for (const auto& [deg, targets] : by_degree) {
        long target_dim = 0;
        std::map<std::tuple<Rational, Rational, long, long>, long> offset;
        for (const auto& c : targets) {
            offset[{c.base1, c.base2, c.j1, c.j2}] = target_dim;
            target_dim += c.d;
        }
        // sources: cells of degree deg + 1, mapped by shift1 - shift2
        QMatrix D(target_dim, 0);
        bool dangling = false;
        auto src_it = by_degree.find(deg + 1);
        if (src_it != by_degree.end()) {
            std::vector<QMatrix> cols;
            long source_dim = 0;
            for (const auto& s : src_it->second) source_dim += s.d;
            D = QMatrix(target_dim, source_dim);
            long scol = 0;
            for (const auto& s : src_it->second) {
                bool t1 = cell_present(s.base1, s.base2, s.j1 + 1, s.j2);
                bool t2 = cell_present(s.base1, s.base2, s.j1, s.j2 + 1);
                if (t1 != t2) dangling = true;
                if (t1) {
                    long off = offset.at({s.base1, s.base2, s.j1 + 1, s.j2});
                    for (long i = 0; i < s.d; ++i) D.at(off + i, scol + i) = 1;
                }
                if (t2) {
                    long off = offset.at({s.base1, s.base2, s.j1, s.j2 + 1});
                    for (long i = 0; i < s.d; ++i) D.at(off + i, scol + i) -= 1;
                }
                scol += s.d;
            }
        }
        long coker = target_dim - (D.cols() == 0 ? 0 : rank(D));
        // predicted: one copy per fundamental-domain pair class reaching
        // this degree from above by integer translates; a contributing
        // class whose translate chain misses the window spoils the degree
        long pred = 0;
        for (const auto& [a1, dim1] : d1)
            for (const auto& [a2, dim2] : d2) {
                Rational diff = a1 + a2 - deg;
                if (!is_integer(diff) || diff < 0) continue;
                pred += dim1 * dim2;
                if (diff > 2 * (window - 1)) dangling = true;
            }
        if (dangling) {
            out.boundary.emplace(deg, coker);
            continue;
        }
        out.interior.emplace(deg, coker);
        out.predicted.emplace(deg, pred);
    }
    if (out.interior.empty())
        throw std::invalid_argument("window too small: no interior degree survives truncation");
    return out;
}

} // namespace tsj
