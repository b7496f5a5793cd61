#include "tsj/subspace.hpp"

#include "tsj/linalg.hpp"

namespace tsj {

Subspace Subspace::zero(long ambient) { return Subspace(ambient, QMatrix(0, ambient)); }

Subspace Subspace::full(long ambient) { return Subspace(ambient, QMatrix::identity(ambient)); }

Subspace Subspace::row_span(long ambient, const QMatrix& rows) {
    if (rows.cols() != ambient && rows.rows() != 0)
        throw std::invalid_argument("row width does not match ambient dimension");
    QMatrix m = rows.cols() == ambient ? rows : QMatrix(0, ambient);
    std::vector<long> pivots = rref_in_place(m);
    QMatrix reduced(static_cast<long>(pivots.size()), ambient);
    for (long i = 0; i < reduced.rows(); ++i)
        for (long j = 0; j < ambient; ++j) reduced.at(i, j) = m.at(i, j);
    return Subspace(ambient, std::move(reduced));
}

Subspace Subspace::span_of(long ambient, const std::vector<std::vector<Rational>>& vectors) {
    QMatrix m(static_cast<long>(vectors.size()), ambient);
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<long>(vectors[i].size()) != ambient)
            throw std::invalid_argument("vector length does not match ambient dimension");
        for (long j = 0; j < ambient; ++j) m.at(static_cast<long>(i), j) = vectors[i][static_cast<size_t>(j)];
    }
    return row_span(ambient, m);
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw std::invalid_argument("ambient dimension mismatch in sum");
    return row_span(ambient_, QMatrix::vstack(basis_, o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_)
        throw std::invalid_argument("ambient dimension mismatch in intersection");
    // Zassenhaus: reduce [A A; B 0]; rows with zero left half carry the
    // intersection in their right half.
    long n = ambient_;
    QMatrix top = QMatrix::hstack(basis_, basis_);
    QMatrix bot = QMatrix::hstack(o.basis_, QMatrix(o.basis_.rows(), n));
    QMatrix m = QMatrix::vstack(top, bot);
    rref_in_place(m);
    std::vector<std::vector<Rational>> rows;
    for (long i = 0; i < m.rows(); ++i) {
        bool left_zero = true;
        for (long j = 0; j < n && left_zero; ++j)
            if (m.at(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        std::vector<Rational> v(static_cast<size_t>(n));
        bool nonzero = false;
        for (long j = 0; j < n; ++j) {
            v[static_cast<size_t>(j)] = m.at(i, n + j);
            if (v[static_cast<size_t>(j)] != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(v));
    }
    return span_of(n, rows);
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (static_cast<long>(v.size()) != ambient_)
        throw std::invalid_argument("vector length does not match ambient dimension");
    // reduce v against the echelon basis
    std::vector<Rational> w = v;
    for (long i = 0; i < basis_.rows(); ++i) {
        long p = -1;
        for (long j = 0; j < ambient_; ++j)
            if (basis_.at(i, j) != 0) { p = j; break; }
        if (p < 0) continue;
        const Rational& c = w[static_cast<size_t>(p)];
        if (c == 0) continue;
        Rational f = c / basis_.at(i, p);
        for (long j = p; j < ambient_; ++j) w[static_cast<size_t>(j)] -= f * basis_.at(i, j);
    }
    for (const auto& e : w)
        if (e != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw std::invalid_argument("ambient dimension mismatch");
    if (o.dim() > dim()) return false;
    for (long i = 0; i < o.basis_.rows(); ++i)
        if (!contains(o.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::apply(const QMatrix& op) const {
    if (op.cols() != ambient_) throw std::invalid_argument("operator width mismatch");
    // rows of basis * op^T give the image vectors
    return row_span(op.rows(), basis_ * op.transpose());
}

Subspace Subspace::tensor(const Subspace& a, const Subspace& b) {
    return row_span(a.ambient_dim() * b.ambient_dim(), QMatrix::kron(a.basis_, b.basis_));
}

Subspace Subspace::embed(long new_ambient, long offset) const {
    if (offset < 0 || offset + ambient_ > new_ambient)
        throw std::invalid_argument("embed window out of range");
    QMatrix m(basis_.rows(), new_ambient);
    for (long i = 0; i < basis_.rows(); ++i)
        for (long j = 0; j < ambient_; ++j) m.at(i, offset + j) = basis_.at(i, j);
    return Subspace(new_ambient, std::move(m));
}

std::optional<std::vector<Rational>> Subspace::coordinates(const std::vector<Rational>& v) const {
    std::vector<Rational> w = v;
    std::vector<Rational> coords(static_cast<size_t>(basis_.rows()), Rational(0));
    for (long i = 0; i < basis_.rows(); ++i) {
        long p = -1;
        for (long j = 0; j < ambient_; ++j)
            if (basis_.at(i, j) != 0) { p = j; break; }
        if (p < 0) continue;
        Rational f = w[static_cast<size_t>(p)] / basis_.at(i, p);
        coords[static_cast<size_t>(i)] = f;
        if (f != 0)
            for (long j = p; j < ambient_; ++j) w[static_cast<size_t>(j)] -= f * basis_.at(i, j);
    }
    for (const auto& e : w)
        if (e != 0) return std::nullopt;
    return coords;
}

} // namespace tsj
