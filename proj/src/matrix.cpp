#include "tsj/matrix.hpp"

#include <sstream>

namespace tsj {

QMatrix QMatrix::identity(long n) {
    QMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
    long r = static_cast<long>(rows.size());
    long c = r == 0 ? 0 : static_cast<long>(rows[0].size());
    QMatrix m(r, c);
    for (long i = 0; i < r; ++i) {
        if (static_cast<long>(rows[i].size()) != c)
            throw std::invalid_argument("ragged rows");
        for (long j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

bool QMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    QMatrix r(rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + o.entries_[k];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
    QMatrix r(rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] - o.entries_[k];
    return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
    QMatrix r(rows_, o.cols_);
    Rational acc;
    for (long i = 0; i < rows_; ++i) {
        for (long k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (long j = 0; j < o.cols_; ++j) {
                const Rational& bkj = o.at(k, j);
                if (bkj == 0) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

QMatrix QMatrix::scaled(const Rational& c) const {
    QMatrix r(rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] * c;
    return r;
}

QMatrix QMatrix::kron(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) {
            const Rational& aij = a.at(i, j);
            if (aij == 0) continue;
            for (long k = 0; k < b.rows(); ++k)
                for (long l = 0; l < b.cols(); ++l) {
                    if (b.at(k, l) == 0) continue;
                    r.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
                }
        }
    return r;
}

QMatrix QMatrix::vstack(const QMatrix& a, const QMatrix& b) {
    if (a.rows() == 0 && a.cols() == 0) return b;
    if (b.rows() == 0 && b.cols() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    QMatrix r(a.rows() + b.rows(), a.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (long i = 0; i < b.rows(); ++i)
        for (long j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

QMatrix QMatrix::hstack(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    QMatrix r(a.rows(), a.cols() + b.cols());
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (long j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

QMatrix QMatrix::block_diag(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (long i = 0; i < b.rows(); ++i)
        for (long j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return r;
}

std::vector<Rational> QMatrix::row(long i) const {
    std::vector<Rational> v(static_cast<size_t>(cols_));
    for (long j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = at(i, j);
    return v;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<long>(v.size()) != cols_) throw std::invalid_argument("apply size mismatch");
    std::vector<Rational> r(static_cast<size_t>(rows_), Rational(0));
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

std::string QMatrix::to_string() const {
    std::ostringstream os;
    for (long i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (long j = 0; j < cols_; ++j) os << rational_to_string(at(i, j)) << (j + 1 < cols_ ? " " : "");
        os << (i + 1 < rows_ ? "\n" : "]");
    }
    return os.str();
}

} // namespace tsj
