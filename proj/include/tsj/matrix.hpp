#pragma once

#include "tsj/rational.hpp"

#include <vector>

namespace tsj {

/// Dense matrix over the rationals, row-major.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows * cols), Rational(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }
    QMatrix(long rows, long cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != static_cast<size_t>(rows * cols))
            throw std::invalid_argument("matrix entry count does not match dimensions");
    }

    static QMatrix identity(long n);
    /// Matrix from integer initializer rows, for tests and fixtures.
    static QMatrix from_int_rows(const std::vector<std::vector<long>>& rows);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rational& at(long i, long j) { return entries_[static_cast<size_t>(i * cols_ + j)]; }
    const Rational& at(long i, long j) const {
        return entries_[static_cast<size_t>(i * cols_ + j)];
    }

    const std::vector<Rational>& entries() const { return entries_; }

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    QMatrix transpose() const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix scaled(const Rational& c) const;

    /// Kronecker product; block (i,j) of the result is a(i,j) * b.
    static QMatrix kron(const QMatrix& a, const QMatrix& b);

    /// Stacks b below a (equal column counts).
    static QMatrix vstack(const QMatrix& a, const QMatrix& b);
    /// Puts b to the right of a (equal row counts).
    static QMatrix hstack(const QMatrix& a, const QMatrix& b);
    /// Block-diagonal sum.
    static QMatrix block_diag(const QMatrix& a, const QMatrix& b);

    std::vector<Rational> row(long i) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    std::string to_string() const;

private:
    long rows_, cols_;
    std::vector<Rational> entries_;
};

} // namespace tsj
