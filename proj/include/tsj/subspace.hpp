#pragma once

#include "tsj/matrix.hpp"

#include <optional>

namespace tsj {

/// Linear subspace of Q^n, stored as a reduced-row-echelon basis (rows of
/// a matrix). The representation is canonical: two subspaces are equal
/// exactly when their stored bases are equal entrywise.
class Subspace {
public:
    Subspace() : ambient_(0), basis_(0, 0) {}

    static Subspace zero(long ambient);
    static Subspace full(long ambient);
    /// Row span of the given matrix (rows need not be independent).
    static Subspace row_span(long ambient, const QMatrix& rows);
    static Subspace span_of(long ambient, const std::vector<std::vector<Rational>>& vectors);

    long ambient_dim() const { return ambient_; }
    long dim() const { return basis_.rows(); }
    /// Canonical basis, one vector per row.
    const QMatrix& basis() const { return basis_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    bool contains(const Subspace& o) const;
    bool contains(const std::vector<Rational>& v) const;

    /// Image of this subspace under a linear map (matrix acting on columns).
    Subspace apply(const QMatrix& op) const;

    /// Tensor product inside Q^(m*n), Kronecker coordinate convention.
    static Subspace tensor(const Subspace& a, const Subspace& b);

    /// Embeds into a larger ambient space at the given coordinate offset.
    Subspace embed(long new_ambient, long offset) const;

    /// Coordinates of v in the stored basis, if v lies in the subspace.
    std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(long ambient, QMatrix reduced) : ambient_(ambient), basis_(std::move(reduced)) {}
    long ambient_;
    QMatrix basis_; // RREF rows, full row rank
};

} // namespace tsj
