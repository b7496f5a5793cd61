#pragma once

#include "tsj/filtration.hpp"
#include "tsj/matrix.hpp"

namespace tsj {

/// Nilpotent endomorphism of Q^n. Construction validates nilpotency.
class NilpotentOp {
public:
    explicit NilpotentOp(QMatrix m);

    long dim() const { return mat_.rows(); }
    const QMatrix& matrix() const { return mat_; }
    /// Smallest e with N^e = 0.
    long nilpotency_index() const { return index_; }

private:
    QMatrix mat_;
    long index_;
};

/// Jordan block sizes of a nilpotent operator, descending. Derived from the
/// rank sequence of powers by the conjugate-partition identity
/// #\{blocks >= j\} = rank(N^(j-1)) - rank(N^j).
std::vector<long> jordan_partition(const NilpotentOp& n);

/// The unique increasing filtration W with N W_k <= W_(k-2) and
/// N^j : Gr_(center+j) ~ Gr_(center-j) for all j >= 0. Built from the
/// closed-form kernel/image terms ker(N^(k+j+1)) \cap im(N^j).
Filtration weight_filtration_of_n(const NilpotentOp& n, long center);

} // namespace tsj
