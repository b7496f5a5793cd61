#include "tsj/nilpotent.hpp"

#include "tsj/linalg.hpp"

namespace tsj {

NilpotentOp::NilpotentOp(QMatrix m) : mat_(std::move(m)) {
    if (!mat_.is_square()) throw std::invalid_argument("nilpotent operator must be square");
    long n = mat_.rows();
    QMatrix acc = mat_;
    index_ = n == 0 ? 0 : 1;
    if (n == 0) return;
    while (!acc.is_zero()) {
        if (index_ > n) throw std::invalid_argument("operator is not nilpotent");
        acc = acc * mat_;
        ++index_;
    }
    if (mat_.is_zero()) index_ = mat_.rows() == 0 ? 0 : 1;
}

std::vector<long> jordan_partition(const NilpotentOp& n) {
    long dim = n.dim();
    std::vector<long> ranks; // ranks[j] = rank(N^j), j = 0..index
    ranks.push_back(dim);
    QMatrix acc = QMatrix::identity(dim);
    for (long j = 1; j <= n.nilpotency_index(); ++j) {
        acc = acc * n.matrix();
        ranks.push_back(rank(acc));
    }
    std::vector<long> sizes;
    for (long j = 1; j <= n.nilpotency_index(); ++j) {
        long at_least_j = ranks[static_cast<size_t>(j - 1)] - ranks[static_cast<size_t>(j)];
        long at_least_j1 = j < static_cast<long>(ranks.size()) - 1
                               ? ranks[static_cast<size_t>(j)] - ranks[static_cast<size_t>(j + 1)]
                               : 0;
        for (long c = 0; c < at_least_j - at_least_j1; ++c) sizes.push_back(j);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

Filtration weight_filtration_of_n(const NilpotentOp& n, long center) {
    long dim = n.dim();
    long e = n.nilpotency_index(); // N^e = 0, weights spread over |k| < e
    if (dim == 0) return Filtration::single_jump(0, center);
    std::vector<QMatrix> powers; // powers[j] = N^j
    powers.push_back(QMatrix::identity(dim));
    for (long j = 1; j <= e; ++j) powers.push_back(powers.back() * n.matrix());
    std::vector<Subspace> kernels, images;
    for (long j = 0; j <= e; ++j) {
        kernels.push_back(kernel(powers[static_cast<size_t>(j)]));
        images.push_back(image(powers[static_cast<size_t>(j)]));
    }
    // W_k = sum over j >= max(0, -k) of ker(N^(k+j+1)) \cap im(N^j); the
    // kernel index caps at e (full space beyond) and im(N^j) = 0 for j >= e
    std::map<long, Subspace> steps;
    for (long k = -(e - 1); k <= e - 1; ++k) {
        Subspace acc = Subspace::zero(dim);
        for (long j = std::max(0L, -k); j < e; ++j) {
            long kidx = std::min(k + j + 1, e);
            acc = acc.sum(kernels[static_cast<size_t>(kidx)].intersect(
                images[static_cast<size_t>(j)]));
        }
        steps.emplace(center + k, acc);
    }
    return Filtration::from_steps(dim, steps);
}

} // namespace tsj
