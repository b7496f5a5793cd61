#include "tsj/filtration.hpp"

namespace tsj {

Filtration Filtration::from_steps(long ambient, const std::map<long, Subspace>& steps) {
    Filtration f(ambient);
    Subspace prev = Subspace::zero(ambient);
    for (const auto& [k, s] : steps) {
        if (s.ambient_dim() != ambient)
            throw std::invalid_argument("filtration step has wrong ambient dimension");
        if (!s.contains(prev))
            throw std::invalid_argument("filtration steps must be increasing");
        if (s.dim() == prev.dim()) continue; // not a jump
        f.jumps_.emplace(k, s);
        prev = s;
    }
    return f;
}

Filtration Filtration::from_steps_unchecked(long ambient, std::map<long, Subspace> steps) {
    Filtration f(ambient);
    for (const auto& [k, s] : steps)
        if (s.ambient_dim() != ambient)
            throw std::invalid_argument("filtration step has wrong ambient dimension");
    f.jumps_ = std::move(steps);
    return f;
}

Filtration Filtration::single_jump(long ambient, long index) {
    Filtration f(ambient);
    f.jumps_.emplace(index, Subspace::full(ambient));
    return f;
}

const Subspace& Filtration::step(long k) const {
    auto it = jumps_.upper_bound(k);
    if (it == jumps_.begin()) return zero_;
    return std::prev(it)->second;
}

long Filtration::lowest_jump() const {
    if (jumps_.empty()) throw std::logic_error("empty filtration has no jumps");
    return jumps_.begin()->first;
}

long Filtration::highest_jump() const {
    if (jumps_.empty()) throw std::logic_error("empty filtration has no jumps");
    return jumps_.rbegin()->first;
}

long Filtration::graded_dim(long k) const { return step(k).dim() - step(k - 1).dim(); }

Filtration Filtration::shifted(long offset) const {
    Filtration f(ambient_);
    for (const auto& [k, s] : jumps_) f.jumps_.emplace(k + offset, s);
    return f;
}

Filtration Filtration::direct_sum(const Filtration& o) const {
    long n = ambient_ + o.ambient_;
    std::map<long, Subspace> steps;
    std::vector<long> indices;
    for (const auto& [k, s] : jumps_) indices.push_back(k);
    for (const auto& [k, s] : o.jumps_) indices.push_back(k);
    for (long k : indices)
        steps.emplace(k, step(k).embed(n, 0).sum(o.step(k).embed(n, ambient_)));
    return from_steps(n, steps);
}

Filtration Filtration::convolve(const Filtration& a, const Filtration& b, long shift) {
    if (a.jumps_.empty() || b.jumps_.empty())
        throw std::invalid_argument("convolution needs nonempty filtrations");
    long n = a.ambient_ * b.ambient_;
    // the staircase sum over i + j = p + shift changes only when p + shift
    // hits a pair of jump indices, and sampling i at the jumps of a covers
    // every maximal term
    std::map<long, Subspace> steps;
    for (const auto& [i, sa] : a.jumps_)
        for (const auto& [j, sb] : b.jumps_) steps.emplace(i + j + shift, Subspace::zero(n));
    for (auto& [p, sp] : steps) {
        Subspace acc = Subspace::zero(n);
        for (const auto& [i, sa] : a.jumps_) {
            const Subspace& sb = b.step(p - shift - i);
            if (sb.is_zero()) continue;
            acc = acc.sum(Subspace::tensor(sa, sb));
        }
        sp = acc;
    }
    return from_steps(n, steps);
}

} // namespace tsj
