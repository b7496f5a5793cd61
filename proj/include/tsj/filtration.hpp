#pragma once

#include "tsj/subspace.hpp"

#include <map>

namespace tsj {

/// Increasing, exhaustive filtration of Q^n by subspaces, indexed by
/// integers: trivial far below, the full space far above, finitely many
/// jumps. Only the jump steps are stored (each strictly larger than the
/// previous one).
class Filtration {
public:
    explicit Filtration(long ambient) : ambient_(ambient), zero_(Subspace::zero(ambient)) {}

    /// Builds from arbitrary steps; enforces monotonicity, drops non-jumps.
    static Filtration from_steps(long ambient, const std::map<long, Subspace>& steps);

    /// Stores the steps as given, without the monotonicity check; used by
    /// deserialization so that invalid input surfaces through validate()
    /// instead of an exception deep inside parsing.
    static Filtration from_steps_unchecked(long ambient, std::map<long, Subspace> steps);

    /// Filtration with a single jump to the full space at the given index.
    static Filtration single_jump(long ambient, long index);

    long ambient_dim() const { return ambient_; }

    /// Value at index k (largest stored step at or below k; zero below all).
    const Subspace& step(long k) const;

    const std::map<long, Subspace>& jumps() const { return jumps_; }
    bool is_exhaustive() const { return !jumps_.empty() && jumps_.rbegin()->second.is_full(); }
    long lowest_jump() const;
    long highest_jump() const;

    /// dim step(k) - dim step(k-1).
    long graded_dim(long k) const;

    Filtration shifted(long offset) const;

    /// Direct sum with o via coordinate concatenation.
    Filtration direct_sum(const Filtration& o) const;

    /// Convolution on the tensor space: result at p is the span of
    /// step(i) (x) o.step(j) over i + j = p - shift, i.e. the jumps of the
    /// product move up by `shift`.
    static Filtration convolve(const Filtration& a, const Filtration& b, long shift);

    friend bool operator==(const Filtration& x, const Filtration& y) {
        return x.ambient_ == y.ambient_ && x.jumps_ == y.jumps_;
    }
    friend bool operator!=(const Filtration& x, const Filtration& y) { return !(x == y); }

private:
    long ambient_;
    std::map<long, Subspace> jumps_;
    Subspace zero_;
};

} // namespace tsj
