#include "tsj/oracle.hpp"

#include <numeric>
#include <omp.h>

namespace tsj {

long long milnor_number(const BPExponents& e) {
    long long mu = 1;
    for (long a : e.exps) mu *= (a - 1);
    return mu;
}

namespace {

/// Shared lattice walk: spectrum numerators over the common denominator.
/// counts[n] = multiplicity of the spectral value n / lcm.
struct LatticeSetup {
    long lcm = 1;
    std::vector<long> weights; // lcm / a_i
    long long size = 1;        // prod (a_i - 1)
    long max_numerator = 0;
};

LatticeSetup lattice_setup(const BPExponents& e) {
    LatticeSetup s;
    for (long a : e.exps) s.lcm = std::lcm(s.lcm, a);
    for (long a : e.exps) {
        s.weights.push_back(s.lcm / a);
        s.size *= (a - 1);
        s.max_numerator += (a - 1) * (s.lcm / a);
    }
    return s;
}

std::map<Rational, long> counts_to_map(const std::vector<long>& counts, long lcm) {
    std::map<Rational, long> out;
    for (size_t n = 0; n < counts.size(); ++n)
        if (counts[n] != 0) out[rat(static_cast<long>(n), lcm)] += counts[n];
    return out;
}

} // namespace

std::map<Rational, long> bp_spectrum_serial(const BPExponents& e) {
    LatticeSetup s = lattice_setup(e);
    std::vector<long> counts(static_cast<size_t>(s.max_numerator + 1), 0);
    std::vector<long> k(e.exps.size(), 1);
    for (;;) {
        long num = 0;
        for (size_t i = 0; i < k.size(); ++i) num += k[i] * s.weights[i];
        ++counts[static_cast<size_t>(num)];
        size_t i = 0;
        while (i < k.size()) {
            if (++k[i] <= e.exps[i] - 1) break;
            k[i] = 1;
            ++i;
        }
        if (i == k.size()) break;
    }
    return counts_to_map(counts, s.lcm);
}

std::map<Rational, long> bp_spectrum(const BPExponents& e) {
    LatticeSetup s = lattice_setup(e);
    std::vector<long> counts(static_cast<size_t>(s.max_numerator + 1), 0);
#pragma omp parallel
    {
        std::vector<long> local(counts.size(), 0);
#pragma omp for schedule(static)
        for (long long idx = 0; idx < s.size; ++idx) {
            long long rest = idx;
            long num = 0;
            for (size_t i = 0; i < e.exps.size(); ++i) {
                long range = e.exps[i] - 1;
                long ki = 1 + static_cast<long>(rest % range);
                rest /= range;
                num += ki * s.weights[i];
            }
            ++local[static_cast<size_t>(num)];
        }
#pragma omp critical
        for (size_t n = 0; n < counts.size(); ++n) counts[n] += local[n];
    }
    return counts_to_map(counts, s.lcm);
}

Mhsm bp_mhsm(const BPExponents& e) {
    long n = e.vars();
    std::vector<ElementaryBlock> blocks;
    for (const auto& [s, mult] : bp_spectrum(e)) {
        EigExp alpha = EigExp::reduced(-s);
        Rational p_rat = -(s + alpha.value());
        if (!is_integer(p_rat)) throw std::logic_error("Hodge offset must be an integer");
        long p = static_cast<long>(p_rat.get_num().get_si());
        long w = is_integer(s) ? n : n - 1;
        blocks.push_back({alpha, p, w, 1, mult});
    }
    return Mhsm::from_blocks(blocks);
}

bool symmetry_check(const std::map<Rational, long>& spectrum, long n) {
    for (const auto& [s, mult] : spectrum) {
        auto it = spectrum.find(Rational(n) - s);
        if (it == spectrum.end() || it->second != mult) return false;
    }
    return true;
}

} // namespace tsj
