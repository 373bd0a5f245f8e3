#include "lozenge/kernel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lozenge {

KernelEvaluator::KernelEvaluator(PolygonSpec spec) : spec_(std::move(spec)) {
    require_valid(spec_);
    auto row = top_row(spec_);
    top_row_.assign(row.rbegin(), row.rend());  // increasing

    fact_.resize(spec_.N + 2);
    fact_[0] = 1;
    for (int i = 1; i <= spec_.N + 1; ++i) fact_[i] = fact_[i - 1] * i;

    // T(w) = prod over top-row roots (r - w); T'(z0) = -prod_{r != z0} (r - z0).
    tprime_.resize(top_row_.size());
    for (size_t i = 0; i < top_row_.size(); ++i) {
        BigInt p = -1;
        for (size_t j = 0; j < top_row_.size(); ++j) {
            if (j != i) p *= top_row_[j] - top_row_[i];
        }
        tprime_[i] = p;
    }
}

Rational KernelEvaluator::kernel(long x1, int n1, long x2, int n2) const {
    const auto key = std::make_tuple(x1, n1, x2, n2);
    {
        std::shared_lock lock(cache_mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    Rational v = kernel_uncached(x1, n1, x2, n2);
    {
        std::unique_lock lock(cache_mutex_);
        cache_.emplace(key, v);
    }
    return v;
}

Rational KernelEvaluator::kernel_uncached(long x1, int n1, long x2, int n2) const {
    const int N = spec_.N;
    if (n1 < 1 || n1 > N) throw std::invalid_argument("kernel: n1 out of range [1,N]");
    if (n2 < 0 || n2 > N - 1) throw std::invalid_argument("kernel: n2 out of range [0,N-1]");

    Rational result(0);
    if (n2 < n1 && x2 <= x1) {
        result -= make_rational(pochhammer_int(BigInt(x1 - x2 + 1), n1 - n2 - 1),
                                fact_[n1 - n2 - 1]);
    }

    // T at the w-residue points x1, x1-1, ..., x1-(N-n1).
    const int L = N - n1;
    std::vector<BigInt> t_at(L + 1);
    for (int l = 0; l <= L; ++l) {
        BigInt p = 1;
        for (long r : top_row_) p *= r - (x1 - l);
        t_at[l] = p;
    }

    Rational integral(0);
    for (size_t i = 0; i < top_row_.size(); ++i) {
        const long z0 = top_row_[i];
        if (z0 < x2) continue;
        Rational inner(0);
        for (int l = 0; l <= L; ++l) {
            BigInt den = fact_[l] * fact_[L - l];
            if (l % 2) den = -den;
            const long v = x1 - l;
            if (v == z0) {
                inner += make_rational(tprime_[i], den);
            } else {
                inner += make_rational(t_at[l], den * (v - z0));
            }
        }
        integral += make_rational(pochhammer_int(BigInt(z0 - x2 + 1), N - n2 - 1), tprime_[i]) *
                    inner;
    }
    result += make_rational(fact_[N - n1], fact_[N - n2 - 1]) * integral;
    return result;
}

Rational KernelEvaluator::extended(long x1, int n1, long x2, int n2, LozengeType theta2) const {
    switch (theta2) {
        case LozengeType::V:
            return kernel(x1, n1, x2, n2);
        case LozengeType::S:
            return -kernel(x1, n1, x2, n2 - 1);
        case LozengeType::L:
            return kernel(x1, n1, x2 + 1, n2 - 1);
    }
    throw std::logic_error("unreachable lozenge type");
}

Rational KernelEvaluator::correlation(const std::vector<LatticePoint>& points) const {
    std::set<LatticePoint> distinct(points.begin(), points.end());
    if (distinct.size() != points.size())
        throw std::invalid_argument("correlation: duplicate points");
    const size_t s = points.size();
    std::vector<std::vector<Rational>> m(s, std::vector<Rational>(s));
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j)
            m[i][j] = kernel(points[i].x, points[i].n, points[j].x, points[j].n);
    return det_bareiss(m);
}

Rational KernelEvaluator::lozenge_joint_probability(const std::vector<TypedPoint>& items) const {
    std::set<LatticePoint> distinct;
    for (const auto& it : items) distinct.insert({it.x, it.n});
    if (distinct.size() != items.size())
        throw std::invalid_argument("lozenge_joint_probability: duplicate positions");
    const size_t s = items.size();
    std::vector<std::vector<Rational>> m(s, std::vector<Rational>(s));
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j)
            m[i][j] = extended(items[i].x, items[i].n, items[j].x, items[j].n, items[j].type);
    return det_bareiss(m);
}

Rational KernelEvaluator::mean_height(long x, int n) const {
    if (n < 0 || n > spec_.N) throw std::invalid_argument("mean_height: level out of strip");
    Rational h(0);
    for (int m = 1; m <= n; ++m) {
        if (m == spec_.N) {
            // Top level: deterministic particle occupation.
            if (std::binary_search(top_row_.begin(), top_row_.end(), x)) h += 1;
        } else {
            h += extended(x, m, x, m, LozengeType::V);
        }
        h += extended(x, m, x, m, LozengeType::S);
    }
    return h;
}

Rational kernel_K(const PolygonSpec& spec, long x1, int n1, long x2, int n2) {
    return KernelEvaluator(spec).kernel(x1, n1, x2, n2);
}

Rational correlation(const PolygonSpec& spec, const std::vector<LatticePoint>& points) {
    return KernelEvaluator(spec).correlation(points);
}

Rational lozenge_joint_prob(const PolygonSpec& spec, const std::vector<TypedPoint>& items) {
    return KernelEvaluator(spec).lozenge_joint_probability(items);
}

}  // namespace lozenge
