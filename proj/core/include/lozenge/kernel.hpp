#pragma once

// Exact rational evaluation of the correlation kernel K(x1,n1;x2,n2) of the
// uniform point process of interlacing particle arrays with fixed top row,
// together with the extended three-type kernel, correlation functions and
// joint lozenge-type probabilities.

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "lozenge/polygon.hpp"
#include "lozenge/rational.hpp"

namespace lozenge {

enum class LozengeType : char { V = 'V', S = 'S', L = 'L' };

struct LatticePoint {
    long x = 0;
    int n = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct TypedPoint {
    long x = 0;
    int n = 0;
    LozengeType type = LozengeType::V;
};

// The kernel is
//
//   K(x1,n1;x2,n2) = -1{n2<n1} 1{x2<=x1} (x1-x2+1)_{n1-n2-1} / (n1-n2-1)!
//     + (N-n1)!/(N-n2-1)! * (closed double contour integral),
//
// where the integrand is (z-x2+1)_{N-n2-1} / [(w-x1)_{N-n1+1} (w-z) T(z)/T(w)]
// with T(w) = prod_i (A_i+1/2-w)_{B_i-A_i} vanishing exactly at the top-row
// points. Evaluating the z integral by residues (simple poles at top-row
// points z0 >= x2) and then the w integral by residues (poles at w = x1-l,
// l = 0..N-n1; the would-be double pole at w = z0 = x1-l stays simple because
// T(z0) = 0) gives a finite sum of exact rationals:
//
//   integral = sum_{z0 in toprow, z0 >= x2} (z0-x2+1)_{N-n2-1} / T'(z0) *
//              sum_{l=0}^{N-n1} r_l,
//   r_l = T(x1-l) / [(-1)^l l! (N-n1-l)! (x1-l-z0)]   when x1-l != z0,
//   r_l = T'(z0)  / [(-1)^l l! (N-n1-l)!]             when x1-l == z0.
//
// Valid for 1 <= n1 <= N and 0 <= n2 <= N-1 (level 0 is required by the
// extended kernel and by the inverse-Kasteleyn identity); n2 = N is rejected.
class KernelEvaluator {
public:
    explicit KernelEvaluator(PolygonSpec spec);

    const PolygonSpec& spec() const { return spec_; }
    int strip_height() const { return spec_.N; }

    Rational kernel(long x1, int n1, long x2, int n2) const;

    // Case split on the type of the second lozenge:
    //   V -> K(x1,n1;x2,n2), S -> -K(x1,n1;x2,n2-1), L -> K(x1,n1;x2+1,n2-1).
    Rational extended(long x1, int n1, long x2, int n2, LozengeType theta2) const;

    // det[K(p_i; p_j)] over exact rationals; points distinct, 1 <= n <= N-1.
    Rational correlation(const std::vector<LatticePoint>& points) const;

    // det of the extended kernel per the three-type joint distribution.
    Rational lozenge_joint_probability(const std::vector<TypedPoint>& items) const;

    // Mean height E h(x,n) = sum_{m<=n} [P(V at (x,m)) + P(S at (x,m))].
    Rational mean_height(long x, int n) const;

private:
    Rational kernel_uncached(long x1, int n1, long x2, int n2) const;

    PolygonSpec spec_;
    std::vector<long> top_row_;           // increasing
    std::vector<BigInt> fact_;            // 0..N+1
    std::vector<BigInt> tprime_;          // T'(z0) per top-row point
    // read-mostly value cache; concurrent fills are idempotent
    mutable std::shared_mutex cache_mutex_;
    mutable std::map<std::tuple<long, int, long, int>, Rational> cache_;
};

// Convenience single-shot wrappers.
Rational kernel_K(const PolygonSpec& spec, long x1, int n1, long x2, int n2);
Rational correlation(const PolygonSpec& spec, const std::vector<LatticePoint>& points);
Rational lozenge_joint_prob(const PolygonSpec& spec, const std::vector<TypedPoint>& items);

}  // namespace lozenge
