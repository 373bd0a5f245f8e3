#pragma once

#include <cstdint>
#include <vector>

#include "lozenge/polygon.hpp"

namespace lozenge::testutil {

inline PolygonSpec make_spec(int N, std::vector<long> twiceA, std::vector<long> twiceB) {
    PolygonSpec spec;
    spec.N = N;
    for (long t : twiceA) spec.A.push_back(HalfInt(t));
    for (long t : twiceB) spec.B.push_back(HalfInt(t));
    return spec;
}

// N=2 test polygon: A=(-1/2,3/2), B=(1/2,5/2); exactly two tilings.
inline PolygonSpec unit_hexagon() { return make_spec(2, {-1, 3}, {1, 5}); }

// Regular-ish hexagon limit polygon a=(-1,-0.5), b=(-0.5,1)... parameters
// (a1,b1,a2,b2) = (-1,-0.5,0.5,1).
inline LimitPolygon hexagon_limit() {
    LimitPolygon lp;
    lp.a = {-1.0, 0.5};
    lp.b = {-0.5, 1.0};
    return lp;
}

// Small deterministic generator for property tests.
struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Random valid spec with k intervals, N = sum of interval lengths.
inline PolygonSpec random_spec(TestRng& rng, int k, int max_len = 3, int max_gap = 3) {
    std::vector<long> twiceA, twiceB;
    long cursor = -rng.range(0, 4) * 2 - 1;  // odd
    for (int i = 0; i < k; ++i) {
        long len = rng.range(1, max_len);
        twiceA.push_back(cursor);
        twiceB.push_back(cursor + 2 * len);
        cursor += 2 * len + 2 * rng.range(1, max_gap);
    }
    int N = 0;
    for (size_t i = 0; i < twiceA.size(); ++i) N += static_cast<int>((twiceB[i] - twiceA[i]) / 2);
    return make_spec(N, twiceA, twiceB);
}

}  // namespace lozenge::testutil
