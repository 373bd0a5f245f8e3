#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "lozenge/sampler.hpp"
#include "test_util.hpp"

using namespace lozenge;
using namespace lozenge::testutil;

TEST_CASE("N=2 test polygon: both tilings get probability 1/2") {
    auto spec = unit_hexagon();
    for (const auto& arr : collect_arrays(spec)) {
        CHECK(sample_probability(spec, arr) == make_rational(1, 2));
    }
}

TEST_CASE("exact uniformity: per-tiling probability is 1/count for small specs") {
    TestRng rng(5);
    int done = 0;
    for (int trial = 0; trial < 60 && done < 10; ++trial) {
        auto spec = random_spec(rng, 2 + static_cast<int>(rng.next() % 2), 2, 2);
        if (spec.N > 4) continue;
        auto arrays = collect_arrays(spec, 100000);
        if (arrays.size() > 200) continue;
        ++done;
        Rational expected = make_rational(BigInt(1), BigInt(static_cast<long>(arrays.size())));
        for (const auto& arr : arrays) {
            CHECK(sample_probability(spec, arr) == expected);
        }
    }
    CHECK(done >= 6);
}

TEST_CASE("sampled arrays are valid and reproducible") {
    auto spec = make_spec(4, {-1, 5}, {3, 9});
    auto b1 = sample_batch(spec, 40, 123, 4);
    auto b2 = sample_batch(spec, 40, 123, 2);
    REQUIRE(b1.arrays.size() == 40);
    for (const auto& arr : b1.arrays) CHECK(validate_array(spec, arr).ok);
    CHECK(b1.arrays == b2.arrays);  // worker count must not matter
    auto b3 = sample_batch(spec, 40, 124, 4);
    CHECK(b1.arrays != b3.arrays);
}

TEST_CASE("sampling frequencies roughly match uniformity (N=3, 6 tilings)") {
    auto spec = make_spec(3, {-1, 7}, {3, 9});  // top row (4,1,0), 6 tilings
    auto arrays = collect_arrays(spec);
    REQUIRE(arrays.size() == 6);
    std::map<std::vector<std::vector<long>>, int> freq;
    const int n = 6000;
    auto batch = sample_batch(spec, n, 777, 0);
    for (const auto& arr : batch.arrays) freq[arr.rows]++;
    double chi2 = 0;
    const double expect = static_cast<double>(n) / 6.0;
    for (const auto& arr : arrays) {
        double o = freq[arr.rows];
        chi2 += (o - expect) * (o - expect) / expect;
    }
    // df = 5; reject only far beyond the 0.999 quantile (20.5)
    CHECK(chi2 < 25.0);
}

TEST_CASE("mc_moments: centered single point, oracle agreement, SE scaling") {
    auto spec = make_spec(3, {-1, 7}, {3, 9});
    auto m1 = mc_moments(spec, {{2, 2}}, 4000, 42);
    CHECK(std::abs(m1.estimate) <= 4 * m1.std_error + 1e-12);

    auto exact = empirical_moment(spec, {{2, 2}, {3, 2}});
    auto m2 = mc_moments(spec, {{2, 2}, {3, 2}}, 4000, 43);
    CHECK(std::abs(m2.estimate - to_double(exact)) <= 4 * m2.std_error);

    auto small = mc_moments(spec, {{2, 2}, {3, 2}}, 2000, 44);
    auto large = mc_moments(spec, {{2, 2}, {3, 2}}, 8000, 44);
    double ratio = small.std_error / large.std_error;
    CHECK(ratio > 2.0 * 0.7);  // ~sqrt(4) within generous tolerance
    CHECK(ratio < 2.0 * 1.4);

    CHECK_THROWS_AS(mc_moments(spec, {{2, 2}}, 50, 1), std::invalid_argument);
}
