#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lozenge/fluctuations.hpp"
#include "lozenge/oracle.hpp"
#include "test_util.hpp"

using namespace lozenge;
using namespace lozenge::testutil;

TEST_CASE("mean height: base case, oracle agreement, monotonicity") {
    auto spec = unit_hexagon();
    CHECK(mean_height(spec, 1, 0) == Rational(0));

    auto arrays = collect_arrays(spec);
    for (long x = 0; x <= 3; ++x) {
        for (int n = 0; n <= spec.N; ++n) {
            Rational oracle(0);
            for (const auto& arr : arrays) oracle += height_of(spec, arr, x, n);
            oracle /= static_cast<long>(arrays.size());
            CHECK(mean_height(spec, x, n) == oracle);
        }
        for (int n = 0; n < spec.N; ++n)
            CHECK(mean_height(spec, x, n + 1) >= mean_height(spec, x, n));
    }
}

TEST_CASE("build_paths: distinct columns give pure verticals, shared columns jog") {
    auto spec = make_spec(4, {-1, 5}, {3, 9});
    auto paths = build_paths(spec, {{0.3, 0.5}, {0.8, 0.6}});
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].segments.size() == 1);
    CHECK(paths[1].segments.size() == 1);
    CHECK(paths[0].segments[0].kind == Segment::Kind::vertical);

    auto jogged = build_paths(spec, {{0.3, 0.4}, {0.3, 0.7}});
    REQUIRE(jogged.size() == 2);
    // the lower anchor descends in place; the higher one takes one jog
    CHECK(jogged[0].segments.size() == 1);
    REQUIRE(jogged[1].segments.size() == 2);
    CHECK(jogged[1].segments[0].kind == Segment::Kind::horizontal);
    CHECK(jogged[1].segments[0].sign == -1);
    CHECK(jogged[1].segments[1].kind == Segment::Kind::vertical);
    CHECK(jogged[1].segments[1].fixed == jogged[0].segments[0].fixed + 1);
}

TEST_CASE("path segment sums reproduce the height function for every tiling") {
    auto spec = make_spec(3, {-1, 3}, {1, 7});
    auto paths = build_paths(spec, {{0.7, 0.5}, {0.7, 0.9}});
    for (const auto& arr : collect_arrays(spec)) {
        for (const auto& path : paths) {
            long acc = 0;
            for (const auto& seg : path.segments) {
                long sum = 0;
                for (auto cell : seg.cells()) {
                    auto t = lozenge_type_at(arr, cell.x, cell.n);
                    if (seg.kind == Segment::Kind::horizontal) {
                        sum += t == LozengeType::V;
                    } else {
                        sum += t != LozengeType::L;
                    }
                }
                acc += seg.sign * sum;
            }
            CHECK(acc == height_of(spec, arr, path.anchor_x, path.anchor_n));
        }
    }
}

TEST_CASE("single-path moments vanish identically") {
    auto spec = unit_hexagon();
    PathSpec p;
    p.anchor_x = 1;
    p.anchor_n = 1;
    p.segments.push_back({Segment::Kind::vertical, +1, 1, 0, 1});
    CHECK(moment_prop(spec, {p}) == Rational(0));
}

namespace {

std::vector<PathSpec> vertical_paths(const std::vector<LatticePoint>& anchors) {
    std::vector<PathSpec> paths;
    for (auto [x, n] : anchors) {
        PathSpec p;
        p.anchor_x = x;
        p.anchor_n = n;
        p.segments.push_back({Segment::Kind::vertical, +1, x, 0, n});
        paths.push_back(p);
    }
    return paths;
}

}  // namespace

TEST_CASE("moment_prop equals the enumeration oracle exactly (s = 2, 3)") {
    std::vector<PolygonSpec> specs = {unit_hexagon(), make_spec(3, {-1, 3}, {1, 7}),
                                      make_spec(3, {-1, 3, 7}, {1, 5, 9}),
                                      make_spec(4, {-1, 5}, {3, 9})};
    for (const auto& spec : specs) {
        std::vector<long> cols;
        for (long x : region_cells_at_level(spec, 1)) cols.push_back(x);
        REQUIRE(cols.size() >= 2);
        const long c0 = cols.front(), c1 = cols.back();

        auto check_points = [&](const std::vector<LatticePoint>& anchors) {
            auto paths = vertical_paths(anchors);
            CHECK(moment_prop(spec, paths) == empirical_moment(spec, anchors));
        };
        check_points({{c0, spec.N - 1}, {c1, spec.N}});
        check_points({{c0, spec.N}, {c1, spec.N - 1}});
        if (cols.size() >= 3) {
            check_points({{cols[0], spec.N}, {cols[1], spec.N - 1}, {cols[2], spec.N}});
        }
    }
}

TEST_CASE("moment_prop with a jogged same-column pair equals the oracle") {
    auto spec = make_spec(4, {-1, 5}, {3, 9});
    auto paths = build_paths(spec, {{0.4, 0.5}, {0.4, 0.9}});
    REQUIRE(paths.size() == 2);
    std::vector<LatticePoint> anchors = {{paths[0].anchor_x, paths[0].anchor_n},
                                         {paths[1].anchor_x, paths[1].anchor_n}};
    CHECK(anchors[0].x == anchors[1].x);
    CHECK(moment_prop(spec, paths) == empirical_moment(spec, anchors));
}

TEST_CASE("moment_prop: s=2 reduction to the signed double sum") {
    auto spec = make_spec(3, {-1, 3}, {1, 7});
    KernelEvaluator eval(spec);
    const long x1 = 2, x2 = 3;
    const int n1 = 2, n2 = 3;
    Rational direct(0);
    for (int m1 = 1; m1 <= n1; ++m1)
        for (int m2 = 1; m2 <= n2; ++m2)
            direct -= eval.kernel(x1, m1, x2 + 1, m2 - 1) * eval.kernel(x2, m2, x1 + 1, m1 - 1);
    CHECK(moment_prop(spec, vertical_paths({{x1, n1}, {x2, n2}})) == direct);
}

TEST_CASE("moment_prop is symmetric under path permutation and rejects overlaps") {
    auto spec = make_spec(3, {-1, 3}, {1, 7});
    auto p = vertical_paths({{2, 2}, {3, 3}});
    auto q = vertical_paths({{3, 3}, {2, 2}});
    CHECK(moment_prop(spec, p) == moment_prop(spec, q));
    auto bad = vertical_paths({{2, 2}, {2, 3}});
    CHECK_THROWS_AS(moment_prop(spec, bad), std::invalid_argument);
}

TEST_CASE("gap table: reports rows for each N and is symmetric in the points") {
    auto lp = hexagon_limit();
    std::vector<std::pair<double, double>> pts = {{-0.15, 0.45}, {0.2, 0.55}};
    auto t1 = gff_gap_table(lp, pts, {8, 12});
    REQUIRE(t1.size() == 2);
    for (const auto& row : t1) {
        CHECK(row.error.empty());
        CHECK(row.exact_moment.has_value());
        CHECK(row.scaled_gap >= 0);
    }
    auto t2 = gff_gap_table(lp, {pts[1], pts[0]}, {8, 12});
    for (size_t i = 0; i < t1.size(); ++i) {
        CHECK(t1[i].exact_moment.value() == t2[i].exact_moment.value());
        CHECK(t1[i].scaled_gap == doctest::Approx(t2[i].scaled_gap).epsilon(1e-12));
    }
}

TEST_CASE("gap table in monte-carlo mode tracks the exact value") {
    auto lp = hexagon_limit();
    std::vector<std::pair<double, double>> pts = {{-0.15, 0.45}, {0.2, 0.55}};
    GapTableMode mode;
    mode.monte_carlo = true;
    mode.n_samples = 2000;
    mode.seed = 9;
    auto mc = gff_gap_table(lp, pts, {8}, mode);
    auto exact = gff_gap_table(lp, pts, {8});
    REQUIRE(mc.size() == 1);
    REQUIRE(mc[0].error.empty());
    REQUIRE(mc[0].mc_estimate.has_value());
    double truth = to_double(exact[0].exact_moment.value());
    CHECK(std::abs(*mc[0].mc_estimate - truth) <= 4 * *mc[0].mc_std_error);
}
