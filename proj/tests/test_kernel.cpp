#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "lozenge/kernel.hpp"
#include "lozenge/oracle.hpp"
#include "quadrature_oracle.hpp"
#include "test_util.hpp"

using namespace lozenge;
using namespace lozenge::testutil;

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(Rational(7), 0) == 1);
    CHECK(pochhammer(Rational(3), 2) == 12);
    CHECK(pochhammer(Rational(-1), 3) == 0);
    CHECK(pochhammer(make_rational(1, 2), 2) == make_rational(3, 4));
}

TEST_CASE("kernel values on the N=2 test polygon (enumeration-derived)") {
    KernelEvaluator eval(unit_hexagon());
    CHECK(eval.kernel(1, 1, 1, 1) == make_rational(1, 2));
    // off-diagonal product forced by the vanishing two-point function
    CHECK(eval.kernel(1, 1, 2, 1) * eval.kernel(2, 1, 1, 1) == make_rational(1, 4));
    // indicator term contributes nothing when n2 >= n1
    CHECK(eval.kernel(1, 1, 1, 1) == eval.kernel(1, 1, 1, 1));
    CHECK(eval.kernel(1, 2, 1, 1) == make_rational(-1, 2));
    // level-0 values back the extended kernel
    CHECK(eval.kernel(1, 1, 1, 0) == Rational(0));
    CHECK(eval.kernel(1, 1, 2, 0) == make_rational(1, 2));
}

TEST_CASE("kernel rejects out-of-range levels") {
    KernelEvaluator eval(unit_hexagon());
    CHECK_THROWS_AS(eval.kernel(1, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(eval.kernel(1, 3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(eval.kernel(1, 1, 1, 2), std::invalid_argument);  // n2 = N rejected
}

TEST_CASE("extended kernel case split") {
    KernelEvaluator eval(unit_hexagon());
    CHECK(eval.extended(1, 1, 1, 1, LozengeType::V) == eval.kernel(1, 1, 1, 1));
    CHECK(eval.extended(1, 1, 1, 1, LozengeType::S) == -eval.kernel(1, 1, 1, 0));
    CHECK(eval.extended(1, 1, 1, 1, LozengeType::L) == eval.kernel(1, 1, 2, 0));
}

TEST_CASE("three type probabilities at one cell partition the sample space") {
    auto spec = unit_hexagon();
    KernelEvaluator eval(spec);
    for (LatticePoint cell : {LatticePoint{1, 1}, LatticePoint{2, 1}}) {
        Rational sum(0);
        for (auto t : {LozengeType::V, LozengeType::S, LozengeType::L})
            sum += eval.lozenge_joint_probability({{cell.x, cell.n, t}});
        CHECK(sum == Rational(1));
    }
    // at the top level the particle occupation is deterministic, so the two
    // remaining types partition the non-particle cells
    Rational sum(0);
    for (auto t : {LozengeType::S, LozengeType::L})
        sum += eval.lozenge_joint_probability({{1, 2, t}});
    CHECK(sum == Rational(1));
}

TEST_CASE("correlation basics on the N=2 test polygon") {
    auto spec = unit_hexagon();
    CHECK(correlation(spec, {}) == Rational(1));
    CHECK(correlation(spec, {{1, 1}}) == make_rational(1, 2));
    CHECK(correlation(spec, {{1, 1}, {2, 1}}) == Rational(0));
    CHECK_THROWS_AS(correlation(spec, {{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("joint type probability of a single V cell reduces to the correlation") {
    auto spec = unit_hexagon();
    CHECK(lozenge_joint_prob(spec, {{1, 1, LozengeType::V}}) == correlation(spec, {{1, 1}}));
}

TEST_CASE("a cell in the frozen extension is a horizontal lozenge with probability one") {
    auto spec = unit_hexagon();
    CHECK(kernel_K(spec, -3, 1, -2, 0) == Rational(1));
    CHECK(lozenge_joint_prob(spec, {{-3, 1, LozengeType::L}}) == Rational(1));
    // verified against enumeration as well
    for (const auto& arr : collect_arrays(spec))
        CHECK(lozenge_type_at(arr, -3, 1) == LozengeType::L);
}

namespace {

// Exhaustive oracle comparison of correlations and type probabilities on one
// polygon, point sets of size <= max_s over the given cells.
void check_against_enumeration(const PolygonSpec& spec, int max_s) {
    auto arrays = collect_arrays(spec, 100000);
    const long count = static_cast<long>(arrays.size());
    KernelEvaluator eval(spec);

    std::vector<LatticePoint> cells;
    for (int n = 1; n <= spec.N - 1; ++n)
        for (long x : region_cells_at_level(spec, n)) cells.push_back({x, n});

    // particle occupancy per array
    std::vector<std::vector<bool>> occ(arrays.size(), std::vector<bool>(cells.size()));
    for (size_t a = 0; a < arrays.size(); ++a) {
        for (size_t c = 0; c < cells.size(); ++c)
            occ[a][c] = lozenge_type_at(arrays[a], cells[c].x, cells[c].n) == LozengeType::V;
    }

    std::vector<size_t> sel;
    std::function<void(size_t, int)> rec = [&](size_t start, int remaining) {
        if (!sel.empty()) {
            long freq = 0;
            for (size_t a = 0; a < arrays.size(); ++a) {
                bool all = true;
                for (size_t c : sel) all = all && occ[a][c];
                freq += all;
            }
            std::vector<LatticePoint> pts;
            for (size_t c : sel) pts.push_back(cells[c]);
            Rational rho = eval.correlation(pts);
            CHECK(rho == make_rational(freq, count));
            CHECK(rho >= 0);
            CHECK(rho <= 1);
        }
        if (remaining == 0) return;
        for (size_t c = start; c < cells.size(); ++c) {
            sel.push_back(c);
            rec(c + 1, remaining - 1);
            sel.pop_back();
        }
    };
    rec(0, max_s);
}

}  // namespace

TEST_CASE("correlations equal enumeration frequencies exactly (small specs)") {
    check_against_enumeration(unit_hexagon(), 2);
    check_against_enumeration(make_spec(3, {-1, 3}, {1, 7}), 3);
    check_against_enumeration(make_spec(3, {-1, 3, 7}, {1, 5, 9}), 3);
}

TEST_CASE("Kasteleyn consistency: inverse matrix matches the signed kernel") {
    for (auto spec : {unit_hexagon(), make_spec(3, {-1, 3}, {1, 7}),
                      make_spec(3, {-1, 3, 7}, {1, 5, 9}), make_spec(4, {-1, 5}, {3, 9})}) {
        auto inv = kasteleyn_inverse(spec);
        KernelEvaluator eval(spec);
        for (size_t bi = 0; bi < inv.blacks.size(); ++bi) {
            for (size_t wi = 0; wi < inv.whites.size(); ++wi) {
                const auto [y, m] = inv.blacks[bi];
                const auto [x, n] = inv.whites[wi];
                Rational expected = eval.kernel(x, n, y, m);
                if ((y - x + m - n) % 2 != 0) expected = -expected;
                CHECK(inv.entry[bi][wi] == expected);
            }
        }
    }
}

TEST_CASE("residue evaluation matches high-precision contour quadrature") {
    // Independent route: trapezoid quadrature of the double contour integral
    // on circles, 384-bit arithmetic. Tolerance 1e-20 absolute/relative.
    TestRng rng(2024);
    std::vector<PolygonSpec> specs = {unit_hexagon(), make_spec(3, {-1, 3}, {1, 7}),
                                      make_spec(3, {-1, 3, 7}, {1, 5, 9}),
                                      make_spec(4, {-1, 5}, {3, 9})};
    int done = 0;
    while (done < 20) {
        const auto& spec = specs[rng.next() % specs.size()];
        const long bk = spec.B.back().minus_half();
        const long a1 = spec.A.front().plus_half();
        long x1 = rng.range(a1 - 2, bk + 2);
        long x2 = rng.range(a1 - 2, bk);  // z contour must enclose something
        int n1 = static_cast<int>(rng.range(1, spec.N));
        int n2 = static_cast<int>(rng.range(0, spec.N - 1));
        KernelEvaluator eval(spec);

        // exact value of the double integral alone (kernel minus the
        // indicator term, divided by the factorial prefactor)
        Rational exact = eval.kernel(x1, n1, x2, n2);
        if (n2 < n1 && x2 <= x1) {
            exact += make_rational(pochhammer_int(BigInt(x1 - x2 + 1), n1 - n2 - 1),
                                   factorial(n1 - n2 - 1));
        }
        exact /= make_rational(factorial(spec.N - n1), factorial(spec.N - n2 - 1));

        auto quad = kernel_double_integral_quadrature(spec, x1, n1, x2, n2);
        BigFloat err = (quad.re - BigFloat::from_rational(exact)).abs();
        double tol = 1e-20 * std::max(1.0, std::abs(to_double(exact)));
        CHECK(err.to_double() < tol);
        CHECK(quad.im.abs().to_double() < tol);
        ++done;
    }
}
