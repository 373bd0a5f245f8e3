#pragma once

// Polygons of the 3k-sided staircase class on the square grid (sides parallel
// to the axes or to (-1,1)), parametrized by a strip height N and half-integer
// abscissas A_1 < B_1 < ... < A_k < B_k with sum(B_i - A_i) = N. The bottom
// side lies on n = 0; the k-1 top sides (B_i,N)--(A_{i+1},N) lie on n = N.

#include <optional>
#include <string>
#include <vector>

#include "lozenge/rational.hpp"

namespace lozenge {

// Proper half-integer, stored as 2*value to keep all arithmetic exact.
struct HalfInt {
    long twice = 1;

    HalfInt() = default;
    explicit HalfInt(long twice_value) : twice(twice_value) {}

    static HalfInt from_twice(long t) { return HalfInt(t); }
    // Parses exact fraction strings like "-1/2", "13/2".
    static HalfInt parse(const std::string& s);

    bool is_proper() const { return twice % 2 != 0; }
    double value() const { return 0.5 * static_cast<double>(twice); }
    Rational rational() const { return make_rational(twice, 2); }
    // A_i + 1/2 and B_i - 1/2 are integers for proper half-integers.
    long plus_half() const { return (twice + 1) / 2; }
    long minus_half() const { return (twice - 1) / 2; }
    std::string str() const;

    friend bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }
    friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
};

struct ValidationResult {
    bool ok = true;
    std::string violation;  // names the failing constraint when !ok
};

struct PolygonSpec {
    int N = 0;
    std::vector<HalfInt> A;
    std::vector<HalfInt> B;

    int k() const { return static_cast<int>(A.size()); }
    std::string str() const;
};

ValidationResult validate(const PolygonSpec& spec);
void require_valid(const PolygonSpec& spec);

// Fixed top particle row {A_i+1/2, ..., B_i-1/2 for all i}, sorted decreasing.
std::vector<long> top_row(const PolygonSpec& spec);

// Closed-region membership for a lattice point (x, n).
bool lattice_membership(const PolygonSpec& spec, long x, long n);

// Triangle faces of the honeycomb graph, encoap by the midpoint (x, n) of
// their horizontal side: the white triangle at (x,n) spans the strip [n-1,n],
// the black one at (y,m) spans [m,m+1]. A triangle belongs to the graph iff
// it lies inside the closed polygon; since no boundary line can cut a
// triangle's interior, testing the centroid decides membership exactly.
bool white_triangle_in_region(const PolygonSpec& spec, long x, long n);
bool black_triangle_in_region(const PolygonSpec& spec, long y, long m);

// In-region lozenge cells (x, n) at level n, i.e. whites inside the polygon.
std::vector<long> region_cells_at_level(const PolygonSpec& spec, int n);

struct LimitPolygon {
    std::vector<double> a;
    std::vector<double> b;

    int k() const { return static_cast<int>(a.size()); }
};

ValidationResult validate(const LimitPolygon& lp);
void require_valid(const LimitPolygon& lp);

// Lattice polygon at scale N: A_i = floor(a_i N) + 1/2, B_i likewise, then a
// deterministic correction on B_k restores sum(B_i - A_i) = N. Throws when N
// is too small to keep the ordering strict.
PolygonSpec scale(const LimitPolygon& lp, int N);

// Limit polygon induced by a lattice one (a_i = A_i/N); sums to 1 exactly.
LimitPolygon limit_of(const PolygonSpec& spec);

}  // namespace lozenge
