#pragma once

// Ground truth at tiny scale: full enumeration of tilings (as interlacing
// particle arrays), exact Kasteleyn matrix and inverse, and exact
// uniform-measure statistics.

#include <functional>
#include <map>
#include <vector>

#include "lozenge/kernel.hpp"
#include "lozenge/polygon.hpp"
#include "lozenge/rational.hpp"

namespace lozenge {

// rows[m-1] is level m (1-based): a strictly decreasing list of m integers.
// Level m interlaces level m+1: x_{j+1}^{m+1} < x_j^m <= x_j^{m+1}.
struct ParticleArray {
    std::vector<std::vector<long>> rows;

    int levels() const { return static_cast<int>(rows.size()); }
    const std::vector<long>& row(int m) const { return rows[m - 1]; }
    bool operator==(const ParticleArray&) const = default;
};

ValidationResult validate_array(const PolygonSpec& spec, const ParticleArray& arr);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Streams every interlacing array with the fixed top row, each exactly once,
// in lexicographic order (rows chosen top-down, coordinates minimal-first).
// The callback returns false to stop early. Throws BudgetExceeded past `cap`.
void enumerate_arrays(const PolygonSpec& spec,
                      const std::function<bool(const ParticleArray&)>& visit,
                      long cap = 2'000'000);

std::vector<ParticleArray> collect_arrays(const PolygonSpec& spec, long cap = 2'000'000);

// Lozenge type at cell (x, n) for a given array; defined for every integer x
// (cells outside the polygon sit in the frozen extension of the tiling).
// With c_n(x) = #{particles of row n that are <= x}:
//   V when x is a particle of row n,
//   L when c_n(x-1) == c_{n-1}(x),
//   S when c_n(x-1) == c_{n-1}(x) + 1.
LozengeType lozenge_type_at(const ParticleArray& arr, long x, int n);

// Types over the polygon cells plus all particle positions.
std::map<LatticePoint, LozengeType> array_to_lozenges(const PolygonSpec& spec,
                                                      const ParticleArray& arr);

// h(x,n) = #{m <= n : type at (x,m) is V or S}.
long height_of(const PolygonSpec& spec, const ParticleArray& arr, long x, int n);

// Number of interlacing completions below a strictly decreasing row:
// prod_{i<j} (x_i - x_j)/(j - i).
BigInt gt_dimension(const std::vector<long>& row);

struct TilingCounts {
    BigInt by_enumeration;
    BigInt by_dimension;
    BigInt by_kasteleyn;  // |det Kast|
    bool consistent() const {
        return by_enumeration == by_dimension && by_dimension == by_kasteleyn;
    }
};

TilingCounts count_tilings_methods(const PolygonSpec& spec, long cap = 2'000'000);
BigInt count_tilings(const PolygonSpec& spec, long cap = 2'000'000);

// Kasteleyn matrix of the honeycomb graph inside the polygon: rows are white
// triangles (x,n), columns black triangles (y,m); entry 1 iff
// (y,m) in {(x,n), (x,n-1), (x+1,n-1)} with both triangles in the graph.
struct KasteleynSystem {
    std::vector<LatticePoint> whites;
    std::vector<LatticePoint> blacks;
    std::vector<std::vector<int>> matrix;  // whites x blacks
};

KasteleynSystem build_kasteleyn(const PolygonSpec& spec);

struct KasteleynInverse {
    std::vector<LatticePoint> whites;
    std::vector<LatticePoint> blacks;
    // entry[b][w]: rows indexed by black triangles, columns by white ones
    std::vector<std::vector<Rational>> entry;
};

KasteleynInverse kasteleyn_inverse(const PolygonSpec& spec);

// Exact uniform-measure expectation of prod_i (h(p_i) - E h(p_i)).
Rational empirical_moment(const PolygonSpec& spec, const std::vector<LatticePoint>& points,
                          long cap = 2'000'000);

}  // namespace lozenge
