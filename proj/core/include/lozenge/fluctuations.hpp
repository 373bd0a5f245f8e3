#pragma once

// Exact finite-N centered moments of the height function via s-fold sums of
// determinants with zeroed diagonal blocks, and their comparison against the
// Gaussian free field prediction.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lozenge/kernel.hpp"
#include "lozenge/polygon.hpp"
#include "lozenge/rational.hpp"
#include "lozenge/sampler.hpp"

namespace lozenge {

// One summation segment of a lattice path. A horizontal segment at height n
// sums particle indicators over y in [x_from+1, x_to]; a vertical segment at
// column x sums non-horizontal-lozenge indicators over m in [n_from+1, n_to].
struct Segment {
    enum class Kind { horizontal, vertical } kind = Kind::vertical;
    int sign = 1;
    long fixed = 0;  // n for horizontal, x for vertical
    long from = 0;   // exclusive lower summation bound
    long to = 0;     // inclusive upper bound

    std::vector<LatticePoint> cells() const;
};

// Piecewise-linear path from an anchor down to the line n = 0; the signed
// segment sums reproduce the height function at the anchor for every tiling.
struct PathSpec {
    long anchor_x = 0;
    int anchor_n = 0;
    std::vector<Segment> segments;
};

// E h(x,n), exact.
Rational mean_height(const PolygonSpec& spec, long x, int n);

// Default: one vertical segment per point from ([chi N],[eta N]) to n = 0.
// Points sharing a column get a minimal horizontal jog so that summation
// cells of distinct paths never coincide. Anchors whose column passes within
// 0.02 (limit coordinates) of a lower-left tangency are rejected.
std::vector<PathSpec> build_paths(const PolygonSpec& spec,
                                  const std::vector<std::pair<double, double>>& points);

// Exact E prod_i (h_i - E h_i) as the signed sum over per-path segment
// choices of s-fold sums of determinants with zero diagonal.
Rational moment_prop(const PolygonSpec& spec, const std::vector<PathSpec>& paths);
Rational moment_prop(const KernelEvaluator& eval, const std::vector<PathSpec>& paths);

struct MomentReport {
    int N = 0;
    std::vector<std::pair<double, double>> points;
    std::optional<Rational> exact_moment;
    std::optional<double> mc_estimate;
    std::optional<double> mc_std_error;
    double gff_prediction = 0;
    double scaled_gap = 0;  // |pi^(s/2) * moment - prediction|
    std::string error;     // non-empty when the row could not be computed
};

struct GapTableMode {
    bool monte_carlo = false;
    int n_samples = 0;
    std::uint64_t seed = 0;
};

std::vector<MomentReport> gff_gap_table(const LimitPolygon& lp,
                                        const std::vector<std::pair<double, double>>& points,
                                        const std::vector<int>& N_list,
                                        const GapTableMode& mode = {});

}  // namespace lozenge
