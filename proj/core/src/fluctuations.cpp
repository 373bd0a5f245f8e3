#include "lozenge/fluctuations.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

#include "lozenge/limit_shape.hpp"

namespace lozenge {

std::vector<LatticePoint> Segment::cells() const {
    std::vector<LatticePoint> out;
    for (long v = from + 1; v <= to; ++v) {
        if (kind == Kind::horizontal)
            out.push_back({v, static_cast<int>(fixed)});
        else
            out.push_back({fixed, static_cast<int>(v)});
    }
    return out;
}

Rational mean_height(const PolygonSpec& spec, long x, int n) {
    return KernelEvaluator(spec).mean_height(x, n);
}

std::vector<PathSpec> build_paths(const PolygonSpec& spec,
                                  const std::vector<std::pair<double, double>>& points) {
    require_valid(spec);
    const int N = spec.N;

    // Columns near a lower-left tangency are rejected: the vertical sum would
    // hug the boundary where the expansion behind moment asymptotics degrades.
    const LimitPolygon lp = limit_of(spec);
    auto [tang_lo, tang_hi] = lower_left_branch_range(lp);

    std::set<std::pair<double, double>> distinct(points.begin(), points.end());
    if (distinct.size() != points.size())
        throw std::invalid_argument("build_paths: points must be pairwise distinct");

    struct Anchor {
        long x;
        int n;
        size_t index;
    };
    std::vector<Anchor> anchors;
    for (size_t i = 0; i < points.size(); ++i) {
        auto [chi, eta] = points[i];
        long x = static_cast<long>(std::floor(chi * N));
        int n = static_cast<int>(std::floor(eta * N));
        if (n < 1 || n > N)
            throw std::invalid_argument("build_paths: anchor level outside the strip");
        double col = static_cast<double>(x) / N;
        if (std::abs(col - tang_lo) < 0.02 || std::abs(col - tang_hi) < 0.02)
            throw std::invalid_argument(
                "build_paths: anchor column within 0.02 of a frozen-boundary tangency");
        anchors.push_back({x, n, i});
    }

    // Jog later same-column anchors; process by ascending level so a jogged
    // path's horizontal cells clear the shorter verticals it crosses.
    std::sort(anchors.begin(), anchors.end(), [](const Anchor& a, const Anchor& b) {
        return a.x != b.x ? a.x < b.x : a.n < b.n;
    });

    std::vector<PathSpec> paths(points.size());
    std::set<long> used_columns;               // columns holding a vertical segment
    std::map<long, int> column_top;            // vertical column -> highest summed level
    std::map<long, std::set<int>> h_cells;     // horizontal cells by column

    for (const auto& anc : anchors) {
        const long max_jog = 6;
        auto collides = [&](long w) {
            const long col = anc.x + w;
            if (used_columns.count(col)) return true;
            // new vertical (col, 1..n) against existing horizontal cells
            auto hit = h_cells.find(col);
            if (hit != h_cells.end() && *hit->second.begin() <= anc.n) return true;
            // new horizontal cells (anc.x+1 .. col, n) against existing paths
            for (long v = anc.x + 1; v <= col; ++v) {
                auto ct = column_top.find(v);
                if (ct != column_top.end() && ct->second >= anc.n) return true;
                auto hc = h_cells.find(v);
                if (hc != h_cells.end() && hc->second.count(anc.n)) return true;
            }
            return false;
        };
        long jog = 0;
        while (jog <= max_jog && collides(jog)) ++jog;
        if (jog > max_jog)
            throw std::invalid_argument("build_paths: cannot separate paths within jog budget");

        PathSpec path;
        path.anchor_x = anc.x;
        path.anchor_n = anc.n;
        if (jog > 0) {
            // h(x,n) = V_{0,n}(x+jog) - H_{x,x+jog}(n)
            path.segments.push_back(
                {Segment::Kind::horizontal, -1, anc.n, anc.x, anc.x + jog});
            for (long v = anc.x + 1; v <= anc.x + jog; ++v) h_cells[v].insert(anc.n);
        }
        path.segments.push_back({Segment::Kind::vertical, +1, anc.x + jog, 0, anc.n});
        used_columns.insert(anc.x + jog);
        column_top[anc.x + jog] = anc.n;
        paths[anc.index] = std::move(path);
    }
    return paths;
}

namespace {

void check_disjoint_cells(const std::vector<PathSpec>& paths) {
    std::vector<std::set<LatticePoint>> cells(paths.size());
    for (size_t i = 0; i < paths.size(); ++i)
        for (const auto& seg : paths[i].segments)
            for (auto c : seg.cells()) cells[i].insert(c);
    for (size_t i = 0; i < paths.size(); ++i) {
        for (size_t j = i + 1; j < paths.size(); ++j) {
            for (const auto& c : cells[i]) {
                if (cells[j].count(c))
                    throw std::invalid_argument("moment_prop: overlapping path cells");
            }
        }
    }
}

// One instance: a choice of a single segment per path. The matrix has rows
// and columns indexed by paths; horizontal rows carry K(y_i,n_i; ...) and
// vertical rows -K(x_i,m_i; ...); column shifts depend on the column path's
// kind: (y_j, n_j) for horizontal, (x_j+1, m_j-1) for vertical. Diagonal
// entries vanish (means are subtracted).
Rational instance_sum(const KernelEvaluator& eval, const std::vector<const Segment*>& segs) {
    const size_t s = segs.size();
    std::vector<long> idx(s);  // current summation value per path

    Rational total(0);
    // Odometer over the product of index ranges.
    for (size_t i = 0; i < s; ++i) {
        if (segs[i]->from + 1 > segs[i]->to) return Rational(0);
        idx[i] = segs[i]->from + 1;
    }
    std::vector<std::vector<Rational>> m(s, std::vector<Rational>(s, Rational(0)));
    while (true) {
        for (size_t i = 0; i < s; ++i) {
            const bool row_h = segs[i]->kind == Segment::Kind::horizontal;
            const long xi = row_h ? idx[i] : segs[i]->fixed;
            const int ni = static_cast<int>(row_h ? segs[i]->fixed : idx[i]);
            for (size_t j = 0; j < s; ++j) {
                if (i == j) {
                    m[i][j] = 0;
                    continue;
                }
                const bool col_h = segs[j]->kind == Segment::Kind::horizontal;
                long xj;
                int nj;
                if (col_h) {
                    xj = idx[j];
                    nj = static_cast<int>(segs[j]->fixed);
                } else {
                    xj = segs[j]->fixed + 1;
                    nj = static_cast<int>(idx[j]) - 1;
                }
                Rational v = eval.kernel(xi, ni, xj, nj);
                m[i][j] = row_h ? v : -v;
            }
        }
        total += det_bareiss(m);

        size_t d = 0;
        while (d < s) {
            if (++idx[d] <= segs[d]->to) break;
            idx[d] = segs[d]->from + 1;
            ++d;
        }
        if (d == s) break;
    }
    return total;
}

}  // namespace

Rational moment_prop(const KernelEvaluator& eval, const std::vector<PathSpec>& paths) {
    if (paths.empty()) return Rational(1);  // empty product of centered factors
    for (const auto& p : paths)
        if (p.segments.empty()) throw std::invalid_argument("moment_prop: path without segments");
    check_disjoint_cells(paths);

    const size_t s = paths.size();
    std::vector<size_t> choice(s, 0);
    Rational total(0);
    while (true) {
        std::vector<const Segment*> segs(s);
        int sign = 1;
        for (size_t i = 0; i < s; ++i) {
            segs[i] = &paths[i].segments[choice[i]];
            sign *= segs[i]->sign;
        }
        Rational term = instance_sum(eval, segs);
        total += sign > 0 ? term : -term;

        size_t d = 0;
        while (d < s) {
            if (++choice[d] < paths[d].segments.size()) break;
            choice[d] = 0;
            ++d;
        }
        if (d == s) break;
    }
    return total;
}

Rational moment_prop(const PolygonSpec& spec, const std::vector<PathSpec>& paths) {
    KernelEvaluator eval(spec);
    return moment_prop(eval, paths);
}

std::vector<MomentReport> gff_gap_table(const LimitPolygon& lp,
                                        const std::vector<std::pair<double, double>>& points,
                                        const std::vector<int>& N_list,
                                        const GapTableMode& mode) {
    require_valid(lp);
    const size_t s = points.size();
    double prediction = gff_pairing_moment(lp, points);
    const double moment_scale = std::pow(std::numbers::pi, static_cast<double>(s) / 2.0);

    std::vector<MomentReport> table;
    for (int N : N_list) {
        MomentReport row;
        row.N = N;
        row.points = points;
        row.gff_prediction = prediction;
        try {
            PolygonSpec spec = scale(lp, N);
            const LimitPolygon lpn = limit_of(spec);
            for (auto [chi, eta] : points) {
                long x = static_cast<long>(std::floor(chi * N));
                int n = static_cast<int>(std::floor(eta * N));
                auto st = solve_w_full(lpn, static_cast<double>(x) / N,
                                       static_cast<double>(n) / N);
                if (st.status != PhaseStatus::liquid)
                    throw std::runtime_error("scaled point left the liquid region at N=" +
                                             std::to_string(N));
            }
            double moment;
            if (mode.monte_carlo) {
                std::vector<LatticePoint> anchors;
                for (auto [chi, eta] : points)
                    anchors.push_back({static_cast<long>(std::floor(chi * N)),
                                       static_cast<int>(std::floor(eta * N))});
                auto mc = mc_moments(spec, anchors, mode.n_samples, mode.seed);
                row.mc_estimate = mc.estimate;
                row.mc_std_error = mc.std_error;
                moment = mc.estimate;
            } else {
                auto paths = build_paths(spec, points);
                Rational exact = moment_prop(spec, paths);
                row.exact_moment = exact;
                moment = to_double(exact);
            }
            row.scaled_gap = std::abs(moment_scale * moment - prediction);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace lozenge
