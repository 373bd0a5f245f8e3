#include "lozenge/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace lozenge {

ValidationResult validate_array(const PolygonSpec& spec, const ParticleArray& arr) {
    if (arr.levels() != spec.N) return {false, "array must have N rows"};
    for (int m = 1; m <= spec.N; ++m) {
        const auto& row = arr.row(m);
        if (static_cast<int>(row.size()) != m) return {false, "row length must equal its level"};
        for (size_t j = 0; j + 1 < row.size(); ++j)
            if (row[j] <= row[j + 1]) return {false, "rows must be strictly decreasing"};
    }
    if (arr.row(spec.N) != top_row(spec)) return {false, "top row mismatch"};
    for (int m = 2; m <= spec.N; ++m) {
        const auto& lo = arr.row(m - 1);
        const auto& hi = arr.row(m);
        for (int j = 0; j < m - 1; ++j) {
            if (!(hi[j + 1] < lo[j] && lo[j] <= hi[j])) return {false, "interlacing"};
        }
    }
    return {};
}

namespace {

void enumerate_rec(const PolygonSpec& spec, ParticleArray& arr, int m, long& budget,
                   const std::function<bool(const ParticleArray&)>& visit, bool& stopped) {
    if (stopped) return;
    if (m == 0) {
        if (--budget < 0) throw BudgetExceeded("enumeration budget exceeded");
        if (!visit(arr)) stopped = true;
        return;
    }
    const auto& upper = arr.rows[m];  // level m+1
    auto& row = arr.rows[m - 1];
    row.assign(m, 0);
    // Coordinates live in disjoint intervals (upper[j+1], upper[j]].
    std::function<void(int)> fill = [&](int j) {
        if (stopped) return;
        if (j == m) {
            enumerate_rec(spec, arr, m - 1, budget, visit, stopped);
            return;
        }
        for (long v = upper[j + 1] + 1; v <= upper[j]; ++v) {
            row[j] = v;
            fill(j + 1);
            if (stopped) return;
        }
    };
    fill(0);
    row.clear();
}

}  // namespace

void enumerate_arrays(const PolygonSpec& spec,
                      const std::function<bool(const ParticleArray&)>& visit, long cap) {
    require_valid(spec);
    ParticleArray arr;
    arr.rows.resize(spec.N);
    arr.rows[spec.N - 1] = top_row(spec);
    long budget = cap;
    bool stopped = false;
    if (spec.N == 1) {
        if (!visit(arr)) return;
        return;
    }
    enumerate_rec(spec, arr, spec.N - 1, budget, visit, stopped);
}

std::vector<ParticleArray> collect_arrays(const PolygonSpec& spec, long cap) {
    std::vector<ParticleArray> out;
    enumerate_arrays(
        spec,
        [&](const ParticleArray& a) {
            out.push_back(a);
            return true;
        },
        cap);
    return out;
}

namespace {

// #{entries of the decreasing row that are <= x}
long count_le(const std::vector<long>& row, long x) {
    // row is strictly decreasing; entries <= x form a suffix.
    auto it = std::lower_bound(row.begin(), row.end(), x, std::greater<long>());
    return static_cast<long>(row.end() - it);
}

}  // namespace

LozengeType lozenge_type_at(const ParticleArray& arr, long x, int n) {
    if (n < 1 || n > arr.levels()) throw std::invalid_argument("lozenge_type_at: bad level");
    const auto& row = arr.row(n);
    if (std::binary_search(row.rbegin(), row.rend(), x)) return LozengeType::V;
    const long above = count_le(row, x - 1);
    const long below = n >= 2 ? count_le(arr.row(n - 1), x) : 0;
    if (above == below) return LozengeType::L;
    if (above == below + 1) return LozengeType::S;
    throw std::invalid_argument("lozenge_type_at: rows do not interlace");
}

std::map<LatticePoint, LozengeType> array_to_lozenges(const PolygonSpec& spec,
                                                      const ParticleArray& arr) {
    auto vr = validate_array(spec, arr);
    if (!vr.ok) throw std::invalid_argument("array_to_lozenges: " + vr.violation);
    std::map<LatticePoint, LozengeType> types;
    for (int n = 1; n <= spec.N; ++n) {
        for (long x : region_cells_at_level(spec, n))
            types[{x, n}] = lozenge_type_at(arr, x, n);
        for (long x : arr.row(n)) types[{x, n}] = LozengeType::V;
    }
    return types;
}

long height_of(const PolygonSpec& spec, const ParticleArray& arr, long x, int n) {
    if (n < 0 || n > spec.N) throw std::invalid_argument("height_of: level outside strip");
    long h = 0;
    for (int m = 1; m <= n; ++m) {
        if (lozenge_type_at(arr, x, m) != LozengeType::L) ++h;
    }
    return h;
}

BigInt gt_dimension(const std::vector<long>& row) {
    const size_t n = row.size();
    BigInt num = 1, den = 1;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (row[i] <= row[j])
                throw std::invalid_argument("gt_dimension: row must be strictly decreasing");
            num *= row[i] - row[j];
            den *= j - i;
        }
    }
    return num / den;  // exact: the quotient counts completions
}

KasteleynSystem build_kasteleyn(const PolygonSpec& spec) {
    require_valid(spec);
    KasteleynSystem sys;
    const long lo = spec.A[0].minus_half() - 1;
    const long hi = spec.B[spec.k() - 1].plus_half() + 1;
    for (int n = 1; n <= spec.N; ++n)
        for (long x = lo; x <= hi; ++x)
            if (white_triangle_in_region(spec, x, n)) sys.whites.push_back({x, n});
    for (int m = 0; m < spec.N; ++m)
        for (long y = lo; y <= hi; ++y)
            if (black_triangle_in_region(spec, y, m)) sys.blacks.push_back({y, m});
    if (sys.whites.size() != sys.blacks.size())
        throw std::runtime_error("kasteleyn: white/black count mismatch (malformed region)");

    std::map<LatticePoint, size_t> bidx;
    for (size_t j = 0; j < sys.blacks.size(); ++j) bidx[sys.blacks[j]] = j;
    sys.matrix.assign(sys.whites.size(), std::vector<int>(sys.blacks.size(), 0));
    for (size_t i = 0; i < sys.whites.size(); ++i) {
        const auto [x, n] = sys.whites[i];
        for (LatticePoint b : {LatticePoint{x, n}, LatticePoint{x, n - 1},
                               LatticePoint{x + 1, n - 1}}) {
            auto it = bidx.find(b);
            if (it != bidx.end()) sys.matrix[i][it->second] = 1;
        }
    }
    return sys;
}

KasteleynInverse kasteleyn_inverse(const PolygonSpec& spec) {
    auto sys = build_kasteleyn(spec);
    const size_t n = sys.whites.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = Rational(sys.matrix[i][j]);
    KasteleynInverse inv;
    inv.whites = sys.whites;
    inv.blacks = sys.blacks;
    try {
        inv.entry = invert_rational_matrix(std::move(m));
    } catch (const std::domain_error&) {
        throw std::runtime_error("kasteleyn: singular matrix (malformed region)");
    }
    return inv;
}

TilingCounts count_tilings_methods(const PolygonSpec& spec, long cap) {
    TilingCounts c;
    c.by_enumeration = 0;
    enumerate_arrays(
        spec,
        [&](const ParticleArray&) {
            c.by_enumeration += 1;
            return true;
        },
        cap);
    c.by_dimension = gt_dimension(top_row(spec));
    auto sys = build_kasteleyn(spec);
    std::vector<std::vector<BigInt>> m(sys.whites.size(),
                                       std::vector<BigInt>(sys.blacks.size()));
    for (size_t i = 0; i < sys.whites.size(); ++i)
        for (size_t j = 0; j < sys.blacks.size(); ++j) m[i][j] = sys.matrix[i][j];
    c.by_kasteleyn = abs(det_bareiss_int(std::move(m)));
    return c;
}

BigInt count_tilings(const PolygonSpec& spec, long cap) {
    auto c = count_tilings_methods(spec, cap);
    if (!c.consistent())
        throw std::runtime_error("count_tilings: enumeration, dimension and Kasteleyn disagree");
    return c.by_enumeration;
}

Rational empirical_moment(const PolygonSpec& spec, const std::vector<LatticePoint>& points,
                          long cap) {
    const auto arrays = collect_arrays(spec, cap);
    if (arrays.empty()) throw std::runtime_error("empirical_moment: no tilings");
    const long count = static_cast<long>(arrays.size());
    const size_t s = points.size();

    std::vector<std::vector<long>> heights(arrays.size(), std::vector<long>(s));
    std::vector<Rational> mean(s, Rational(0));
    for (size_t a = 0; a < arrays.size(); ++a) {
        for (size_t i = 0; i < s; ++i) {
            heights[a][i] = height_of(spec, arrays[a], points[i].x, points[i].n);
            mean[i] += heights[a][i];
        }
    }
    for (auto& mu : mean) mu /= count;

    Rational acc(0);
    for (size_t a = 0; a < arrays.size(); ++a) {
        Rational prod(1);
        for (size_t i = 0; i < s; ++i) prod *= Rational(heights[a][i]) - mean[i];
        acc += prod;
    }
    return acc / count;
}

}  // namespace lozenge
