#include "lozenge/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lozenge {

HalfInt HalfInt::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("half-integer must be an exact fraction string: " + s);
    long num = std::stol(s.substr(0, slash));
    long den = std::stol(s.substr(slash + 1));
    if (den != 2 || num % 2 == 0)
        throw std::invalid_argument("not a proper half-integer: " + s);
    return HalfInt(num);
}

std::string HalfInt::str() const { return std::to_string(twice) + "/2"; }

std::string PolygonSpec::str() const {
    std::ostringstream os;
    os << "N=" << N << " A=(";
    for (int i = 0; i < k(); ++i) os << (i ? "," : "") << A[i].str();
    os << ") B=(";
    for (int i = 0; i < k(); ++i) os << (i ? "," : "") << B[i].str();
    os << ")";
    return os.str();
}

ValidationResult validate(const PolygonSpec& spec) {
    if (spec.N < 1) return {false, "N must be positive"};
    const int k = spec.k();
    if (k < 2 || static_cast<int>(spec.B.size()) != k)
        return {false, "need k >= 2 side parameters with |A| = |B|"};
    for (int i = 0; i < k; ++i) {
        if (!spec.A[i].is_proper() || !spec.B[i].is_proper())
            return {false, "side parameters must be proper half-integers"};
    }
    long prev = spec.A[0].twice;
    for (int i = 0; i < k; ++i) {
        if (i > 0 && spec.A[i].twice <= prev) return {false, "ordering"};
        prev = spec.A[i].twice;
        if (spec.B[i].twice <= prev) return {false, "ordering"};
        prev = spec.B[i].twice;
    }
    long sum2 = 0;
    for (int i = 0; i < k; ++i) sum2 += spec.B[i].twice - spec.A[i].twice;
    if (sum2 != 2L * spec.N) return {false, "sum mismatch"};
    return {};
}

void require_valid(const PolygonSpec& spec) {
    auto r = validate(spec);
    if (!r.ok) throw std::invalid_argument("invalid polygon (" + r.violation + "): " + spec.str());
}

std::vector<long> top_row(const PolygonSpec& spec) {
    require_valid(spec);
    std::vector<long> row;
    row.reserve(spec.N);
    for (int i = spec.k() - 1; i >= 0; --i) {
        for (long x = spec.B[i].minus_half(); x >= spec.A[i].plus_half(); --x) row.push_back(x);
    }
    return row;
}

namespace {

// Membership of a point given with coordinates scaled by `den` (exact test).
// The closed region is { 0 <= n <= N } ∩ { x+n >= A_1+N } ∩ { x <= B_k }
// ∩ { x+n <= A_k+N } minus the open wedges { x < B_i, x+n > A_i+N } that
// carve the k-1 notches below the top line.
bool contains_scaled(const PolygonSpec& spec, long xs, long ns, long den) {
    const int k = spec.k();
    const long N = spec.N;
    if (ns < 0 || ns > den * N) return false;
    const long s = xs + ns;
    // 2*(A_i + N) and 2*B_i are integers; compare at scale 2*den.
    auto cmp = [den](long v_scaled, long twice_bound) {
        return 2 * v_scaled - den * twice_bound;  // sign of (v - bound/2)
    };
    if (cmp(s, spec.A[0].twice + 2 * N) < 0) return false;
    if (cmp(xs, spec.B[k - 1].twice) > 0) return false;
    if (cmp(s, spec.A[k - 1].twice + 2 * N) > 0) return false;
    for (int i = 0; i + 1 < k; ++i) {
        if (cmp(xs, spec.B[i].twice) < 0 && cmp(s, spec.A[i].twice + 2 * N) > 0) return false;
    }
    return true;
}

}  // namespace

bool lattice_membership(const PolygonSpec& spec, long x, long n) {
    require_valid(spec);
    return contains_scaled(spec, x, n, 1);
}

bool white_triangle_in_region(const PolygonSpec& spec, long x, long n) {
    // centroid of {(x-1/2,n),(x+1/2,n),(x+1/2,n-1)} = (x+1/6, n-1/3)
    return contains_scaled(spec, 6 * x + 1, 6 * n - 2, 6);
}

bool black_triangle_in_region(const PolygonSpec& spec, long y, long m) {
    // centroid of {(y-1/2,m),(y+1/2,m),(y-1/2,m+1)} = (y-1/6, m+1/3)
    return contains_scaled(spec, 6 * y - 1, 6 * m + 1, 6);
}

std::vector<long> region_cells_at_level(const PolygonSpec& spec, int n) {
    std::vector<long> cells;
    const long lo = spec.A[0].minus_half() - 1;
    const long hi = spec.B[spec.k() - 1].plus_half() + 1;
    for (long x = lo; x <= hi; ++x) {
        if (white_triangle_in_region(spec, x, n)) cells.push_back(x);
    }
    return cells;
}

ValidationResult validate(const LimitPolygon& lp) {
    const int k = lp.k();
    if (k < 2 || static_cast<int>(lp.b.size()) != k)
        return {false, "need k >= 2 side parameters with |a| = |b|"};
    double prev = lp.a[0];
    for (int i = 0; i < k; ++i) {
        if (i > 0 && lp.a[i] <= prev) return {false, "ordering"};
        prev = lp.a[i];
        if (lp.b[i] <= prev) return {false, "ordering"};
        prev = lp.b[i];
    }
    double sum = 0;
    for (int i = 0; i < k; ++i) sum += lp.b[i] - lp.a[i];
    if (std::abs(sum - 1.0) > 1e-12) return {false, "sum mismatch"};
    return {};
}

void require_valid(const LimitPolygon& lp) {
    auto r = validate(lp);
    if (!r.ok) throw std::invalid_argument("invalid limit polygon: " + r.violation);
}

PolygonSpec scale(const LimitPolygon& lp, int N) {
    require_valid(lp);
    const int k = lp.k();
    if (N < k) throw std::invalid_argument("scale: N smaller than side count");
    PolygonSpec spec;
    spec.N = N;
    spec.A.resize(k);
    spec.B.resize(k);
    long sum = 0;
    for (int i = 0; i < k; ++i) {
        spec.A[i] = HalfInt(2 * static_cast<long>(std::floor(lp.a[i] * N)) + 1);
        spec.B[i] = HalfInt(2 * static_cast<long>(std::floor(lp.b[i] * N)) + 1);
        sum += (spec.B[i].twice - spec.A[i].twice) / 2;
    }
    // Deterministic correction: absorb the rounding defect into B_k.
    spec.B[k - 1].twice += 2 * (N - sum);
    auto r = validate(spec);
    if (!r.ok)
        throw std::invalid_argument("scale: N too small for strict ordering (" + r.violation +
                                    ")");
    return spec;
}

LimitPolygon limit_of(const PolygonSpec& spec) {
    require_valid(spec);
    LimitPolygon lp;
    for (int i = 0; i < spec.k(); ++i) {
        lp.a.push_back(spec.A[i].value() / spec.N);
        lp.b.push_back(spec.B[i].value() / spec.N);
    }
    return lp;
}

}  // namespace lozenge
