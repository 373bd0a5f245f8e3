#include "lozenge/render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lozenge/limit_shape.hpp"

namespace lozenge {

namespace {

constexpr double kUnit = 24.0;  // pixels per lattice unit

struct Mapper {
    double min_x, max_n, margin = 1.5;
    double X(double x) const { return kUnit * (x - min_x + margin); }
    double Y(double n) const { return kUnit * (max_n - n + margin); }
};

void polygon_tag(std::ostringstream& os, const Mapper& mp,
                 std::initializer_list<std::pair<double, double>> pts, const std::string& cls) {
    os << "  <polygon class=\"" << cls << "\" points=\"";
    bool first = true;
    for (auto [x, n] : pts) {
        if (!first) os << " ";
        first = false;
        os << mp.X(x) << "," << mp.Y(n);
    }
    os << "\"/>\n";
}

// Boundary vertices of the lattice polygon, counterclockwise.
std::vector<std::pair<double, double>> outline_vertices(const std::vector<double>& A,
                                                        const std::vector<double>& B,
                                                        double N) {
    const int k = static_cast<int>(A.size());
    std::vector<std::pair<double, double>> v;
    v.push_back({A[0] + N, 0});
    v.push_back({B[k - 1], 0});
    for (int i = k - 1; i >= 1; --i) {
        v.push_back({B[i], N - (B[i] - A[i])});
        v.push_back({A[i], N});
        v.push_back({B[i - 1], N});
    }
    v.push_back({B[0], N - (B[0] - A[0])});
    return v;
}

const char* kStyle =
    "  <style>\n"
    "    .V { fill:#6baed6; stroke:#123; stroke-width:0.6; }\n"
    "    .S { fill:#fdd49e; stroke:#123; stroke-width:0.6; }\n"
    "    .L { fill:#a1d99b; stroke:#123; stroke-width:0.6; }\n"
    "    .outline { fill:none; stroke:#000; stroke-width:1.4; }\n"
    "    .curve { fill:none; stroke:#c22; stroke-width:1.2; }\n"
    "  </style>\n";

}  // namespace

std::string render_tiling(const PolygonSpec& spec, const ParticleArray& arr) {
    auto types = array_to_lozenges(spec, arr);

    double min_x = 1e18, max_x = -1e18;
    for (const auto& [p, t] : types) {
        min_x = std::min(min_x, static_cast<double>(p.x) - 1);
        max_x = std::max(max_x, static_cast<double>(p.x) + 2);
    }
    Mapper mp{min_x, static_cast<double>(spec.N) + 1};
    const double width = kUnit * (max_x - min_x + 2 * mp.margin);
    const double height = kUnit * (spec.N + 2 + 2 * mp.margin);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\">\n"
       << kStyle;

    for (const auto& [p, t] : types) {
        const double x = static_cast<double>(p.x), n = static_cast<double>(p.n);
        switch (t) {
            case LozengeType::V:
                polygon_tag(os, mp,
                            {{x + 0.5, n - 1}, {x + 0.5, n}, {x - 0.5, n + 1}, {x - 0.5, n}},
                            "V");
                break;
            case LozengeType::S:
                polygon_tag(os, mp,
                            {{x - 0.5, n - 1}, {x + 0.5, n - 1}, {x + 0.5, n}, {x - 0.5, n}},
                            "S");
                break;
            case LozengeType::L:
                polygon_tag(os, mp,
                            {{x - 0.5, n}, {x + 0.5, n - 1}, {x + 1.5, n - 1}, {x + 0.5, n}},
                            "L");
                break;
        }
    }

    std::vector<double> A, B;
    for (int i = 0; i < spec.k(); ++i) {
        A.push_back(spec.A[i].value());
        B.push_back(spec.B[i].value());
    }
    os << "  <polygon class=\"outline\" points=\"";
    bool first = true;
    for (auto [x, n] : outline_vertices(A, B, spec.N)) {
        if (!first) os << " ";
        first = false;
        os << mp.X(x) << "," << mp.Y(n);
    }
    os << "\"/>\n</svg>\n";
    return os.str();
}

std::string render_frozen_boundary(const LimitPolygon& lp, int samples) {
    require_valid(lp);
    const double scale = 420.0;
    double min_x = lp.a[0], max_x = lp.b[lp.k() - 1];
    const double margin = 0.15 * (max_x - min_x) + 0.05;
    auto X = [&](double x) { return scale * (x - min_x + margin); };
    auto Y = [&](double n) { return scale * (1.0 - n + margin); };
    const double width = scale * (max_x - min_x + 2 * margin);
    const double height = scale * (1.0 + 2 * margin);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\">\n"
       << kStyle;

    os << "  <polygon class=\"outline\" points=\"";
    bool first = true;
    for (auto [x, n] : outline_vertices(lp.a, lp.b, 1.0)) {
        if (!first) os << " ";
        first = false;
        os << X(x) << "," << Y(n);
    }
    os << "\"/>\n";

    if (samples > 0) {
        // Sweep the real parameter through a compactifying tangent map so the
        // curve closes through w = +-infinity.
        os << "  <polyline class=\"curve\" points=\"";
        const double half_pi = std::numbers::pi / 2;
        bool any = false;
        for (int i = 0; i <= samples; ++i) {
            const double theta = -half_pi + std::numbers::pi * (i + 0.5) / (samples + 1);
            const double w = 4.0 * std::tan(theta);
            bool near_pole = false;
            for (int j = 0; j < lp.k(); ++j) {
                if (std::abs(w - lp.a[j]) < 1e-4 || std::abs(w - lp.b[j]) < 1e-4)
                    near_pole = true;
            }
            if (near_pole) continue;
            FrozenBoundaryPoint p;
            try {
                p = frozen_boundary(lp, w);
            } catch (const std::exception&) {
                continue;
            }
            if (!std::isfinite(p.chi) || !std::isfinite(p.eta)) continue;
            if (p.chi < min_x - margin || p.chi > max_x + margin) continue;
            if (p.eta < -margin || p.eta > 1 + margin) continue;
            if (any) os << " ";
            any = true;
            os << X(p.chi) << "," << Y(p.eta);
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace lozenge
