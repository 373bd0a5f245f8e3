#include "lozenge/limit_shape.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lozenge {

namespace {

constexpr double kLiquidImThreshold = 1e-12;

using LComplex = std::complex<long double>;

bool inside_limit_polygon(const LimitPolygon& lp, double chi, double eta) {
    const int k = lp.k();
    if (eta <= 0 || eta >= 1) return false;
    const double s = chi + eta;
    if (s <= lp.a[0] + 1) return false;
    if (chi >= lp.b[k - 1]) return false;
    if (s >= lp.a[k - 1] + 1) return false;
    for (int i = 0; i + 1 < k; ++i) {
        if (chi < lp.b[i] && s > lp.a[i] + 1) return false;
    }
    return true;
}

// Stable 1 - Q(w) and Sigma(w) for real w away from [a_i, b_i] poles.
double one_minus_q_real(const LimitPolygon& lp, double w) {
    double logq = 0;
    bool negative = false;
    for (int i = 0; i < lp.k(); ++i) {
        double num = w - lp.b[i], den = w - lp.a[i];
        if (num * den < 0) {
            // Q < 0 inside a band; no cancellation concern there.
            negative = true;
        }
    }
    if (negative) {
        double q = 1;
        for (int i = 0; i < lp.k(); ++i) q *= (w - lp.b[i]) / (w - lp.a[i]);
        return 1 - q;
    }
    for (int i = 0; i < lp.k(); ++i)
        logq += std::log1p((lp.a[i] - lp.b[i]) / (w - lp.a[i]));
    return -std::expm1(logq);
}

double sigma_real(const LimitPolygon& lp, double w) {
    double s = 0;
    for (int i = 0; i < lp.k(); ++i)
        s += (lp.b[i] - lp.a[i]) / ((w - lp.b[i]) * (w - lp.a[i]));
    return s;
}

}  // namespace

Action::Action(const LimitPolygon& lp, double chi, double eta) : lp_(lp), chi_(chi), eta_(eta) {
    require_valid(lp_);
    if (eta_ >= 1.0)
        throw std::invalid_argument("action: eta must be below the top of the strip");
}

Complex Action::value(Complex w) const {
    auto xlogx = [](Complex z) { return z == 0.0 ? Complex(0) : z * std::log(z); };
    Complex s = xlogx(w - chi_) - xlogx(w - chi_ + 1.0 - eta_);
    s += (1.0 - eta_) * std::log(1.0 - eta_);
    for (int i = 0; i < lp_.k(); ++i) s += xlogx(lp_.b[i] - w) - xlogx(lp_.a[i] - w);
    return s;
}

Complex Action::deriv(Complex w) const {
    Complex s = std::log(w - chi_) - std::log(w - chi_ + 1.0 - eta_);
    for (int i = 0; i < lp_.k(); ++i) s += std::log(lp_.a[i] - w) - std::log(lp_.b[i] - w);
    return s;
}

Complex Action::deriv2(Complex w) const {
    Complex s = 1.0 / (w - chi_) - 1.0 / (w - chi_ + 1.0 - eta_);
    for (int i = 0; i < lp_.k(); ++i) s += 1.0 / (w - lp_.a[i]) - 1.0 / (w - lp_.b[i]);
    return s;
}

Complex Action::deriv3(Complex w) const {
    auto sq = [](Complex z) { return z * z; };
    Complex s = -1.0 / sq(w - chi_) + 1.0 / sq(w - chi_ + 1.0 - eta_);
    for (int i = 0; i < lp_.k(); ++i) s += -1.0 / sq(w - lp_.a[i]) + 1.0 / sq(w - lp_.b[i]);
    return s;
}

Complex Action::xi(Complex w) const {
    return (w - chi_) * (w - chi_ + 1.0 - eta_) / (1.0 - eta_);
}

Complex Action::sqrt_xi(Complex w) const {
    Complex l = std::log(w - chi_) + std::log(w - chi_ + 1.0 - eta_) - std::log(Complex(1.0 - eta_));
    return std::exp(0.5 * l);
}

Complex Action::q_ratio(Complex w) const {
    Complex q = 1;
    for (int i = 0; i < lp_.k(); ++i) q *= (w - lp_.b[i]) / (w - lp_.a[i]);
    return q;
}

Complex Action::sigma(Complex w) const {
    Complex s = 0;
    for (int i = 0; i < lp_.k(); ++i)
        s += (lp_.b[i] - lp_.a[i]) / ((w - lp_.b[i]) * (w - lp_.a[i]));
    return s;
}

namespace {

// (w-chi) prod(w-a_i) - (w-chi+1-eta) prod(w-b_i), evaluated in extended
// precision from the factored form, plus its w-derivative.
std::pair<LComplex, LComplex> critical_poly_eval(const LimitPolygon& lp, double chi, double eta,
                                                 LComplex w) {
    const int k = lp.k();
    LComplex pa = 1, pb = 1, da = 0, db = 0;
    for (int i = 0; i < k; ++i) {
        LComplex fa = w - static_cast<long double>(lp.a[i]);
        LComplex fb = w - static_cast<long double>(lp.b[i]);
        da = da * fa + pa;
        db = db * fb + pb;
        pa *= fa;
        pb *= fb;
    }
    LComplex u = w - static_cast<long double>(chi);
    LComplex v = u + static_cast<long double>(1.0 - eta);
    LComplex val = u * pa - v * pb;
    LComplex der = pa + u * da - pb - v * db;
    return {val, der};
}

std::vector<Complex> critical_roots(const LimitPolygon& lp, double chi, double eta) {
    const int k = lp.k();
    // Expand both degree-(k+1) products; the leading terms cancel leaving
    // degree k with leading coefficient eta.
    std::vector<double> pa = {1.0}, pb = {1.0};
    for (int i = 0; i < k; ++i) {
        std::vector<double> na(pa.size() + 1, 0.0), nb(pb.size() + 1, 0.0);
        for (size_t j = 0; j < pa.size(); ++j) {
            na[j] -= lp.a[i] * pa[j];
            na[j + 1] += pa[j];
            nb[j] -= lp.b[i] * pb[j];
            nb[j + 1] += pb[j];
        }
        pa = std::move(na);
        pb = std::move(nb);
    }
    std::vector<double> coeff(k + 2, 0.0);
    for (size_t j = 0; j < pa.size(); ++j) {
        // (w - chi) * pa
        coeff[j + 1] += pa[j];
        coeff[j] -= chi * pa[j];
        // -(w - chi + 1 - eta) * pb
        coeff[j + 1] -= pb[j];
        coeff[j] -= (1.0 - eta - chi) * pb[j];
    }
    coeff.resize(k + 1);  // leading w^{k+1} cancels exactly

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(k, k);
    for (int i = 1; i < k; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < k; ++i) companion(i, k - 1) = -coeff[i] / coeff[k];
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);

    std::vector<Complex> roots;
    for (int i = 0; i < k; ++i) {
        LComplex w(es.eigenvalues()(i).real(), es.eigenvalues()(i).imag());
        for (int it = 0; it < 4; ++it) {
            auto [val, der] = critical_poly_eval(lp, chi, eta, w);
            if (der == LComplex(0)) break;
            w -= val / der;
        }
        roots.emplace_back(static_cast<double>(w.real()), static_cast<double>(w.imag()));
    }
    return roots;
}

}  // namespace

SolveResult solve_w_full(const LimitPolygon& lp, double chi, double eta) {
    require_valid(lp);
    if (!inside_limit_polygon(lp, chi, eta))
        throw std::invalid_argument("solve_w: point outside the open limit polygon");
    auto roots = critical_roots(lp, chi, eta);

    SolveResult res;
    res.condition = 1e300;
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            res.condition = std::min(res.condition, std::abs(roots[i] - roots[j]));

    std::vector<Complex> upper;
    for (auto r : roots)
        if (r.imag() > kLiquidImThreshold) upper.push_back(r);
    if (upper.empty()) {
        res.status = PhaseStatus::frozen;
        return res;
    }
    std::sort(upper.begin(), upper.end(),
              [](Complex a, Complex b) { return a.imag() > b.imag(); });
    if (upper.size() > 1 && upper[1].imag() > 1e-9) {
        // Theory allows at most one upper-half-plane critical point; treat a
        // second resolved one as an ill-conditioned cluster.
        res.status = PhaseStatus::indeterminate;
        return res;
    }
    res.status = PhaseStatus::liquid;
    res.point = LiquidPoint{chi, eta, upper[0]};
    return res;
}

std::optional<LiquidPoint> solve_w(const LimitPolygon& lp, double chi, double eta) {
    auto res = solve_w_full(lp, chi, eta);
    if (res.status == PhaseStatus::indeterminate)
        throw std::runtime_error("solve_w: ill-conditioned root cluster (separation " +
                                 std::to_string(res.condition) + ")");
    return res.point;
}

std::pair<double, double> invert_w(const LimitPolygon& lp, Complex z) {
    require_valid(lp);
    if (!(z.imag() > 0)) throw std::invalid_argument("invert_w: need Im z > 0");
    Action ac(lp, 0.0, 0.5);  // only q_ratio is used; chi/eta are irrelevant
    Complex q = ac.q_ratio(z);
    if (q.imag() == 0) throw std::runtime_error("invert_w: Im Q(z) vanished unexpectedly");
    Complex z1q = z * (1.0 - q);
    double c = -z1q.imag() / q.imag();
    double chi = (z1q + c * q).real();
    double eta = c - chi + 1.0;
    return {chi, eta};
}

FrozenBoundaryPoint frozen_boundary(const LimitPolygon& lp, double w) {
    require_valid(lp);
    const double tol = 1e-12;
    for (int i = 0; i < lp.k(); ++i) {
        if (std::abs(w - lp.a[i]) < tol || std::abs(w - lp.b[i]) < tol)
            throw std::invalid_argument("frozen_boundary: parameter at a pole of Q");
    }
    const double omq = one_minus_q_real(lp, w);
    const double q = 1.0 - omq;
    const double sig = sigma_real(lp, w);
    if (q == 0) throw std::invalid_argument("frozen_boundary: parameter at a zero of Q");
    if (sig == 0) throw std::invalid_argument("frozen_boundary: parameter at a zero of Sigma");
    FrozenBoundaryPoint p;
    p.w = w;
    p.chi = w - omq / sig;
    p.eta = 1.0 - omq * omq / (q * sig);
    return p;
}

std::pair<double, double> lower_left_branch_range(const LimitPolygon& lp) {
    require_valid(lp);
    // w -> -inf gives the bottom-side tangency; w -> a_1^- the side tangency.
    double p2 = 0;
    for (int i = 0; i < lp.k(); ++i) p2 += lp.b[i] * lp.b[i] - lp.a[i] * lp.a[i];
    const double chi_bottom = 0.5 * (1.0 + p2);
    const double chi_side = frozen_boundary(lp, lp.a[0] - 1e-9).chi;
    return {std::min(chi_bottom, chi_side), std::max(chi_bottom, chi_side)};
}

double eta_fb(const LimitPolygon& lp, double chi) {
    require_valid(lp);
    auto [lo, hi] = lower_left_branch_range(lp);
    if (!(chi > lo && chi < hi))
        throw std::invalid_argument("eta_fb: abscissa outside the lower-left branch range");
    // chi(w) is monotone on w < a_1; bisect in t with w = a_1 - e^t.
    double tlo = -20.0, thi = 22.0;
    auto chi_at = [&](double t) { return frozen_boundary(lp, lp.a[0] - std::exp(t)).chi; };
    double clo = chi_at(tlo), chi_far = chi_at(thi);
    const bool increasing = chi_far > clo;
    for (int it = 0; it < 200; ++it) {
        double tm = 0.5 * (tlo + thi);
        double cm = chi_at(tm);
        if ((cm < chi) == increasing)
            tlo = tm;
        else
            thi = tm;
    }
    return frozen_boundary(lp, lp.a[0] - std::exp(0.5 * (tlo + thi))).eta;
}

double green(Complex z1, Complex z2) {
    if (!(z1.imag() > 0) || !(z2.imag() > 0))
        throw std::invalid_argument("green: points must lie in the upper half plane");
    if (z1 == z2) throw std::invalid_argument("green: coincident points diverge");
    return -std::log(std::abs((z1 - z2) / (z1 - std::conj(z2)))) / (2.0 * std::numbers::pi);
}

namespace {

double pairing_sum(const std::vector<Complex>& ws, std::vector<bool>& used) {
    size_t first = 0;
    while (first < ws.size() && used[first]) ++first;
    if (first == ws.size()) return 1.0;
    used[first] = true;
    double total = 0;
    for (size_t j = first + 1; j < ws.size(); ++j) {
        if (used[j]) continue;
        used[j] = true;
        total += green(ws[first], ws[j]) * pairing_sum(ws, used);
        used[j] = false;
    }
    used[first] = false;
    return total;
}

}  // namespace

double gff_pairing_moment(const LimitPolygon& lp,
                          const std::vector<std::pair<double, double>>& points) {
    if (points.size() % 2 == 1) return 0.0;
    std::vector<Complex> ws;
    for (auto [chi, eta] : points) {
        auto pt = solve_w(lp, chi, eta);
        if (!pt) throw std::invalid_argument("gff_pairing_moment: point not in liquid region");
        ws.push_back(pt->w);
    }
    std::vector<bool> used(ws.size(), false);
    return pairing_sum(ws, used);
}

namespace {

Complex solve_w_near(const LimitPolygon& lp, double chi, double eta, Complex near_w) {
    auto roots = critical_roots(lp, chi, eta);
    Complex best;
    double bd = 1e300;
    for (auto r : roots) {
        if (!(r.imag() > kLiquidImThreshold)) continue;
        double d = std::abs(r - near_w);
        if (d < bd) {
            bd = d;
            best = r;
        }
    }
    if (bd == 1e300)
        throw std::invalid_argument("burgers_residual: neighborhood exits the liquid region");
    return best;
}

}  // namespace

BurgersResidual burgers_residual(const LimitPolygon& lp, double chi, double eta, double h) {
    auto center = solve_w(lp, chi, eta);
    if (!center) throw std::invalid_argument("burgers_residual: point not liquid");
    const Complex w = center->w;
    const Complex wxp = solve_w_near(lp, chi + h, eta, w);
    const Complex wxm = solve_w_near(lp, chi - h, eta, w);
    const Complex wep = solve_w_near(lp, chi, eta + h, w);
    const Complex wem = solve_w_near(lp, chi, eta - h, w);
    const Complex dchi = (wxp - wxm) / (2 * h);
    const Complex deta = (wep - wem) / (2 * h);

    BurgersResidual r;
    r.burgers = std::abs((w - chi) / (1.0 - eta) * dchi + deta);
    Action ac(lp, chi, eta);
    r.om_eta = std::abs(deta + 1.0 / (ac.deriv2(w) * (w - chi + 1.0 - eta)));
    return r;
}

namespace {

// Follows the gradient flow of Re S from a neighborhood of a critical point
// (holomorphic S keeps Im S constant along it). mode = -1 descends, +1
// ascends. Returns whether the path hits the real axis and where.
struct TraceOutcome {
    bool landed = false;
    double land_re = 0;
};

TraceOutcome trace_level_ray(const Action& ac, Complex start_w, double beta, int mode) {
    const auto& lp = ac.polygon();
    double scale = std::max({std::abs(lp.a[0]), std::abs(lp.b[lp.k() - 1]),
                             std::abs(ac.chi()) + 1.0, std::abs(start_w)}) + 2.0;
    Complex w = start_w + std::polar(1e-4 * std::max(0.02, start_w.imag()), beta);
    const double ds0 = std::clamp(start_w.imag() / 400.0, 2e-4, 5e-3);
    for (int step = 0; step < 80000; ++step) {
        Complex g = ac.deriv(w);
        double gn = std::abs(g);
        if (gn < 1e-14) break;
        Complex dir = static_cast<double>(mode) * std::conj(g) / gn;
        double ds = ds0 * std::min(2.0, 1.0 / std::sqrt(gn)) * (1.0 + 0.3 * std::abs(w));
        if (step < 200) ds = std::min(ds, 0.3 * std::abs(w - start_w) + 5e-5);
        w += ds * dir;
        if (w.imag() <= 1e-5) return {true, w.real()};
        if (std::abs(w) > 12.0 * scale) return {false, 0.0};
    }
    return {false, 0.0};
}

// Direction (angle) of the steepest-descent w-contour at its upper critical
// point: both descent rays land on the real axis (descending paths stay
// bounded); the counterclockwise contour is traversed toward the left landing.
double contour_direction_w(const Action& ac, Complex w1) {
    const double beta0 = 0.5 * (std::numbers::pi - std::arg(ac.deriv2(w1)));
    auto t0 = trace_level_ray(ac, w1, beta0, -1);
    auto t1 = trace_level_ray(ac, w1, beta0 + std::numbers::pi, -1);
    if (t0.landed && t1.landed) return t0.land_re < t1.land_re ? beta0 : beta0 + std::numbers::pi;
    throw std::runtime_error("bulk kernel: failed to orient the w contour");
}

// Direction of the z-contour at its upper critical point: of the two ascent
// rays exactly one lands on the real axis (at t+); the contour is traversed
// toward it.
double contour_direction_z(const Action& ac, Complex w2) {
    const double beta0 = -0.5 * std::arg(ac.deriv2(w2));
    auto t0 = trace_level_ray(ac, w2, beta0, +1);
    auto t1 = trace_level_ray(ac, w2, beta0 + std::numbers::pi, +1);
    if (t0.landed && !t1.landed) return beta0;
    if (t1.landed && !t0.landed) return beta0 + std::numbers::pi;
    if (t0.landed && t1.landed) {
        // Tie-break by the theoretical location t+ in [chi+eta-1, chi].
        double lo = ac.chi() + ac.eta() - 1.0, hi = ac.chi();
        bool in0 = t0.land_re >= lo && t0.land_re <= hi;
        bool in1 = t1.land_re >= lo && t1.land_re <= hi;
        if (in0 != in1) return in0 ? beta0 : beta0 + std::numbers::pi;
    }
    throw std::runtime_error("bulk kernel: failed to orient the z contour");
}

}  // namespace

BulkKernelApprox kernel_bulk_asymptotic(const PolygonSpec& spec, long x1, int n1, long x2,
                                        int n2) {
    require_valid(spec);
    const int N = spec.N;
    const LimitPolygon lp = limit_of(spec);
    const double dx = static_cast<double>(x1 - x2), dn = static_cast<double>(n1 - n2);
    const double sep = std::sqrt(dx * dx + dn * dn);
    constexpr double kDelta = 0.1;
    if (sep < std::pow(static_cast<double>(N), 0.5 + kDelta))
        throw std::invalid_argument("kernel_bulk_asymptotic: points closer than N^(1/2+delta)");

    const double chi1 = static_cast<double>(x1) / N, eta1 = static_cast<double>(n1) / N;
    const double chi2 = static_cast<double>(x2) / N, eta2 = static_cast<double>(n2) / N;
    auto p1 = solve_w(lp, chi1, eta1);
    auto p2 = solve_w(lp, chi2, eta2);
    if (!p1 || !p2)
        throw std::invalid_argument("kernel_bulk_asymptotic: point outside the liquid region");
    if (p1->w.imag() < 1e-6 || p2->w.imag() < 1e-6)
        throw std::invalid_argument("kernel_bulk_asymptotic: critical point too close to the edge");

    Action a1(lp, chi1, eta1), a2(lp, chi2, eta2);
    const Complex w1 = p1->w, w2 = p2->w;
    const double beta_w = contour_direction_w(a1, w1);
    const double beta_z = contour_direction_z(a2, w2);

    const double m1 = std::sqrt(std::abs(a1.deriv2(w1)));
    const double m2 = std::sqrt(std::abs(a2.deriv2(w2)));
    // (-S1'')^(1/2) and (S2'')^(1/2) oriented along the contour directions;
    // at the conjugate points the traversal direction flips to pi - beta.
    auto sq_w = [&](bool conj_pt) {
        return std::polar(m1, conj_pt ? -(std::numbers::pi - beta_w) : -beta_w);
    };
    auto sq_z = [&](bool conj_pt) {
        return std::polar(m2, conj_pt ? -(std::numbers::pi - beta_z) : -beta_z);
    };

    BulkKernelApprox out;
    Complex total = 0, total_shifted = 0;
    for (bool c1 : {false, true}) {
        for (bool c2 : {false, true}) {
            const Complex u1 = c1 ? std::conj(w1) : w1;
            const Complex u2 = c2 ? std::conj(w2) : w2;
            const Complex expo = std::exp(static_cast<double>(N) * (a1.value(u1) - a2.value(u2)));
            const Complex denom =
                (u1 - u2) * a1.sqrt_xi(u1) * a2.sqrt_xi(u2) * sq_w(c1) * sq_z(c2);
            const Complex term = expo / denom;
            total += term;
            total_shifted += term * (u2 - chi2) / (1.0 - eta2);
        }
    }
    const double pref = -1.0 / (2.0 * std::numbers::pi * N);
    out.value = pref * total;
    out.shifted = pref * total_shifted;
    return out;
}

}  // namespace lozenge
