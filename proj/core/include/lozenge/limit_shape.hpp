#pragma once

// Analytic layer: the logarithmic action S(w; chi, eta), its critical points
// (the complex coordinate w on the liquid region), the frozen boundary, the
// half-plane Green function and Gaussian pairing moments, and the bulk
// asymptotic expansion of the correlation kernel.

#include <complex>
#include <optional>
#include <vector>

#include "lozenge/polygon.hpp"

namespace lozenge {

using Complex = std::complex<double>;

// S(w;chi,eta) = (w-chi)ln(w-chi) - (w-chi+1-eta)ln(w-chi+1-eta)
//   + (1-eta)ln(1-eta) + sum_i [(b_i-w)ln(b_i-w) - (a_i-w)ln(a_i-w)],
// with principal logarithms (cuts along the negative real direction).
class Action {
public:
    Action(const LimitPolygon& lp, double chi, double eta);

    const LimitPolygon& polygon() const { return lp_; }
    double chi() const { return chi_; }
    double eta() const { return eta_; }

    Complex value(Complex w) const;
    // S'(w) = ln(w-chi) - ln(w-chi+1-eta) + sum_i [ln(a_i-w) - ln(b_i-w)]
    Complex deriv(Complex w) const;
    Complex deriv2(Complex w) const;
    Complex deriv3(Complex w) const;

    // Xi(w) = (w-chi)(w-chi+1-eta)/(1-eta)
    Complex xi(Complex w) const;
    // Branch of sqrt(Xi) continuous on the upper half plane:
    // exp((ln(w-chi) + ln(w-chi+1-eta) - ln(1-eta))/2).
    Complex sqrt_xi(Complex w) const;

    // Q(w) = prod_i (w-b_i)/(w-a_i)
    Complex q_ratio(Complex w) const;
    // Sigma(w) = sum_i [1/(w-b_i) - 1/(w-a_i)]
    Complex sigma(Complex w) const;

private:
    LimitPolygon lp_;
    double chi_, eta_;
};

struct LiquidPoint {
    double chi = 0, eta = 0;
    Complex w;  // Im w > 0
};

enum class PhaseStatus { liquid, frozen, indeterminate };

struct SolveResult {
    PhaseStatus status = PhaseStatus::frozen;
    std::optional<LiquidPoint> point;
    double condition = 0;  // min pairwise root separation (small = ill-conditioned)
};

// Roots of the degree-k polynomial
//   (w-chi) prod(w-a_i) - (w-chi+1-eta) prod(w-b_i)
// via companion-matrix eigenvalues plus a Newton polish in extended
// precision. Returns the unique upper-half-plane root when present.
SolveResult solve_w_full(const LimitPolygon& lp, double chi, double eta);
std::optional<LiquidPoint> solve_w(const LimitPolygon& lp, double chi, double eta);

// Closed-form inverse of the diffeomorphism: given z with Im z > 0,
//   c = -Im[z(1-Q(z))]/Im[Q(z)], chi = Re[z(1-Q(z)) + c Q(z)], eta = c-chi+1.
std::pair<double, double> invert_w(const LimitPolygon& lp, Complex z);

struct FrozenBoundaryPoint {
    double w = 0;  // real parameter (double critical point)
    double chi = 0, eta = 0;
};

// Rational parametrization of the frozen boundary from S'(w)=S''(w)=0:
//   chi = w - (1-Q(w))/Sigma(w),  eta = 1 - (1-Q(w))^2/(Q(w) Sigma(w)).
FrozenBoundaryPoint frozen_boundary(const LimitPolygon& lp, double w);

// Eta-value of the lower-left boundary branch (parametrized by w < a_1)
// at abscissa chi. Throws when chi is outside the branch range.
double eta_fb(const LimitPolygon& lp, double chi);

// Abscissa range (tangency points) of the lower-left branch.
std::pair<double, double> lower_left_branch_range(const LimitPolygon& lp);

// Dirichlet Green function on the upper half plane:
// -(1/2pi) ln|(z1-z2)/(z1-conj(z2))|.
double green(Complex z1, Complex z2);

// Gaussian pairing moment: 0 for odd s; sum over pair partitions of products
// of Green functions at the images w(chi_i, eta_i).
double gff_pairing_moment(const LimitPolygon& lp,
                          const std::vector<std::pair<double, double>>& points);

struct BurgersResidual {
    double burgers = 0;  // |(w-chi)/(1-eta) d_chi w + d_eta w|
    double om_eta = 0;   // |d_eta w + 1/(S''(w)(w-chi+1-eta))|
};

// Central finite differences of step h on the critical-point field.
BurgersResidual burgers_residual(const LimitPolygon& lp, double chi, double eta, double h);

struct BulkKernelApprox {
    Complex value;    // approximates K(x1,n1;x2,n2)
    Complex shifted;  // approximates K(x1,n1;x2+1,n2-1)
};

// Four-term steepest-descent expansion of the kernel for two bulk points at
// separation >= N^(1/2+delta), delta = 0.1. Square-root branches follow the
// descent/ascent contour directions at the critical points.
BulkKernelApprox kernel_bulk_asymptotic(const PolygonSpec& spec, long x1, int n1, long x2,
                                        int n2);

}  // namespace lozenge
