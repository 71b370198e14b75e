#pragma once

#include <limits>
#include <string>
#include <vector>

#include "weber_orr/types.hpp"

namespace weber_orr {

// One point of an identity check. Unused fields keep their defaults.
struct IdentityCase {
    std::string label;
    double nu = 0.25;
    double a = 1.0;
    double x = 2.0;
    cplx s{-0.5, 0.0};
    cplx w{-0.55, 0.0};
    // Contour abscissa; NaN selects the midpoint of the admissible strip.
    double gamma_abscissa = std::numeric_limits<double>::quiet_NaN();
    double n_cut = 0.0;
    // Cutoffs of the tail-decay fit.
    std::vector<double> n_values;
    // Sample points of the Legendre bound check, and the height range of s.
    std::vector<double> t_grid;
    double tau_min = 1.0;
    double tau_max = 100.0;
};

struct IdentityReport {
    std::string suite;
    std::string label;
    cplx lhs;
    cplx rhs;
    double abs_diff = 0.0;
    double rel_diff = 0.0;
    double lhs_error_estimate = 0.0;
    double imaginary_residue = 0.0;
    // Independent second evaluation of the left side, where one exists.
    bool has_cross_check = false;
    cplx cross_check;
    double cross_check_diff = 0.0;
    double tolerance = 0.0;
    std::string criterion;
    bool passed = false;
    std::string note;
};

// Suite names accepted by check_constraints and run_case.
const std::vector<std::string>& identity_suites();

// Throws ConstraintError naming the violated condition.
void check_constraints(const std::string& suite, const IdentityCase& c);

// int_0^inf C_nu(x xi, a xi) xi^{-s} d xi against its Legendre closed form.
IdentityReport verify_eq12(const IdentityCase& c);

// int_1^inf (t - 1)^{(w - s)/2 - 1} Q^{-nu}_{-(w+1)/2}(t) Q^{-nu}_{(s-1)/2}(t) dt
// against its Gamma-product closed form.
IdentityReport verify_eq18(const IdentityCase& c);

// Contour integral of the Gamma ratio against its closed form, with the
// left residue series as a second evaluation.
IdentityReport verify_slater(const IdentityCase& c);

// Contour representation of J^2 + Y^2 at a x on the line gamma.
IdentityReport verify_mb_kernel(const IdentityCase& c);

// The tail integral over (1, (N^2 + a^2)/(N^2 - a^2)) with N = c.n_cut.
QuadratureResult tail_integral_in(const IdentityCase& c);

// Log-log slope of |tail_integral_in| over c.n_values against Re(s + 2 nu - w).
IdentityReport verify_in_decay(const IdentityCase& c);

// sup of |Q^{-nu}_{(s-1)/2}(t)| |s|^nu (t^2 - 1)^{nu/2} over Re s = c.s.real(),
// |Im s| in [tau_min, tau_max], t in t_grid; stable under grid refinement.
IdentityReport verify_q_bounds(const IdentityCase& c);

struct QBoundSummary {
    double sup_ratio = 0.0;
    double sup_ratio_refined = 0.0;
    double stirling_slope = 0.0;
};
QBoundSummary q_bound_summary(double nu, double mu, const std::vector<double>& t_grid, double tau_min,
                              double tau_max, int tau_points);

// Dispatch by suite name.
IdentityReport run_case(const std::string& suite, const IdentityCase& c);

// Runs the cases on `workers` threads; reports come back in input order.
std::vector<IdentityReport> run_suite(const std::string& suite, const std::vector<IdentityCase>& cases,
                                      int workers = 1);

// Least-squares slope of log|y| against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace weber_orr
