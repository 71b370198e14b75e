#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "weber_orr/funcdsl.hpp"
#include "weber_orr/quad.hpp"
#include "weber_orr/types.hpp"

namespace weber_orr {

// Behaviour of a radial function at both ends of (0, inf).
struct DecayHint {
    enum class Tail { exponential, algebraic };

    // f(x) ~ x^origin_exponent as x -> 0+.
    double origin_exponent = 0.0;
    // exp(-infinity_rate * x) or x^-infinity_rate as x -> inf.
    Tail tail = Tail::exponential;
    double infinity_rate = 1.0;
};

// A real function on (domain_lo, inf). Evaluation below domain_lo throws.
class RadialFunction {
public:
    using Body = std::function<double(double)>;

    RadialFunction();

    static RadialFunction from_closure(Body body, DecayHint hint, std::string label = "closure",
                                       double domain_lo = 0.0);
    static RadialFunction from_expression(const std::string& text, DecayHint hint,
                                          double domain_lo = 0.0);
    // Cubic Hermite interpolation (monotone-agnostic, finite-difference slopes)
    // through the samples; zero outside [xs.front(), xs.back()].
    static RadialFunction from_table(std::vector<double> xs, std::vector<double> ys, DecayHint hint,
                                     double domain_lo = 0.0);
    static RadialFunction zero(double domain_lo = 0.0);

    double operator()(double x) const;

    const DecayHint& decay() const { return hint_; }
    double domain_lo() const { return domain_lo_; }
    const std::string& label() const { return label_; }
    bool is_zero() const { return is_zero_; }

    // Open interval of Re s where x^{Re s - 1} f(x) is integrable.
    std::pair<double, double> mellin_strip() const;

private:
    Body body_;
    DecayHint hint_;
    double domain_lo_ = 0.0;
    std::string label_;
    bool is_zero_ = false;
};

// f*(s) = int_0^inf f(x) x^{s-1} dx, split at x = 1 and integrated in log x.
// Throws ConstraintError when Re s is outside the strip of the decay hint.
QuadratureResult mellin_forward_result(const RadialFunction& f, cplx s, double tol = 1e-11);
cplx mellin_forward(const RadialFunction& f, cplx s, double tol = 1e-11);

// A function of the line variable together with the line it lives on.
class MellinImage {
public:
    using Body = std::function<cplx(cplx)>;

    MellinImage() = default;

    static MellinImage closed_form(Body body, VerticalLine native_line, std::string label = "closed form");
    // f* on native_line, sampled lazily on a tau-grid and interpolated.
    // Points off the line fall back to direct quadrature.
    static MellinImage from_function(const RadialFunction& f, VerticalLine native_line,
                                     double interp_tol = 1e-8);

    cplx operator()(cplx s) const;

    const VerticalLine& native_line() const { return line_; }
    const std::string& label() const { return label_; }
    // Grid step of the interpolating cache, 0 for closed forms.
    double grid_step() const;
    // Absolute accuracy of values on the native line: 0 for closed forms,
    // a multiple of int |f| x^{mu-1} dx for quadrature-built images.
    double noise_level() const { return noise_; }

private:
    struct Cache;

    Body body_;
    VerticalLine line_;
    std::string label_;
    double noise_ = 0.0;
    std::shared_ptr<Cache> cache_;
};

// Vertical line through the minimum over real mu > mu_lo of |F(mu)| x^{-mu}.
// On it the inversion integrand has the size of f(x), so the relative error
// holds up where f is tiny. The height grows like sqrt(mu).
VerticalLine saddle_line(const MellinImage& F, double x, double mu_lo, double t_height = 16.0);

// f(x) = (1/2 pi i) int_line F(s) x^{-s} ds.
QuadratureResult mellin_inverse(const MellinImage& F, const VerticalLine& line, double x,
                                double tol = 1e-10);

struct ParsevalSides {
    cplx lhs;  // int_0^inf f g dx
    cplx rhs;  // (1/2 pi i) int_line f*(s) g*(1 - s) ds
    double lhs_error = 0.0;
    double rhs_error = 0.0;
};

ParsevalSides parseval_pair(const RadialFunction& f, const RadialFunction& g, const VerticalLine& line,
                            double tol = 1e-10);

// Weights e^{pi c1 |s|} |s|^{c2} of the image spaces; requires 2 sign(c1) + sign(c2) >= 0.
struct SpaceParams {
    double c1 = 0.0;
    double c2 = 0.0;
};

void validate_space_params(const SpaceParams& p);

// True when a space with parameters `smaller` embeds into one with `larger`
// (d1 >= c1 and d2 >= c2 up to the exponential dominating).
bool space_included(const SpaceParams& smaller, const SpaceParams& larger);

struct NormResult {
    double value = 0.0;  // +inf when the weighted image is not integrable
    double error_estimate = 0.0;
    bool finite = false;
    // Decay exponent of the weighted image fitted from |tau| = T, 2T, 4T.
    double fitted_decay = 0.0;
    std::string reason;
};

// (1/2 pi) int_line e^{pi c1 |s|} |s^{c2} F(s)| |ds|.
NormResult space_norm(const MellinImage& F, const VerticalLine& line, const SpaceParams& p,
                      double tol = 1e-8);

struct MembershipVerdict {
    bool member = false;
    NormResult norm;
    std::string constraint;  // violated constraint when not a member
};

// Admissibility of the solver input: image integrable with weight |s| on a
// line with -1 < mu < 0, mu != 0.
MembershipVerdict membership_m01(const MellinImage& F, const VerticalLine& line, double tol = 1e-8);

// (int_0^inf |f|^p x^{mu p - 1} dx)^{1/p}, diagnostic only.
double lmu_p_norm(const RadialFunction& f, double mu, double p, double tol = 1e-9);

}  // namespace weber_orr
