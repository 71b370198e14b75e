#include <algorithm>
#include <cstdio>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "weber_orr/errors.hpp"
#include "weber_orr/quad.hpp"

namespace weber_orr {
namespace {

constexpr double kHalfPi = 1.5707963267948966192313216916398;

struct Node {
    double x = 0.0;
    double dlo = 0.0;
    double dhi = 0.0;
    double weight = 0.0;
    bool valid = false;
};

// Shared level-refinement driver. node(t) maps the abscissa t of the
// trapezoidal rule onto the interval.
template <class NodeFn>
QuadratureResult de_driver(const EndpointIntegrand& f, NodeFn node, double t_limit, double tol,
                           const DeOptions& opts, const char* who) {
    QuadratureResult out;
    auto contribution = [&](double t, bool& ok) -> cplx {
        const Node n = node(t);
        ok = n.valid;
        if (!n.valid) return {0.0, 0.0};
        ++out.evaluations;
        const cplx v = f(n.x, n.dlo, n.dhi) * n.weight;
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            char where[64];
            std::snprintf(where, sizeof where, "%.6g", n.x);
            throw DivergenceError(std::string(who) + ": non-finite integrand value at x = " + where);
        }
        return v;
    };

    // Level 0, h = 1: also fixes how far out each side has to be sampled.
    bool ok0 = false;
    cplx total = contribution(0.0, ok0);
    double abs_sum = std::abs(total);
    double side_limit[2] = {0.0, 0.0};
    std::vector<double> side_mag[2];
    for (int side = 0; side < 2; ++side) {
        const double dir = side == 0 ? -1.0 : 1.0;
        for (int k = 1; k <= static_cast<int>(t_limit); ++k) {
            bool ok = false;
            const cplx c = contribution(dir * k, ok);
            if (!ok) break;
            total += c;
            abs_sum += std::abs(c);
            side_mag[side].push_back(std::abs(c));
            side_limit[side] = k;
        }
    }
    for (int side = 0; side < 2; ++side) {
        const auto& mags = side_mag[side];
        if (mags.empty()) continue;
        if (mags.size() >= 3 && mags.back() > 1e-4 * abs_sum) {
            throw DivergenceError(std::string(who) +
                                  ": endpoint contributions do not decay (singularity exponent <= -1?)");
        }
        // Trim the sampled range to where contributions are still visible.
        double keep = 1.0;
        for (std::size_t i = 0; i < mags.size(); ++i) {
            if (mags[i] > 1e-6 * tol * abs_sum) keep = static_cast<double>(i + 2);
        }
        side_limit[side] = std::min(side_limit[side] + 0.5, keep);
    }

    double h = 1.0;
    cplx value = total;
    double prev_diff = std::numeric_limits<double>::infinity();
    double err = std::numeric_limits<double>::infinity();
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int level = 1; level <= opts.max_level; ++level) {
        h *= 0.5;
        for (int side = 0; side < 2; ++side) {
            const double dir = side == 0 ? -1.0 : 1.0;
            for (double t = h; t <= side_limit[side]; t += 2.0 * h) {
                bool ok = false;
                const cplx c = contribution(dir * t, ok);
                if (!ok) break;
                total += c;
            }
        }
        const cplx next = total * h;
        const double diff = std::abs(next - value);
        value = next;
        // Digits roughly double per level, so the last difference over-states
        // the error of the new value; scale it by the observed contraction.
        double est = diff;
        if (std::isfinite(prev_diff) && diff < prev_diff) est = diff * (diff / prev_diff);
        prev_diff = diff;
        err = std::max(est, 10.0 * eps * std::abs(value));
        if (level >= 3 && est <= std::max(tol * std::abs(value), opts.abs_tol)) break;
    }
    out.value = value;
    out.error_estimate = err;
    out.converged = err <= std::max(tol * std::abs(value), opts.abs_tol) || err <= 10.0 * eps * std::abs(value);
    return out;
}

}  // namespace

QuadratureResult integrate_de(const EndpointIntegrand& f, double lo, double hi, double tol,
                              const DeOptions& opts) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("integrate_de: requires finite lo < hi");
    }
    const double len = hi - lo;
    const double half = 0.5 * len;
    auto node = [=](double t) {
        Node n;
        const double q = kHalfPi * std::sinh(t);
        const double e = std::exp(-2.0 * std::fabs(q));
        if (e == 0.0) return n;
        const double near = len * e / (1.0 + e);
        const double far = len / (1.0 + e);
        // Subnormal distances overflow endpoint powers; the weight there is nil.
        if (near < std::numeric_limits<double>::min()) return n;
        if (t >= 0.0) {
            n.dhi = near;
            n.dlo = far;
            n.x = hi - near;
        } else {
            n.dlo = near;
            n.dhi = far;
            n.x = lo + near;
        }
        n.weight = half * kHalfPi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
        n.valid = true;
        return n;
    };
    return de_driver(f, node, 6.2, tol, opts, "integrate_de");
}

QuadratureResult integrate_de(const Integrand& f, double lo, double hi, double tol, const DeOptions& opts) {
    // Nodes that round onto an endpoint are dropped; their weight is below
    // the resolution of the interval anyway.
    EndpointIntegrand g = [&](double x, double, double) -> cplx {
        if (x <= lo || x >= hi) return {0.0, 0.0};
        return f(x);
    };
    return integrate_de(g, lo, hi, tol, opts);
}

QuadratureResult integrate_de_semi_infinite(const EndpointIntegrand& f, double lo, double tol,
                                            const DeOptions& opts) {
    if (!std::isfinite(lo)) throw DomainError("integrate_de_semi_infinite: lo must be finite");
    auto node = [=](double t) {
        Node n;
        const double q = kHalfPi * std::sinh(t);
        if (q > 700.0 || q < -708.0) return n;
        const double d = std::exp(q);
        if (d == 0.0) return n;
        n.dlo = d;
        n.dhi = std::numeric_limits<double>::infinity();
        n.x = lo + d;
        n.weight = kHalfPi * std::cosh(t) * d;
        n.valid = true;
        return n;
    };
    return de_driver(f, node, 7.0, tol, opts, "integrate_de_semi_infinite");
}

}  // namespace weber_orr
