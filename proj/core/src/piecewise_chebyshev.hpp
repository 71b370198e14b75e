#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace weber_orr::detail {

// Piecewise Chebyshev interpolant of a smooth function on [lo, hi].
// Panels are split until the interpolant matches the function at probe
// points between the nodes.
class PiecewiseChebyshev {
public:
    static constexpr int kNodes = 17;

    PiecewiseChebyshev() = default;

    // `breaks` are the initial panel edges (ascending, at least two).
    PiecewiseChebyshev(const std::function<double(double)>& fn, const std::vector<double>& breaks, double tol,
                       int max_depth = 8) {
        for (std::size_t i = 0; i + 1 < breaks.size(); ++i) build(fn, breaks[i], breaks[i + 1], tol, max_depth);
    }

    bool empty() const { return panels_.empty(); }
    double lo() const { return panels_.front().lo; }
    double hi() const { return panels_.back().hi; }
    long evaluations() const { return evaluations_; }
    std::size_t panels() const { return panels_.size(); }

    double operator()(double x) const {
        std::size_t l = 0;
        std::size_t r = panels_.size();
        while (r - l > 1) {
            const std::size_t m = (l + r) / 2;
            if (x < panels_[m].lo) {
                r = m;
            } else {
                l = m;
            }
        }
        return eval(panels_[l], x);
    }

private:
    struct Panel {
        double lo = 0.0;
        double hi = 0.0;
        double values[kNodes] = {};
    };

    std::vector<Panel> panels_;
    long evaluations_ = 0;

    static double node(int k) { return -std::cos(M_PI * k / (kNodes - 1)); }

    // Barycentric formula on Chebyshev-Lobatto nodes.
    static double eval(const Panel& p, double x) {
        const double t = (2.0 * x - p.lo - p.hi) / (p.hi - p.lo);
        double num = 0.0;
        double den = 0.0;
        for (int k = 0; k < kNodes; ++k) {
            const double d = t - node(k);
            if (d == 0.0) return p.values[k];
            double w = (k % 2 == 0) ? 1.0 : -1.0;
            if (k == 0 || k == kNodes - 1) w *= 0.5;
            num += w * p.values[k] / d;
            den += w / d;
        }
        return num / den;
    }

    void build(const std::function<double(double)>& fn, double lo, double hi, double tol, int depth) {
        Panel p;
        p.lo = lo;
        p.hi = hi;
        double scale = 0.0;
        for (int k = 0; k < kNodes; ++k) {
            p.values[k] = fn(0.5 * (lo + hi) + 0.5 * (hi - lo) * node(k));
            scale = std::max(scale, std::fabs(p.values[k]));
        }
        evaluations_ += kNodes;
        if (depth > 0) {
            double worst = 0.0;
            for (double t : {-0.93, 0.41}) {
                const double x = 0.5 * (lo + hi) + 0.5 * (hi - lo) * t;
                worst = std::max(worst, std::fabs(fn(x) - eval(p, x)));
                ++evaluations_;
            }
            if (worst > tol * std::max(scale, 1e-300)) {
                const double mid = 0.5 * (lo + hi);
                build(fn, lo, mid, tol, depth - 1);
                build(fn, mid, hi, tol, depth - 1);
                return;
            }
        }
        panels_.push_back(p);
    }
};

}  // namespace weber_orr::detail
