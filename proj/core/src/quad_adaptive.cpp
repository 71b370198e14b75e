#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "weber_orr/errors.hpp"
#include "weber_orr/quad.hpp"

namespace weber_orr {
namespace {

// Gauss-Kronrod 10/21 abscissae and weights (QUADPACK qk21).
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
    double lo, hi;
    cplx value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk21(const Integrand& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    cplx fv[21];
    fv[10] = f(center);
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        fv[j] = f(center - dx);
        fv[20 - j] = f(center + dx);
    }
    cplx resk = kWgk[10] * fv[10];
    cplx resg(0.0, 0.0);
    double resabs = kWgk[10] * std::abs(fv[10]);
    for (int j = 0; j < 10; ++j) {
        const cplx pair = fv[j] + fv[20 - j];
        resk += kWgk[j] * pair;
        resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[20 - j]));
        if (j % 2 == 1) resg += kWg[j / 2] * pair;
    }
    const cplx mean = 0.5 * resk;
    double resasc = kWgk[10] * std::abs(fv[10] - mean);
    for (int j = 0; j < 10; ++j) {
        resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[20 - j] - mean));
    }
    const double ahalf = std::fabs(half);
    resasc *= ahalf;
    resabs *= ahalf;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
    return {lo, hi, resk * half, err};
}

}  // namespace

QuadratureResult integrate_adaptive(const Integrand& f, double lo, double hi, double tol,
                                    const AdaptiveOptions& opts) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("integrate_adaptive: requires finite lo < hi");
    }
    std::vector<double> cuts{lo};
    for (double b : opts.breakpoints) {
        if (b > lo && b < hi) cuts.push_back(b);
    }
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());

    std::priority_queue<Segment> heap;
    QuadratureResult out;
    cplx total(0.0, 0.0);
    double err = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (!(cuts[i] < cuts[i + 1])) continue;
        Segment s = gk21(f, cuts[i], cuts[i + 1]);
        out.evaluations += 21;
        total += s.value;
        err += s.error;
        heap.push(s);
    }
    auto done = [&] { return err <= std::max(tol * std::abs(total), opts.abs_tol); };
    while (!done() && static_cast<int>(heap.size()) < opts.max_intervals) {
        Segment worst = heap.top();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) break;  // interval at roundoff level
        heap.pop();
        Segment left = gk21(f, worst.lo, mid);
        Segment right = gk21(f, mid, worst.hi);
        out.evaluations += 42;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-add in position order so the result does not depend on heap history.
    std::vector<Segment> segs;
    segs.reserve(heap.size());
    while (!heap.empty()) {
        segs.push_back(heap.top());
        heap.pop();
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    total = 0.0;
    err = 0.0;
    for (const auto& s : segs) {
        total += s.value;
        err += s.error;
    }
    out.value = total;
    out.error_estimate = err;
    out.converged = done();
    return out;
}

QuadratureResult integrate_semi_infinite(const Integrand& f, double lo, double tol, double first_chunk,
                                         double abs_tol) {
    if (!(first_chunk > 0.0)) throw DomainError("integrate_semi_infinite: chunk must be positive");
    QuadratureResult out;
    double a = lo;
    double width = first_chunk;
    double prev_mag = std::numeric_limits<double>::infinity();
    int quiet = 0;
    int growing = 0;
    for (int chunk = 0; chunk < 200; ++chunk) {
        const double b = a + width;
        AdaptiveOptions o;
        o.abs_tol = 0.1 * std::max(abs_tol, tol * std::abs(out.value));
        const QuadratureResult r = integrate_adaptive(f, a, b, 0.1 * tol, o);
        out.value += r.value;
        out.error_estimate += r.error_estimate;
        out.evaluations += r.evaluations;
        out.converged = out.converged && r.converged;
        const double mag = std::abs(r.value);
        const double scale = std::max(std::abs(out.value), abs_tol / std::max(tol, 1e-300));
        if (mag <= 1e-3 * tol * scale || mag == 0.0) {
            if (++quiet == 3) return out;
        } else {
            quiet = 0;
        }
        // Chunks double in width, so a convergent tail must shrink per chunk
        // once past the bulk.
        if (chunk > 8 && mag >= prev_mag && mag > tol * scale) {
            if (++growing >= 4) {
                throw DivergenceError("integrate_semi_infinite: integrand does not decay at infinity");
            }
        } else {
            growing = 0;
        }
        prev_mag = mag;
        a = b;
        width *= 2.0;
        if (!std::isfinite(a)) break;
    }
    throw DivergenceError("integrate_semi_infinite: no convergence before overflow of the range");
}

}  // namespace weber_orr
