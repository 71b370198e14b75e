#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <utility>

#include "weber_orr/errors.hpp"
#include "weber_orr/mellin.hpp"

namespace weber_orr {

RadialFunction::RadialFunction()
    : body_([](double) { return 0.0; }),
      hint_{std::numeric_limits<double>::infinity(), DecayHint::Tail::exponential,
            std::numeric_limits<double>::infinity()},
      label_("zero"),
      is_zero_(true) {}

RadialFunction RadialFunction::from_closure(Body body, DecayHint hint, std::string label, double domain_lo) {
    if (!body) throw ParameterError("radial function: empty body");
    if (!(domain_lo >= 0.0) || !std::isfinite(domain_lo)) {
        throw ParameterError("radial function: domain start must be finite and non-negative");
    }
    RadialFunction f;
    f.domain_lo_ = domain_lo;
    f.body_ = std::move(body);
    f.hint_ = hint;
    f.label_ = std::move(label);
    f.is_zero_ = false;
    return f;
}

RadialFunction RadialFunction::from_expression(const std::string& text, DecayHint hint, double domain_lo) {
    auto expr = std::make_shared<const FunctionExpr>(parse_expr(text));
    return from_closure([expr](double x) { return expr->eval(x); }, hint, text, domain_lo);
}

RadialFunction RadialFunction::from_table(std::vector<double> xs, std::vector<double> ys, DecayHint hint,
                                          double domain_lo) {
    if (xs.size() != ys.size()) throw ParameterError("radial function table: column lengths differ");
    if (xs.size() < 2) throw ParameterError("radial function table: need at least two rows");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
            throw ParameterError("radial function table: non-finite entry in row " + std::to_string(i + 1));
        }
        if (i > 0 && !(xs[i] > xs[i - 1])) {
            throw ParameterError("radial function table: x must be strictly increasing (row " +
                                 std::to_string(i + 1) + ")");
        }
    }
    const std::size_t n = xs.size();
    std::vector<double> slope(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0) {
            slope[i] = (ys[1] - ys[0]) / (xs[1] - xs[0]);
        } else if (i == n - 1) {
            slope[i] = (ys[n - 1] - ys[n - 2]) / (xs[n - 1] - xs[n - 2]);
        } else {
            // Three-point derivative on a non-uniform grid.
            const double h0 = xs[i] - xs[i - 1];
            const double h1 = xs[i + 1] - xs[i];
            const double d0 = (ys[i] - ys[i - 1]) / h0;
            const double d1 = (ys[i + 1] - ys[i]) / h1;
            slope[i] = (h1 * d0 + h0 * d1) / (h0 + h1);
        }
    }
    struct Table {
        std::vector<double> x, y, m;
    };
    auto t = std::make_shared<const Table>(Table{std::move(xs), std::move(ys), std::move(slope)});
    auto body = [t](double x) {
        const auto& X = t->x;
        if (x < X.front() || x > X.back()) return 0.0;
        std::size_t k = static_cast<std::size_t>(std::upper_bound(X.begin(), X.end(), x) - X.begin());
        if (k == X.size()) k = X.size() - 1;
        const std::size_t i = k - 1;
        const double h = X[k] - X[i];
        const double u = (x - X[i]) / h;
        const double u2 = u * u;
        const double u3 = u2 * u;
        return (2 * u3 - 3 * u2 + 1) * t->y[i] + (u3 - 2 * u2 + u) * h * t->m[i] + (-2 * u3 + 3 * u2) * t->y[k] +
               (u3 - u2) * h * t->m[k];
    };
    return from_closure(body, hint, "table", domain_lo);
}

RadialFunction RadialFunction::zero(double domain_lo) {
    RadialFunction f;
    f.domain_lo_ = domain_lo;
    return f;
}

double RadialFunction::operator()(double x) const {
    if (domain_lo_ > 0.0 ? !(x >= domain_lo_) : !(x > 0.0)) {
        throw DomainError("radial function '" + label_ + "' evaluated outside its domain at x = " +
                          std::to_string(x));
    }
    return body_(x);
}

std::pair<double, double> RadialFunction::mellin_strip() const {
    const double inf = std::numeric_limits<double>::infinity();
    const double lo = domain_lo_ > 0.0 ? -inf : -hint_.origin_exponent;
    const double hi = hint_.tail == DecayHint::Tail::exponential ? inf : hint_.infinity_rate;
    return {lo, hi};
}

}  // namespace weber_orr
