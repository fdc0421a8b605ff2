#include "casimir/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace casimir::numerics {

namespace {

// Gauss-Kronrod (7,15) on [-1,1]; positive abscissae, node 0 last.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
// 7-point Gauss weights sit on the odd Kronrod abscissae.
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double value;
    double error;
};

double eval_checked(const Fn1& f, double x) {
    const double v = f(x);
    if (std::isnan(v)) throw EvaluationError("integrand returned NaN at x=" + std::to_string(x));
    return v;
}

Panel gk15(const Fn1& f, double a, double b, long& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = eval_checked(f, mid);
    double k15 = kWgk[7] * f0;
    double g7 = kWg[3] * f0;
    double resabs = kWgk[7] * std::fabs(f0);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fp = eval_checked(f, mid + dx);
        const double fm = eval_checked(f, mid - dx);
        k15 += kWgk[i] * (fp + fm);
        resabs += kWgk[i] * (std::fabs(fp) + std::fabs(fm));
        if (i % 2 == 1) g7 += kWg[i / 2] * (fp + fm);
    }
    evals += 15;
    const double raw = std::fabs(k15 - g7) * std::fabs(half);
    // conservative floor so the bar stays meaningful for exactly-integrated panels
    const double floor_err = 8.0 * std::numeric_limits<double>::epsilon() * resabs * std::fabs(half);
    return {k15 * half, std::max(raw, floor_err)};
}

struct Acc {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

void bisect(const Fn1& f, double a, double b, double tol, int depth, const QuadSettings& s,
            Acc& acc, long& evals) {
    const Panel p = gk15(f, a, b, evals);
    if (p.error <= tol || depth >= s.max_depth) {
        acc.value += p.value;
        acc.error += p.error;
        if (p.error > tol) acc.converged = false;
        return;
    }
    const double mid = 0.5 * (a + b);
    bisect(f, a, mid, 0.5 * tol, depth + 1, s, acc, evals);
    bisect(f, mid, b, 0.5 * tol, depth + 1, s, acc, evals);
}

double local_tolerance(const QuadSettings& s, double value_scale) {
    return std::max(s.abs_tol, s.rel_tol * std::fabs(value_scale));
}

}  // namespace

void QuadSettings::validate() const {
    if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0))
        throw std::invalid_argument("QuadSettings: tolerances must be non-negative");
    if (abs_tol == 0.0 && rel_tol == 0.0)
        throw std::invalid_argument("QuadSettings: at least one tolerance must be positive");
    if (max_depth < 1) throw std::invalid_argument("QuadSettings: max_depth must be >= 1");
    if (!(tail_cutoff_growth > 1.0))
        throw std::invalid_argument("QuadSettings: tail_cutoff_growth must exceed 1");
}

Estimate integrate_1d(const Fn1& f, double lo, double hi, const QuadSettings& settings) {
    settings.validate();
    if (!(lo < hi)) throw std::invalid_argument("integrate_1d: requires lo < hi");
    long evals = 0;
    // pilot pass to fix the tolerance scale, then the adaptive pass
    const Panel pilot = gk15(f, lo, hi, evals);
    const double tol = local_tolerance(settings, pilot.value);
    Acc acc;
    bisect(f, lo, hi, tol, 0, settings, acc, evals);
    return {acc.value, acc.error, evals, acc.converged};
}

namespace {

Estimate integrate_transformed(const Fn1& f, double lo, const QuadSettings& settings) {
    // x = lo + u/(1-u), dx = du/(1-u)^2 maps [0,1) onto [lo, inf).
    bool overflow = false;
    const Fn1 g = [&](double u) {
        const double om = 1.0 - u;
        const double x = lo + u / om;
        const double v = f(x);
        if (!std::isfinite(v)) {
            overflow = true;
            throw EvaluationError("non-finite integrand under tail transform");
        }
        return v / (om * om);
    };
    try {
        return integrate_1d(g, 0.0, 1.0, settings);
    } catch (const EvaluationError&) {
        if (!overflow) throw;
        return {0.0, 0.0, 0, false};  // caller falls back to truncation
    }
}

Estimate integrate_truncated(const Fn1& f, double lo, const QuadSettings& settings) {
    double hi = lo + 16.0;
    Estimate total = integrate_1d(f, lo, hi, settings);
    double prev_chunk = std::numeric_limits<double>::infinity();
    int growth_failures = 0;
    for (int k = 0; k < 64; ++k) {
        const double next = lo + (hi - lo) * settings.tail_cutoff_growth;
        const Estimate chunk = integrate_1d(f, hi, next, settings);
        total.value += chunk.value;
        total.error += chunk.error;
        total.evaluations += chunk.evaluations;
        total.converged = total.converged && chunk.converged;
        const double mag = std::fabs(chunk.value);
        if (mag <= local_tolerance(settings, total.value)) {
            total.error += mag;  // fold the truncation estimate into the bar
            return total;
        }
        if (mag >= prev_chunk && ++growth_failures >= 2)
            throw DivergentTailError("semi-infinite tail is not decaying");
        prev_chunk = mag;
        hi = next;
    }
    throw DivergentTailError("semi-infinite tail did not converge under cutoff escalation");
}

}  // namespace

Estimate integrate_semi_infinite(const Fn1& f, double lo, const QuadSettings& settings) {
    settings.validate();
    Estimate est = integrate_transformed(f, lo, settings);
    if (est.evaluations > 0) return est;
    return integrate_truncated(f, lo, settings);
}

Estimate integrate_2d(const Fn2& f, const Domain& x_domain, const Domain& y_domain,
                      const QuadSettings& settings) {
    settings.validate();
    QuadSettings inner = settings;
    inner.abs_tol /= 10.0;
    inner.rel_tol /= 10.0;
    long inner_evals = 0;
    bool inner_ok = true;
    const Fn1 outer = [&](double x) {
        const Fn1 slice = [&, x](double y) { return f(x, y); };
        const Estimate e = y_domain.semi_infinite
                               ? integrate_semi_infinite(slice, y_domain.lo, inner)
                               : integrate_1d(slice, y_domain.lo, y_domain.hi, inner);
        inner_evals += e.evaluations;
        inner_ok = inner_ok && e.converged;
        return e.value;
    };
    Estimate out = x_domain.semi_infinite ? integrate_semi_infinite(outer, x_domain.lo, settings)
                                          : integrate_1d(outer, x_domain.lo, x_domain.hi, settings);
    out.evaluations += inner_evals;
    out.converged = out.converged && inner_ok;
    return out;
}

DiffEstimate differentiate(const Fn1& f, double x, double h0) {
    if (h0 <= 0.0) h0 = std::max(1e-3, 1e-2 * std::fabs(x));
    constexpr int kLevels = 3;
    const bool one_sided = (x == 0.0);
    double d[kLevels];
    long evals = 0;
    double h = h0;
    for (int i = 0; i < kLevels; ++i, h *= 0.5) {
        double v;
        if (one_sided) {
            v = (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h);
            evals += 3;
        } else {
            v = (f(x + h) - f(x - h)) / (2.0 * h);
            evals += 2;
        }
        if (std::isnan(v)) throw EvaluationError("differentiate: stencil evaluation returned NaN");
        d[i] = v;
    }
    // Richardson tableau; both stencils are O(h^2)
    double r[kLevels][kLevels];
    for (int i = 0; i < kLevels; ++i) r[i][0] = d[i];
    double factor = 4.0;
    for (int j = 1; j < kLevels; ++j, factor *= 4.0) {
        for (int i = j; i < kLevels; ++i)
            r[i][j] = (factor * r[i][j - 1] - r[i - 1][j - 1]) / (factor - 1.0);
    }
    const double best = r[kLevels - 1][kLevels - 1];
    const double spread = std::fabs(best - r[kLevels - 2][kLevels - 2]);
    const double floor_err =
        8.0 * std::numeric_limits<double>::epsilon() * std::fabs(best) + 1e-305;
    return {best, std::max(spread, floor_err), evals, one_sided};
}

}  // namespace casimir::numerics
