#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace casimir::numerics {

/// Tolerances and budget for the adaptive integrators.
struct QuadSettings {
    double abs_tol = 1e-9;
    double rel_tol = 1e-7;
    int max_depth = 48;
    double tail_cutoff_growth = 2.0;

    // at least one tolerance must be active, depth >= 1, growth > 1
    void validate() const;
};

/// Looser defaults for the expensive non-equilibrium integrands.
inline QuadSettings noneq_defaults() { return QuadSettings{1e-6, 1e-5, 48, 2.0}; }

struct Estimate {
    double value = 0.0;
    double error = 0.0;       // internal error estimate, >= 0
    long evaluations = 0;
    bool converged = true;    // false: tolerance not met at max_depth, best estimate returned
};

struct DiffEstimate {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
    bool one_sided = false;   // forward stencil was used (domain edge)
};

/// Integrand returned a NaN.
class EvaluationError : public std::runtime_error {
  public:
    explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

/// Semi-infinite tail does not shrink under cutoff escalation.
class DivergentTailError : public std::runtime_error {
  public:
    explicit DivergentTailError(const std::string& what) : std::runtime_error(what) {}
};

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

/// Integration domain for one axis of integrate_2d.
struct Domain {
    double lo = 0.0;
    double hi = 0.0;
    bool semi_infinite = false;

    static Domain finite(double lo, double hi) { return {lo, hi, false}; }
    static Domain half_line(double lo) { return {lo, 0.0, true}; }
};

/// Adaptive Gauss-Kronrod (7,15) bisection over [lo, hi].
Estimate integrate_1d(const Fn1& f, double lo, double hi, const QuadSettings& settings = {});

/// Integral over [lo, inf); variable transform x = lo + u/(1-u) with
/// escalating truncation as the fallback path.
Estimate integrate_semi_infinite(const Fn1& f, double lo, const QuadSettings& settings = {});

/// Nested 1D integration, x outer / y inner; inner tolerances are the outer
/// ones divided by 10.
Estimate integrate_2d(const Fn2& f, const Domain& x_domain, const Domain& y_domain,
                      const QuadSettings& settings = {});

/// Central difference with Richardson extrapolation (3 levels).
/// h0 <= 0 selects the default step max(1e-3, 1e-2 |x|).
/// At x == 0 a forward one-sided stencil is used and flagged.
DiffEstimate differentiate(const Fn1& f, double x, double h0 = 0.0);

}  // namespace casimir::numerics
