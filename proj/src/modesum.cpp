#include "casimir/modesum.hpp"

#include <algorithm>
#include <cmath>

namespace casimir::modesum {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct Accum {
    double value = 0.0;
    double quad_error = 0.0;
};

numerics::QuadSettings cell_settings_for(const numerics::QuadSettings& s) {
    numerics::QuadSettings cs = s;
    cs.abs_tol = std::max(s.abs_tol / 512.0, 1e-15);
    cs.rel_tol = std::max(s.rel_tol / 16.0, 1e-13);
    return cs;
}

double tolerance_of(const numerics::QuadSettings& s, double scale) {
    return std::max(s.abs_tol, s.rel_tol * std::fabs(scale));
}

RegularizedDiff run_pairing(const ModeFunction& g, const numerics::QuadSettings& settings,
                            bool bilateral) {
    settings.validate();
    if (!g.eval) throw std::invalid_argument("ModeFunction: eval not set");
    const auto cs = cell_settings_for(settings);
    const bool mirror = bilateral && g.parity == ModeFunction::Parity::even;

    // g(n) at full weight minus the integral over the cell
    auto cell = [&](double n, double lo, double hi) {
        const double gn = g.eval(n);
        if (std::isnan(gn)) throw numerics::EvaluationError("mode function returned NaN");
        const auto integral = numerics::integrate_1d(g.eval, lo, hi, cs);
        return Accum{gn - integral.value, integral.error};
    };
    auto ring = [&](int n) {
        Accum a = cell(n, n - 0.5, n + 0.5);
        if (bilateral) {
            if (mirror) {
                a.value *= 2.0;
                a.quad_error *= 2.0;
            } else {
                const Accum m = cell(-n, -n - 0.5, -n + 0.5);
                a.value += m.value;
                a.quad_error += m.quad_error;
            }
        }
        return a;
    };

    Accum acc = bilateral ? cell(0.0, -0.5, 0.5) : cell(0.0, 0.0, 0.5);
    int N = 16;
    double prev_band_mag = 0.0;
    for (int n = 1; n <= N; ++n) {
        const Accum a = ring(n);
        acc.value += a.value;
        acc.quad_error += a.quad_error;
        prev_band_mag += std::fabs(a.value);
    }

    int stagnant = 0;
    while (true) {
        Accum band;
        double band_mag = 0.0;
        for (int n = N + 1; n <= 2 * N; ++n) {
            const Accum a = ring(n);
            band.value += a.value;
            band.quad_error += a.quad_error;
            band_mag += std::fabs(a.value);
        }
        acc.value += band.value;
        acc.quad_error += band.quad_error;
        N *= 2;
        if (std::fabs(band.value) < tolerance_of(settings, acc.value))
            return {acc.value, std::fabs(band.value) + acc.quad_error, N};
        if (band_mag >= prev_band_mag && prev_band_mag > 0.0) {
            if (++stagnant >= 2)
                throw RegularizationError("regularization failed: cell differences not decaying");
        } else {
            stagnant = 0;
        }
        prev_band_mag = band_mag;
        if (N > (1 << 14))
            throw RegularizationError("regularization failed: truncation escalation exhausted");
    }
}

}  // namespace

RegularizedDiff sum_minus_integral_bilateral(const ModeFunction& g,
                                             const numerics::QuadSettings& settings) {
    return run_pairing(g, settings, /*bilateral=*/true);
}

RegularizedDiff sum_minus_integral_halfline(const ModeFunction& g,
                                            const numerics::QuadSettings& settings) {
    return run_pairing(g, settings, /*bilateral=*/false);
}

numerics::Estimate abel_plana_diff(const std::function<double(double)>& kernel, double g0,
                                   const numerics::QuadSettings& settings) {
    settings.validate();
    const numerics::Fn1 weighted = [&kernel](double y) {
        const double den = std::expm1(2.0 * kPi * y);
        if (den == 0.0 || std::isinf(den)) return 0.0;  // endpoint / underflowing tail
        return kernel(y) / den;
    };
    auto est = numerics::integrate_semi_infinite(weighted, 0.0, settings);
    est.value += 0.5 * g0;
    return est;
}

double vacuum_energy_variation() {
    // f+ -> 1/2 turns the boundary mode sum into (sum - int) over n^3 times
    // -pi^2/6; Abel-Plana maps (sum - int) n^3 to a Bose integral with kernel 2y^3.
    numerics::QuadSettings s;
    s.abs_tol = 1e-12;
    s.rel_tol = 1e-11;
    const auto ap = abel_plana_diff([](double y) { return 2.0 * y * y * y; }, 0.0, s);
    return -kPi * kPi / 6.0 * ap.value;
}

}  // namespace casimir::modesum
