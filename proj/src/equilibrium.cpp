#include "casimir/equilibrium.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace casimir::equilibrium {

namespace {

constexpr long double kPiL = 3.14159265358979323846264338327950288L;
constexpr double kPi = 3.141592653589793238462643383279502884;

// sum_{n>=1} n^3/(e^{n pi/aT}-1) in extended precision; terms cut at 1e-17
// of the partial sum (exponential convergence)
long double bose_sum(long double aT) {
    if (aT <= 0.0L) return 0.0L;
    const long double beta = kPiL / aT;
    long double sum = 0.0L;
    for (int n = 1; n < 200000; ++n) {
        const long double arg = beta * n;
        if (arg > 11350.0L) break;
        const long double term = static_cast<long double>(n) * n * n / std::expm1(arg);
        sum += term;
        if (term < sum * 1e-17L) break;
    }
    return sum;
}

// R(aT) = 16 (aT)^4 [E4(2i aT) - 1] by the weight-4 modular transformation of
// the Eisenstein series; every term positive, no cancellation at large aT.
long double ratio_dual(long double aT) {
    const long double q_log = -4.0L * kPiL * aT;  // log of the dual nome
    long double sum = 0.0L;
    for (int n = 1; n < 64; ++n) {
        const long double arg = -q_log * n;
        if (arg > 11350.0L) break;
        const long double term = static_cast<long double>(n) * n * n / std::expm1(arg);
        sum += term;
        if (term < sum * 1e-20L) break;
    }
    return 3840.0L * aT * aT * aT * aT * sum;
}

constexpr double kDualCrossover = 3.0;

}  // namespace

double thermal_force(double aT) {
    if (aT < 0.0) throw std::domain_error("thermal_force: requires aT >= 0");
    if (aT == 0.0) return 0.0;
    const long double a = aT;
    return static_cast<double>(kPiL * kPiL * (a * a * a * a / 15.0L - bose_sum(a)));
}

double ratio_eq(double aT) {
    if (aT < 0.0) throw std::domain_error("ratio_eq: requires aT >= 0");
    if (aT == 0.0) return 1.0;
    if (aT > kDualCrossover) return static_cast<double>(ratio_dual(aT));
    const long double a = aT;
    return static_cast<double>(1.0L + 240.0L * bose_sum(a) - 16.0L * a * a * a * a);
}

numerics::Estimate energy_density(double T, const numerics::QuadSettings& settings) {
    if (!(T > 0.0)) throw std::domain_error("energy_density: requires T > 0");
    const numerics::Fn1 f = [T](double p) {
        if (p <= 0.0) return 0.0;
        const double den = std::expm1(p / T);
        if (std::isinf(den)) return 0.0;
        return p * p * p / den;
    };
    auto est = numerics::integrate_semi_infinite(f, 0.0, settings);
    est.value /= kPi * kPi;
    est.error /= kPi * kPi;
    return est;
}

std::vector<EquilibriumPoint> eq_curve(double aT_min, double aT_max, int samples, int workers) {
    if (!(aT_min >= 0.0) || !(aT_min < aT_max))
        throw std::invalid_argument("eq_curve: requires 0 <= aT_min < aT_max");
    if (samples < 2) throw std::invalid_argument("eq_curve: requires samples >= 2");
    std::vector<EquilibriumPoint> out(samples);
    const double step = (aT_max - aT_min) / (samples - 1);
    auto fill = [&](int i) {
        const double aT = aT_min + step * i;
        out[i] = {aT, ratio_eq(aT), thermal_force(aT)};
    };
    if (workers <= 1) {
        for (int i = 0; i < samples; ++i) fill(i);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int i = w; i < samples; i += workers) fill(i);
            });
        for (auto& th : pool) th.join();
    }
    return out;
}

}  // namespace casimir::equilibrium
