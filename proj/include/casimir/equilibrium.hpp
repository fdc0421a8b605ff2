#pragma once

#include <vector>

#include "casimir/numerics.hpp"

namespace casimir::equilibrium {

struct EquilibriumPoint {
    double aT = 0.0;      // scaled temperature
    double R = 0.0;       // force ratio F/F0
    double F_T_a4 = 0.0;  // thermal force times a^4
};

/// F_T a^4 = pi^2 (aT)^4/15 - pi^2 sum_{n>=1} n^3/(e^{n pi/(aT)} - 1).
double thermal_force(double aT);

/// R(aT) = 1 + 240 sum_{n>=0} n^3/(e^{n pi/(aT)}-1) - 16 (aT)^4; above the
/// cancellation crossover the exact dual exponential series is used instead.
double ratio_eq(double aT);

/// e(T) = 2 int d^3p/(2pi)^3 eps f+ = (1/pi^2) int_0^inf p^3/(e^{p/T}-1) dp,
/// by quadrature; equals pi^2 T^4/15.
numerics::Estimate energy_density(double T, const numerics::QuadSettings& settings = {});

/// Uniformly sampled R(aT) over [aT_min, aT_max], deterministic order.
std::vector<EquilibriumPoint> eq_curve(double aT_min, double aT_max, int samples,
                                       int workers = 1);

}  // namespace casimir::equilibrium
