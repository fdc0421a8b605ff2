#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "casimir/numerics.hpp"

namespace casimir::modesum {

/// One discrete-mode summand g(n), evaluable at real n.
struct ModeFunction {
    std::function<double(double)> eval;
    enum class Parity { even, odd, none } parity = Parity::none;
    std::optional<double> decay_hint;  // scale for the initial truncation window
};

struct RegularizedDiff {
    double value = 0.0;
    double tail_error = 0.0;
    int n_truncation = 0;
};

class RegularizationError : public std::runtime_error {
  public:
    explicit RegularizationError(const std::string& what) : std::runtime_error(what) {}
};

/// (sum_{n=-inf}^{inf} - int dn) g via midpoint-cell pairing:
/// sum_n [g(n) - int_{n-1/2}^{n+1/2} g], truncation escalated until the
/// last doubling changes the value by less than the tolerance.
RegularizedDiff sum_minus_integral_bilateral(const ModeFunction& g,
                                             const numerics::QuadSettings& settings = {});

/// (sum_{n=0}^{inf} - int_0^inf dn) g, n = 0 at full weight.
RegularizedDiff sum_minus_integral_halfline(const ModeFunction& g,
                                            const numerics::QuadSettings& settings = {});

/// Abel-Plana boundary-plus-integral form: g0/2 + int_0^inf kernel(y)/(e^{2 pi y}-1) dy.
/// The caller supplies kernel(y) = i [g(iy) - g(-iy)] already reduced to a real function.
numerics::Estimate abel_plana_diff(const std::function<double(double)>& kernel, double g0,
                                   const numerics::QuadSettings& settings = {});

/// Dimensionless vacuum energy variation a^3 dE_vac = -pi^2/720, obtained by
/// Abel-Plana regularization of the zero-point half-line mode sum.
double vacuum_energy_variation();

}  // namespace casimir::modesum
