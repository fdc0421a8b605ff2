#pragma once

namespace casimir::specfun {

struct SpecfunResult {
    double value = 0.0;
    double est_rel_err = 0.0;
};

/// Modified Bessel I1(x), x >= 0. Throws std::range_error past the overflow
/// threshold of exp(x).
double bessel_i1(double x);

/// Modified Struve L1(x), x >= 0.
double struve_l1(double x);

/// pi x^2/4 - x I1(pi x)/2 - L1(pi x); switches to the asymptotic
/// difference form of L1 - I1 above the series/asymptotic crossover.
double ap_kernel(double x);

SpecfunResult bessel_i1_est(double x);
SpecfunResult struve_l1_est(double x);
SpecfunResult ap_kernel_est(double x);

// orders 0 and 2 back the recurrence check I0 - I2 = 2 I1/x
double bessel_i0(double x);
double bessel_i2(double x);

}  // namespace casimir::specfun
