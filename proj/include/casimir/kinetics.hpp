#pragma once

#include <array>
#include <functional>
#include <stdexcept>

namespace casimir::kinetics {

/// Contravariant components, metric signature (+,-,-,-), natural units.
struct FourVector {
    double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

    double operator[](int mu) const {
        switch (mu) {
            case 0: return t;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }
    double& operator[](int mu) {
        switch (mu) {
            case 0: return t;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }
};

inline double metric_sign(int mu) { return mu == 0 ? 1.0 : -1.0; }

inline double dot(const FourVector& a, const FourVector& b) {
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

/// Spatial momentum with on-shell energy eps = |p| by construction.
struct OnShellMomentum {
    std::array<double, 3> p{0.0, 0.0, 0.0};
    double energy = 0.0;

    static OnShellMomentum from_spatial(double px, double py, double pz);
    FourVector four_momentum() const { return {energy, p[0], p[1], p[2]}; }
};

/// Scalar phase-space field f(x, p) >= 0 with an optional analytic x-gradient
/// (d_t f, d_x f, d_y f, d_z f).
struct DistributionField {
    std::function<double(const FourVector&, const OnShellMomentum&)> eval;
    std::function<std::array<double, 4>(const FourVector&, const OnShellMomentum&)> gradient;
    bool has_gradient = false;
};

/// Bose-Einstein field 1/(e^{eps/T}-1); x-independent, gradient identically zero.
DistributionField equilibrium_distribution(double T);

/// Free-streaming solution f(x,p) = exp(-|eps x_vec - p_vec t|) of the
/// collisionless transport equation with the exponential initial profile.
DistributionField free_streaming_distribution();

/// eps d_t f + p . grad f, by finite differences (step 1e-4, Richardson).
double transport_residual(const DistributionField& f, const FourVector& x,
                          const OnShellMomentum& p);

/// (d_t^2 - laplace) f by second-order finite differences; reported, not asserted.
struct ResidualReport {
    double value = 0.0;
    double fd_error = 0.0;
};
ResidualReport wave_residual(const DistributionField& f, const FourVector& x,
                             const OnShellMomentum& p);

/// (p_mu u.d - p.u d_mu) f, one component per mu.
std::array<double, 4> frame_constraint_residual(const DistributionField& f, const FourVector& x,
                                                const OnShellMomentum& p, const FourVector& u);

/// eps_{mu nu sig rho} d^nu p^sig u^rho f_minus, one component per mu.
std::array<double, 4> axial_constraint_residual(const DistributionField& f_minus,
                                                const FourVector& x, const OnShellMomentum& p,
                                                const FourVector& u);

/// 4x4 component store; C- carries an overall factor i (imaginary_coeff).
struct RankTwoTensor {
    std::array<std::array<double, 4>, 4> m{};
    bool imaginary_coeff = false;

    double operator()(int mu, int nu) const { return m[mu][nu]; }
};

class SingularFrameError : public std::runtime_error {
  public:
    explicit SingularFrameError(const std::string& what) : std::runtime_error(what) {}
};

/// C+_{mu nu} = p_mu p_nu/(p.u)^2 - (p_mu u_nu + p_nu u_mu)/(p.u) + g_{mu nu}
/// (covariant components; middle term symmetrized with unit coefficient).
RankTwoTensor c_plus(const FourVector& p, const FourVector& u);

/// C-_{mu nu} = i eps_{mu nu sig rho} p^sig u^rho / (2 p.u); the stored
/// components are real, the overall i is flagged.
RankTwoTensor c_minus(const FourVector& p, const FourVector& u);

/// t^{mu nu} = 2 p^mu p^nu f (contravariant components).
RankTwoTensor energy_momentum_density(const FourVector& p, double fval);

struct Currents {
    std::array<double, 4> vector_current{};  // j~_mu = d_mu f+ (covariant)
    FourVector axial_current{};              // j~5^mu = p^mu f- (contravariant)
};
Currents currents(const FourVector& p, const std::array<double, 4>& f_plus_grad,
                  double f_minus_val);

/// v^mu T_{mu nu} for a covariant component store.
std::array<double, 4> contract_first(const RankTwoTensor& T, const FourVector& v);

/// Metric trace of the stored components (valid for either index placement,
/// the metric being diagonal).
double trace(const RankTwoTensor& T);

double levi_civita(int a, int b, int c, int d);

}  // namespace casimir::kinetics
