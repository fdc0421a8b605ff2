#include "casimir/kinetics.hpp"

#include <cmath>

#include "casimir/numerics.hpp"

namespace casimir::kinetics {

namespace {

constexpr double kFdStep = 1e-4;

// partial of f along coordinate mu at fixed p (0 = t, 1..3 = spatial)
double fd_partial(const DistributionField& f, const FourVector& x, const OnShellMomentum& p,
                  int mu) {
    const numerics::Fn1 slice = [&](double s) {
        FourVector xs = x;
        xs[mu] += s;
        return f.eval(xs, p);
    };
    return numerics::differentiate(slice, 0.0, kFdStep).value;
}

std::array<double, 4> fd_gradient(const DistributionField& f, const FourVector& x,
                                  const OnShellMomentum& p) {
    return {fd_partial(f, x, p, 0), fd_partial(f, x, p, 1), fd_partial(f, x, p, 2),
            fd_partial(f, x, p, 3)};
}

// second partial along mu, 5-point central
double fd_second(const DistributionField& f, const FourVector& x, const OnShellMomentum& p,
                 int mu, double h) {
    auto at = [&](double s) {
        FourVector xs = x;
        xs[mu] += s;
        return f.eval(xs, p);
    };
    return (-at(2 * h) + 16 * at(h) - 30 * at(0) + 16 * at(-h) - at(-2 * h)) / (12 * h * h);
}

}  // namespace

OnShellMomentum OnShellMomentum::from_spatial(double px, double py, double pz) {
    OnShellMomentum m;
    m.p = {px, py, pz};
    m.energy = std::sqrt(px * px + py * py + pz * pz);
    return m;
}

DistributionField equilibrium_distribution(double T) {
    if (!(T > 0.0)) throw std::domain_error("equilibrium_distribution: requires T > 0");
    DistributionField f;
    f.eval = [T](const FourVector&, const OnShellMomentum& p) {
        return 1.0 / std::expm1(p.energy / T);
    };
    f.gradient = [](const FourVector&, const OnShellMomentum&) {
        return std::array<double, 4>{0.0, 0.0, 0.0, 0.0};
    };
    f.has_gradient = true;
    return f;
}

DistributionField free_streaming_distribution() {
    DistributionField f;
    auto displacement = [](const FourVector& x, const OnShellMomentum& p) {
        // v_i = eps x_i - p_i t
        return std::array<double, 3>{p.energy * x.x - p.p[0] * x.t,
                                     p.energy * x.y - p.p[1] * x.t,
                                     p.energy * x.z - p.p[2] * x.t};
    };
    f.eval = [displacement](const FourVector& x, const OnShellMomentum& p) {
        const auto v = displacement(x, p);
        return std::exp(-std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]));
    };
    f.gradient = [displacement](const FourVector& x, const OnShellMomentum& p) {
        const auto v = displacement(x, p);
        const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        const double fv = std::exp(-r);
        if (r == 0.0) return std::array<double, 4>{0.0, 0.0, 0.0, 0.0};  // cusp
        const double vdotp = v[0] * p.p[0] + v[1] * p.p[1] + v[2] * p.p[2];
        return std::array<double, 4>{fv * vdotp / r, -fv * p.energy * v[0] / r,
                                     -fv * p.energy * v[1] / r, -fv * p.energy * v[2] / r};
    };
    f.has_gradient = true;
    return f;
}

double transport_residual(const DistributionField& f, const FourVector& x,
                          const OnShellMomentum& p) {
    const auto grad = fd_gradient(f, x, p);
    return p.energy * grad[0] + p.p[0] * grad[1] + p.p[1] * grad[2] + p.p[2] * grad[3];
}

ResidualReport wave_residual(const DistributionField& f, const FourVector& x,
                             const OnShellMomentum& p) {
    const double h = kFdStep;
    double val = fd_second(f, x, p, 0, h);
    for (int i = 1; i < 4; ++i) val -= fd_second(f, x, p, i, h);
    // second pass at twice the step gives the error gauge
    double val2 = fd_second(f, x, p, 0, 2 * h);
    for (int i = 1; i < 4; ++i) val2 -= fd_second(f, x, p, i, 2 * h);
    return {val, std::fabs(val - val2) / 15.0 + 1e-12};
}

std::array<double, 4> frame_constraint_residual(const DistributionField& f, const FourVector& x,
                                                const OnShellMomentum& p, const FourVector& u) {
    const auto grad = fd_gradient(f, x, p);
    const FourVector pmu = p.four_momentum();
    const double pu = dot(pmu, u);
    // u.d with covariant gradient components (d_t, grad)
    const double udotd = u.t * grad[0] + u.x * grad[1] + u.y * grad[2] + u.z * grad[3];
    std::array<double, 4> res{};
    for (int mu = 0; mu < 4; ++mu) {
        const double p_cov = metric_sign(mu) * pmu[mu];
        res[mu] = p_cov * udotd - pu * grad[mu];
    }
    return res;
}

std::array<double, 4> axial_constraint_residual(const DistributionField& f_minus,
                                                const FourVector& x, const OnShellMomentum& p,
                                                const FourVector& u) {
    const auto grad = fd_gradient(f_minus, x, p);
    // contravariant gradient d^nu = (d_t, -grad)
    const std::array<double, 4> grad_up{grad[0], -grad[1], -grad[2], -grad[3]};
    const FourVector pmu = p.four_momentum();
    std::array<double, 4> res{};
    for (int mu = 0; mu < 4; ++mu) {
        double s = 0.0;
        for (int nu = 0; nu < 4; ++nu)
            for (int sig = 0; sig < 4; ++sig)
                for (int rho = 0; rho < 4; ++rho) {
                    const double e = levi_civita(mu, nu, sig, rho);
                    if (e != 0.0) s += e * grad_up[nu] * pmu[sig] * u[rho];
                }
        res[mu] = s;
    }
    return res;
}

RankTwoTensor c_plus(const FourVector& p, const FourVector& u) {
    const double pu = dot(p, u);
    if (pu == 0.0) throw SingularFrameError("c_plus: p.u = 0");
    RankTwoTensor T;
    for (int mu = 0; mu < 4; ++mu) {
        const double p_mu = metric_sign(mu) * p[mu];
        const double u_mu = metric_sign(mu) * u[mu];
        for (int nu = 0; nu < 4; ++nu) {
            const double p_nu = metric_sign(nu) * p[nu];
            const double u_nu = metric_sign(nu) * u[nu];
            const double g = (mu == nu) ? metric_sign(mu) : 0.0;
            T.m[mu][nu] = p_mu * p_nu / (pu * pu) - (p_mu * u_nu + p_nu * u_mu) / pu + g;
        }
    }
    return T;
}

RankTwoTensor c_minus(const FourVector& p, const FourVector& u) {
    const double pu = dot(p, u);
    if (pu == 0.0) throw SingularFrameError("c_minus: p.u = 0");
    RankTwoTensor T;
    T.imaginary_coeff = true;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            double s = 0.0;
            for (int sig = 0; sig < 4; ++sig)
                for (int rho = 0; rho < 4; ++rho) {
                    const double e = levi_civita(mu, nu, sig, rho);
                    if (e != 0.0) s += e * p[sig] * u[rho];
                }
            T.m[mu][nu] = s / (2.0 * pu);
        }
    return T;
}

RankTwoTensor energy_momentum_density(const FourVector& p, double fval) {
    RankTwoTensor T;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) T.m[mu][nu] = 2.0 * p[mu] * p[nu] * fval;
    return T;
}

Currents currents(const FourVector& p, const std::array<double, 4>& f_plus_grad,
                  double f_minus_val) {
    Currents c;
    c.vector_current = f_plus_grad;
    c.axial_current = {p.t * f_minus_val, p.x * f_minus_val, p.y * f_minus_val,
                       p.z * f_minus_val};
    return c;
}

std::array<double, 4> contract_first(const RankTwoTensor& T, const FourVector& v) {
    // v^mu T_{mu nu}; the stored first index is covariant for C+/-.
    std::array<double, 4> out{};
    for (int nu = 0; nu < 4; ++nu) {
        double s = 0.0;
        for (int mu = 0; mu < 4; ++mu) s += v[mu] * T.m[mu][nu];
        out[nu] = s;
    }
    return out;
}

double trace(const RankTwoTensor& T) {
    // g^{mu nu} T_{mu nu} for a covariant store
    double s = 0.0;
    for (int mu = 0; mu < 4; ++mu) s += metric_sign(mu) * T.m[mu][mu];
    return s;
}

double levi_civita(int a, int b, int c, int d) {
    // epsilon_{0123} = +1 convention on the stored components
    const int idx[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (idx[i] == idx[j]) return 0.0;
            if (idx[i] > idx[j]) sign = -sign;
        }
    return static_cast<double>(sign);
}

}  // namespace casimir::kinetics
