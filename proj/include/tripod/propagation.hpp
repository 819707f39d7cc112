#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "tripod/constants.hpp"
#include "tripod/errors.hpp"
#include "tripod/susceptibility.hpp"

namespace tripod {

struct GroupVelocities {
    double vg_p;  // m/s
    double vg_t;  // m/s
};

// Pulse group velocity from the linear dispersion,
//   v_g = c / (1 + Re chi1/2 + (omega/2) dRe chi1/d omega),
// with the frequency derivative taken by a central difference in the beam
// detuning (step 1e-3 gamma). Detunings are atom-minus-laser, so
// d(delta)/d(omega_laser) = -1.
inline double group_velocity(const TripodParams& p, Beam b) {
    const double h = 1e-3;
    TripodParams lo = p, hi = p;
    if (b == Beam::probe) {
        lo.delta1 -= h;
        hi.delta1 += h;
    } else {
        lo.delta3 -= h;
        hi.delta3 += h;
    }
    const double chi = chi1_beam(p, b).real();
    const double dchi_ddelta = (chi1_beam(hi, b).real() - chi1_beam(lo, b).real())
                               / (2.0 * h * p.gamma_si);
    const double dchi_domega = -dchi_ddelta;
    const double lambda = (b == Beam::probe) ? p.lambda_p : p.lambda_t;
    const double omega = 2.0 * pi * speed_of_light / lambda;
    const double ng = 1.0 + chi / 2.0 + (omega / 2.0) * dchi_domega;
    const double vg = speed_of_light / ng;
    if (!(vg > 0.0) || vg > speed_of_light) {
        throw DispersionError(std::string("group velocity out of range for ") + beam_name(b)
                              + " beam (anomalous dispersion at this detuning)");
    }
    return vg;
}

inline GroupVelocities group_velocities(const TripodParams& p) {
    return GroupVelocities{group_velocity(p, Beam::probe), group_velocity(p, Beam::trigger)};
}

// Pulse-overlap parameter. The probe form is
//   zeta_P = (1 - vg_p/vg_t) * sqrt(2) * l / (vg_p * tau_t)
// and the trigger form interchanges the two beams everywhere.
inline double zeta(const TripodParams& p, const GroupVelocities& vg, Beam b) {
    if (b == Beam::probe) {
        return (1.0 - vg.vg_p / vg.vg_t) * std::sqrt(2.0) * p.length / (vg.vg_p * p.tau_t);
    }
    return (1.0 - vg.vg_t / vg.vg_p) * std::sqrt(2.0) * p.length / (vg.vg_t * p.tau_p);
}

// erf(z)/z, continued through z = 0 with value 2/sqrt(pi); even in z.
inline double erf_over_zeta(double z) {
    const double a = std::fabs(z);
    if (a < 1e-4) {
        const double z2 = a * a;
        return two_over_sqrt_pi * (1.0 - z2 / 3.0 + z2 * z2 / 10.0);
    }
    return std::erf(a) / a;
}

inline double phi_vacuum(const TripodParams& p, Beam b) {
    const double lambda = (b == Beam::probe) ? p.lambda_p : p.lambda_t;
    return (2.0 * pi / lambda) * p.length;
}

// k l (1 + Re chi1/2): SI refractive-index convention n ~ 1 + chi/2.
inline double phi_linear(const TripodParams& p, Beam b) {
    const double lambda = (b == Beam::probe) ? p.lambda_p : p.lambda_t;
    return (2.0 * pi / lambda) * p.length * (1.0 + chi1_beam(p, b).real() / 2.0);
}

// Cross-Kerr phase picked up by one beam from the other's intensity:
//   phi_nlin^P = k_P l * pi^{3/2} hbar^2 |Omega_T|^2 / (4 |mu_T|^2)
//                * erf(zeta_P)/zeta_P * Re chi3_P
// (P <-> T for the trigger). The field factor hbar^2 Omega^2 / (4 mu^2) is
// |E|^2/4 of the partner beam, Omega in rad/s.
inline double phi_nonlinear(const TripodParams& p, const GroupVelocities& vg, Beam b) {
    const DipoleMoments mu = dipole_from_linewidth(p);
    const double lambda = (b == Beam::probe) ? p.lambda_p : p.lambda_t;
    const double omega_other = ((b == Beam::probe) ? p.omega_t : p.omega_p) * p.gamma_si;
    const double mu_other_sq = (b == Beam::probe) ? mu.mu_t_sq : mu.mu_p_sq;
    const double field_sq_over_4 = hbar * hbar * omega_other * omega_other / (4.0 * mu_other_sq);
    const double chi3 = chi3_beam(p, b).real();
    return (2.0 * pi / lambda) * p.length * std::pow(pi, 1.5) * field_sq_over_4
           * erf_over_zeta(zeta(p, vg, b)) * chi3;
}

// Every phase in one pass. phi_conditional is assembled as the sum of the two
// nonlinear phases (the linear and vacuum contributions cancel in the
// conditional combination by construction).
struct PhaseTable {
    double phi0_p;
    double phi0_t;
    double phi_lin_p;
    double phi_lin_t;
    double phi_nlin_p;
    double phi_nlin_t;
    double phi_conditional;
};

inline PhaseTable phase_table(const TripodParams& p) {
    const GroupVelocities vg = group_velocities(p);
    PhaseTable t;
    t.phi0_p = phi_vacuum(p, Beam::probe);
    t.phi0_t = phi_vacuum(p, Beam::trigger);
    t.phi_lin_p = phi_linear(p, Beam::probe);
    t.phi_lin_t = phi_linear(p, Beam::trigger);
    t.phi_nlin_p = phi_nonlinear(p, vg, Beam::probe);
    t.phi_nlin_t = phi_nonlinear(p, vg, Beam::trigger);
    t.phi_conditional = t.phi_nlin_p + t.phi_nlin_t;
    return t;
}

// Full width (gamma units) of the EIT transparency dip:
// 2 x the distance from the two-photon-resonance point (delta_beam = delta2)
// to the nearest scan point where |Im chi1| reaches half its scan maximum.
// Scan: delta_beam = delta2 + k * 1e-3 gamma, k in [-5000, 5000]. Points on a
// susceptibility pole count as infinite absorption. Throws NoWindowError when
// the medium is not transparent at the center or the absorption never
// recovers to half-maximum on either side.
inline double transparency_window(const TripodParams& p, Beam b) {
    constexpr int half_points = 5000;
    constexpr double step = 1e-3;
    const int n = 2 * half_points + 1;
    std::vector<double> absorption(static_cast<size_t>(n));
    double peak = 0.0;
    for (int i = 0; i < n; ++i) {
        TripodParams q = p;
        const double delta = p.delta2 + static_cast<double>(i - half_points) * step;
        if (b == Beam::probe) {
            q.delta1 = delta;
        } else {
            q.delta3 = delta;
        }
        double a;
        try {
            a = std::fabs(chi1_beam(q, b).imag());
        } catch (const PoleError&) {
            a = std::numeric_limits<double>::infinity();
        }
        absorption[static_cast<size_t>(i)] = a;
        if (a > peak) peak = a;
    }
    if (!(peak > 0.0)) {
        throw NoWindowError("absorption profile is identically zero; no transparency dip");
    }
    const double half = peak / 2.0;
    if (absorption[half_points] >= half) {
        throw NoWindowError("no transparency dip: absorption at two-photon resonance is above half-maximum");
    }
    double nearest = std::numeric_limits<double>::infinity();
    for (int i = half_points - 1; i >= 0; --i) {
        if (absorption[static_cast<size_t>(i)] >= half) {
            nearest = static_cast<double>(half_points - i) * step;
            break;
        }
    }
    for (int i = half_points + 1; i < n; ++i) {
        if (absorption[static_cast<size_t>(i)] >= half) {
            const double d = static_cast<double>(i - half_points) * step;
            if (d < nearest) nearest = d;
            break;
        }
    }
    if (!std::isfinite(nearest)) {
        throw NoWindowError("absorption never recovers to half-maximum within the +-5 gamma scan");
    }
    return 2.0 * nearest;
}

// Rejection margin for wrong-polarization photons: how far outside the
// (half-)window the Zeeman-shifted transition sits. The gate is considered
// protected when the ratio reaches 10.
struct WrongPolarizationReport {
    double ratio;
    bool gate_valid;
};

inline WrongPolarizationReport wrong_polarization_check(const TripodParams& p) {
    const double window = transparency_window(p, Beam::probe);
    const double ratio = p.zeeman_split / (window / 2.0);
    return WrongPolarizationReport{ratio, ratio >= 10.0};
}

} // namespace tripod
