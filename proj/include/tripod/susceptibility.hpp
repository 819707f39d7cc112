#pragma once

#include <complex>
#include <string>

#include "tripod/constants.hpp"
#include "tripod/detunings.hpp"
#include "tripod/dipole.hpp"
#include "tripod/errors.hpp"
#include "tripod/params.hpp"

namespace tripod {

// Linear and third-order (cross-Kerr) susceptibilities of the tripod medium.
//
// Conventions, fixed once for the whole project and validated against the
// density-matrix oracle:
//   * Rabi frequencies are the full coupling matrix elements (Omega = mu E /
//     hbar), stored as non-negative reals in gamma units.
//   * Probe-side lambda-pole denominators are d10*d12 + |Omega|^2 (and the
//     conjugated pair d10*.d12* + |Omega|^2); trigger-side denominators are
//     d30*conj(d23) - |Omega|^2 (and conj(d30)*d23 - |Omega|^2). This sign
//     split is what the steady-state response of the master equation
//     produces; see README "Conventions".
//   * chi1 is dimensionless, chi3 is in m^2/V^2; detunings convert to rad/s
//     exactly once via gamma_si inside these functions.

namespace detail {

inline void guard_pole(const std::complex<double>& den, const char* name) {
    if (std::abs(den) < pole_guard) {
        throw PoleError(std::string("susceptibility pole: |") + name + "| < 1e-12 (gamma-scaled)");
    }
}

inline double chi1_prefactor(const TripodParams& p, double mu_sq) {
    return p.density * mu_sq / (hbar * epsilon0 * p.gamma_si);
}

inline double chi3_prefactor(const TripodParams& p, double mu_p_sq, double mu_t_sq) {
    const double g = p.gamma_si;
    return p.density * mu_p_sq * mu_t_sq / (hbar * hbar * hbar * epsilon0 * g * g * g);
}

} // namespace detail

inline std::complex<double> chi1_probe(const TripodParams& p) {
    const ComplexDetunings d = complex_detunings(p);
    const double osq = p.omega_c * p.omega_c;
    const std::complex<double> den = d.d10 * d.d12 + osq;
    detail::guard_pole(den, "d10*d12 + Omega^2");
    return detail::chi1_prefactor(p, dipole_from_linewidth(p).mu_p_sq) * d.d12 / den;
}

inline std::complex<double> chi1_trigger(const TripodParams& p) {
    const ComplexDetunings d = complex_detunings(p);
    const double osq = p.omega_c * p.omega_c;
    const std::complex<double> den = d.d30 * std::conj(d.d23) - osq;
    detail::guard_pole(den, "d30*conj(d23) - Omega^2");
    return detail::chi1_prefactor(p, dipole_from_linewidth(p).mu_t_sq) * std::conj(d.d23) / den;
}

inline std::complex<double> chi3_probe(const TripodParams& p) {
    const ComplexDetunings d = complex_detunings(p);
    const double osq = p.omega_c * p.omega_c;
    const std::complex<double> den_p = d.d10 * d.d12 + osq;
    const std::complex<double> den_t = std::conj(d.d30) * d.d23 - osq;
    detail::guard_pole(den_p, "d10*d12 + Omega^2");
    detail::guard_pole(den_t, "conj(d30)*d23 - Omega^2");
    detail::guard_pole(d.d13, "d13");
    const DipoleMoments mu = dipole_from_linewidth(p);
    return detail::chi3_prefactor(p, mu.mu_p_sq, mu.mu_t_sq)
           * 0.5 * (d.d12 / d.d13) / den_p * (d.d12 / den_p + d.d23 / den_t);
}

inline std::complex<double> chi3_trigger(const TripodParams& p) {
    const ComplexDetunings d = complex_detunings(p);
    const double osq = p.omega_c * p.omega_c;
    const std::complex<double> den_t = d.d30 * std::conj(d.d23) - osq;
    const std::complex<double> den_p = std::conj(d.d10) * std::conj(d.d12) + osq;
    detail::guard_pole(den_t, "d30*conj(d23) - Omega^2");
    detail::guard_pole(den_p, "conj(d10)*conj(d12) + Omega^2");
    detail::guard_pole(std::conj(d.d13), "conj(d13)");
    const DipoleMoments mu = dipole_from_linewidth(p);
    return detail::chi3_prefactor(p, mu.mu_p_sq, mu.mu_t_sq)
           * 0.5 * (std::conj(d.d23) / std::conj(d.d13)) / den_t
           * (std::conj(d.d12) / den_p + std::conj(d.d23) / den_t);
}

struct SusceptibilityReport {
    std::complex<double> chi1_p;  // dimensionless
    std::complex<double> chi1_t;  // dimensionless
    std::complex<double> chi3_p;  // m^2/V^2
    std::complex<double> chi3_t;  // m^2/V^2
};

inline SusceptibilityReport susceptibility_report(const TripodParams& p) {
    return SusceptibilityReport{chi1_probe(p), chi1_trigger(p), chi3_probe(p), chi3_trigger(p)};
}

inline std::complex<double> chi1_beam(const TripodParams& p, Beam b) {
    return b == Beam::probe ? chi1_probe(p) : chi1_trigger(p);
}

inline std::complex<double> chi3_beam(const TripodParams& p, Beam b) {
    return b == Beam::probe ? chi3_probe(p) : chi3_trigger(p);
}

} // namespace tripod
