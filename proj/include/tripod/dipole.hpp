#pragma once

#include "tripod/constants.hpp"
#include "tripod/params.hpp"

namespace tripod {

// Squared electric-dipole matrix elements for the probe and trigger
// transitions, SI (C.m)^2.
struct DipoleMoments {
    double mu_p_sq;
    double mu_t_sq;
};

// Eliminates the unknown dipole magnitude through the spontaneous-emission
// relation Gamma_rad = omega^3 |mu|^2 / (3 pi eps0 hbar c^3), with the
// radiative population decay taken as twice the optical coherence decay,
// Gamma_rad = 2 gamma.
inline DipoleMoments dipole_from_linewidth(const TripodParams& p) {
    const double gamma_rad = 2.0 * p.gamma_si;
    auto mu_sq = [&](double lambda) {
        const double omega = 2.0 * pi * speed_of_light / lambda;
        return 3.0 * pi * epsilon0 * hbar * speed_of_light * speed_of_light * speed_of_light
               * gamma_rad / (omega * omega * omega);
    };
    return DipoleMoments{mu_sq(p.lambda_p), mu_sq(p.lambda_t)};
}

} // namespace tripod
