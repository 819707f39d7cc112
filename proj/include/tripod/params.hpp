#pragma once

#include <cmath>
#include <string>

#include "tripod/constants.hpp"
#include "tripod/errors.hpp"

namespace tripod {

// All physical inputs of the model. Rabi frequencies, detunings, and rates
// are dimensionless multiples of the optical coherence decay unit gamma;
// gamma_si fixes that unit in rad/s. Dimensional quantities (density, length,
// wavelengths, pulse durations) are SI.
//
// Level scheme: one excited state |0> coupled to three ground states by the
// probe (|1> -> |0>), coupling (|2> -> |0>), and trigger (|3> -> |0>) fields.
// Detunings follow the atom-minus-laser sign convention.
//
// Defaults encode the "quantum" operating point; classical_preset() switches
// the fields, detunings, density, and length to the strong-field regime.
struct TripodParams {
    double omega_p = 0.1;            // probe Rabi frequency |Omega_P| / gamma
    double omega_t = 0.1;            // trigger Rabi frequency |Omega_T| / gamma
    double omega_c = 1.0;            // coupling Rabi frequency |Omega| / gamma

    double delta1 = 20.01;           // probe detuning / gamma
    double delta2 = 20.0;            // coupling detuning / gamma
    double delta3 = 20.02;           // trigger detuning / gamma

    double gamma_10 = 1.0;           // optical coherence decay rates / gamma
    double gamma_20 = 1.0;
    double gamma_30 = 1.0;

    double gamma_12 = 1e-2;          // ground-state dephasing rates / gamma
    double gamma_13 = 1e-2;
    double gamma_23 = 1e-2;

    double gamma_si = 2.0 * pi * 3.03e6;  // the unit gamma itself, rad/s

    double density = 3e19;           // atom number density, m^-3
    double length = 1.6e-3;          // medium length, m

    double lambda_p = 780.24e-9;     // probe vacuum wavelength, m
    double lambda_t = 780.24e-9;     // trigger vacuum wavelength, m

    double tau_p = 1e-3;             // Gaussian pulse durations, s
    double tau_t = 1e-3;

    double zeeman_split = 20.0;      // Zeeman splitting of |1>,|3> / gamma

    // Throws ConfigError naming the offending field. Density and length may
    // be zero (vacuum/empty-cell checks); everything else keeps its stated
    // sign constraints.
    void validate() const {
        auto finite = [](double v) { return std::isfinite(v); };
        auto require = [&](bool ok, const char* field, const char* what) {
            if (!ok) throw ConfigError(std::string("invalid parameter '") + field + "': " + what);
        };
        require(finite(omega_p) && omega_p >= 0.0, "omega_p", "must be a finite number >= 0");
        require(finite(omega_t) && omega_t >= 0.0, "omega_t", "must be a finite number >= 0");
        require(finite(omega_c) && omega_c >= 0.0, "omega_c", "must be a finite number >= 0");
        require(finite(delta1), "delta1", "must be a finite number");
        require(finite(delta2), "delta2", "must be a finite number");
        require(finite(delta3), "delta3", "must be a finite number");
        require(finite(gamma_10) && gamma_10 > 0.0, "gamma_10", "must be a finite number > 0");
        require(finite(gamma_20) && gamma_20 > 0.0, "gamma_20", "must be a finite number > 0");
        require(finite(gamma_30) && gamma_30 > 0.0, "gamma_30", "must be a finite number > 0");
        require(finite(gamma_12) && gamma_12 >= 0.0, "gamma_12", "must be a finite number >= 0");
        require(finite(gamma_13) && gamma_13 >= 0.0, "gamma_13", "must be a finite number >= 0");
        require(finite(gamma_23) && gamma_23 >= 0.0, "gamma_23", "must be a finite number >= 0");
        require(finite(gamma_si) && gamma_si > 0.0, "gamma_si", "must be a finite number > 0");
        require(finite(density) && density >= 0.0, "density", "must be a finite number >= 0");
        require(finite(length) && length >= 0.0, "length", "must be a finite number >= 0");
        require(finite(lambda_p) && lambda_p > 0.0, "lambda_p", "must be a finite number > 0");
        require(finite(lambda_t) && lambda_t > 0.0, "lambda_t", "must be a finite number > 0");
        require(finite(tau_p) && tau_p > 0.0, "tau_p", "must be a finite number > 0");
        require(finite(tau_t) && tau_t > 0.0, "tau_t", "must be a finite number > 0");
        require(finite(zeeman_split) && zeeman_split >= 0.0, "zeeman_split", "must be a finite number >= 0");
    }
};

// Weak-field operating point: a pi-scale conditional phase accumulates over
// a millimetre cell at cold-atom densities.
inline TripodParams quantum_preset() { return TripodParams{}; }

// Strong-field operating point: classical-intensity probe and trigger in a
// longer, more dilute cell.
inline TripodParams classical_preset() {
    TripodParams p;
    p.omega_p = 1.0;
    p.omega_t = 1.0;
    p.omega_c = 4.5;
    p.delta1 = 10.01;
    p.delta2 = 10.0;
    p.delta3 = 10.02;
    p.density = 3e18;
    p.length = 7e-3;
    return p;
}

enum class Beam { probe, trigger };

inline const char* beam_name(Beam b) { return b == Beam::probe ? "probe" : "trigger"; }

} // namespace tripod
