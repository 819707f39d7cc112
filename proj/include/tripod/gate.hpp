#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "tripod/propagation.hpp"

namespace tripod {

// Single-photon polarization qubit in the circular basis {sigma+, sigma-}.
struct PolarizationQubit {
    std::complex<double> a_plus;
    std::complex<double> a_minus;
};

inline PolarizationQubit balanced_qubit() {
    const double r = 1.0 / std::sqrt(2.0);
    return PolarizationQubit{{r, 0.0}, {r, 0.0}};
}

// Two-photon state, probe qubit in the first slot. Fixed amplitude order:
//   [0] mm = sigma-(probe) sigma-(trigger)
//   [1] mp = sigma-(probe) sigma+(trigger)
//   [2] pp = sigma+(probe) sigma+(trigger)
//   [3] pm = sigma+(probe) sigma-(trigger)
struct TwoQubitState {
    std::array<std::complex<double>, 4> amp;
};

inline constexpr int idx_mm = 0;
inline constexpr int idx_mp = 1;
inline constexpr int idx_pp = 2;
inline constexpr int idx_pm = 3;

inline TwoQubitState product_state(const PolarizationQubit& probe,
                                   const PolarizationQubit& trigger) {
    TwoQubitState s;
    s.amp[idx_mm] = probe.a_minus * trigger.a_minus;
    s.amp[idx_mp] = probe.a_minus * trigger.a_plus;
    s.amp[idx_pp] = probe.a_plus * trigger.a_plus;
    s.amp[idx_pm] = probe.a_plus * trigger.a_minus;
    return s;
}

// Phases acquired by each basis state across the cell. A sigma+ probe photon
// and a sigma- trigger photon couple to the medium (linear phase); the
// opposite circular components propagate at the vacuum phase; only the
// pm combination drives both transitions at once and picks up the cross-Kerr
// phases on top of its linear ones.
struct TruthTable {
    double theta_mm;
    double theta_mp;
    double theta_pp;
    double theta_pm;
};

inline TruthTable build_truth_table(const PhaseTable& ph) {
    TruthTable t;
    t.theta_mm = ph.phi0_p + ph.phi_lin_t;
    t.theta_mp = ph.phi0_p + ph.phi0_t;
    t.theta_pp = ph.phi_lin_p + ph.phi0_t;
    t.theta_pm = (ph.phi_lin_p + ph.phi_nlin_p) + (ph.phi_lin_t + ph.phi_nlin_t);
    return t;
}

inline TruthTable build_truth_table(const TripodParams& p) {
    return build_truth_table(phase_table(p));
}

// Gate-invariant combination of the four phases; every single-photon phase
// cancels and only the cross-Kerr contribution survives.
inline double conditional_phase(const TruthTable& t) {
    return t.theta_pm + t.theta_mp - t.theta_pp - t.theta_mm;
}

// Each two-photon basis state picks up e^{-i theta} of its truth-table row.
inline TwoQubitState apply_gate(const PolarizationQubit& probe, const PolarizationQubit& trigger,
                                const TruthTable& t) {
    const std::complex<double> i1(0.0, 1.0);
    TwoQubitState out = product_state(probe, trigger);
    out.amp[idx_mm] *= std::exp(-i1 * t.theta_mm);
    out.amp[idx_mp] *= std::exp(-i1 * t.theta_mp);
    out.amp[idx_pp] *= std::exp(-i1 * t.theta_pp);
    out.amp[idx_pm] *= std::exp(-i1 * t.theta_pm);
    return out;
}

// Concurrence of a pure two-qubit state: 2 |a_mm a_pp - a_mp a_pm|.
inline double concurrence(const TwoQubitState& s) {
    return 2.0 * std::abs(s.amp[idx_mm] * s.amp[idx_pp] - s.amp[idx_mp] * s.amp[idx_pm]);
}

// A conditional phase that is not a multiple of 2 pi makes the gate
// entangling and hence universal together with single-qubit rotations.
// The witness is the concurrence the gate produces on the balanced product
// input; single-photon phases are global there, so the witness is evaluated
// on the 2 pi-reduced conditional phase alone (that keeps it exactly zero
// for phases that are exact multiples of 2 pi).
struct UniversalityReport {
    bool universal;
    double witness;
};

inline UniversalityReport is_universal(const TruthTable& t) {
    const double reduced = std::remainder(conditional_phase(t), 2.0 * pi);
    const TruthTable conditional_only{0.0, 0.0, 0.0, reduced};
    const TwoQubitState out = apply_gate(balanced_qubit(), balanced_qubit(), conditional_only);
    return UniversalityReport{std::fabs(reduced) > 1e-6, concurrence(out)};
}

} // namespace tripod
