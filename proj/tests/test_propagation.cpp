// Propagation: group velocities, pulse-overlap factor zeta, erf(z)/z,
// accumulated phases, the transparency window, and the wrong-polarization
// figure of merit.

#include <catch2/catch_amalgamated.hpp>

#include <tripod/tripod.hpp>

#include <cmath>

using namespace tripod;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("group velocity reduces to c in vacuum") {
    TripodParams p = quantum_preset();
    p.density = 0.0;
    CHECK_THAT(group_velocity(p, Beam::probe), WithinRel(speed_of_light, 1e-12));
    CHECK_THAT(group_velocity(p, Beam::trigger), WithinRel(speed_of_light, 1e-12));
}

TEST_CASE("group velocities at the presets") {
    const GroupVelocities q = group_velocities(quantum_preset());
    CHECK_THAT(q.vg_p, WithinRel(3.4973963739224647, 1e-12));
    CHECK_THAT(q.vg_t, WithinRel(2.3847277777147906, 1e-12));

    const GroupVelocities c = group_velocities(classical_preset());
    CHECK_THAT(c.vg_p, WithinRel(876.44094468521303, 1e-12));
    CHECK_THAT(c.vg_t, WithinRel(867.74476540224339, 1e-12));

    for (const GroupVelocities& vg : {q, c}) {
        CHECK(vg.vg_p > 0.0);
        CHECK(vg.vg_p <= speed_of_light);
        CHECK(vg.vg_t > 0.0);
        CHECK(vg.vg_t <= speed_of_light);
    }
}

TEST_CASE("stronger coupling flattens the dispersion and speeds the pulse up") {
    TripodParams a = quantum_preset();
    TripodParams b = quantum_preset();
    a.omega_c = 1.0;
    b.omega_c = 2.0;
    CHECK(group_velocity(a, Beam::probe) < group_velocity(b, Beam::probe));

    // Below a critical coupling strength, the dispersion at this detuning
    // turns anomalous and the group velocity is rejected.
    TripodParams w = quantum_preset();
    w.omega_c = 0.5;
    CHECK_THROWS_MATCHES(group_velocity(w, Beam::probe), DispersionError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("probe")));
}

TEST_CASE("finite-difference dispersion slope agrees with Richardson extrapolation") {
    const TripodParams q = quantum_preset();
    auto slope = [&](double h) {
        TripodParams lo = q, hi = q;
        lo.delta1 -= h;
        hi.delta1 += h;
        return (chi1_probe(hi).real() - chi1_probe(lo).real()) / (2.0 * h * q.gamma_si);
    };
    const double s1 = slope(1e-3);
    const double s2 = slope(5e-4);
    const double richardson = (4.0 * s2 - s1) / 3.0;

    // Detunings are atom-minus-laser, so d chi/d omega = -d chi/d delta.
    const double omega = 2.0 * pi * speed_of_light / q.lambda_p;
    const double ng_fd = 1.0 + chi1_probe(q).real() / 2.0 - (omega / 2.0) * s1;
    const double ng_rich = 1.0 + chi1_probe(q).real() / 2.0 - (omega / 2.0) * richardson;
    CHECK_THAT(speed_of_light / ng_fd, WithinRel(speed_of_light / ng_rich, 1e-3));
    CHECK_THAT(group_velocity(q, Beam::probe), WithinRel(speed_of_light / ng_rich, 1e-3));
}

TEST_CASE("zeta vanishes for matched group velocities and follows its definition") {
    TripodParams p = quantum_preset();
    p.length = 1.0;
    p.tau_t = 1e-6;

    const GroupVelocities matched{12345.0, 12345.0};
    CHECK(zeta(p, matched, Beam::probe) == 0.0);
    CHECK(zeta(p, matched, Beam::trigger) == 0.0);

    // Direct substitution: vg_p = c/2, vg_t = c, l = 1 m, tau_t = 1 us.
    const GroupVelocities vg{speed_of_light / 2.0, speed_of_light};
    const double expected = (1.0 - 0.5) * std::sqrt(2.0) * 1.0 / ((speed_of_light / 2.0) * 1e-6);
    CHECK_THAT(zeta(p, vg, Beam::probe), WithinRel(expected, 1e-12));

    // Swapping the two velocities flips the sign of zeta.
    const GroupVelocities swapped{speed_of_light, speed_of_light / 2.0};
    CHECK_THAT(zeta(p, swapped, Beam::probe), WithinRel(-zeta(p, vg, Beam::probe), 1e-12));
}

TEST_CASE("erf_over_zeta limits, golden value, and evenness") {
    CHECK(erf_over_zeta(0.0) == two_over_sqrt_pi);
    CHECK_THAT(erf_over_zeta(0.0), WithinAbs(1.1283791670955126, 1e-12));

    // Small-argument Taylor branch.
    const double z = 1e-4;
    CHECK_THAT(erf_over_zeta(z), WithinAbs(two_over_sqrt_pi * (1.0 - z * z / 3.0), 1e-12));

    CHECK_THAT(erf_over_zeta(1.0), WithinAbs(0.84270079294971489, 1e-12));

    for (int i = 0; i <= 200; ++i) {
        const double x = -10.0 + 0.1 * i;
        CHECK(erf_over_zeta(x) == erf_over_zeta(-x));
    }

    // The function decreases monotonically in |z|.
    CHECK(erf_over_zeta(0.5) > erf_over_zeta(1.0));
    CHECK(erf_over_zeta(1.0) > erf_over_zeta(5.0));
}

TEST_CASE("vacuum phase") {
    TripodParams p = quantum_preset();
    p.length = 0.0;
    CHECK(phi_vacuum(p, Beam::probe) == 0.0);

    TripodParams one_wavelength = quantum_preset();
    one_wavelength.lambda_p = 780e-9;
    one_wavelength.length = 780e-9;
    CHECK_THAT(phi_vacuum(one_wavelength, Beam::probe), WithinRel(2.0 * pi, 1e-12));

    CHECK_THAT(phi_vacuum(quantum_preset(), Beam::probe),
               WithinRel(2.0 * pi * 1.6e-3 / 780.24e-9, 1e-12));
}

TEST_CASE("linear phase") {
    // Vacuum: no medium, no correction.
    TripodParams v = quantum_preset();
    v.density = 0.0;
    CHECK(phi_linear(v, Beam::probe) == phi_vacuum(v, Beam::probe));

    // Perfect transparency: chi1 = 0 identically, so the linear phase equals
    // the vacuum phase bit for bit.
    TripodParams eit = quantum_preset();
    eit.delta1 = eit.delta2;
    eit.gamma_12 = 0.0;
    CHECK(phi_linear(eit, Beam::probe) == phi_vacuum(eit, Beam::probe));

    const TripodParams q = quantum_preset();
    CHECK_THAT(phi_linear(q, Beam::probe), WithinRel(12824.852869938579, 1e-12));
    CHECK_THAT(phi_linear(q, Beam::trigger), WithinRel(12718.730195509412, 1e-12));
    // Difference from vacuum is k l Re(chi1)/2.
    const double k = 2.0 * pi / q.lambda_t;
    CHECK_THAT(phi_linear(q, Beam::trigger) - phi_vacuum(q, Beam::trigger),
               WithinRel(k * q.length * chi1_trigger(q).real() / 2.0, 1e-9));
}

TEST_CASE("nonlinear phase") {
    const TripodParams q = quantum_preset();
    const GroupVelocities vg = group_velocities(q);
    CHECK_THAT(phi_nonlinear(q, vg, Beam::probe), WithinRel(0.25008034935628648, 1e-12));
    CHECK_THAT(phi_nonlinear(q, vg, Beam::trigger), WithinRel(8.3214825937962402, 1e-12));

    // The cross-Kerr phase on the probe is driven by the trigger intensity.
    TripodParams no_trigger = q;
    no_trigger.omega_t = 0.0;
    CHECK(phi_nonlinear(no_trigger, group_velocities(no_trigger), Beam::probe) == 0.0);

    // At zeta = 0 (matched velocities by construction) the nonlinear phase is
    // strictly linear in the length, so doubling l doubles it exactly.
    TripodParams m = quantum_preset();
    m.omega_c = 0.0;
    m.delta1 = 10.0;
    m.delta3 = 10.0;
    m.delta2 = 20.0;
    m.omega_p = 0.1;
    m.omega_t = 0.2;
    const GroupVelocities mv = group_velocities(m);
    REQUIRE(mv.vg_p == mv.vg_t);
    REQUIRE(zeta(m, mv, Beam::probe) == 0.0);
    TripodParams m2 = m;
    m2.length = 2.0 * m.length;
    CHECK(phi_nonlinear(m2, mv, Beam::probe) == 2.0 * phi_nonlinear(m, mv, Beam::probe));
}

TEST_CASE("phase table is assembled consistently") {
    for (const TripodParams& p : {quantum_preset(), classical_preset()}) {
        const PhaseTable ph = phase_table(p);
        CHECK(ph.phi_conditional == ph.phi_nlin_p + ph.phi_nlin_t);
        for (double v : {ph.phi0_p, ph.phi0_t, ph.phi_lin_p, ph.phi_lin_t,
                         ph.phi_nlin_p, ph.phi_nlin_t, ph.phi_conditional}) {
            CHECK(std::isfinite(v));
        }
    }
    const PhaseTable q = phase_table(quantum_preset());
    CHECK_THAT(q.phi0_p, WithinRel(12884.620746805263, 1e-12));
    CHECK_THAT(q.phi_conditional, WithinRel(8.5715629431525269, 1e-12));

    const PhaseTable c = phase_table(classical_preset());
    CHECK_THAT(c.phi_nlin_p, WithinRel(-0.00056605665394853953, 1e-12));
    CHECK_THAT(c.phi_nlin_t, WithinRel(0.53490638861859008, 1e-12));
    CHECK_THAT(c.phi_conditional, WithinRel(0.53434033196464159, 1e-12));
}

TEST_CASE("an empty medium accumulates no phase at all") {
    TripodParams p = quantum_preset();
    p.length = 0.0;
    const PhaseTable ph = phase_table(p);
    CHECK(ph.phi0_p == 0.0);
    CHECK(ph.phi0_t == 0.0);
    CHECK(ph.phi_lin_p == 0.0);
    CHECK(ph.phi_lin_t == 0.0);
    CHECK(ph.phi_nlin_p == 0.0);
    CHECK(ph.phi_nlin_t == 0.0);
    CHECK(ph.phi_conditional == 0.0);
}

TEST_CASE("zero density keeps only the vacuum phase") {
    TripodParams p = quantum_preset();
    p.density = 0.0;
    const PhaseTable ph = phase_table(p);
    CHECK(ph.phi_lin_p == ph.phi0_p);
    CHECK(ph.phi_lin_t == ph.phi0_t);
    CHECK(ph.phi_nlin_p == 0.0);
    CHECK(ph.phi_nlin_t == 0.0);
    CHECK(ph.phi_conditional == 0.0);
}

TEST_CASE("transparency window at the presets") {
    const double wq = transparency_window(quantum_preset(), Beam::probe);
    CHECK_THAT(wq, WithinAbs(0.078, 1e-12));
    CHECK(wq > 0.03);
    CHECK(wq < 0.3);
    CHECK_THAT(transparency_window(quantum_preset(), Beam::trigger), WithinAbs(0.078, 1e-12));
    CHECK_THAT(transparency_window(classical_preset(), Beam::probe), WithinAbs(3.198, 1e-12));
}

TEST_CASE("window widens with coupling power") {
    TripodParams strong = quantum_preset();
    strong.omega_c = 2.0;
    const double w1 = transparency_window(quantum_preset(), Beam::probe);
    const double w2 = transparency_window(strong, Beam::probe);
    CHECK(w2 > w1);
    CHECK_THAT(w2, WithinAbs(0.36, 1e-12));
}

TEST_CASE("ideal dephasing-free medium is perfectly transparent at line center") {
    TripodParams p = quantum_preset();
    p.delta1 = p.delta2;
    p.gamma_12 = 0.0;
    CHECK(chi1_probe(p).imag() == 0.0);
    CHECK_NOTHROW(transparency_window(p, Beam::probe));
}

TEST_CASE("window detection fails cleanly when there is no dip") {
    // No coupling field: a bare absorption line has no transparency dip.
    TripodParams bare = quantum_preset();
    bare.omega_c = 0.0;
    CHECK_THROWS_MATCHES(transparency_window(bare, Beam::probe), NoWindowError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("above half-maximum")));

    // No medium: the absorption profile is identically zero.
    TripodParams vac = quantum_preset();
    vac.density = 0.0;
    CHECK_THROWS_MATCHES(transparency_window(vac, Beam::probe), NoWindowError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("identically zero")));
}

TEST_CASE("wrong-polarization rejection") {
    const WrongPolarizationReport r = wrong_polarization_check(quantum_preset());
    CHECK_THAT(r.ratio, WithinRel(512.82051282051282, 1e-9));
    CHECK(r.ratio >= 100.0);
    CHECK(r.gate_valid);

    TripodParams none = quantum_preset();
    none.zeeman_split = 0.0;
    const WrongPolarizationReport r0 = wrong_polarization_check(none);
    CHECK(r0.ratio == 0.0);
    CHECK_FALSE(r0.gate_valid);

    // The ratio is linear in the splitting.
    TripodParams twice = quantum_preset();
    twice.zeeman_split = 2.0 * quantum_preset().zeeman_split;
    CHECK(wrong_polarization_check(twice).ratio == 2.0 * r.ratio);
}
