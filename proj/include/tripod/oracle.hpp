#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "tripod/constants.hpp"
#include "tripod/dipole.hpp"
#include "tripod/errors.hpp"
#include "tripod/params.hpp"
#include "tripod/susceptibility.hpp"

namespace tripod {

// Density matrix over the four levels, indexed (row, col) = (i, j) for
// rho_ij; |0> excited, |1>,|2>,|3> ground.
using DensityMatrix4 = Eigen::Matrix<std::complex<double>, 4, 4>;

using Matrix16 = Eigen::Matrix<std::complex<double>, 16, 16>;
using Vector16 = Eigen::Matrix<std::complex<double>, 16, 1>;

namespace detail {

using Matrix4c = Eigen::Matrix<std::complex<double>, 4, 4>;

// Rotating-frame Hamiltonian in gamma units,
//   H = sum_j delta_j |j><j| + (Omega_P |0><1| + Omega |0><2| + Omega_T |0><3| + h.c.),
// with the Rabi frequencies as full (not half) coupling matrix elements.
// This convention is pinned by requiring the oracle's linear response to
// reproduce the chi1 pole denominators exactly (checked in the test suite).
inline Matrix4c hamiltonian(const TripodParams& p) {
    Matrix4c h = Matrix4c::Zero();
    h(1, 1) = p.delta1;
    h(2, 2) = p.delta2;
    h(3, 3) = p.delta3;
    h(0, 1) = p.omega_p;
    h(0, 2) = p.omega_c;
    h(0, 3) = p.omega_t;
    h(1, 0) = p.omega_p;
    h(2, 0) = p.omega_c;
    h(3, 0) = p.omega_t;
    return h;
}

inline Matrix16 kron4(const Matrix4c& a, const Matrix4c& b) {
    Matrix16 k;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) k(4 * i + r, 4 * j + c) = a(i, j) * b(r, c);
    return k;
}

} // namespace detail

// Generator of the master equation  d vec(rho)/dt = L vec(rho)  in gamma
// units, with row-major vectorization n = 4 i + j for rho_ij. Dissipation:
// spontaneous decay |0> -> |j> at Gamma_j = 2 gamma_j0 / 3 (so each optical
// coherence decays at gamma when the gamma_j0 are equal), plus pure
// dephasing of the ground coherences at gamma_kj.
inline Matrix16 liouvillian(const TripodParams& p) {
    using detail::Matrix4c;
    const Matrix4c h = detail::hamiltonian(p);
    const Matrix4c id = Matrix4c::Identity();
    const std::complex<double> i1(0.0, 1.0);

    Matrix16 l = -i1 * (detail::kron4(h, id) - detail::kron4(id, h.transpose()));

    const std::array<double, 3> gamma_opt{p.gamma_10, p.gamma_20, p.gamma_30};
    for (int j = 1; j <= 3; ++j) {
        const double rate = 2.0 * gamma_opt[static_cast<size_t>(j - 1)] / 3.0;
        Matrix4c jump = Matrix4c::Zero();
        jump(j, 0) = 1.0;
        const Matrix4c jdj = jump.adjoint() * jump;  // |0><0|
        l += rate
             * (detail::kron4(jump, jump.conjugate()) - 0.5 * detail::kron4(jdj, id)
                - 0.5 * detail::kron4(id, jdj.transpose()));
    }

    const std::array<std::array<double, 3>, 3> ground_deph{{{0.0, p.gamma_12, p.gamma_13},
                                                            {p.gamma_12, 0.0, p.gamma_23},
                                                            {p.gamma_13, p.gamma_23, 0.0}}};
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            if (a != b)
                l(4 * a + b, 4 * a + b) -=
                    ground_deph[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)];
    return l;
}

// Unique steady state of the master equation: the 15 independent Liouvillian
// rows plus the trace condition, solved as a dense 16x16 linear system. The
// condition number of that system classifies failures: above 1e15 the state
// is treated as non-unique (e.g. no fields couple some ground level), above
// 1e12 the solve is refused as numerically untrustworthy.
inline DensityMatrix4 steady_state(const TripodParams& p) {
    if (p.omega_p == 0.0 && p.omega_t == 0.0 && p.omega_c == 0.0) {
        throw SingularSteadyStateError(
            "steady state is not unique: all Rabi frequencies are zero, so the "
            "ground-state populations are unconstrained");
    }
    Matrix16 a = liouvillian(p);
    a.row(15).setZero();
    for (int i = 0; i < 4; ++i) a(15, 4 * i + i) = 1.0;
    Vector16 b = Vector16::Zero();
    b(15) = 1.0;

    const Eigen::JacobiSVD<Matrix16> svd(a);
    const auto& sv = svd.singularValues();
    const double cond = sv(15) > 0.0 ? sv(0) / sv(15) : std::numeric_limits<double>::infinity();
    if (!(cond <= 1e15)) {
        throw SingularSteadyStateError(
            "steady state is not unique: linear-system condition number " + std::to_string(cond));
    }
    if (cond > 1e12) {
        throw IllConditionedError(
            "steady-state linear system is ill-conditioned (condition number "
            + std::to_string(cond) + " exceeds 1e12)");
    }

    const Vector16 x = a.partialPivLu().solve(b);
    DensityMatrix4 rho;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rho(i, j) = x(4 * i + j);
    return rho;
}

namespace detail {

// Linear response of the coherences at frozen ensemble populations (half the
// atoms in |1>, half in |3>, none excited). The full steady state optically
// pumps the prepared ensemble away over many decay times, which is not the
// regime the susceptibilities describe; freezing the populations and solving
// the twelve coherence equations keeps the solve exact in the fields while
// matching the prepared-medium response.
inline DensityMatrix4 frozen_population_coherences(const TripodParams& p) {
    const std::array<double, 4> pops{0.0, 0.5, 0.0, 0.5};
    const Matrix4c h = hamiltonian(p);
    const std::complex<double> i1(0.0, 1.0);

    int idx[4][4];
    int n = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) idx[i][j] = (i != j) ? n++ : -1;

    const double gamma_optical = (p.gamma_10 + p.gamma_20 + p.gamma_30) / 3.0;
    const std::array<std::array<double, 3>, 3> ground_deph{{{0.0, p.gamma_12, p.gamma_13},
                                                            {p.gamma_12, 0.0, p.gamma_23},
                                                            {p.gamma_13, p.gamma_23, 0.0}}};

    Eigen::Matrix<std::complex<double>, 12, 12> m =
        Eigen::Matrix<std::complex<double>, 12, 12>::Zero();
    Eigen::Matrix<std::complex<double>, 12, 1> s =
        Eigen::Matrix<std::complex<double>, 12, 1>::Zero();

    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            const int row = idx[i][j];
            const double damping =
                (i == 0 || j == 0)
                    ? gamma_optical
                    : ground_deph[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
            m(row, row) -= damping;
            for (int k = 0; k < 4; ++k) {
                if (k != j) m(row, idx[k][j]) += -i1 * h(i, k);
                if (k != i) m(row, idx[i][k]) += i1 * h(k, j);
            }
            // population terms of -i[H, rho] act as sources
            s(row) += -i1 * h(i, j) * pops[static_cast<size_t>(j)]
                      + i1 * pops[static_cast<size_t>(i)] * h(i, j);
        }
    }

    const Eigen::Matrix<std::complex<double>, 12, 1> x = m.partialPivLu().solve(-s);
    DensityMatrix4 rho = DensityMatrix4::Zero();
    for (int i = 0; i < 4; ++i) {
        rho(i, i) = pops[static_cast<size_t>(i)];
        for (int j = 0; j < 4; ++j)
            if (i != j) rho(i, j) = x(idx[i][j]);
    }
    return rho;
}

} // namespace detail

// Uncalibrated effective susceptibility of the weak beam: the frozen-
// population coherence on its transition divided by its Rabi amplitude,
// rho_01 / Omega_P (probe) or rho_03 / Omega_T (trigger). Carries an
// arbitrary global factor relative to chi1/chi3 until calibrated.
inline std::complex<double> effective_susceptibility(const TripodParams& p, Beam b) {
    const double weak = (b == Beam::probe) ? p.omega_p : p.omega_t;
    if (!(weak > 0.0)) {
        throw ConfigError(std::string("effective susceptibility of the ") + beam_name(b)
                          + " beam needs a positive Rabi amplitude on that beam");
    }
    const DensityMatrix4 rho = detail::frozen_population_coherences(p);
    return ((b == Beam::probe) ? rho(0, 1) : rho(0, 3)) / weak;
}

struct ChiExtraction {
    std::complex<double> chi1_est;
    std::complex<double> chi3_est;
    double fit_residual;  // relative l2 misfit of the linear model
};

inline const std::vector<double>& default_kerr_scan() {
    static const std::vector<double> scan{0.0, 0.005, 0.01, 0.02};
    return scan;
}

// Extracts chi1 and chi3 of one beam from the master-equation response by
// scanning the other ("Kerr") beam's intensity and fitting
//   chi_eff = chi1_est + chi3_est * |E_kerr|^2 / 4
// by least squares. A single calibration constant, fixed by matching the
// zero-Kerr response to chi1 at the same parameter point, converts the
// density-matrix response to susceptibility units; ratios across parameter
// points are independent of it.
inline ChiExtraction extract_chi(const TripodParams& p, Beam b,
                                 const std::vector<double>& kerr_scan = default_kerr_scan()) {
    const double weak = (b == Beam::probe) ? p.omega_p : p.omega_t;
    if (!(weak > 0.0)) {
        throw ConfigError(std::string("chi extraction for the ") + beam_name(b)
                          + " beam needs a positive Rabi amplitude on that beam");
    }
    if (weak > 0.05) {
        throw PerturbativityError(
            std::string(beam_name(b)) + " amplitude " + std::to_string(weak)
            + " gamma is too strong for perturbative extraction (limit 0.05 gamma)");
    }
    if (kerr_scan.empty()) {
        throw ConfigError("chi extraction needs at least one Kerr-scan amplitude");
    }
    for (double o : kerr_scan) {
        if (!(o >= 0.0) || o > 0.05) {
            throw PerturbativityError("Kerr-scan amplitude " + std::to_string(o)
                                      + " gamma is outside the perturbative range [0, 0.05]");
        }
    }

    const DipoleMoments mu = dipole_from_linewidth(p);
    const double mu_other_sq = (b == Beam::probe) ? mu.mu_t_sq : mu.mu_p_sq;

    // calibration at the zero-Kerr reference of this parameter point
    TripodParams ref = p;
    if (b == Beam::probe) {
        ref.omega_t = 0.0;
    } else {
        ref.omega_p = 0.0;
    }
    const std::complex<double> y_ref = effective_susceptibility(ref, b);
    const std::complex<double> chi1_ana = chi1_beam(p, b);
    std::complex<double> cal;
    if (std::abs(y_ref) > 0.0) {
        cal = chi1_ana / y_ref;
    } else if (std::abs(chi1_ana) == 0.0) {
        cal = 1.0;
    } else {
        throw FitError("calibration failed: zero-Kerr response vanished but chi1 does not");
    }

    const size_t npts = kerr_scan.size();
    std::vector<double> xs(npts);
    std::vector<std::complex<double>> ys(npts);
    for (size_t k = 0; k < npts; ++k) {
        TripodParams q = p;
        if (b == Beam::probe) {
            q.omega_t = kerr_scan[k];
        } else {
            q.omega_p = kerr_scan[k];
        }
        const double omega_si = kerr_scan[k] * p.gamma_si;
        xs[k] = hbar * hbar * omega_si * omega_si / (4.0 * mu_other_sq);
        ys[k] = effective_susceptibility(q, b);
    }

    // least squares for y = a + b x (complex y, real x) via normal equations
    double sx = 0.0, sxx = 0.0;
    std::complex<double> sy = 0.0, sxy = 0.0;
    for (size_t k = 0; k < npts; ++k) {
        sx += xs[k];
        sxx += xs[k] * xs[k];
        sy += ys[k];
        sxy += xs[k] * ys[k];
    }
    const double np = static_cast<double>(npts);
    const double det = np * sxx - sx * sx;
    std::complex<double> intercept, slope;
    if (det > 0.0) {
        slope = (np * sxy - sx * sy) / det;
        intercept = (sy - slope * sx) / np;
    } else {
        // degenerate scan (all amplitudes equal): no Kerr slope is resolvable
        slope = 0.0;
        intercept = sy / np;
    }

    double misfit_sq = 0.0, norm_sq = 0.0;
    for (size_t k = 0; k < npts; ++k) {
        misfit_sq += std::norm(ys[k] - (intercept + slope * xs[k]));
        norm_sq += std::norm(ys[k]);
    }
    const double residual = norm_sq > 0.0 ? std::sqrt(misfit_sq / norm_sq) : 0.0;
    if (residual > 1e-6) {
        throw FitError("susceptibility fit residual " + std::to_string(residual)
                       + " exceeds the 1e-6 relative threshold");
    }
    return ChiExtraction{cal * intercept, cal * slope, residual};
}

} // namespace tripod
