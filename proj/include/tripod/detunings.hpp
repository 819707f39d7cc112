#pragma once

#include <complex>

#include "tripod/params.hpp"

namespace tripod {

// The five complex detunings entering the susceptibility formulas, in gamma
// units. The optical pair carries +i times the optical decay; the two-photon
// (Raman) detunings carry -i times the ground dephasing:
//
//   d_j0 = delta_j + i*gamma_j0            (j = 1, 3)
//   d_kj = delta_j - delta_k - i*gamma_kj  ((k,j) = (1,2), (1,3), (2,3))
struct ComplexDetunings {
    std::complex<double> d10;
    std::complex<double> d30;
    std::complex<double> d12;
    std::complex<double> d13;
    std::complex<double> d23;
};

inline ComplexDetunings complex_detunings(const TripodParams& p) {
    ComplexDetunings d;
    d.d10 = {p.delta1, p.gamma_10};
    d.d30 = {p.delta3, p.gamma_30};
    d.d12 = {p.delta2 - p.delta1, -p.gamma_12};
    d.d13 = {p.delta3 - p.delta1, -p.gamma_13};
    d.d23 = {p.delta3 - p.delta2, -p.gamma_23};
    return d;
}

} // namespace tripod
