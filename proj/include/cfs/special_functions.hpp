#pragma once

#include <cmath>
#include <stdexcept>

namespace cfs {

/// B(z) = z / (e^z - 1), extended by continuity with B(0) = 1.
///
/// Series branch below |z| = 0.1, otherwise z e^{-z} / (1 - e^{-z}) which
/// never exponentiates a positive argument and underflows gracefully to 0
/// as z -> +inf. Negative arguments reduce through B(z) = B(-z) - z, so the
/// reflection identity holds to one rounding of the final subtraction.
inline double bernoulli(double z) {
    if (z < 0.0) {
        return bernoulli(-z) - z;
    }
    if (z < 0.1) {
        // 1 - z/2 + z^2/12 - z^4/720 + z^6/30240 - z^8/1209600; next term < 3e-17 at z = 0.1
        const double z2 = z * z;
        return 1.0 - 0.5 * z +
               z2 * (1.0 / 12.0 - z2 * (1.0 / 720.0 - z2 * (1.0 / 30240.0 - z2 / 1209600.0)));
    }
    return z * std::exp(-z) / (-std::expm1(-z));
}

/// W(z) = (e^z - 1 - z) / (z (e^z - 1)) = (1 - B(z)) / z, with W(0) = 1/2.
///
/// Monotone decreasing from 1 to 0; W(-z) = 1 - W(z) is built in exactly.
/// The series branch extends to |z| = 0.1 because (1 - B(z))/z loses about
/// four digits to cancellation near the origin.
inline double weight(double z) {
    if (z < 0.0) {
        return 1.0 - weight(-z);
    }
    if (z < 0.1) {
        // 1/2 - z/12 + z^3/720 - z^5/30240 + z^7/1209600
        const double z2 = z * z;
        return 0.5 -
               z * (1.0 / 12.0 - z2 * (1.0 / 720.0 - z2 * (1.0 / 30240.0 - z2 / 1209600.0)));
    }
    return (1.0 - bernoulli(z)) / z;
}

/// Branch selector for green_flux at the interface point sigma = 1/2.
enum class InterfaceSide { left, right };

/// Green's function relating the source term to the interface flux on the
/// unit cell, for a cell Peclet number P != 0:
///
///   G(sigma; P) =  (1 - e^{-P sigma}) / (1 - e^{-P})      sigma <= 1/2,
///   G(sigma; P) = -(1 - e^{P (1-sigma)}) / (1 - e^{P})    sigma >= 1/2.
///
/// Discontinuous at sigma = 1/2 with unit jump G(1/2-) - G(1/2+) = 1; `side`
/// picks the branch there. All exponentials are rearranged so that no
/// positive argument is ever exponentiated, keeping the evaluation finite
/// for |P| well beyond 500.
inline double green_flux(double sigma, double peclet, InterfaceSide side) {
    if (!(sigma >= 0.0 && sigma <= 1.0)) {
        throw std::invalid_argument("green_flux: sigma outside [0, 1]");
    }
    if (peclet == 0.0) {
        throw std::invalid_argument("green_flux: Peclet number must be nonzero");
    }
    const bool left_branch = sigma < 0.5 || (sigma == 0.5 && side == InterfaceSide::left);
    if (left_branch) {
        if (peclet > 0.0) {
            return std::expm1(-peclet * sigma) / std::expm1(-peclet);
        }
        const double q = -peclet;
        return std::exp(q * (sigma - 1.0)) * std::expm1(-q * sigma) / std::expm1(-q);
    }
    if (peclet < 0.0) {
        return -std::expm1(peclet * (1.0 - sigma)) / std::expm1(peclet);
    }
    return -std::exp(-peclet * sigma) * std::expm1(-peclet * (1.0 - sigma)) /
           std::expm1(-peclet);
}

}  // namespace cfs
