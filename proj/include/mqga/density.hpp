#pragma once

// Density operators in GA form.  For one qubit a pure state gives
// rho = psi (1+s3)/2 rev(psi) = (1 + s)/2 with spin vector s = psi s3 rev(psi);
// finite mixtures average the spin vectors into a polarization vector P with
// |P| <= 1 (and |P| = 1 exactly for pure states).  The n-qubit pure case uses
// the product of per-particle idempotents E+ = prod_k (1 + s3^k)/2 on the
// E_n-reduced spinor.

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mqga/multivector.hpp"
#include "mqga/spinor.hpp"

namespace mqga {

inline Multivector plus_idempotent(int n) {
    Multivector e = Multivector::scalar(n, 1.0);
    for (int k = 1; k <= n; ++k) {
        Multivector f = Multivector::scalar(n, 0.5) + 0.5 * sigma(n, k, 3);
        e = e * f;
    }
    return e;
}

inline Multivector density_pure(const Multivector& psi) {
    const int n = psi.particles();
    double nrm2 = spinor_norm2(psi);
    if (std::abs(nrm2 - 1.0) > 1e-10)
        throw std::invalid_argument("density_pure: spinor is not normalized");
    Multivector reduced = psi * correlator(n);
    return reduced * plus_idempotent(n) * reversion(reduced);
}

inline Multivector density_mixed(const std::vector<std::pair<double, Multivector>>& ensemble) {
    if (ensemble.empty()) throw std::invalid_argument("density_mixed: empty ensemble");
    double total = 0.0;
    for (const auto& [w, psi] : ensemble) {
        if (w < 0.0) throw std::invalid_argument("density_mixed: negative weight");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-10)
        throw std::invalid_argument("density_mixed: weights must sum to 1");
    Multivector rho(ensemble.front().second.particles());
    for (const auto& [w, psi] : ensemble) rho += w * density_pure(psi);
    return rho;
}

// Spin (single state) or polarization (mixture) vector of a one-qubit density:
// the coefficients of s1, s2, s3 in 2 rho - 1.
inline std::array<double, 3> polarization(const Multivector& rho) {
    if (rho.particles() != 1)
        throw std::invalid_argument("polarization: defined for one qubit");
    std::array<double, 3> p{};
    for (int k = 1; k <= 3; ++k) {
        MultiBlade b;
        b.set(1, BladeIndex{1} << (k - 1));
        p[k - 1] = 2.0 * rho.coeff(b);
    }
    return p;
}

}  // namespace mqga
