#pragma once

// The quantum layer: n-qubit states as elements of the reduced even
// subalgebra [Cl+(3)]^n E_n.
//
// The correlator E_n locks the per-particle complex structures together and
// right-multiplication by J_n = E_n i s3^1 plays the role of the imaginary
// unit.  A basis bitstring b maps to (prod over set bits a of -i s2^a) E_n,
// and an amplitude x + i y attaches as x (blade) + y (blade) J_n.  For one
// qubit this reduces to the familiar psi = a0 + a_k i s_k quaternion form.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mqga/multivector.hpp"
#include "mqga/state_vector.hpp"

namespace mqga {

// E_n = prod_{b=2..n} (1 - i s3^1 i s3^b)/2; the empty product for n = 1.
inline Multivector correlator(int n) {
    Multivector e = Multivector::scalar(n, 1.0);
    for (int b = 2; b <= n; ++b) {
        Multivector f = Multivector::scalar(n, 0.5);
        f -= 0.5 * (i_sigma(n, 1, 3) * i_sigma(n, b, 3));
        e = e * f;
    }
    return e;
}

inline Multivector complex_structure(int n) { return correlator(n) * i_sigma(n, 1, 3); }

namespace detail {

// (prod over set bits a of -i s2^a) E_n for basis index idx (MSB-first).
inline Multivector basis_blade(int n, size_t idx, const Multivector& e) {
    Multivector b = e;
    for (int q = 1; q <= n; ++q)
        if (idx & (size_t{1} << (n - q))) b = -i_sigma(n, q, 2) * b;
    return b;
}

}  // namespace detail

inline Multivector encode(const ComplexStateVector& v) {
    const int n = v.qubits();
    const Multivector e = correlator(n);
    const Multivector j = complex_structure(n);
    Multivector out(n);
    for (size_t idx = 0; idx < v.dim(); ++idx) {
        const cplx& a = v.amp(idx);
        if (a == cplx{}) continue;
        Multivector blade = detail::basis_blade(n, idx, e);
        if (a.real() != 0.0) out += a.real() * blade;
        if (a.imag() != 0.0) out += a.imag() * (blade * j);
    }
    return out;
}

// Squared norm under the pairing 2^{n-1} <reversion(s) s>_0; equals the usual
// squared amplitude norm of the encoded state.
inline double spinor_norm2(const Multivector& s) {
    return std::ldexp(scalar_part(reversion(s) * s), s.particles() - 1);
}

// Inverse of encode.  Inputs must already live in the reduced even
// subalgebra: every per-particle grade even and s E_n == s.  Anything else is
// rejected rather than silently projected, so encoding bugs surface here.
inline ComplexStateVector decode(const Multivector& s, double tol = 1e-12) {
    const int n = s.particles();
    for (const auto& [b, c] : s.terms())
        for (int p = 1; p <= n; ++p)
            if (blade_grade(b.at(p)) % 2 != 0)
                throw std::invalid_argument(
                    "decode: input has an odd-grade component; not a reduced spinor");

    const Multivector e = correlator(n);
    double resid = max_coeff_diff(s * e, s);
    if (resid > tol)
        throw std::invalid_argument(
            "decode: input is not fixed by the correlator (residual " +
            format_real(resid, 3) + "); not a reduced spinor");

    const Multivector j = complex_structure(n);
    // <reversion(beta) beta>_0 = 2^{-(n-1)} for every basis blade
    const double inv_pair = std::ldexp(1.0, n - 1);
    std::vector<cplx> amps(size_t{1} << n);
    for (size_t idx = 0; idx < amps.size(); ++idx) {
        Multivector blade = detail::basis_blade(n, idx, e);
        double re = scalar_part(reversion(blade) * s) * inv_pair;
        double im = scalar_part(reversion(blade * j) * s) * inv_pair;
        amps[idx] = cplx(re, im);
    }
    return ComplexStateVector::from_amplitudes(n, std::move(amps));
}

// The four Bell states in closed form, built from the displayed factorized
// expressions (2^{-3/2} prefactor times two two-particle factors).
inline std::array<Multivector, 4> bell_states() {
    const int n = 2;
    const double f = std::pow(2.0, -1.5);
    const Multivector one = Multivector::scalar(n, 1.0);
    const Multivector s2s2 = i_sigma(n, 1, 2) * i_sigma(n, 2, 2);
    const Multivector s2p = i_sigma(n, 1, 2) + i_sigma(n, 2, 2);
    const Multivector s2m = i_sigma(n, 1, 2) - i_sigma(n, 2, 2);
    const Multivector corr = one - i_sigma(n, 1, 3) * i_sigma(n, 2, 3);
    return {
        f * ((one + s2s2) * corr),   // (|00> + |11>)/sqrt(2)
        -f * (s2p * corr),           // (|01> + |10>)/sqrt(2)
        f * ((one - s2s2) * corr),   // (|00> - |11>)/sqrt(2)
        f * (s2m * corr),            // (|01> - |10>)/sqrt(2), the singlet
    };
}

}  // namespace mqga
