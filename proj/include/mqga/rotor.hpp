#pragma once

// Rotors: unit even elements s + b1 is1 + b2 is2 + b3 is3 of one-particle
// Cl(3).  They double-cover the rotation group through the sandwich v ->
// R v rev(R) and represent SU(2) up to overall sign.
//
// Two exponential conventions coexist on purpose and carry distinct names:
// the full-angle form e^{i n phi} = cos phi + i n sin phi used by the
// {H, T}-synthesis pipeline, and the half-angle form exp(-B theta/2) that
// rotates vectors by theta.  Conflating them is a classic factor-of-2 bug.

#include <array>
#include <cmath>
#include <iostream>
#include <stdexcept>

#include "mqga/complex_matrix.hpp"
#include "mqga/multivector.hpp"

namespace mqga {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double length(const Vec3& a) { return std::sqrt(dot(a, a)); }

struct Rotor {
    double s = 1.0, b1 = 0.0, b2 = 0.0, b3 = 0.0;

    Multivector to_multivector() const {
        Multivector mv = Multivector::scalar(1, s);
        mv += b1 * i_sigma(1, 1, 1);
        mv += b2 * i_sigma(1, 1, 2);
        mv += b3 * i_sigma(1, 1, 3);
        return mv;
    }

    static Rotor from_multivector(const Multivector& mv) {
        if (mv.particles() != 1)
            throw std::invalid_argument("Rotor: expected a one-particle multivector");
        Rotor r{scalar_part(mv), 0.0, 0.0, 0.0};
        // read the bivector part back through the display basis (is2 = -s1s3)
        r.b1 = mv.coeff(MultiBlade{6u});
        r.b2 = -mv.coeff(MultiBlade{5u});
        r.b3 = mv.coeff(MultiBlade{3u});
        if (mv.coeff(MultiBlade{1u}) != 0.0 || mv.coeff(MultiBlade{2u}) != 0.0 ||
            mv.coeff(MultiBlade{4u}) != 0.0 || mv.coeff(MultiBlade{7u}) != 0.0)
            throw std::invalid_argument("Rotor: multivector has odd-grade components");
        return r;
    }

    // geometric product, routed through the one verified multivector path
    friend Rotor operator*(const Rotor& a, const Rotor& b) {
        return from_multivector(a.to_multivector() * b.to_multivector());
    }

    friend Rotor operator-(const Rotor& r) { return {-r.s, -r.b1, -r.b2, -r.b3}; }

    Rotor reversed() const { return {s, -b1, -b2, -b3}; }

    double norm() const { return std::sqrt(s * s + b1 * b1 + b2 * b2 + b3 * b3); }

    Vec3 bivector() const { return {b1, b2, b3}; }
};

inline double max_component_diff(const Rotor& a, const Rotor& b) {
    return std::max(std::max(std::abs(a.s - b.s), std::abs(a.b1 - b.b1)),
                    std::max(std::abs(a.b2 - b.b2), std::abs(a.b3 - b.b3)));
}

// componentwise agreement up to an overall sign flip
inline double sign_free_diff(const Rotor& a, const Rotor& b) {
    return std::min(max_component_diff(a, b), max_component_diff(a, -b));
}

struct AxisAngle {
    Vec3 axis;
    double angle;
};

namespace detail {

inline Vec3 checked_axis(Vec3 axis, double angle, const char* who) {
    double len = length(axis);
    if (angle == 0.0 && len == 0.0) return {0.0, 0.0, 1.0};  // axis is irrelevant
    if (std::abs(len - 1.0) > 1e-6)
        throw std::invalid_argument(std::string(who) + ": axis is not unit length");
    if (len != 1.0) {
        if (std::abs(len - 1.0) > 1e-12)
            std::cerr << who << ": normalizing slightly non-unit axis (|n| = "
                      << format_real(len, 6) << ")\n";
        for (double& c : axis) c /= len;
    }
    return axis;
}

}  // namespace detail

// Full-angle exponential e^{i n phi} = cos phi + sin phi (i n).
inline Rotor rotor_exp(const AxisAngle& a) {
    Vec3 n = detail::checked_axis(a.axis, a.angle, "rotor_exp");
    double c = std::cos(a.angle), s = std::sin(a.angle);
    return {c, s * n[0], s * n[1], s * n[2]};
}

// Half-angle exponential exp(-B theta/2) with B = i n; rotates vectors by
// theta about n under the sandwich.
inline Rotor rotor_exp_half(const Vec3& axis, double theta) {
    Vec3 n = detail::checked_axis(axis, theta, "rotor_exp_half");
    double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    return {c, -s * n[0], -s * n[1], -s * n[2]};
}

// Inverse of the full-angle exponential: angle in [0, pi].  At the branch
// point s = -1, |b| = 0 the axis is arbitrary; s3 is returned by convention.
inline AxisAngle rotor_log(const Rotor& r) {
    Vec3 b = r.bivector();
    double bn = length(b);
    double angle = std::atan2(bn, r.s);
    if (bn < 1e-300) return {{0.0, 0.0, 1.0}, r.s < 0.0 ? kPi : 0.0};
    return {{b[0] / bn, b[1] / bn, b[2] / bn}, angle};
}

// Double-sided half-angle transformation law v -> R v rev(R) on grade-1
// input.  R and -R act identically.
inline Multivector rotate_vector(const Rotor& r, const Multivector& v) {
    if (v.particles() != 1)
        throw std::invalid_argument("rotate_vector: expected a one-particle vector");
    if (max_coeff_diff(v, grade_projection(v, {1})) != 0.0)
        throw std::invalid_argument("rotate_vector: input is not grade 1");
    Multivector rm = r.to_multivector();
    return grade_projection(rm * v * reversion(rm), {1});
}

// SU(2) <-> rotor correspondence:
//   [[ s + i b3, b2 + i b1 ], [ -b2 + i b1, s - i b3 ]].
// The matrix must have unit determinant; strip global phases first (see
// normalize_phase).

inline Rotor su2_to_rotor(const ComplexMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("su2_to_rotor: 2x2 only");
    cplx det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    if (std::abs(det - 1.0) > 1e-10)
        throw std::invalid_argument("su2_to_rotor: determinant is not 1");
    return {0.5 * (m.at(0, 0) + m.at(1, 1)).real(), 0.5 * (m.at(0, 1) + m.at(1, 0)).imag(),
            0.5 * (m.at(0, 1) - m.at(1, 0)).real(), 0.5 * (m.at(0, 0) - m.at(1, 1)).imag()};
}

inline ComplexMatrix rotor_to_su2(const Rotor& r) {
    ComplexMatrix m(2, 2);
    m.at(0, 0) = cplx(r.s, r.b3);
    m.at(0, 1) = cplx(r.b2, r.b1);
    m.at(1, 0) = cplx(-r.b2, r.b1);
    m.at(1, 1) = cplx(r.s, -r.b3);
    return m;
}

}  // namespace mqga
