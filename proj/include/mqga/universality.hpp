#pragma once

// The {H, T} universality pipeline in rotor form: build the two canonical
// gate words Z^{-1/4} X^{1/4} and its Hadamard-conjugate, read off their
// common rotation angle lambda*pi (an irrational multiple of pi) and the two
// orthogonal axes n1, n2, Euler-decompose arbitrary rotors about those axes,
// and approximate arbitrary targets by exhaustive breadth-first {H, T}-word
// search over rotors.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mqga/complex_matrix.hpp"
#include "mqga/gate_matrices.hpp"
#include "mqga/rotor.hpp"

namespace mqga {

struct EulerAngles {
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

struct BoykinData {
    double lambda = 0.0;  // common rotation angle over pi
    Vec3 n1{}, n2{};
    Rotor r1, r2;
};

namespace detail {

inline Rotor sign_normalized(Rotor r) {
    const double comp[4] = {r.s, r.b1, r.b2, r.b3};
    for (double c : comp) {
        if (std::abs(c) > 1e-12) return c < 0.0 ? -r : r;
    }
    return r;
}

inline void boykin_check(bool ok, const char* what) {
    if (!ok)
        throw std::logic_error(std::string("boykin_construct: internal check failed: ") + what);
}

}  // namespace detail

// Build U1 = Z^{-1/4} X^{1/4} (with X^{1/4} = H Z^{1/4} H) and
// U2 = H^{-1/2} U1 H^{1/2}, convert both to rotors, extract the common angle
// and the two axes, and verify everything against the closed forms.  Any
// failed check is a hard error: it flags an implementation bug, not bad
// input.
inline BoykinData boykin_construct() {
    const ComplexMatrix h = gate_matrix("H");
    const ComplexMatrix z = gate_matrix("Z");

    const ComplexMatrix z4 = matrix_power(z, 0.25);
    const ComplexMatrix x4 = h * z4 * h;
    const ComplexMatrix u1 = matrix_power(z, -0.25) * x4;
    const ComplexMatrix u2 = matrix_power(h, -0.5) * u1 * matrix_power(h, 0.5);

    BoykinData out;
    // rotor sign representative: non-negative scalar part
    out.r1 = detail::sign_normalized(su2_to_rotor(normalize_phase(u1)));
    out.r2 = detail::sign_normalized(su2_to_rotor(normalize_phase(u2)));

    const AxisAngle log1 = rotor_log(out.r1);
    const AxisAngle log2 = rotor_log(out.r2);
    out.lambda = log1.angle / kPi;
    out.n1 = log1.axis;
    out.n2 = log2.axis;

    // closed forms
    const double rt2 = std::sqrt(2.0);
    const double cos_lp = 0.5 * (1.0 + 1.0 / rt2);
    const double sin_lp = std::sqrt(1.0 - cos_lp * cos_lp);
    const Rotor r1_closed{cos_lp, -1.0 / (2.0 * rt2), 0.5 * (1.0 - 1.0 / rt2),
                          1.0 / (2.0 * rt2)};
    const Rotor r2_closed{cos_lp, -0.5 * (0.5 - 1.0 / rt2), 0.5, 0.5 * (0.5 - 1.0 / rt2)};
    const Vec3 n1_closed = {-1.0 / (2.0 * rt2) / sin_lp, 0.5 * (1.0 - 1.0 / rt2) / sin_lp,
                            1.0 / (2.0 * rt2) / sin_lp};
    const Vec3 n2_closed = {-0.5 * (0.5 - 1.0 / rt2) / sin_lp, 0.5 / sin_lp,
                            0.5 * (0.5 - 1.0 / rt2) / sin_lp};

    detail::boykin_check(sign_free_diff(out.r1, r1_closed) <= 1e-10, "R1 closed form");
    detail::boykin_check(sign_free_diff(out.r2, r2_closed) <= 1e-10, "R2 closed form");
    detail::boykin_check(std::abs(log1.angle - log2.angle) <= 1e-12, "lambda1 == lambda2");
    detail::boykin_check(std::abs(std::cos(out.lambda * kPi) - cos_lp) <= 1e-12,
                         "cos(lambda pi)");
    for (int k = 0; k < 3; ++k) {
        detail::boykin_check(std::abs(out.n1[k] - n1_closed[k]) <= 1e-10, "n1 components");
        detail::boykin_check(std::abs(out.n2[k] - n2_closed[k]) <= 1e-10, "n2 components");
    }
    detail::boykin_check(std::abs(dot(out.n1, out.n2)) <= 1e-12, "n1 . n2 == 0");
    return out;
}

// Euler decomposition about two orthogonal axes: write the unit target as
// cos phi + i n sin phi, project the bivector onto the orthonormal frame
// {n1, n2, n1 x n2} giving components
//   (c1, c2, c3) = (cos b sin(a+g), sin b cos(g-a), sin b sin(g-a)),
// with scalar part cos b cos(a+g), and solve on the cos b >= 0 branch.  The
// recomposition e^{i n1 a} e^{i n2 b} e^{i n1 g} then reproduces the target
// (including its sign, for unit input).
inline EulerAngles euler_decompose(const Rotor& target, const Vec3& n1, const Vec3& n2) {
    if (std::abs(length(n1) - 1.0) > 1e-10 || std::abs(length(n2) - 1.0) > 1e-10)
        throw std::invalid_argument("euler_decompose: axes must be unit vectors");
    if (std::abs(dot(n1, n2)) > 1e-10)
        throw std::invalid_argument("euler_decompose: axes must be orthogonal");

    const Vec3 n3 = cross(n1, n2);
    const Vec3 b = target.bivector();
    const double t0 = target.s;
    const double c1 = dot(b, n1), c2 = dot(b, n2), c3 = dot(b, n3);

    const double apg = std::atan2(c1, t0);                                      // alpha + gamma
    const double beta = std::atan2(std::hypot(c2, c3), std::hypot(t0, c1));     // cos b >= 0
    // gauge choice at the sin(beta) == 0 degeneracy: gamma - alpha = 0
    const double gma = (std::abs(c2) < 1e-15 && std::abs(c3) < 1e-15)
                           ? 0.0
                           : std::atan2(c3, c2);

    return {0.5 * (apg - gma), beta, 0.5 * (apg + gma)};
}

inline Rotor euler_recompose(const EulerAngles& e, const Vec3& n1, const Vec3& n2) {
    return rotor_exp({n1, e.alpha}) * rotor_exp({n2, e.beta}) * rotor_exp({n1, e.gamma});
}

// Phase-insensitive distance between unit rotors; coincides with the 2x2
// matrix form sqrt(2 - |tr(U^dag V)|) because the SU(2) trace pairing is
// twice the real 4-component inner product, and for unit rotors
// 2 - 2|<a,b>| = min(|a - b|^2, |a + b|^2).  The chordal form is the one
// evaluated here: unlike the trace form it keeps full precision near zero,
// where errors against nearby targets must resolve below 1e-12.
inline double rotor_error(const Rotor& a, const Rotor& b) {
    double dm = (a.s - b.s) * (a.s - b.s) + (a.b1 - b.b1) * (a.b1 - b.b1) +
                (a.b2 - b.b2) * (a.b2 - b.b2) + (a.b3 - b.b3) * (a.b3 - b.b3);
    double dp = (a.s + b.s) * (a.s + b.s) + (a.b1 + b.b1) * (a.b1 + b.b1) +
                (a.b2 + b.b2) * (a.b2 + b.b2) + (a.b3 + b.b3) * (a.b3 + b.b3);
    return std::sqrt(std::min(dm, dp));
}

struct SynthesisResult {
    std::string word;   // over {H, T}, empty means the identity
    Rotor rotor;        // rotor of the returned word
    double error = 0.0; // phase-insensitive distance to the target
};

namespace detail {

struct RotorKey {
    std::int64_t a, b, c, d;
    bool operator<(const RotorKey& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        if (c != o.c) return c < o.c;
        return d < o.d;
    }
};

// Dedup key: round components to 1e-9 after fixing the overall sign.  The
// rounding grain sits below every verification tolerance in use, so distinct
// rotors that the tests could tell apart are never merged.
inline RotorKey rotor_key(const Rotor& r) {
    Rotor c = sign_normalized(r);
    auto q = [](double x) { return std::llround(x * 1e9); };
    return {q(c.s), q(c.b1), q(c.b2), q(c.b3)};
}

}  // namespace detail

// Exhaustive breadth-first enumeration of {H, T} words up to max_len,
// deduplicated modulo sign, visiting words in (length, lexicographic) order
// with H < T.  best_by_length[l] records the best error over words of length
// <= l; the returned word is the first visit attaining the final best error,
// which makes the result deterministic and independent of evaluation order.
inline SynthesisResult synthesize_word(const Rotor& target, int max_len,
                                       std::vector<double>* best_by_length = nullptr) {
    if (max_len < 1) throw std::invalid_argument("synthesize_word: max_len must be >= 1");

    const Rotor hr = su2_to_rotor(normalize_phase(gate_matrix("H")));
    const Rotor tr = su2_to_rotor(normalize_phase(gate_matrix("T")));
    const std::pair<char, const Rotor*> gens[2] = {{'H', &hr}, {'T', &tr}};

    struct Node {
        Rotor rotor;
        std::string word;
    };

    std::set<detail::RotorKey> seen;
    std::vector<Node> frontier{{Rotor{}, ""}};
    seen.insert(detail::rotor_key(Rotor{}));

    SynthesisResult best{"", Rotor{}, rotor_error(Rotor{}, target)};
    if (best_by_length) {
        best_by_length->clear();
        best_by_length->push_back(best.error);
    }

    for (int len = 1; len <= max_len; ++len) {
        std::vector<Node> next;
        next.reserve(2 * frontier.size());
        for (const auto& node : frontier) {
            for (const auto& [sym, gen] : gens) {
                Rotor r = node.rotor * *gen;
                auto key = detail::rotor_key(r);
                if (!seen.insert(key).second) continue;
                std::string w = node.word + sym;
                double err = rotor_error(r, target);
                if (err < best.error) best = {w, r, err};
                next.push_back({r, std::move(w)});
            }
        }
        frontier = std::move(next);
        if (best_by_length) best_by_length->push_back(best.error);
    }
    return best;
}

}  // namespace mqga
