#pragma once

// Real geometric algebra of n commuting copies of Cl(3), one copy per qubit.
//
// Single-particle blades are encoded as 3-bit masks over the orthonormal frame
// {s1, s2, s3} (bit k set <=> sigma_{k+1} is a factor, factors kept in ascending
// index order).  mask 0 is the scalar, mask 7 the pseudoscalar i = s1 s2 s3.
// All product signs follow from sigma_k^2 = +1 and anticommutation of distinct
// sigma_k; basis products therefore carry an exact integer sign and only state
// amplitudes accumulate rounding.
//
// An n-particle basis blade packs one mask per particle into a 64-bit key,
// particle 1 in the lowest three bits.  Different particle spaces commute, so
// the geometric product factorizes per particle with no cross-particle sign.

#include <bit>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mqga/format.hpp"

namespace mqga {

using BladeIndex = unsigned;  // 0..7

// Coefficients with magnitude below this are dropped after arithmetic; keeps
// multivectors sparse after repeated projector multiplications.
inline constexpr double kPruneEps = 1e-14;

constexpr int blade_grade(BladeIndex mask) { return std::popcount(mask); }

// Sign of the reordering that brings the concatenated factor lists of a and b
// into canonical ascending order (with squared factors eliminated).  Counts
// the pairs (i in a, j in b) with i > j; each such pair is one transposition.
constexpr int blade_sign(BladeIndex a, BladeIndex b) {
    int swaps = 0;
    for (BladeIndex x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
    return (swaps % 2 == 0) ? +1 : -1;
}

struct BladeProduct {
    BladeIndex mask;
    int sign;
};

constexpr BladeProduct blade_product(BladeIndex a, BladeIndex b) {
    return {a ^ b, blade_sign(a, b)};
}

// One basis blade of [Cl(3)]^n.  Comparable and usable as a map key.
class MultiBlade {
public:
    static constexpr int kMaxParticles = 21;  // 3 bits per particle in 64 bits

    MultiBlade() = default;

    MultiBlade(std::initializer_list<BladeIndex> masks) {
        int p = 1;
        for (BladeIndex m : masks) set(p++, m);
    }

    static MultiBlade from_raw(std::uint64_t bits) {
        MultiBlade b;
        b.bits_ = bits;
        return b;
    }

    BladeIndex at(int particle) const { return (bits_ >> shift(particle)) & 7u; }

    void set(int particle, BladeIndex mask) {
        if (particle < 1 || particle > kMaxParticles)
            throw std::invalid_argument("MultiBlade: particle index out of range");
        if (mask > 7u)
            throw std::invalid_argument("MultiBlade: blade mask out of range");
        bits_ = (bits_ & ~(std::uint64_t{7} << shift(particle))) |
                (std::uint64_t{mask} << shift(particle));
    }

    std::uint64_t raw() const { return bits_; }

    // Per-particle masks never overlap, so the popcount of the packed key is
    // the total grade (sum of per-particle grades).
    int grade() const { return std::popcount(bits_); }

    friend auto operator<=>(const MultiBlade&, const MultiBlade&) = default;

private:
    static int shift(int particle) { return 3 * (particle - 1); }

    std::uint64_t bits_ = 0;
};

struct MultiBladeProduct {
    MultiBlade blade;
    int sign;
};

inline MultiBladeProduct multiblade_product(const MultiBlade& a, const MultiBlade& b, int n) {
    int sign = 1;
    for (int p = 1; p <= n; ++p) sign *= blade_sign(a.at(p), b.at(p));
    return {MultiBlade::from_raw(a.raw() ^ b.raw()), sign};
}

// Sparse real multivector: finite map from basis blade to coefficient, absent
// key <=> coefficient zero.  Values are immutable from the caller's side; all
// operations below return fresh values.
class Multivector {
public:
    explicit Multivector(int n) : n_(checked(n)) {}

    static Multivector scalar(int n, double v) {
        Multivector mv(n);
        mv.add_term(MultiBlade{}, v);
        return mv;
    }

    static Multivector basis(int n, const MultiBlade& b, double c = 1.0) {
        Multivector mv(n);
        mv.add_term(b, c);
        return mv;
    }

    int particles() const { return n_; }

    double coeff(const MultiBlade& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? 0.0 : it->second;
    }

    const std::map<MultiBlade, double>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    void add_term(const MultiBlade& b, double c) {
        double& slot = terms_[b];
        slot += c;
        if (std::abs(slot) < kPruneEps) terms_.erase(b);
    }

    Multivector& operator+=(const Multivector& o) {
        require_same(o);
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }

    Multivector& operator-=(const Multivector& o) {
        require_same(o);
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }

    Multivector& operator*=(double k) {
        if (k == 0.0) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= k;
            it = std::abs(it->second) < kPruneEps ? terms_.erase(it) : std::next(it);
        }
        return *this;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, double k) { return a *= k; }
    friend Multivector operator*(double k, Multivector a) { return a *= k; }
    friend Multivector operator-(Multivector a) { return a *= -1.0; }

    friend Multivector operator*(const Multivector& x, const Multivector& y) {
        x.require_same(y);
        Multivector out(x.n_);
        for (const auto& [bx, cx] : x.terms_) {
            for (const auto& [by, cy] : y.terms_) {
                auto [blade, sign] = multiblade_product(bx, by, x.n_);
                out.add_term(blade, sign * cx * cy);
            }
        }
        return out;
    }

private:
    static int checked(int n) {
        if (n < 1 || n > MultiBlade::kMaxParticles)
            throw std::invalid_argument("Multivector: particle count out of range");
        return n;
    }

    void require_same(const Multivector& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("Multivector: particle count mismatch");
    }

    int n_;
    std::map<MultiBlade, double> terms_;
};

inline Multivector geometric_product(const Multivector& x, const Multivector& y) {
    return x * y;
}

// Reversion multiplies each blade by prod over particles of (-1)^{g(g-1)/2}.
inline Multivector reversion(const Multivector& x) {
    Multivector out(x.particles());
    for (const auto& [b, c] : x.terms()) {
        int sign = 1;
        for (int p = 1; p <= x.particles(); ++p) {
            int g = blade_grade(b.at(p));
            if ((g * (g - 1) / 2) % 2 != 0) sign = -sign;
        }
        out.add_term(b, sign * c);
    }
    return out;
}

// Keeps blades whose total grade is in the selector set.
inline Multivector grade_projection(const Multivector& x, const std::set<int>& grades) {
    Multivector out(x.particles());
    for (const auto& [b, c] : x.terms())
        if (grades.count(b.grade())) out.add_term(b, c);
    return out;
}

inline double scalar_part(const Multivector& x) { return x.coeff(MultiBlade{}); }

inline double max_abs_coeff(const Multivector& x) {
    double m = 0.0;
    for (const auto& [b, c] : x.terms()) m = std::max(m, std::abs(c));
    return m;
}

inline double max_coeff_diff(const Multivector& x, const Multivector& y) {
    return max_abs_coeff(x - y);
}

inline bool approx_equal(const Multivector& x, const Multivector& y, double tol) {
    return max_coeff_diff(x, y) <= tol;
}

// Single-particle generators embedded in the n-particle algebra.

inline Multivector sigma(int n, int particle, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("sigma: index must be 1..3");
    MultiBlade b;
    b.set(particle, BladeIndex{1} << (k - 1));
    return Multivector::basis(n, b);
}

// i*sigma_k is the grade-2 blade on the complementary pair:
//   i s1 = s2 s3 (mask 6, +), i s2 = s3 s1 = -s1 s3 (mask 5, -), i s3 = s1 s2 (mask 3, +).
inline Multivector i_sigma(int n, int particle, int k) {
    static constexpr BladeIndex mask[4] = {0, 6, 5, 3};
    static constexpr double sgn[4] = {0, +1.0, -1.0, +1.0};
    if (k < 1 || k > 3) throw std::invalid_argument("i_sigma: index must be 1..3");
    MultiBlade b;
    b.set(particle, mask[k]);
    return Multivector::basis(n, b, sgn[k]);
}

inline Multivector pseudoscalar(int n, int particle) {
    MultiBlade b;
    b.set(particle, 7u);
    return Multivector::basis(n, b);
}

// Rendering.  Grammar: terms in ascending key order joined by " + "/" - ";
// each term is a coefficient optionally followed by "*" separated blade tokens
// "name^particle".  Blade names use the {1, s_k, i s_k, i} basis, so the mask-5
// blade s1 s3 displays as is2 with the opposite sign.

namespace detail {
inline const char* const kBladeName[8] = {"", "s1", "s2", "is3", "s3", "is2", "is1", "i"};
inline constexpr double kBladeDisplaySign[8] = {1, 1, 1, 1, 1, -1, 1, 1};
}  // namespace detail

inline std::string render(const Multivector& mv, int precision = 12) {
    if (mv.is_zero()) return "0";
    std::string out;
    for (const auto& [b, c] : mv.terms()) {
        double shown = c;
        std::string blades;
        for (int p = 1; p <= mv.particles(); ++p) {
            BladeIndex m = b.at(p);
            if (m == 0) continue;
            shown *= detail::kBladeDisplaySign[m];
            blades += "*";
            blades += detail::kBladeName[m];
            blades += "^";
            blades += std::to_string(p);
        }
        if (out.empty()) {
            if (shown < 0) out += "-";
        } else {
            out += shown < 0 ? " - " : " + ";
        }
        out += format_real(std::abs(shown), precision);
        out += blades;
    }
    return out;
}

}  // namespace mqga
