#pragma once

// Reference gate matrices and their action on state vectors.  This side of the
// project knows nothing about geometric algebra; it exists so every GA result
// can be checked against an independent implementation.

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mqga/complex_matrix.hpp"
#include "mqga/state_vector.hpp"

namespace mqga {

namespace detail {

inline double need_param(const std::map<std::string, double>& params, const char* key,
                         const char* gate) {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument(std::string(gate) + ": missing parameter " + key);
    return it->second;
}

}  // namespace detail

// Catalog of reference matrices.  Names match the circuit grammar.  The
// Deutsch gate is 8x8 acting on three qubits with its active 2x2 block in the
// |110>,|111> corner; Barenco is 4x4 with the block on |10>,|11>.
inline ComplexMatrix gate_matrix(const std::string& name,
                                 const std::map<std::string, double>& params = {}) {
    const cplx i_c(0.0, 1.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    if (name == "X") {
        ComplexMatrix m(2, 2);
        m.at(0, 1) = 1.0;
        m.at(1, 0) = 1.0;
        return m;
    }
    if (name == "Y") {
        ComplexMatrix m(2, 2);
        m.at(0, 1) = -i_c;
        m.at(1, 0) = i_c;
        return m;
    }
    if (name == "Z") {
        ComplexMatrix m(2, 2);
        m.at(0, 0) = 1.0;
        m.at(1, 1) = -1.0;
        return m;
    }
    if (name == "H") {
        ComplexMatrix m(2, 2);
        m.at(0, 0) = inv_sqrt2;
        m.at(0, 1) = inv_sqrt2;
        m.at(1, 0) = inv_sqrt2;
        m.at(1, 1) = -inv_sqrt2;
        return m;
    }
    if (name == "S") {
        ComplexMatrix m(2, 2);
        m.at(0, 0) = 1.0;
        m.at(1, 1) = i_c;
        return m;
    }
    if (name == "T") {
        ComplexMatrix m(2, 2);
        m.at(0, 0) = 1.0;
        m.at(1, 1) = std::polar(1.0, kPi / 4.0);
        return m;
    }
    if (name == "RTHETA") {
        double theta = detail::need_param(params, "theta", "RTHETA");
        ComplexMatrix m(2, 2);
        m.at(0, 0) = 1.0;
        m.at(1, 1) = std::polar(1.0, theta);
        return m;
    }
    if (name == "S3POW") {
        double alpha = detail::need_param(params, "alpha", "S3POW");
        ComplexMatrix m(2, 2);
        m.at(0, 0) = 1.0;
        m.at(1, 1) = std::polar(1.0, kPi * alpha);
        return m;
    }
    if (name == "CNOT") {
        ComplexMatrix m(4, 4);
        m.at(0, 0) = 1.0;
        m.at(1, 1) = 1.0;
        m.at(2, 3) = 1.0;
        m.at(3, 2) = 1.0;
        return m;
    }
    if (name == "CPHASE") {
        ComplexMatrix m = ComplexMatrix::identity(4);
        m.at(3, 3) = -1.0;
        return m;
    }
    if (name == "SWAP") {
        ComplexMatrix m(4, 4);
        m.at(0, 0) = 1.0;
        m.at(1, 2) = 1.0;
        m.at(2, 1) = 1.0;
        m.at(3, 3) = 1.0;
        return m;
    }
    if (name == "DEUTSCH") {
        double gamma = detail::need_param(params, "gamma", "DEUTSCH");
        ComplexMatrix m = ComplexMatrix::identity(8);
        cplx d = i_c * std::cos(kPi * gamma / 2.0);
        double s = std::sin(kPi * gamma / 2.0);
        m.at(6, 6) = d;
        m.at(6, 7) = s;
        m.at(7, 6) = s;
        m.at(7, 7) = d;
        return m;
    }
    if (name == "BARENCO") {
        double phi = detail::need_param(params, "phi", "BARENCO");
        double alpha = detail::need_param(params, "alpha", "BARENCO");
        double theta = detail::need_param(params, "theta", "BARENCO");
        ComplexMatrix m = ComplexMatrix::identity(4);
        m.at(2, 2) = std::polar(1.0, alpha) * std::cos(theta);
        m.at(2, 3) = -i_c * std::polar(1.0, alpha - phi) * std::sin(theta);
        m.at(3, 2) = -i_c * std::polar(1.0, alpha + phi) * std::sin(theta);
        m.at(3, 3) = std::polar(1.0, alpha) * std::cos(theta);
        return m;
    }
    throw std::invalid_argument("gate_matrix: unknown gate " + name);
}

// Expand a k-qubit gate to the full 2^n register.  targets lists 1-based qubit
// indices; the first listed target supplies the most significant bit of the
// gate's local index, consistent with the register's MSB-first convention.
inline ComplexMatrix tensor_embed(const ComplexMatrix& g, const std::vector<int>& targets,
                                  int n) {
    const int k = static_cast<int>(targets.size());
    if (g.rows() != (1 << k) || g.cols() != (1 << k))
        throw std::invalid_argument("tensor_embed: gate dimension does not match target count");
    for (size_t a = 0; a < targets.size(); ++a) {
        if (targets[a] < 1 || targets[a] > n)
            throw std::invalid_argument("tensor_embed: qubit index out of range");
        for (size_t b = a + 1; b < targets.size(); ++b)
            if (targets[a] == targets[b])
                throw std::invalid_argument("tensor_embed: duplicate qubit index");
    }

    const size_t dim = size_t{1} << n;
    auto local = [&](size_t idx) {
        size_t loc = 0;
        for (int a = 0; a < k; ++a) {
            size_t bit = (idx >> (n - targets[a])) & 1u;
            loc = (loc << 1) | bit;
        }
        return loc;
    };
    auto rest = [&](size_t idx) {
        size_t mask = 0;
        for (int a = 0; a < k; ++a) mask |= size_t{1} << (n - targets[a]);
        return idx & ~mask;
    };

    ComplexMatrix m(static_cast<int>(dim), static_cast<int>(dim));
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c) {
            if (rest(r) != rest(c)) continue;
            m.at(static_cast<int>(r), static_cast<int>(c)) =
                g.at(static_cast<int>(local(r)), static_cast<int>(local(c)));
        }
    return m;
}

inline ComplexStateVector apply(const ComplexMatrix& m, const ComplexStateVector& v) {
    if (m.cols() != static_cast<int>(v.dim()))
        throw std::invalid_argument("apply: dimension mismatch");
    return ComplexStateVector::from_amplitudes(v.qubits(), m * v.amps());
}

inline ComplexMatrix compose(const ComplexMatrix& second, const ComplexMatrix& first) {
    return second * first;
}

// Apply a k-qubit gate directly on the targeted qubits without forming the
// embedded 2^n matrix.
inline ComplexStateVector apply_on(const ComplexMatrix& g, const std::vector<int>& targets,
                                   const ComplexStateVector& v) {
    const int n = v.qubits();
    const int k = static_cast<int>(targets.size());
    if (g.rows() != (1 << k) || g.cols() != (1 << k))
        throw std::invalid_argument("apply_on: gate dimension does not match target count");

    std::vector<size_t> bitpos(k);
    size_t tmask = 0;
    for (int a = 0; a < k; ++a) {
        if (targets[a] < 1 || targets[a] > n)
            throw std::invalid_argument("apply_on: qubit index out of range");
        bitpos[a] = size_t{1} << (n - targets[a]);
        if (tmask & bitpos[a]) throw std::invalid_argument("apply_on: duplicate qubit index");
        tmask |= bitpos[a];
    }

    ComplexStateVector out = v;
    const size_t dim = v.dim();
    const size_t sub = size_t{1} << k;
    std::vector<size_t> offset(sub);
    for (size_t loc = 0; loc < sub; ++loc) {
        size_t off = 0;
        for (int a = 0; a < k; ++a)
            if (loc & (size_t{1} << (k - 1 - a))) off |= bitpos[a];
        offset[loc] = off;
    }

    std::vector<cplx> in(sub);
    for (size_t base = 0; base < dim; ++base) {
        if (base & tmask) continue;  // visit each non-target pattern once
        for (size_t loc = 0; loc < sub; ++loc) in[loc] = v.amp(base | offset[loc]);
        for (size_t r = 0; r < sub; ++r) {
            cplx s = 0.0;
            for (size_t c = 0; c < sub; ++c)
                s += g.at(static_cast<int>(r), static_cast<int>(c)) * in[c];
            out.amp(base | offset[r]) = s;
        }
    }
    return out;
}

}  // namespace mqga
