#pragma once

// GA gate catalog.  Every gate is stored as a Pauli word sum over its own
// arity and applied word-by-word after padding the words with identity
// letters onto the full register; one uniform application path therefore
// covers the tabulated closed forms, the two-qubit displays, and arbitrary
// fractional powers alike.  Global phases are preserved here; rotor-level
// phase handling lives with the rotor code.

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mqga/complex_matrix.hpp"
#include "mqga/gate_matrices.hpp"
#include "mqga/multivector.hpp"
#include "mqga/pauli.hpp"

namespace mqga {

struct GateGA {
    std::string name;
    std::vector<int> targets;  // 1-based qubit indices, order matters
    PauliWordSum action;       // over targets.size() qubits
};

inline GateGA gate_from_matrix(std::string name, const ComplexMatrix& m,
                               std::vector<int> targets) {
    const int arity = static_cast<int>(targets.size());
    if (m.rows() != (1 << arity))
        throw std::invalid_argument("gate_from_matrix: matrix does not match target count");
    for (size_t a = 0; a < targets.size(); ++a)
        for (size_t b = a + 1; b < targets.size(); ++b)
            if (targets[a] == targets[b])
                throw std::invalid_argument("gate: duplicate qubit index");
    return {std::move(name), std::move(targets), translate_unitary(m)};
}

// 1-qubit catalog

inline GateGA not_x(int q) { return gate_from_matrix("X", gate_matrix("X"), {q}); }
inline GateGA phase_flip_z(int q) { return gate_from_matrix("Z", gate_matrix("Z"), {q}); }
inline GateGA bit_phase_y(int q) { return gate_from_matrix("Y", gate_matrix("Y"), {q}); }
inline GateGA hadamard(int q) { return gate_from_matrix("H", gate_matrix("H"), {q}); }
inline GateGA phase_s(int q) { return gate_from_matrix("S", gate_matrix("S"), {q}); }
inline GateGA t_gate(int q) { return gate_from_matrix("T", gate_matrix("T"), {q}); }

inline GateGA rotation(int q, double theta) {
    return gate_from_matrix("RTHETA", gate_matrix("RTHETA", {{"theta", theta}}), {q});
}

// diag(1, e^{i pi alpha}) through the principal branch
inline GateGA sigma3_power(int q, double alpha) {
    return gate_from_matrix("S3POW", gate_matrix("S3POW", {{"alpha", alpha}}), {q});
}

// conjugate of the s3 power by Hadamard
inline GateGA sigma1_power(int q, double alpha) {
    auto h = gate_matrix("H");
    return gate_from_matrix("S1POW", h * gate_matrix("S3POW", {{"alpha", alpha}}) * h, {q});
}

// 2-qubit catalog

inline GateGA cnot(int c, int t) {
    return gate_from_matrix("CNOT", gate_matrix("CNOT"), {c, t});
}

inline GateGA cphase(int c, int t) {
    return gate_from_matrix("CPHASE", gate_matrix("CPHASE"), {c, t});
}

inline GateGA swap_gate(int a, int b) {
    return gate_from_matrix("SWAP", gate_matrix("SWAP"), {a, b});
}

// Apply a gate to an n-qubit reduced spinor: each word over the gate's arity
// is padded with identity letters onto the full register, letter j landing on
// targets[j].
inline Multivector apply_gate(const GateGA& g, const Multivector& s) {
    const int n = s.particles();
    for (int q : g.targets)
        if (q < 1 || q > n)
            throw std::invalid_argument("apply_gate: qubit index out of range for " + g.name);

    PauliWordSum padded;
    padded.n = n;
    padded.terms.reserve(g.action.terms.size());
    for (const auto& t : g.action.terms) {
        PauliTerm full;
        full.re = t.re;
        full.im = t.im;
        full.word.letters.assign(n, PauliLetter::I);
        for (size_t j = 0; j < g.targets.size(); ++j)
            full.word.letters[g.targets[j] - 1] = t.word.letters[j];
        padded.terms.push_back(std::move(full));
    }
    return apply_word_sum(padded, s);
}

}  // namespace mqga
