#pragma once

// Pauli words and their GA action.  A word with m non-identity letters at
// particles a1..am (letter indices k1..km) acts on a reduced spinor as
//
//     (-1)^m (i s_{k1}^{a1} ... i s_{km}^{am}) s J_n^m ,
//
// which reduces for one qubit to  Sigma_k |psi>  <->  s_k psi s3  and for two
// qubits to the familiar displays (Sigma_k (x) I <-> -i s_k^1 psi J etc.).
// The i_C-scaled action right-multiplies by one more J_n.  A PauliWordSum
// carries complex weights; its real parts route through the plain action and
// its imaginary parts through the i_C action, which is how an arbitrary
// unitary crosses from matrix land into GA land.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mqga/complex_matrix.hpp"
#include "mqga/multivector.hpp"
#include "mqga/spinor.hpp"

namespace mqga {

enum class PauliLetter : unsigned char { I = 0, X = 1, Y = 2, Z = 3 };

struct PauliWord {
    std::vector<PauliLetter> letters;  // one per qubit

    int size() const { return static_cast<int>(letters.size()); }

    int weight() const {
        int m = 0;
        for (auto l : letters)
            if (l != PauliLetter::I) ++m;
        return m;
    }

    std::string str() const {
        static const char sym[] = "IXYZ";
        std::string s;
        for (auto l : letters) s += sym[static_cast<int>(l)];
        return s;
    }
};

struct PauliTerm {
    PauliWord word;
    double re = 0.0;
    double im = 0.0;
};

struct PauliWordSum {
    int n = 0;
    std::vector<PauliTerm> terms;
};

namespace detail {

// Left multiplier prod_j i s_{kj}^{aj} over the word's non-identity letters.
inline Multivector word_left_factor(const PauliWord& w, int n) {
    Multivector left = Multivector::scalar(n, 1.0);
    for (int q = 1; q <= n; ++q) {
        auto l = w.letters[q - 1];
        if (l == PauliLetter::I) continue;
        left = left * i_sigma(n, q, static_cast<int>(l));
    }
    return left;
}

}  // namespace detail

inline Multivector apply_pauli_word(const PauliWord& w, const Multivector& s) {
    const int n = s.particles();
    if (w.size() != n) throw std::invalid_argument("apply_pauli_word: word length mismatch");
    const int m = w.weight();
    if (m == 0) return s;

    Multivector out = detail::word_left_factor(w, n) * s;
    const Multivector j = complex_structure(n);
    for (int rep = 0; rep < m; ++rep) out = out * j;
    if (m % 2 != 0) out = -out;
    return out;
}

// Action of i_C times the word: one extra right factor of J_n.
inline Multivector apply_i_times(const PauliWord& w, const Multivector& s) {
    return apply_pauli_word(w, s) * complex_structure(s.particles());
}

inline Multivector apply_word_sum(const PauliWordSum& g, const Multivector& s) {
    if (g.n != s.particles())
        throw std::invalid_argument("apply_word_sum: qubit count mismatch");
    Multivector out(s.particles());
    for (const auto& t : g.terms) {
        if (t.re != 0.0) out += t.re * apply_pauli_word(t.word, s);
        if (t.im != 0.0) out += t.im * apply_i_times(t.word, s);
    }
    return out;
}

// Matrix of a word: Kronecker product with qubit 1 as the leftmost factor.
inline ComplexMatrix pauli_letter_matrix(PauliLetter l) {
    ComplexMatrix m(2, 2);
    switch (l) {
        case PauliLetter::I: m.at(0, 0) = 1.0; m.at(1, 1) = 1.0; break;
        case PauliLetter::X: m.at(0, 1) = 1.0; m.at(1, 0) = 1.0; break;
        case PauliLetter::Y: m.at(0, 1) = cplx(0.0, -1.0); m.at(1, 0) = cplx(0.0, 1.0); break;
        case PauliLetter::Z: m.at(0, 0) = 1.0; m.at(1, 1) = -1.0; break;
    }
    return m;
}

inline ComplexMatrix pauli_word_matrix(const PauliWord& w) {
    ComplexMatrix m = pauli_letter_matrix(w.letters[0]);
    for (int q = 1; q < w.size(); ++q) m = kron(m, pauli_letter_matrix(w.letters[q]));
    return m;
}

// Expand a 2^n x 2^n matrix over the Pauli word basis through the trace
// pairing c_w = tr(w^dagger m) / 2^n.  Words are enumerated with qubit 1 as
// the most significant base-4 digit, I < X < Y < Z, and near-zero
// coefficients are dropped.
inline PauliWordSum translate_unitary(const ComplexMatrix& m) {
    int dim = m.rows();
    if (dim != m.cols() || dim < 2 || (dim & (dim - 1)) != 0)
        throw std::invalid_argument("translate_unitary: dimension must be a power of two");
    int n = 0;
    while ((1 << n) < dim) ++n;

    PauliWordSum sum;
    sum.n = n;
    const size_t words = size_t{1} << (2 * n);
    for (size_t code = 0; code < words; ++code) {
        PauliWord w;
        w.letters.resize(n);
        size_t c = code;
        for (int q = n - 1; q >= 0; --q) {
            w.letters[q] = static_cast<PauliLetter>(c & 3u);
            c >>= 2;
        }
        ComplexMatrix wm = pauli_word_matrix(w);
        cplx tr = 0.0;  // tr(w^dagger m) without forming the product
        for (int r = 0; r < dim; ++r)
            for (int k = 0; k < dim; ++k) tr += std::conj(wm.at(k, r)) * m.at(k, r);
        cplx coeff = tr / static_cast<double>(dim);
        if (std::abs(coeff) < 1e-13) continue;
        sum.terms.push_back({std::move(w), coeff.real(), coeff.imag()});
    }
    return sum;
}

}  // namespace mqga
