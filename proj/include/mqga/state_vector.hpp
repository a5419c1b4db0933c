#pragma once

// n-qubit complex state vectors.  Basis index convention throughout: the
// bitstring b1 b2 ... bn with qubit 1 as the MOST significant bit, matching
// the |q1 q2 ... qn> ket labels.  Import/export format is one "re im" pair
// per line in that order.

#include <cmath>
#include <complex>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mqga/complex_matrix.hpp"
#include "mqga/format.hpp"

namespace mqga {

class ComplexStateVector {
public:
    explicit ComplexStateVector(int n) : n_(checked(n)), amps_(size_t{1} << n) {
        amps_[0] = 1.0;  // |00...0>
    }

    static ComplexStateVector basis(int n, const std::string& bits) {
        if (static_cast<int>(bits.size()) != n)
            throw std::invalid_argument("basis: bitstring length must equal qubit count");
        size_t idx = 0;
        for (char ch : bits) {
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("basis: bitstring must be over {0,1}");
            idx = (idx << 1) | static_cast<size_t>(ch - '0');
        }
        ComplexStateVector v(n);
        v.amps_[0] = 0.0;
        v.amps_[idx] = 1.0;
        return v;
    }

    static ComplexStateVector from_amplitudes(int n, std::vector<cplx> amps) {
        if (amps.size() != (size_t{1} << n))
            throw std::invalid_argument("from_amplitudes: need 2^n amplitudes");
        ComplexStateVector v(n);
        v.amps_ = std::move(amps);
        return v;
    }

    int qubits() const { return n_; }
    size_t dim() const { return amps_.size(); }

    cplx& amp(size_t idx) { return amps_[idx]; }
    const cplx& amp(size_t idx) const { return amps_[idx]; }
    const std::vector<cplx>& amps() const { return amps_; }

    double norm() const {
        double s = 0.0;
        for (const auto& a : amps_) s += std::norm(a);
        return std::sqrt(s);
    }

    ComplexStateVector& normalize() {
        double nn = norm();
        if (nn == 0.0) throw std::invalid_argument("normalize: zero state");
        for (auto& a : amps_) a /= nn;
        return *this;
    }

    cplx inner(const ComplexStateVector& o) const {
        require_same(o);
        cplx s = 0.0;
        for (size_t i = 0; i < amps_.size(); ++i) s += std::conj(amps_[i]) * o.amps_[i];
        return s;
    }

    // Bitstring label of a basis index, MSB first.
    std::string bits_of(size_t idx) const {
        std::string s(n_, '0');
        for (int q = 0; q < n_; ++q)
            if (idx & (size_t{1} << (n_ - 1 - q))) s[q] = '1';
        return s;
    }

    static ComplexStateVector load(std::istream& in, int n) {
        std::vector<cplx> amps;
        amps.reserve(size_t{1} << n);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            double re, im;
            if (!(ls >> re >> im))
                throw std::invalid_argument("amplitude file: line " + std::to_string(lineno) +
                                            ": expected \"re im\"");
            std::string extra;
            if (ls >> extra)
                throw std::invalid_argument("amplitude file: line " + std::to_string(lineno) +
                                            ": trailing content");
            amps.emplace_back(re, im);
        }
        if (amps.size() != (size_t{1} << n))
            throw std::invalid_argument("amplitude file: expected " +
                                        std::to_string(size_t{1} << n) + " lines, got " +
                                        std::to_string(amps.size()));
        return from_amplitudes(n, std::move(amps));
    }

    static ComplexStateVector load_file(const std::string& path, int n) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open amplitude file: " + path);
        return load(in, n);
    }

    void save(std::ostream& out, int precision = 17) const {
        for (const auto& a : amps_)
            out << format_real(a.real(), precision) << " " << format_real(a.imag(), precision)
                << "\n";
    }

private:
    static int checked(int n) {
        if (n < 1 || n > 10)
            throw std::invalid_argument("ComplexStateVector: qubit count must be 1..10");
        return n;
    }

    void require_same(const ComplexStateVector& o) const {
        if (n_ != o.n_) throw std::invalid_argument("state vector: qubit count mismatch");
    }

    int n_;
    std::vector<cplx> amps_;
};

inline double max_amplitude_deviation(const ComplexStateVector& a, const ComplexStateVector& b) {
    if (a.qubits() != b.qubits())
        throw std::invalid_argument("max_amplitude_deviation: qubit count mismatch");
    double m = 0.0;
    for (size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a.amp(i) - b.amp(i)));
    return m;
}

}  // namespace mqga
