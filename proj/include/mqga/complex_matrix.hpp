#pragma once

// Dense complex matrices for the reference simulator: just enough linear
// algebra for desk-scale verification (registers up to 10 qubits, eigenvalue
// work only on dims <= 8).  Hermitian eigenvalues come from a cyclic Jacobi
// sweep, so there is no external linear-algebra dependency.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace mqga {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// arg in (-pi, pi]: std::arg can return -pi for negative reals with a signed
// zero imaginary part; fold that endpoint onto +pi.
inline double principal_arg(const cplx& z) {
    double a = std::arg(z);
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

class ComplexMatrix {
public:
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("ComplexMatrix: non-positive dimension");
    }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const cplx& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    ComplexMatrix adjoint() const {
        ComplexMatrix m(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) m.at(c, r) = std::conj(at(r, c));
        return m;
    }

    cplx trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
        cplx t = 0.0;
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
        a.require_shape(b);
        ComplexMatrix m = a;
        for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
        return m;
    }

    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
        a.require_shape(b);
        ComplexMatrix m = a;
        for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
        return m;
    }

    friend ComplexMatrix operator*(const cplx& k, ComplexMatrix m) {
        for (auto& v : m.a_) v *= k;
        return m;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product: dimension mismatch");
        ComplexMatrix m(a.rows_, b.cols_);
        for (int r = 0; r < a.rows_; ++r)
            for (int k = 0; k < a.cols_; ++k) {
                cplx arc = a.at(r, k);
                if (arc == 0.0) continue;
                for (int c = 0; c < b.cols_; ++c) m.at(r, c) += arc * b.at(k, c);
            }
        return m;
    }

    std::vector<cplx> operator*(const std::vector<cplx>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("matrix-vector product: dimension mismatch");
        std::vector<cplx> out(rows_);
        for (int r = 0; r < rows_; ++r) {
            cplx s = 0.0;
            for (int c = 0; c < cols_; ++c) s += at(r, c) * v[c];
            out[r] = s;
        }
        return out;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    bool is_unitary(double tol = 1e-12) const {
        if (rows_ != cols_) return false;
        return (adjoint() * (*this) - identity(rows_)).max_abs() <= tol;
    }

private:
    void require_shape(const ComplexMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix op: shape mismatch");
    }

    int rows_, cols_;
    std::vector<cplx> a_;
};

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ar = 0; ar < a.rows(); ++ar)
        for (int ac = 0; ac < a.cols(); ++ac) {
            cplx v = a.at(ar, ac);
            if (v == 0.0) continue;
            for (int br = 0; br < b.rows(); ++br)
                for (int bc = 0; bc < b.cols(); ++bc)
                    m.at(ar * b.rows() + br, ac * b.cols() + bc) = v * b.at(br, bc);
        }
    return m;
}

inline double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

// Eigenvalues of a Hermitian matrix, ascending, by cyclic Jacobi rotations.
// Each sweep visits every off-diagonal pair; a phase transform makes the 2x2
// block real symmetric, then a plain Jacobi rotation annihilates it.
inline std::vector<double> hermitian_eigenvalues(ComplexMatrix h) {
    const int n = h.rows();
    if (n != h.cols()) throw std::invalid_argument("hermitian_eigenvalues: not square");

    auto off_norm2 = [&] {
        double s = 0.0;
        for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c) s += std::norm(h.at(r, c));
        return s;
    };

    for (int sweep = 0; sweep < 100 && off_norm2() > 1e-30; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                cplx hpq = h.at(p, q);
                double apq = std::abs(hpq);
                if (apq < 1e-300) continue;
                double app = h.at(p, p).real();
                double aqq = h.at(q, q).real();
                // unitary U: U(p,p)=c, U(p,q)=-s*e^{i phi}, U(q,p)=s*e^{-i phi},
                // U(q,q)=c with phi = arg h_pq; then (U^dag H U)_pq vanishes for
                // tan(2 theta) = 2|h_pq| / (h_pp - h_qq).
                double phi = principal_arg(hpq);
                double theta = 0.5 * std::atan2(2.0 * apq, app - aqq);
                double c = std::cos(theta), s = std::sin(theta);
                cplx eip = std::polar(1.0, phi);
                for (int r = 0; r < n; ++r) {  // H <- H U
                    cplx hp = h.at(r, p), hq = h.at(r, q);
                    h.at(r, p) = c * hp + s * std::conj(eip) * hq;
                    h.at(r, q) = -s * eip * hp + c * hq;
                }
                for (int col = 0; col < n; ++col) {  // H <- U^dag H
                    cplx hp = h.at(p, col), hq = h.at(q, col);
                    h.at(p, col) = c * hp + s * eip * hq;
                    h.at(q, col) = -s * std::conj(eip) * hp + c * hq;
                }
            }
        }
    }

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = h.at(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

// Largest singular value, via the largest eigenvalue of m^dagger m.
inline double operator_norm(const ComplexMatrix& m) {
    auto ev = hermitian_eigenvalues(m.adjoint() * m);
    return std::sqrt(std::max(0.0, ev.back()));
}

// Worst-case state deviation between two equally sized unitaries.
inline double approximation_error(const ComplexMatrix& u, const ComplexMatrix& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols())
        throw std::invalid_argument("approximation_error: dimension mismatch");
    return operator_norm(u - v);
}

// Principal power of a 2x2 unitary: eigenphases taken in (-pi, pi] and scaled
// by p.  Normal matrices have orthonormal eigenvectors, so the spectral
// reconstruction uses the orthogonal complement for the second one.
inline ComplexMatrix matrix_power(const ComplexMatrix& m, double p) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("matrix_power: 2x2 only");
    if (!m.is_unitary(1e-10))
        throw std::invalid_argument("matrix_power: input not unitary");

    cplx tr = m.at(0, 0) + m.at(1, 1);
    cplx det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    cplx disc = std::sqrt(tr * tr - 4.0 * det);
    cplx l1 = 0.5 * (tr + disc);
    cplx l2 = 0.5 * (tr - disc);

    auto ppow = [p](const cplx& l) { return std::polar(1.0, p * principal_arg(l)); };

    if (std::abs(l1 - l2) < 1e-12) {
        // equal eigenvalues on a normal matrix: scalar multiple of the identity
        return ppow(l1) * ComplexMatrix::identity(2);
    }

    // eigenvector for l1: rows of (m - l1 I) are orthogonal to it; pick the
    // better conditioned of the two standard choices
    cplx v0a = m.at(0, 1), v1a = l1 - m.at(0, 0);
    cplx v0b = l1 - m.at(1, 1), v1b = m.at(1, 0);
    double na = std::norm(v0a) + std::norm(v1a);
    double nb = std::norm(v0b) + std::norm(v1b);
    cplx v0 = na >= nb ? v0a : v0b;
    cplx v1 = na >= nb ? v1a : v1b;
    double nn = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= nn;
    v1 /= nn;
    // orthogonal complement
    cplx w0 = -std::conj(v1), w1 = std::conj(v0);

    ComplexMatrix out(2, 2);
    cplx f1 = ppow(l1), f2 = ppow(l2);
    out.at(0, 0) = f1 * v0 * std::conj(v0) + f2 * w0 * std::conj(w0);
    out.at(0, 1) = f1 * v0 * std::conj(v1) + f2 * w0 * std::conj(w1);
    out.at(1, 0) = f1 * v1 * std::conj(v0) + f2 * w1 * std::conj(w0);
    out.at(1, 1) = f1 * v1 * std::conj(v1) + f2 * w1 * std::conj(w1);
    return out;
}

// Divide a 2x2 unitary by the principal square root of its determinant,
// landing in SU(2) (up to the usual +-1 ambiguity downstream).
inline ComplexMatrix normalize_phase(const ComplexMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("normalize_phase: 2x2 only");
    cplx det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    double ad = std::abs(det);
    if (std::abs(ad - 1.0) > 1e-10)
        throw std::invalid_argument("normalize_phase: determinant not on the unit circle");
    cplx root = std::polar(1.0, 0.5 * principal_arg(det));
    return (1.0 / root) * m;
}

// min over global phases of approximation_error(e^{i phi} u, v).  For 2x2 the
// optimum sits midway between the eigenphases of w = u^dagger v, which gives
// sqrt(2 - |tr w'|) with w' the det-normalized w.  Evaluating 2 - |tr| head on
// loses half the significant digits when u and v agree up to phase (the
// difference bottoms out near sqrt(eps) ~ 1e-8), so expand w' in its four real
// components instead: with s the half-trace and b the remaining half-
// differences, s^2 + |b|^2 = 1 and 2 - 2|s| = (1 - |s|)^2 + |b|^2, a sum of
// terms each computed without cancellation.
inline double phase_insensitive_error(const ComplexMatrix& u, const ComplexMatrix& v) {
    if (u.rows() != 2 || u.cols() != 2 || v.rows() != 2 || v.cols() != 2)
        throw std::invalid_argument("phase_insensitive_error: closed form is 2x2 only");
    ComplexMatrix w = normalize_phase(u.adjoint() * v);
    double s = 0.5 * (w.at(0, 0) + w.at(1, 1)).real();
    double b1 = 0.5 * (w.at(0, 1) + w.at(1, 0)).imag();
    double b2 = 0.5 * (w.at(0, 1) - w.at(1, 0)).real();
    double b3 = 0.5 * (w.at(0, 0) - w.at(1, 1)).imag();
    double gap = 1.0 - std::abs(s);
    return std::sqrt(gap * gap + b1 * b1 + b2 * b2 + b3 * b3);
}

}  // namespace mqga
