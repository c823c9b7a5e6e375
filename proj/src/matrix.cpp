#include "qkd/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qkd {

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = std::conj((*this)(i, j));
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobeniusNorm() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::maxAbs() const {
    double m = 0.0;
    for (const Complex& z : data_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::isHermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

bool ComplexMatrix::isUnitary(double tol) const {
    if (rows_ != cols_) return false;
    ComplexMatrix p = (*this) * dagger();
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            Complex expect = (i == j) ? 1.0 : 0.0;
            if (std::abs(p(i, j) - expect) > tol) return false;
        }
    return true;
}

bool ComplexMatrix::isPSD(double tol) const {
    if (!isHermitian(tol)) return false;
    std::vector<double> ev = hermitianEigenvalues();
    return ev.empty() || ev.front() >= -tol;
}

std::vector<double> ComplexMatrix::hermitianEigenvalues() const {
    if (rows_ != cols_)
        throw std::invalid_argument("hermitianEigenvalues: matrix must be square");
    const int n = rows_;
    ComplexMatrix a = *this;
    // Symmetrize rounding noise before iterating.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Complex mean = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = mean;
            a(j, i) = std::conj(mean);
        }

    const double scale = std::max(a.frobeniusNorm(), 1e-300);
    const double target = 1e-12 * scale;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * std::norm(a(i, j));
        if (std::sqrt(off) < target) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                Complex g = a(p, q);
                double absg = std::abs(g);
                if (absg < 1e-300) continue;
                Complex phase = g / absg;  // g = |g| e^{i phi}
                double alpha = a(p, p).real();
                double beta = a(q, q).real();
                double tau = (beta - alpha) / (2.0 * absg);
                double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                // Unitary J restricted to (p,q):
                // [[c, s],[-s e^{-i phi}, c e^{-i phi}]]; the e^{-i phi}
                // factor rotates a(p,q) onto the real axis so the real
                // Jacobi angle annihilates it.
                Complex jpq = s;
                Complex jqp = -s * std::conj(phase);
                Complex jqq = c * std::conj(phase);
                // A <- A * J
                for (int i = 0; i < n; ++i) {
                    Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip + jqp * aiq;
                    a(i, q) = jpq * aip + jqq * aiq;
                }
                // A <- J^dag * A
                for (int i = 0; i < n; ++i) {
                    Complex api = a(p, i), aqi = a(q, i);
                    a(p, i) = c * api + std::conj(jqp) * aqi;
                    a(q, i) = std::conj(jpq) * api + std::conj(jqq) * aqi;
                }
            }
        }
    }

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

ComplexMatrix ComplexMatrix::partialTransposeB(int dA, int dB) const {
    if (rows_ != dA * dB || cols_ != dA * dB)
        throw std::invalid_argument("partialTransposeB: dimension mismatch");
    ComplexMatrix out(rows_, cols_);
    for (int a = 0; a < dA; ++a)
        for (int b = 0; b < dB; ++b)
            for (int c = 0; c < dA; ++c)
                for (int e = 0; e < dB; ++e)
                    out(a * dB + b, c * dB + e) = (*this)(a * dB + e, c * dB + b);
    return out;
}

ComplexMatrix ComplexMatrix::partialTraceB(int dA, int dB) const {
    if (rows_ != dA * dB || cols_ != dA * dB)
        throw std::invalid_argument("partialTraceB: dimension mismatch");
    ComplexMatrix out(dA, dA);
    for (int a = 0; a < dA; ++a)
        for (int c = 0; c < dA; ++c)
            for (int b = 0; b < dB; ++b) out(a, c) += (*this)(a * dB + b, c * dB + b);
    return out;
}

ComplexMatrix ComplexMatrix::partialTraceA(int dA, int dB) const {
    if (rows_ != dA * dB || cols_ != dA * dB)
        throw std::invalid_argument("partialTraceA: dimension mismatch");
    ComplexMatrix out(dB, dB);
    for (int b = 0; b < dB; ++b)
        for (int e = 0; e < dB; ++e)
            for (int a = 0; a < dA; ++a) out(b, e) += (*this)(a * dB + b, a * dB + e);
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("ComplexMatrix: shape mismatch in +");
    ComplexMatrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("ComplexMatrix: shape mismatch in -");
    ComplexMatrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("ComplexMatrix: shape mismatch in *");
    ComplexMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    ComplexMatrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = s * a.data_[i];
    return c;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("ComplexMatrix: shape mismatch in +=");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

}  // namespace qkd
