#pragma once

#include <complex>
#include <vector>

namespace qkd {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Dimensions are fixed at construction.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(int rows, int cols);
    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& operator()(int i, int j) { return data_[i * cols_ + j]; }
    const Complex& operator()(int i, int j) const { return data_[i * cols_ + j]; }

    ComplexMatrix dagger() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    Complex trace() const;
    double frobeniusNorm() const;
    double maxAbs() const;

    bool isHermitian(double tol) const;
    bool isUnitary(double tol) const;
    bool isPSD(double tol) const;

    /// Eigenvalues of a Hermitian matrix, sorted ascending. Cyclic Jacobi
    /// rotations; iterates until the off-diagonal norm is below 1e-12 times
    /// the matrix norm (or 1e-300 for near-zero matrices).
    std::vector<double> hermitianEigenvalues() const;

    /// Partial transpose over the second tensor factor; *this must be
    /// (dA*dB) x (dA*dB) with composite row index a*dB+b.
    ComplexMatrix partialTransposeB(int dA, int dB) const;

    /// Partial traces for a bipartite operator on C^dA (x) C^dB.
    ComplexMatrix partialTraceB(int dA, int dB) const;
    ComplexMatrix partialTraceA(int dA, int dB) const;

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
    ComplexMatrix& operator+=(const ComplexMatrix& other);

private:
    int rows_, cols_;
    std::vector<Complex> data_;
};

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qkd
