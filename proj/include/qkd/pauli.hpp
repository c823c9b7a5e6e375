#pragma once

#include "qkd/galois.hpp"
#include "qkd/matrix.hpp"

namespace qkd {

/// Shift index m, phase index n of a generalized Pauli operator.
struct PauliIndex {
    FieldElement m;
    FieldElement n;
};

/// exp(i 2 pi t / p), for an integer trace exponent t.
Complex rootOfUnity(int p, int t);

/// Generalized Pauli operator E_mn = sum_k w^{tr(k n)} |k+m><k|,
/// w = exp(i 2 pi / p). E_00 is the identity; every E_mn is unitary.
ComplexMatrix pauli(const FieldSpec& spec, const FieldElement& m,
                    const FieldElement& n);
ComplexMatrix pauli(const FieldSpec& spec, const PauliIndex& idx);

/// w^{tr(m n)}: the phase in Z^n X^m = w^{tr(m n)} X^m Z^n.
Complex commutationPhase(const FieldSpec& spec, const FieldElement& m,
                         const FieldElement& n);

/// Discrete Fourier transform H = d^{-1/2} sum_{i,j} w^{tr(i j)} |i><j|.
/// Symmetric and unitary: H^dag = H^* = H^{-1}.
ComplexMatrix fourier(const FieldSpec& spec);

/// Frobenius norm of H^dag E_mn H - w^{-tr(m n)} E_nm^*.
double errorSwapResidual(const FieldSpec& spec, const FieldElement& m,
                         const FieldElement& n);

/// The two protocol bases as column sets: B1 = computational basis (the
/// identity), B2 = the columns of H. Mutually unbiased, |<k|l~>|^2 = 1/d.
struct MubBases {
    ComplexMatrix b1;
    ComplexMatrix b2;
};
MubBases mubBases(const FieldSpec& spec);

}  // namespace qkd
