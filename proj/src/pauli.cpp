#include "qkd/pauli.hpp"

#include <cmath>
#include <numbers>

namespace qkd {

Complex rootOfUnity(int p, int t) {
    // Phases come from integer trace exponents; exponentiate once.
    double angle = 2.0 * std::numbers::pi * static_cast<double>(((t % p) + p) % p) /
                   static_cast<double>(p);
    return {std::cos(angle), std::sin(angle)};
}

ComplexMatrix pauli(const FieldSpec& spec, const FieldElement& m,
                    const FieldElement& n) {
    const int d = spec.d();
    ComplexMatrix e(d, d);
    for (int k = 0; k < d; ++k) {
        int row = spec.add(k, m.index());
        e(row, k) = rootOfUnity(spec.p(), spec.trace(spec.mul(k, n.index())));
    }
    return e;
}

ComplexMatrix pauli(const FieldSpec& spec, const PauliIndex& idx) {
    return pauli(spec, idx.m, idx.n);
}

Complex commutationPhase(const FieldSpec& spec, const FieldElement& m,
                         const FieldElement& n) {
    return rootOfUnity(spec.p(), spec.trace(spec.mul(m.index(), n.index())));
}

ComplexMatrix fourier(const FieldSpec& spec) {
    const int d = spec.d();
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexMatrix h(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            h(i, j) = norm * rootOfUnity(spec.p(), spec.trace(spec.mul(i, j)));
    return h;
}

double errorSwapResidual(const FieldSpec& spec, const FieldElement& m,
                         const FieldElement& n) {
    ComplexMatrix h = fourier(spec);
    ComplexMatrix lhs = h.dagger() * pauli(spec, m, n) * h;
    Complex phase =
        rootOfUnity(spec.p(), -spec.trace(spec.mul(m.index(), n.index())));
    ComplexMatrix rhs = phase * pauli(spec, n, m).conjugate();
    return (lhs - rhs).frobeniusNorm();
}

MubBases mubBases(const FieldSpec& spec) {
    return {ComplexMatrix::identity(spec.d()), fourier(spec)};
}

}  // namespace qkd
