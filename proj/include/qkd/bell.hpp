#pragma once

#include <utility>
#include <vector>

#include "qkd/galois.hpp"
#include "qkd/matrix.hpp"
#include "qkd/pauli.hpp"

namespace qkd {

/// |Psi_mn> = d^{-1/2} sum_k |k> (x) E_mn |k>, as a d^2 x 1 column.
ComplexMatrix bellVector(const FieldSpec& spec, const FieldElement& m,
                         const FieldElement& n);

/// All d^2 Bell states as the columns of a d^2 x d^2 unitary; column order
/// is m.index()*d + n.index().
ComplexMatrix bellBasis(const FieldSpec& spec);

/// The d x d array of Bell-basis eigenvalues of a Bell-diagonal state.
/// Entries below -1e-12 are rejected; small negatives are clamped to 0.
class BellSpectrum {
public:
    BellSpectrum(const FieldSpec& spec, std::vector<double> lambda);

    const FieldSpec& spec() const { return *spec_; }
    double at(int m, int n) const { return lambda_[m * spec_->d() + n]; }
    double& at(int m, int n) { return lambda_[m * spec_->d() + n]; }
    const std::vector<double>& values() const { return lambda_; }

    double sum() const;
    /// Throws std::invalid_argument unless |sum - 1| <= tol.
    void requireNormalized(double tol = 1e-12) const;

private:
    const FieldSpec* spec_;
    std::vector<double> lambda_;
};

/// rho = sum_mn lambda_mn |Psi_mn><Psi_mn|. Requires a normalized spectrum.
ComplexMatrix bellDiagonal(const BellSpectrum& spectrum);

/// Diagonal of the Bell-basis congruence transform of rho; imaginary parts
/// and off-diagonal content are discarded (they must be small for the result
/// to be meaningful -- see twirl()).
BellSpectrum bellSpectrumOf(const FieldSpec& spec, const ComplexMatrix& rho);

/// Average of rho over G1 = {E_mn (x) E_mn^*} and G2 = {(H (x) H^*)^b}.
/// The output is Bell-diagonal and carries the same disturbance as rho.
/// Throws std::invalid_argument if rho is not a density matrix.
ComplexMatrix twirl(const FieldSpec& spec, const ComplexMatrix& rho);

/// A partition of the d^2 index pairs (m,n) into classes of identical
/// twirled eigenvalues. Orbits are listed in first-appearance order under
/// lexicographic (m,n) iteration; each orbit is sorted.
struct SymmetryClasses {
    std::vector<std::vector<std::pair<int, int>>> classes;

    int countOfSize(size_t size) const;
};

/// Cyclic symmetry classes: orbits of (m,n) -> (n, (d-m) mod d) on the
/// canonical integer labels. Gives 1 singleton + (d^2-1)/4 quadruples for
/// odd d and 2 singletons + 1 pair + (d^2-4)/4 quadruples for even d.
SymmetryClasses symmetryClasses(const FieldSpec& spec);

/// Orbits of (m,n) -> (n, -m) with -m the additive inverse in GF(d): the
/// exact invariance classes enforced by the G2 twirl. Coincides with
/// symmetryClasses() for prime d; for d=9 the partition differs but the
/// orbit-size counts agree, and in characteristic 2 the negation is trivial
/// so the orbits degenerate to swaps.
SymmetryClasses twirlOrbits(const FieldSpec& spec);

/// max |lambda_{m,n} - lambda_{n,-m}| over all (m,n), field negation.
double orbitSymmetryResidual(const BellSpectrum& spectrum);

}  // namespace qkd
