#pragma once

#include "qkd/bell.hpp"
#include "qkd/matrix.hpp"

namespace qkd {

/// P = sum_l sum_{k != 0} |l, l+k><l, l+k|: the projector onto
/// computational-basis outcome mismatches.
ComplexMatrix errorProjector(const FieldSpec& spec);

/// The same projector assembled from Bell states,
/// P = sum_{m != 0, n} |Psi_mn><Psi_mn|. Agrees entrywise with
/// errorProjector(); kept as an independent construction route.
ComplexMatrix errorProjectorBell(const FieldSpec& spec);

struct DisturbanceReport {
    double D;               // (shiftErrorPart + phaseErrorPart) / 2
    double shiftErrorPart;  // sum_{m != 0, n} lambda_mn
    double phaseErrorPart;  // sum_{n != 0, m} lambda_mn
};

/// Two-basis averaged disturbance of a two-qudit density matrix,
/// D = (1/2) sum_{b=0,1} Tr{ [(H^b^dag (x) H^b) P (H^b (x) H^b^dag)] rho },
/// evaluated literally. Throws if rho is not a density matrix (1e-8).
DisturbanceReport disturbanceOfState(const FieldSpec& spec,
                                     const ComplexMatrix& rho);

/// Closed form on a Bell spectrum: the shift and phase error sums.
DisturbanceReport disturbanceOfSpectrum(const BellSpectrum& spectrum);

/// |D(rho) - D(twirl(rho))|; contractually <= 1e-10.
double twirlInvarianceResidual(const FieldSpec& spec, const ComplexMatrix& rho);

}  // namespace qkd
