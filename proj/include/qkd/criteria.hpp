#pragma once

#include <vector>

#include "qkd/bell.hpp"
#include "qkd/matrix.hpp"

namespace qkd {

enum class Classification {
    DistillableNppt,          // reduction criterion violated (hence NPPT)
    Ppt,                      // positive partial transpose
    NpptReductionSatisfied,   // NPPT but no lambda exceeds 1/d
};

struct Verdict {
    double maxLambda;
    double fidelity;  // lambda_00
    bool reductionViolated;
    double pptMinEigenvalue;
    Classification classification;
};

/// Eigenvalues (ascending) of the partial transpose of rho over subsystem B.
/// Throws std::invalid_argument on non-Hermitian input.
std::vector<double> partialTransposeSpectrum(const ComplexMatrix& rho, int d);

/// Distillability verdict for a Bell-diagonal state with the given spectrum.
/// Boundary convention: |pptMinEigenvalue| < 1e-10 counts as PPT.
Verdict evaluate(const BellSpectrum& spectrum);

/// D_th = (d-1)/(2d). Throws unless d is a prime power >= 2.
double thresholdDisturbance(int d);

/// Cloning-machine comparison bound 1 - 1/sqrt(d).
double cloningBound(int d);

/// One member of the separable family sigma_AB(D), valid on
/// D in [(d-1)/2d, (2d-1)/2d].
struct SeparableFamilyPoint {
    double D;
    double x, y;  // the two mixing weights of the family
    ComplexMatrix state;
    BellSpectrum spectrum;
};

/// Constructs sigma_AB(D) = y 1 + d(x-y) sum_k |kk><kk|/d
///                        + d(x-y) sum_i sigma~_A^(i) (x) sigma~_B^(i).
/// With signedConvention the printed |x-y| is replaced by the signed (x-y),
/// which keeps the trace at 1 over the whole validity interval; the
/// absolute-value variant is kept selectable for comparison.
SeparableFamilyPoint separableFamily(const FieldSpec& spec, double D,
                                     bool signedConvention = true);

}  // namespace qkd
