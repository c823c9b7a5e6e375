#include "qkd/criteria.hpp"

#include <cmath>
#include <stdexcept>

namespace qkd {

std::vector<double> partialTransposeSpectrum(const ComplexMatrix& rho, int d) {
    if (!rho.isHermitian(1e-10))
        throw std::invalid_argument("partialTransposeSpectrum: input not Hermitian");
    return rho.partialTransposeB(d, d).hermitianEigenvalues();
}

Verdict evaluate(const BellSpectrum& spectrum) {
    spectrum.requireNormalized(1e-10);
    const int d = spectrum.spec().d();
    Verdict v{};
    v.fidelity = spectrum.at(0, 0);
    v.maxLambda = 0.0;
    for (double l : spectrum.values()) v.maxLambda = std::max(v.maxLambda, l);
    v.reductionViolated = v.maxLambda > 1.0 / d;
    v.pptMinEigenvalue =
        partialTransposeSpectrum(bellDiagonal(spectrum), d).front();
    if (v.reductionViolated) {
        v.classification = Classification::DistillableNppt;
    } else if (v.pptMinEigenvalue > -1e-10) {
        // Boundary points belong to the non-distillable side.
        v.classification = Classification::Ppt;
    } else {
        v.classification = Classification::NpptReductionSatisfied;
    }
    return v;
}

double thresholdDisturbance(int d) {
    if (!isPrimePower(d))
        throw std::invalid_argument("thresholdDisturbance: d must be a prime power");
    return (d - 1.0) / (2.0 * d);
}

double cloningBound(int d) {
    return 1.0 - 1.0 / std::sqrt(static_cast<double>(d));
}

SeparableFamilyPoint separableFamily(const FieldSpec& spec, double D,
                                     bool signedConvention) {
    const int d = spec.d();
    const double lo = (d - 1.0) / (2.0 * d);
    const double hi = (2.0 * d - 1.0) / (2.0 * d);
    if (D < lo - 1e-12 || D > hi + 1e-12)
        throw std::invalid_argument("separableFamily: D outside validity interval");

    const double x = (1.0 + d * (d - 2.0) * (1.0 - D)) / (d * d * (d - 1.0));
    const double y = (1.0 + d * (-1.0 + 2.0 * D)) / (d * d * (d - 1.0));
    const double w = signedConvention ? (x - y) : std::abs(x - y);

    ComplexMatrix sigma(d * d, d * d);
    for (int i = 0; i < d * d; ++i) sigma(i, i) = y;
    for (int k = 0; k < d; ++k) sigma(k * d + k, k * d + k) += w;

    // sigma~^(i) = (1/d) sum_k |k><k+i|; the i and -i terms pair up to a
    // Hermitian total.
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l)
                sigma(k * d + l, spec.add(k, i) * d + spec.add(l, i)) += w / d;

    SeparableFamilyPoint point{D, x, y, sigma, bellSpectrumOf(spec, sigma)};
    return point;
}

}  // namespace qkd
