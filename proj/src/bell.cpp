#include "qkd/bell.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qkd {

ComplexMatrix bellVector(const FieldSpec& spec, const FieldElement& m,
                         const FieldElement& n) {
    const int d = spec.d();
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexMatrix v(d * d, 1);
    for (int k = 0; k < d; ++k) {
        // E_mn |k> = w^{tr(k n)} |k+m>
        int kb = spec.add(k, m.index());
        v(k * d + kb, 0) =
            norm * rootOfUnity(spec.p(), spec.trace(spec.mul(k, n.index())));
    }
    return v;
}

ComplexMatrix bellBasis(const FieldSpec& spec) {
    const int d = spec.d();
    ComplexMatrix basis(d * d, d * d);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
            ComplexMatrix v = bellVector(spec, {spec, m}, {spec, n});
            for (int i = 0; i < d * d; ++i) basis(i, m * d + n) = v(i, 0);
        }
    return basis;
}

BellSpectrum::BellSpectrum(const FieldSpec& spec, std::vector<double> lambda)
    : spec_(&spec), lambda_(std::move(lambda)) {
    if (static_cast<int>(lambda_.size()) != spec.d() * spec.d())
        throw std::invalid_argument("BellSpectrum: expected d*d entries");
    for (double& l : lambda_) {
        if (l < -1e-12)
            throw std::invalid_argument("BellSpectrum: negative eigenvalue");
        if (l < 0.0) l = 0.0;
    }
}

double BellSpectrum::sum() const {
    double s = 0.0;
    for (double l : lambda_) s += l;
    return s;
}

void BellSpectrum::requireNormalized(double tol) const {
    if (std::abs(sum() - 1.0) > tol)
        throw std::invalid_argument("BellSpectrum: not normalized");
}

ComplexMatrix bellDiagonal(const BellSpectrum& spectrum) {
    spectrum.requireNormalized(1e-10);
    const FieldSpec& spec = spectrum.spec();
    const int d = spec.d();
    ComplexMatrix rho(d * d, d * d);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
            double l = spectrum.at(m, n);
            if (l == 0.0) continue;
            ComplexMatrix v = bellVector(spec, {spec, m}, {spec, n});
            for (int i = 0; i < d * d; ++i)
                for (int j = 0; j < d * d; ++j)
                    rho(i, j) += l * v(i, 0) * std::conj(v(j, 0));
        }
    return rho;
}

BellSpectrum bellSpectrumOf(const FieldSpec& spec, const ComplexMatrix& rho) {
    const int d = spec.d();
    if (rho.rows() != d * d || rho.cols() != d * d)
        throw std::invalid_argument("bellSpectrumOf: dimension mismatch");
    std::vector<double> lambda(d * d, 0.0);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
            ComplexMatrix v = bellVector(spec, {spec, m}, {spec, n});
            Complex val = 0.0;
            for (int i = 0; i < d * d; ++i)
                for (int j = 0; j < d * d; ++j)
                    val += std::conj(v(i, 0)) * rho(i, j) * v(j, 0);
            lambda[m * d + n] = val.real();
        }
    return {spec, std::move(lambda)};
}

namespace {

void requireDensityMatrix(const ComplexMatrix& rho, int dim) {
    if (rho.rows() != dim || rho.cols() != dim)
        throw std::invalid_argument("expected a " + std::to_string(dim) + "-dim operator");
    if (!rho.isHermitian(1e-8))
        throw std::invalid_argument("density matrix must be Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-8)
        throw std::invalid_argument("density matrix must have unit trace");
    if (!rho.isPSD(1e-8))
        throw std::invalid_argument("density matrix must be positive semidefinite");
}

}  // namespace

ComplexMatrix twirl(const FieldSpec& spec, const ComplexMatrix& rho) {
    const int d = spec.d();
    requireDensityMatrix(rho, d * d);

    // G1 average: (1/d^2) sum_mn U(g) rho U(g)^dag, U(g) = E_mn (x) E_mn^*.
    ComplexMatrix g1(d * d, d * d);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
            ComplexMatrix e = pauli(spec, {spec, m}, {spec, n});
            ComplexMatrix u = kron(e, e.conjugate());
            g1 += u * rho * u.dagger();
        }
    g1 = Complex(1.0 / (d * d)) * g1;

    // G2 average over (H (x) H^*)^b, b = 0..3.
    ComplexMatrix h = fourier(spec);
    ComplexMatrix w = kron(h, h.conjugate());
    ComplexMatrix out(d * d, d * d);
    ComplexMatrix u = ComplexMatrix::identity(d * d);
    for (int b = 0; b < 4; ++b) {
        out += u * g1 * u.dagger();
        u = u * w;
    }
    return Complex(0.25) * out;
}

int SymmetryClasses::countOfSize(size_t size) const {
    int c = 0;
    for (const auto& cls : classes)
        if (cls.size() == size) ++c;
    return c;
}

namespace {

template <typename Step>
SymmetryClasses orbitsUnder(int d, Step step) {
    SymmetryClasses out;
    std::vector<bool> seen(d * d, false);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
            if (seen[m * d + n]) continue;
            std::vector<std::pair<int, int>> orbit;
            int cm = m, cn = n;
            do {
                seen[cm * d + cn] = true;
                orbit.emplace_back(cm, cn);
                std::tie(cm, cn) = step(cm, cn);
            } while (!(cm == m && cn == n));
            std::sort(orbit.begin(), orbit.end());
            out.classes.push_back(std::move(orbit));
        }
    return out;
}

}  // namespace

SymmetryClasses symmetryClasses(const FieldSpec& spec) {
    const int d = spec.d();
    return orbitsUnder(d, [d](int m, int n) {
        return std::pair<int, int>(n, (d - m) % d);
    });
}

SymmetryClasses twirlOrbits(const FieldSpec& spec) {
    return orbitsUnder(spec.d(), [&spec](int m, int n) {
        return std::pair<int, int>(n, spec.neg(m));
    });
}

double orbitSymmetryResidual(const BellSpectrum& spectrum) {
    const FieldSpec& spec = spectrum.spec();
    const int d = spec.d();
    double res = 0.0;
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n)
            res = std::max(res,
                           std::abs(spectrum.at(m, n) - spectrum.at(n, spec.neg(m))));
    return res;
}

}  // namespace qkd
