#include "qkd/random_state.hpp"

#include <cmath>

namespace qkd {

ComplexMatrix randomDensityMatrix(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = {gauss(rng), gauss(rng)};
    ComplexMatrix rho = g * g.dagger();
    double tr = rho.trace().real();
    return Complex(1.0 / tr) * rho;
}

ComplexMatrix randomProductState(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto randomKet = [&](int n) {
        ComplexMatrix v(n, 1);
        double norm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            v(i, 0) = {gauss(rng), gauss(rng)};
            norm2 += std::norm(v(i, 0));
        }
        Complex scale = 1.0 / std::sqrt(norm2);
        for (int i = 0; i < n; ++i) v(i, 0) = scale * v(i, 0);
        return v;
    };
    ComplexMatrix a = randomKet(d), b = randomKet(d);
    ComplexMatrix ket = kron(a, b);
    return ket * ket.dagger();
}

}  // namespace qkd
