#pragma once

#include <random>

#include "qkd/matrix.hpp"

namespace qkd {

/// Ginibre-sampled random density matrix of the given dimension:
/// G G^dag / tr(G G^dag) with i.i.d. standard complex Gaussian entries.
ComplexMatrix randomDensityMatrix(int dim, std::mt19937_64& rng);

/// Random pure product state |a><a| (x) |b><b| on C^d (x) C^d.
ComplexMatrix randomProductState(int d, std::mt19937_64& rng);

}  // namespace qkd
