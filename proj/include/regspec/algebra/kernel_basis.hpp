#pragma once

#include <vector>

#include "regspec/algebra/bigint.hpp"
#include "regspec/algebra/int_matrix.hpp"

namespace regspec {

using IntVector = std::vector<Integer>;

/// Basis of ker(M - lambda I) over Q, each vector scaled to coprime integers
/// with its first nonzero entry positive. One vector per free column of the
/// reduced row echelon form.
/// Throws Error(NotAnEigenvalue) when the kernel is trivial.
std::vector<IntVector> rational_kernel_basis(const IntMatrix& m, const Integer& lambda);

}  // namespace regspec
