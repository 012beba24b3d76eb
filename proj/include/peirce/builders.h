#pragma once

#include <string>
#include <vector>

#include "peirce/algebra.h"

namespace peirce {

// Symmetric n x n rational matrices (n = 2 or 3) with x o y = (xy + yx)/2.
// Basis: E_ii for i = 1..n, then E_ij + E_ji for i < j, so the coordinates
// of a matrix M are its entries M_ii and M_ij. Carries the trace form
// b(x, y) = tr(x o y). Idempotents: E_11, E_11 + E_22, and the unit.
// Throws AlgebraError for other n.
StructureAlgebra jordan_sym(unsigned n);

// Spin factor Q^(d+1) with unit e_0 and e_i e_j = delta_ij e_0 for
// 1 <= i, j <= d. Form b(x, y) = 2 (x_0 y_0 + sum x_i y_i), so the
// idempotent (e_0 + e_1)/2 has b(c, c) = 1. Idempotents: (e_0 + e_1)/2, e_0.
// Throws AlgebraError for d < 2.
StructureAlgebra spin_factor(unsigned d);

// Trace-free symmetric 3 x 3 matrices with
// x o y = (xy + yx)/2 - tr(xy)/3 I and b(x, y) = tr(xy)/6. Basis
// D1 = diag(1, -1, 0), D2 = diag(0, 1, -1), then E_12 + E_21,
// E_13 + E_31, E_23 + E_32. Idempotent: diag(-1, -1, 2) = -D1 - 2 D2.
StructureAlgebra hsiang_tracefree_sym3();

// Builders by name: jordan_sym2, jordan_sym3, spin2, spin3, ..., hsiang_sym3.
// Throws std::out_of_range for unknown names.
StructureAlgebra build_algebra(const std::string& name);
std::vector<std::string> builder_names();

}  // namespace peirce
