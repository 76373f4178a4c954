#ifndef PTSCHEME_LINALG_HPP
#define PTSCHEME_LINALG_HPP

#include <vector>

#include "ptscheme/field.hpp"

namespace ptscheme {

/// Dense row-major matrix over one exact field.
using Matrix = std::vector<std::vector<Scalar>>;

/// Gaussian elimination to reduced row echelon form, in place. Returns the
/// pivot column of each nonzero row.
std::vector<int> row_reduce(Matrix& m);

int rank(Matrix m);

/// A basis of {x : m x = 0}. `columns` is needed when m has no rows.
std::vector<std::vector<Scalar>> nullspace(Matrix m, int columns, const Field& field);

}  // namespace ptscheme

#endif
