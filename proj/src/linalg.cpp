#include "ptscheme/linalg.hpp"

#include <utility>

namespace ptscheme {

std::vector<int> row_reduce(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = row;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    const Scalar inv = m[row][col].inverse();
    for (auto& x : m[row]) x = x * inv;
    for (int other = 0; other < rows; ++other) {
      if (other == row || m[other][col].is_zero()) continue;
      const Scalar factor = m[other][col];
      for (int k = col; k < cols; ++k) m[other][k] = m[other][k] - factor * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(row_reduce(m).size()); }

std::vector<std::vector<Scalar>> nullspace(Matrix m, int columns, const Field& field) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(columns, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(columns, Scalar(field, 0));
    v[free] = Scalar(field, 1);
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -m[row][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ptscheme
