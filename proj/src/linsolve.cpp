#include "dglift/linsolve.hpp"

namespace dglift {

std::optional<std::vector<Scalar>> solve_columns(const Field& field,
                                                 const std::vector<SparseVector>& columns,
                                                 const SparseVector& rhs) {
  // Row-major copy; the augmented column lives under key `n`.
  const std::size_t n = columns.size();
  std::map<std::size_t, SparseVector> rows;
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [r, v] : columns[j])
      if (!v.is_zero()) rows[r][j] = v;
  for (const auto& [r, v] : rhs)
    if (!v.is_zero()) rows[r][n] = v;

  std::vector<std::map<std::size_t, SparseVector>::iterator> pivot_row(n, rows.end());
  std::map<std::size_t, bool> is_pivot_row;

  for (std::size_t j = 0; j < n; ++j) {
    auto pivot = rows.end();
    for (auto it = rows.begin(); it != rows.end(); ++it) {
      if (is_pivot_row.count(it->first)) continue;
      if (it->second.count(j)) {
        pivot = it;
        break;
      }
    }
    if (pivot == rows.end()) continue;
    is_pivot_row[pivot->first] = true;
    pivot_row[j] = pivot;

    Scalar inv = pivot->second.at(j).inverse();
    for (auto& [c, v] : pivot->second) v *= inv;

    for (auto it = rows.begin(); it != rows.end(); ++it) {
      if (it == pivot) continue;
      auto hit = it->second.find(j);
      if (hit == it->second.end()) continue;
      Scalar factor = hit->second;
      for (const auto& [c, v] : pivot->second) {
        auto [slot, inserted] = it->second.try_emplace(c, Scalar::zero(field));
        slot->second -= factor * v;
        if (slot->second.is_zero()) it->second.erase(slot);
      }
    }
  }

  for (const auto& [r, row] : rows)
    if (!is_pivot_row.count(r) && row.count(n)) return std::nullopt;

  std::vector<Scalar> x(n, Scalar::zero(field));
  for (std::size_t j = 0; j < n; ++j) {
    if (pivot_row[j] == rows.end()) continue;
    auto hit = pivot_row[j]->second.find(n);
    if (hit != pivot_row[j]->second.end()) x[j] = hit->second;
  }
  return x;
}

}  // namespace dglift
