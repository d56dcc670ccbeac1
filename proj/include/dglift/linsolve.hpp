// Exact sparse linear systems over a field.
#ifndef DGLIFT_LINSOLVE_HPP
#define DGLIFT_LINSOLVE_HPP

#include <map>
#include <optional>
#include <vector>

#include "dglift/scalar.hpp"

namespace dglift {

using SparseVector = std::map<std::size_t, Scalar>;

/// Solves sum_j x_j * columns[j] == rhs exactly. Columns are pivoted in
/// index order and free unknowns are set to zero, so the returned solution
/// is a deterministic function of the input. Returns nullopt when the
/// system is inconsistent.
std::optional<std::vector<Scalar>> solve_columns(const Field& field,
                                                 const std::vector<SparseVector>& columns,
                                                 const SparseVector& rhs);

/// Assigns dense row indices to arbitrary ordered keys.
template <class Key>
class RowIndex {
 public:
  std::size_t operator()(const Key& k) {
    auto [it, inserted] = index_.try_emplace(k, index_.size());
    return it->second;
  }
  std::size_t size() const { return index_.size(); }

 private:
  std::map<Key, std::size_t> index_;
};

}  // namespace dglift

#endif  // DGLIFT_LINSOLVE_HPP
