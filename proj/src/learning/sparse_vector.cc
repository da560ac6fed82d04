#include "eqparse/learning/sparse_vector.h"

namespace eqparse {

void SparseVector::add(std::string_view key, double value) {
  if (value == 0.0) return;
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(std::string(key), value);
    return;
  }
  it->second += value;
  if (it->second == 0.0) entries_.erase(it);
}

void SparseVector::add(const SparseVector& other, double scale) {
  for (const auto& [key, value] : other.entries_) add(key, value * scale);
}

double SparseVector::get(std::string_view key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? 0.0 : it->second;
}

double SparseVector::dot(const SparseVector& other) const {
  double total = 0.0;
  for (const auto& [key, value] : other.entries_) {
    auto it = entries_.find(key);
    if (it != entries_.end()) total += it->second * value;
  }
  return total;
}

}  // namespace eqparse
