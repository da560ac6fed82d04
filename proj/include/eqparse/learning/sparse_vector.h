#ifndef EQPARSE_LEARNING_SPARSE_VECTOR_H_
#define EQPARSE_LEARNING_SPARSE_VECTOR_H_

#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace eqparse {

// String-keyed sparse vector. Entries that become exactly zero are erased, so
// two vectors compare equal iff their non-zero entries match. Iteration is in
// key order, which keeps every sum deterministic.
class SparseVector {
 public:
  using Map = std::map<std::string, double, std::less<>>;

  void add(std::string_view key, double value = 1.0);
  void add(const SparseVector& other, double scale = 1.0);

  double get(std::string_view key) const;
  // Sums over the entries of `other` in its key order; call it as
  // weights.dot(features).
  double dot(const SparseVector& other) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool contains(std::string_view key) const {
    return entries_.find(key) != entries_.end();
  }
  Map::const_iterator begin() const { return entries_.begin(); }
  Map::const_iterator end() const { return entries_.end(); }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  Map entries_;
};

}  // namespace eqparse

#endif  // EQPARSE_LEARNING_SPARSE_VECTOR_H_
