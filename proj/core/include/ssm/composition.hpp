#ifndef SSM_COMPOSITION_HPP
#define SSM_COMPOSITION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ssm {

// Cluster sizes in order of appearance. Entries are strictly positive; the
// empty composition is the state of a sequence before its first observation.
// The order matters: putative predictive rules may treat label positions
// asymmetrically, and whether they may not is exactly what the consistency
// checks decide.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> sizes);
  Composition(std::initializer_list<int> sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  int size_of(std::size_t j) const { return sizes_[j - 1]; }  // 1-based
  std::size_t cluster_count() const { return sizes_.size(); }
  int total() const { return total_; }
  bool empty() const { return sizes_.empty(); }

  // The composition with one more observation in cluster j (1-based);
  // j == cluster_count()+1 opens a new trailing cluster of size 1.
  Composition increment(std::size_t j) const;

  // All (predecessor, j) pairs with predecessor.increment(j) == *this.
  // Cluster j < k with size 1 cannot host the last insertion: its singleton
  // must have appeared before cluster j+1 opened.
  std::vector<std::pair<Composition, std::size_t>> predecessors() const;

  // Entries permuted by sigma (0-based image vector): result[i] = sizes[sigma[i]].
  Composition permuted(const std::vector<std::size_t>& sigma) const;

  // Injective text key, sizes dash-separated in order ("2-1"); "" when empty.
  std::string key() const;
  static Composition from_key(const std::string& key);

  bool operator==(const Composition& other) const { return sizes_ == other.sizes_; }
  bool operator!=(const Composition& other) const { return !(*this == other); }

 private:
  std::vector<int> sizes_;
  int total_ = 0;
};

// Deterministic ordering: by total, then cluster count, then lexicographic.
bool composition_order(const Composition& a, const Composition& b);

// All compositions with the given total, first entry varying slowest.
std::vector<Composition> compositions_of(int total);

// All compositions with total in [1, bound], grouped by increasing total.
std::vector<Composition> compositions_up_to(int bound);

// Number of order-of-appearance label sequences (s_1,...,s_n) whose final
// cluster sizes equal `n`. Equivalently the number of set partitions of [n]
// sharing this appearance-ordered composition.
std::uint64_t appearance_sequence_count(const Composition& n);

}  // namespace ssm

#endif  // SSM_COMPOSITION_HPP
