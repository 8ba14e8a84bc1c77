#include "ssm/composition.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace ssm {

Composition::Composition(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  for (int s : sizes_) {
    if (s < 1) throw std::invalid_argument("composition entries must be >= 1");
  }
  total_ = std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

Composition::Composition(std::initializer_list<int> sizes)
    : Composition(std::vector<int>(sizes)) {}

Composition Composition::increment(std::size_t j) const {
  const std::size_t k = sizes_.size();
  if (j < 1 || j > k + 1) throw std::invalid_argument("increment index out of range");
  Composition out(*this);
  if (j == k + 1) {
    out.sizes_.push_back(1);
  } else {
    ++out.sizes_[j - 1];
  }
  ++out.total_;
  return out;
}

std::vector<std::pair<Composition, std::size_t>> Composition::predecessors() const {
  std::vector<std::pair<Composition, std::size_t>> out;
  const std::size_t k = sizes_.size();
  for (std::size_t j = 1; j <= k; ++j) {
    if (sizes_[j - 1] > 1) {
      Composition pred(*this);
      --pred.sizes_[j - 1];
      --pred.total_;
      out.emplace_back(std::move(pred), j);
    }
  }
  if (k >= 1 && sizes_[k - 1] == 1) {
    Composition pred(*this);
    pred.sizes_.pop_back();
    --pred.total_;
    out.emplace_back(std::move(pred), k);
  }
  return out;
}

Composition Composition::permuted(const std::vector<std::size_t>& sigma) const {
  if (sigma.size() != sizes_.size())
    throw std::invalid_argument("permutation length mismatch");
  std::vector<int> out(sizes_.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[i] = sizes_[sigma[i]];
  return Composition(std::move(out));
}

std::string Composition::key() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out.push_back('-');
    out += std::to_string(sizes_[i]);
  }
  return out;
}

Composition Composition::from_key(const std::string& key) {
  if (key.empty()) return Composition();
  std::vector<int> sizes;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    std::size_t dash = key.find('-', pos);
    if (dash == std::string::npos) dash = key.size();
    const std::string tok = key.substr(pos, dash - pos);
    if (tok.empty()) throw std::invalid_argument("malformed composition key: " + key);
    sizes.push_back(std::stoi(tok));
    pos = dash + 1;
    if (dash == key.size()) break;
  }
  return Composition(std::move(sizes));
}

bool composition_order(const Composition& a, const Composition& b) {
  if (a.total() != b.total()) return a.total() < b.total();
  if (a.cluster_count() != b.cluster_count())
    return a.cluster_count() < b.cluster_count();
  return a.sizes() < b.sizes();
}

namespace {

void compositions_of_rec(int remaining, std::vector<int>& prefix,
                         std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    compositions_of_rec(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions_of(int total) {
  if (total < 1) throw std::invalid_argument("composition total must be >= 1");
  std::vector<Composition> out;
  std::vector<int> prefix;
  compositions_of_rec(total, prefix, out);
  return out;
}

std::vector<Composition> compositions_up_to(int bound) {
  if (bound < 1) throw std::invalid_argument("enumeration bound must be >= 1");
  std::vector<Composition> out;
  for (int n = 1; n <= bound; ++n) {
    auto level = compositions_of(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

std::uint64_t sequence_count_rec(const Composition& n,
                                 std::map<std::string, std::uint64_t>& memo) {
  if (n.total() <= 1) return 1;
  const std::string key = n.key();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::uint64_t count = 0;
  for (const auto& [pred, j] : n.predecessors()) {
    (void)j;
    count += sequence_count_rec(pred, memo);
  }
  memo.emplace(key, count);
  return count;
}

}  // namespace

std::uint64_t appearance_sequence_count(const Composition& n) {
  std::map<std::string, std::uint64_t> memo;
  return sequence_count_rec(n, memo);
}

}  // namespace ssm
