#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace tcat {

using ObjectId = int;
using MorphismId = int;
using OneCellId = int;
using TwoCellId = int;

inline constexpr int kNone = -1;

/// Sparse table indexed by an ordered pair of ids.
class PairTable {
 public:
  int find(int a, int b) const {
    auto it = map_.find(key(a, b));
    return it == map_.end() ? kNone : it->second;
  }
  bool contains(int a, int b) const { return map_.count(key(a, b)) != 0; }
  void set(int a, int b, int value) { map_[key(a, b)] = value; }
  void erase(int a, int b) { map_.erase(key(a, b)); }
  std::size_t size() const { return map_.size(); }

  /// Entries as (a, b, value), sorted by (a, b).
  std::vector<std::tuple<int, int, int>> entries() const {
    std::vector<std::tuple<int, int, int>> out;
    out.reserve(map_.size());
    for (auto const& [k, v] : map_) {
      out.emplace_back(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const PairTable& x, const PairTable& y) { return x.map_ == y.map_; }

 private:
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }
  std::unordered_map<std::uint64_t, int> map_;
};

}  // namespace tcat
