#include "support/oracles.hpp"

#include <numeric>

namespace testing {

using namespace tcat;

namespace {

struct Step {
  ObjectId source;
  ObjectId target;
  MorphismId morphism;
  bool inverse;
};

class UnionFind {
 public:
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

ZigzagCounts zigzag_counts(const FiniteCategory& c, const std::vector<MorphismId>& w, int max_length,
                           int slack, std::size_t budget) {
  std::vector<Step> steps;
  std::vector<int> inverse_of(c.morphism_count(), -1);
  std::vector<int> step_of(c.morphism_count(), -1);
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    step_of[m] = static_cast<int>(steps.size());
    steps.push_back({c.source(m), c.target(m), m, false});
  }
  for (MorphismId m : w) {
    if (c.is_identity(m) || inverse_of[m] != -1) continue;
    inverse_of[m] = static_cast<int>(steps.size());
    steps.push_back({c.target(m), c.source(m), m, true});
  }
  // Words keyed by (source, steps); the empty word at x is the identity.
  std::map<std::pair<ObjectId, std::vector<int>>, int> index;
  std::vector<std::pair<ObjectId, std::vector<int>>> words;
  std::vector<ObjectId> target;
  ZigzagCounts out;
  auto add = [&](ObjectId x, std::vector<int> word, ObjectId y) {
    int id = static_cast<int>(words.size());
    index.emplace(std::make_pair(x, word), id);
    words.emplace_back(x, std::move(word));
    target.push_back(y);
  };
  for (ObjectId x = 0; x < c.object_count(); ++x) add(x, {}, x);
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (static_cast<int>(words[k].second.size()) >= max_length + slack) continue;
    for (std::size_t s = 0; s < steps.size(); ++s) {
      if (steps[s].source != target[k]) continue;
      std::vector<int> next = words[k].second;
      next.push_back(static_cast<int>(s));
      add(words[k].first, std::move(next), steps[s].target);
      if (words.size() > budget) {
        out.within_budget = false;
        return out;
      }
    }
  }
  UnionFind uf;
  for (std::size_t k = 0; k < words.size(); ++k) uf.add();
  for (std::size_t k = 0; k < words.size(); ++k) {
    auto const& [x, word] = words[k];
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      const Step& a = steps[word[i]];
      const Step& b = steps[word[i + 1]];
      std::vector<int> reduced(word.begin(), word.begin() + i);
      bool applies = false;
      if (!a.inverse && !b.inverse) {
        MorphismId ba = c.compose(b.morphism, a.morphism);
        if (!c.is_identity(ba)) reduced.push_back(step_of[ba]);
        applies = true;
      } else if (a.morphism == b.morphism && a.inverse != b.inverse) {
        applies = true;
      }
      if (!applies) continue;
      reduced.insert(reduced.end(), word.begin() + i + 2, word.end());
      uf.unite(static_cast<int>(k), index.at({x, reduced}));
    }
  }
  std::map<std::pair<ObjectId, ObjectId>, std::vector<int>> roots;
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (static_cast<int>(words[k].second.size()) > max_length) continue;
    roots[{words[k].first, target[k]}].push_back(uf.find(static_cast<int>(k)));
  }
  for (auto& [xy, r] : roots) {
    std::sort(r.begin(), r.end());
    out.counts[xy] = static_cast<int>(std::unique(r.begin(), r.end()) - r.begin());
  }
  return out;
}

OracleResult zigzag_oracle(const FiniteCategory& c, const std::vector<MorphismId>& w, int max_length,
                           int slack, std::size_t budget) {
  OracleResult r;
  ZigzagCounts previous = zigzag_counts(c, w, 1, slack, budget);
  int streak = 0;
  for (int length = 2; length <= max_length; ++length) {
    ZigzagCounts next = zigzag_counts(c, w, length, slack, budget);
    if (!next.within_budget) return r;
    streak = next.counts == previous.counts ? streak + 1 : 0;
    if (streak == 2) {
      r.stabilized = true;
      r.counts = next.counts;
      return r;
    }
    previous = std::move(next);
  }
  return r;
}

bool oracle_initial(const OracleResult& r, ObjectId x, int object_count) {
  for (ObjectId y = 0; y < object_count; ++y) {
    auto it = r.counts.find({x, y});
    if (it == r.counts.end() || it->second != 1) return false;
  }
  return true;
}

}  // namespace testing
