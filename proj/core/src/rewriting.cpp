#include "tcat/rewriting.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace tcat {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

RewritingSystem::RewritingSystem(int object_count, std::vector<Generator> generators)
    : objects_(object_count), generators_(std::move(generators)), by_last_(generators_.size()) {}

std::vector<Rule> RewritingSystem::rules() const {
  std::vector<Rule> out;
  for (Entry const& e : entries_) {
    if (e.active) out.push_back(e.rule);
  }
  std::sort(out.begin(), out.end(), [](const Rule& a, const Rule& b) {
    if (a.lhs != b.lhs) return shortlex_less(a.lhs, b.lhs);
    return shortlex_less(a.rhs, b.rhs);
  });
  return out;
}

bool RewritingSystem::matches_suffix(const Word& w, std::size_t end, const Word& lhs) const {
  if (lhs.size() > end) return false;
  return std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<long>(end - lhs.size()));
}

Word RewritingSystem::reduce(const Word& w) const {
  Word out;
  std::vector<int> input(w.rbegin(), w.rend());
  while (!input.empty()) {
    out.push_back(input.back());
    input.pop_back();
    for (int r : by_last_[out.back()]) {
      const Entry& e = entries_[r];
      if (!e.active || !matches_suffix(out, out.size(), e.rule.lhs)) continue;
      ++steps_;
      out.resize(out.size() - e.rule.lhs.size());
      for (auto it = e.rule.rhs.rbegin(); it != e.rule.rhs.rend(); ++it) input.push_back(*it);
      break;
    }
  }
  return out;
}

bool RewritingSystem::has_reducible_suffix(const Word& w) const {
  if (w.empty()) return false;
  for (int r : by_last_[w.back()]) {
    const Entry& e = entries_[r];
    if (e.active && matches_suffix(w, w.size(), e.rule.lhs)) return true;
  }
  return false;
}

bool RewritingSystem::is_irreducible(const Word& w) const {
  Word prefix;
  for (int a : w) {
    prefix.push_back(a);
    if (has_reducible_suffix(prefix)) return false;
  }
  return true;
}

void RewritingSystem::add_relation(const Word& a, const Word& b) {
  std::vector<std::pair<Word, Word>> pending;
  insert(a, b, pending);
  while (!pending.empty()) {
    auto [x, y] = std::move(pending.back());
    pending.pop_back();
    insert(std::move(x), std::move(y), pending);
  }
}

void RewritingSystem::insert(Word a, Word b, std::vector<std::pair<Word, Word>>& pending) {
  a = reduce(a);
  b = reduce(b);
  if (a == b) return;
  if (shortlex_less(a, b)) std::swap(a, b);
  int id = static_cast<int>(entries_.size());
  // Existing rules whose left side the new rule reduces are retired and
  // their relations re-queued.
  for (Entry& e : entries_) {
    if (!e.active) continue;
    const Word& l = e.rule.lhs;
    bool contains = false;
    if (l.size() >= a.size()) {
      contains = std::search(l.begin(), l.end(), a.begin(), a.end()) != l.end();
    }
    if (contains) {
      e.active = false;
      pending.push_back({e.rule.lhs, e.rule.rhs});
    }
  }
  entries_.push_back({{a, b}, true});
  by_last_[a.back()].push_back(id);
  for (Entry& e : entries_) {
    if (e.active) e.rule.rhs = reduce(e.rule.rhs);
  }
}

CompletionResult RewritingSystem::complete(const CompletionLimits& limits) {
  CompletionResult result;
  std::set<std::pair<int, int>> checked;
  {
    bool progress = true;
    while (progress) {
      progress = false;
      int n = static_cast<int>(entries_.size());
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (!entries_[i].active || !entries_[j].active) continue;
          if (!checked.insert({i, j}).second) continue;
          const Word l1 = entries_[i].rule.lhs, r1 = entries_[i].rule.rhs;
          const Word l2 = entries_[j].rule.lhs, r2 = entries_[j].rule.rhs;
          std::vector<std::pair<Word, Word>> pairs;
          // Overlap: a proper suffix of l1 equals a proper prefix of l2.
          for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
            if (!std::equal(l1.end() - static_cast<long>(k), l1.end(), l2.begin())) continue;
            Word left = r1;
            left.insert(left.end(), l2.begin() + static_cast<long>(k), l2.end());
            Word right(l1.begin(), l1.end() - static_cast<long>(k));
            right.insert(right.end(), r2.begin(), r2.end());
            pairs.push_back({left, right});
          }
          // Inclusion: l2 occurs inside l1.
          if (i != j && l2.size() <= l1.size()) {
            for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
              if (!std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<long>(p))) continue;
              Word right(l1.begin(), l1.begin() + static_cast<long>(p));
              right.insert(right.end(), r2.begin(), r2.end());
              right.insert(right.end(), l1.begin() + static_cast<long>(p + l2.size()), l1.end());
              pairs.push_back({r1, right});
            }
          }
          for (auto& [x, y] : pairs) {
            Word rx = reduce(x), ry = reduce(y);
            if (rx == ry) continue;
            if (std::max(rx.size(), ry.size()) > limits.max_rule_length) {
              result.reason = "rule length limit exceeded";
              return result;
            }
            add_relation(rx, ry);
            progress = true;
          }
          if (steps_ > limits.max_steps) {
            result.reason = "rewrite step limit exceeded";
            return result;
          }
          if (progress) break;
        }
        if (progress) break;
      }
    }
  }
  result.confluent = true;
  return result;
}

}  // namespace tcat
