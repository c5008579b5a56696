#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tcat/ids.hpp"

namespace tcat {

/// A word is a composable sequence of generators in order of application:
/// {a, b} means b ∘ a.
using Word = std::vector<int>;

struct Generator {
  ObjectId source = kNone;
  ObjectId target = kNone;
  std::string name;
};

struct Rule {
  Word lhs;
  Word rhs;
};

/// Shortlex order on generator ids.
bool shortlex_less(const Word& a, const Word& b);

struct CompletionLimits {
  std::size_t max_steps = 100000;
  std::size_t max_rule_length = 16;
};

struct CompletionResult {
  bool confluent = false;
  std::string reason;
};

/// A string rewriting system on the paths of a quiver. Every rule relates
/// two parallel words and is oriented by shortlex.
class RewritingSystem {
 public:
  RewritingSystem() = default;
  RewritingSystem(int object_count, std::vector<Generator> generators);

  int object_count() const { return objects_; }
  const std::vector<Generator>& generators() const { return generators_; }
  /// Active rules, sorted.
  std::vector<Rule> rules() const;
  std::size_t steps() const { return steps_; }

  /// Adds the relation a = b, oriented. Both words must be parallel.
  void add_relation(const Word& a, const Word& b);
  Word reduce(const Word& w) const;
  bool is_irreducible(const Word& w) const;
  /// True iff some rule's left side is a suffix of w.
  bool has_reducible_suffix(const Word& w) const;

  /// Knuth–Bendix completion. Steps count rule applications. On failure
  /// the system still presents the same congruence but may not be confluent.
  CompletionResult complete(const CompletionLimits& limits);

 private:
  struct Entry {
    Rule rule;
    bool active = true;
  };
  void insert(Word a, Word b, std::vector<std::pair<Word, Word>>& pending);
  bool matches_suffix(const Word& w, std::size_t end, const Word& lhs) const;

  int objects_ = 0;
  std::vector<Generator> generators_;
  std::vector<Entry> entries_;
  std::vector<std::vector<int>> by_last_;
  mutable std::size_t steps_ = 0;
};

}  // namespace tcat
