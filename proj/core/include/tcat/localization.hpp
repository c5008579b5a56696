#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcat/category.hpp"
#include "tcat/functor.hpp"
#include "tcat/rewriting.hpp"

namespace tcat {

struct Limits {
  int max_word_len = 8;
  int max_classes = 64;
  std::size_t max_rewrite_steps = 100000;
  friend bool operator==(const Limits&, const Limits&) = default;
};

/// Parses "len,classes,steps". Throws PreconditionError on malformed or zero values.
Limits parse_limits(std::string_view text);
std::string to_string(const Limits& limits);

class TriState {
 public:
  enum class Value { yes, no, unknown };

  static TriState yes(std::string note = {}) { return {Value::yes, std::move(note)}; }
  static TriState no(std::string note) { return {Value::no, std::move(note)}; }
  static TriState unknown(std::string note) { return {Value::unknown, std::move(note)}; }

  Value value() const { return value_; }
  bool is_yes() const { return value_ == Value::yes; }
  bool is_no() const { return value_ == Value::no; }
  bool is_unknown() const { return value_ == Value::unknown; }
  /// Witness for No, exhausted limit for Unknown.
  const std::string& reason() const { return reason_; }

  /// Conjunction: any No wins, then any Unknown.
  TriState operator&&(const TriState& other) const;

 private:
  TriState(Value v, std::string r) : value_(v), reason_(std::move(r)) {}
  Value value_;
  std::string reason_;
};

const char* to_string(TriState::Value v);

enum class Status { complete, bounded };
const char* to_string(Status s);

/// C[W⁻¹] presented by the non-identity morphisms of C and formal inverses
/// of the non-identity members of W, completed to a rewriting system.
struct LocalizedCategory {
  FiniteCategory base;
  std::vector<MorphismId> inverted;
  /// Generator g stands for morphism generator_morphism[g], inverted iff
  /// generator_is_inverse[g].
  std::vector<MorphismId> generator_morphism;
  std::vector<bool> generator_is_inverse;
  RewritingSystem system;
  bool confluent = false;
  Status status = Status::bounded;
  Limits limits;
  std::string reason;
  std::uint64_t certificate = 0;
  /// Irreducible words x -> y found, in shortlex order. For Complete
  /// status these are exactly the hom-sets.
  std::map<std::pair<ObjectId, ObjectId>, std::vector<Word>> classes;
  /// Whether some zigzag x -> y exists, independent of limits.
  std::vector<std::vector<bool>> reachable;

  int object_count() const { return base.object_count(); }
  Word reduce(const Word& w) const { return system.reduce(w); }
  Word word_of(MorphismId m) const;
  /// The formal inverse of m; m must be inverted or an identity.
  Word inverse_word(MorphismId m) const;
  /// Composite in application order: first a then b.
  Word then(const Word& a, const Word& b) const;
  std::string word_name(const Word& w, ObjectId at) const;
  ObjectId word_source(const Word& w, ObjectId empty_at) const;
};

/// Throws PreconditionError when a limit is zero and StructuralError when
/// W names a morphism outside C.
LocalizedCategory localize(const FiniteCategory& c, const std::vector<MorphismId>& w,
                           const Limits& limits = {});

struct HomClasses {
  std::vector<Word> words;
  std::vector<std::string> names;
  Status status = Status::bounded;
};
HomClasses hom_classes(const LocalizedCategory& l, ObjectId x, ObjectId y);

TriState is_initial(const LocalizedCategory& l, ObjectId x);

/// A Complete localization as a finite category, with the localization functor.
struct MaterializedLocalization {
  FiniteCategory category;
  /// C -> C[W⁻¹].
  Functor unit;
  std::map<std::pair<ObjectId, Word>, MorphismId> morphism_of_word;
  MorphismId morphism(const LocalizedCategory& l, ObjectId source, const Word& w) const;
};
/// Throws PreconditionError unless the status is Complete.
MaterializedLocalization materialize(const LocalizedCategory& l);

/// The functor A[V⁻¹] -> B[W⁻¹] induced by f: A -> B sending V into W.
/// Both localizations must be Complete.
Functor induced_functor(const Functor& f, const LocalizedCategory& a,
                        const MaterializedLocalization& ma, const LocalizedCategory& b,
                        const MaterializedLocalization& mb);

}  // namespace tcat
