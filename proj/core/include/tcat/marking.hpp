#pragma once

#include <set>
#include <string>
#include <vector>

#include "tcat/functor.hpp"
#include "tcat/two_category.hpp"

namespace tcat {

/// A set of 1-cells containing every identity.
class Marking {
 public:
  Marking() = default;
  static Marking identities(const TwoCategory& c);
  static Marking all(const TwoCategory& c);
  /// The given cells together with all identities.
  static Marking of(const TwoCategory& c, const std::vector<OneCellId>& cells);

  bool contains(OneCellId f) const { return cells_.count(f) != 0; }
  void insert(OneCellId f) { cells_.insert(f); }
  const std::set<OneCellId>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  friend bool operator==(const Marking&, const Marking&) = default;

 private:
  std::set<OneCellId> cells_;
};

struct MarkedTwoCategory {
  TwoCategory category;
  Marking marking;
  friend bool operator==(const MarkedTwoCategory&, const MarkedTwoCategory&) = default;
};

/// A strict functor of marked 2-categories together with its endpoints.
struct MarkedFunctor {
  std::string name;
  MarkedTwoCategory source;
  MarkedTwoCategory target;
  TwoFunctor functor;
};

MarkedTwoCategory minimal_marking(TwoCategory c);
MarkedTwoCategory maximal_marking(TwoCategory c);

struct MarkingFlags {
  bool composition_closed = false;
  bool contains_equivalences = false;
};
MarkingFlags marking_flags(const MarkedTwoCategory& c);

/// f is an equivalence: some g has g∘f ≅ id and f∘g ≅ id by invertible 2-cells.
bool is_equivalence(const TwoCategory& c, OneCellId f);

/// Closure of the marking under composition.
MarkedTwoCategory widen(const MarkedTwoCategory& c);

/// Composition-closed, contains the equivalences and is closed under
/// invertible 2-cells.
bool is_saturated(const MarkedTwoCategory& c);

/// True iff the strict functor sends marked cells to marked cells.
bool preserves_marking(const TwoFunctor& f, const MarkedTwoCategory& source,
                       const MarkedTwoCategory& target);

}  // namespace tcat
