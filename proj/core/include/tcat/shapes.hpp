#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tcat/category.hpp"
#include "tcat/functor.hpp"
#include "tcat/slices.hpp"
#include "tcat/two_category.hpp"

namespace tcat {

/// A nonempty strictly increasing set of integers in [0, 31].
class LinearIndexSet {
 public:
  explicit LinearIndexSet(std::vector<int> elements);
  static LinearIndexSet interval(int n);

  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int min() const { return elements_.front(); }
  int max() const { return elements_.back(); }
  bool contains(int x) const { return (mask_ >> x) & 1u; }
  std::uint32_t mask() const { return mask_; }
  bool is_subset_of(const LinearIndexSet& other) const { return (mask_ & ~other.mask_) == 0; }
  /// Position of element x in the sequence.
  int position(int x) const;

 private:
  std::vector<int> elements_;
  std::uint32_t mask_ = 0;
};

/// Subset masks use bit x for the integer x.
std::string subset_name(std::uint32_t mask);
int mask_min(std::uint32_t mask);
int mask_max(std::uint32_t mask);

struct CollapseIndex {
  int n = 0;
  int i = 0;
  CollapseIndex(int n, int i);
};

/// A generated shape whose 1-cells are labelled by subsets. Objects are
/// the elements of I in order; collapsed 1-cells carry subset 0.
struct Shape {
  TwoCategory category;
  LinearIndexSet index{std::vector<int>{0}};
  std::vector<std::uint32_t> subset;
  std::unordered_map<std::uint32_t, OneCellId> cell_of_subset;
  /// Collapsed 1-cell ℓ -> j, keyed by (ℓ, j).
  std::map<std::pair<int, int>, OneCellId> collapsed;
  ObjectId object_of(int element) const { return index.position(element); }
  OneCellId cell(std::uint32_t mask) const { return cell_of_subset.at(mask); }
  /// The unique 2-cell between two 1-cells of a locally thin shape.
  TwoCellId two_cell(OneCellId from, OneCellId to) const;
};

/// 𝕆^I: hom(i, j) is the inclusion poset of subsets with min i and max j.
Shape oseg(const LinearIndexSet& index);
Shape oseg(int n);

/// [n] as a locally discrete 2-category.
TwoCategory interval(int n);

/// ξ_n: [n] -> 𝕆^n.
LaxFunctor xi(int n, const Shape& target);

/// 𝕆^I_{i↙} for i = min I.
Slice oseg_lax_slice(const LinearIndexSet& index);
/// D^I = ho(𝕆^I_{i↙}).
FiniteCategory homotopy_poset(const LinearIndexSet& index);

/// The lift (L, S) ↦ L ∪ S.
struct RhoLift {
  Product source;
  Slice left_factor_slice;
  Slice target;
  TwoFunctor functor;
};
RhoLift rho_tilde(const LinearIndexSet& j, const LinearIndexSet& i);

/// The 2-category 𝕆^I(a, b) viewed as locally discrete, with the opposite order.
TwoCategory hom_poset_op(const Shape& o, int a, int b);

struct PartialCollapse {
  Shape shape;
  int collapse = 0;
  TwoFunctor projection;
  LaxFunctor lift;
};
/// (P^i𝕆^n)^I for I ⊆ [n]: homs ℓ -> j with j >= i are collapsed to a point.
PartialCollapse partial_collapse(const LinearIndexSet& index, int i);
PartialCollapse partial_collapse(const CollapseIndex& ix);

/// A monotone map [n] -> [m].
struct MonotoneMap {
  int n = 0;
  int m = 0;
  std::vector<int> values;
  int operator()(int x) const { return values.at(x); }
};
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);
MonotoneMap identity_map(int n);
/// The coface δ^k: [n-1] -> [n] skipping k, and the codegeneracy σ^k: [n+1] -> [n].
MonotoneMap coface(int n, int k);
MonotoneMap codegeneracy(int n, int k);

/// 𝕆(f): 𝕆^n -> 𝕆^m, S ↦ f(S).
TwoFunctor oseg_action(const MonotoneMap& f, const Shape& source, const Shape& target);

/// The induced P^i𝕆^n -> P^j𝕆^m. Requires x >= i ⇔ f(x) >= j.
TwoFunctor collapse_action(const MonotoneMap& f, const PartialCollapse& source,
                           const PartialCollapse& target);

}  // namespace tcat
