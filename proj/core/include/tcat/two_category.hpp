#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcat/category.hpp"
#include "tcat/ids.hpp"

namespace tcat {

struct OneCell {
  ObjectId source = kNone;
  ObjectId target = kNone;
  std::string name;
  friend bool operator==(const OneCell&, const OneCell&) = default;
};

struct TwoCell {
  OneCellId source = kNone;
  OneCellId target = kNone;
  std::string name;
  friend bool operator==(const TwoCell&, const TwoCell&) = default;
};

/// A finite strict 2-category stored as global cell tables.
///
/// Adding an object creates its identity 1-cell; adding a 1-cell creates its
/// identity 2-cell. Composition tables:
///   compose(g, f)       = g ∘ f           for f: a -> b, g: b -> c
///   vertical(b, a)      = b · a           for a: f => g, b: g => h
///   horizontal(b, a)    = b * a           for a in hom(x, y), b in hom(y, z)
class TwoCategory {
 public:
  TwoCategory() = default;
  explicit TwoCategory(std::string name) : name_(std::move(name)) {}

  ObjectId add_object(std::string name);
  ObjectId add_object(std::string name, std::string identity_name);
  OneCellId add_one_cell(ObjectId source, ObjectId target, std::string name);
  TwoCellId add_two_cell(OneCellId source, OneCellId target, std::string name);
  void set_compose(OneCellId g, OneCellId f, OneCellId gf);
  void set_vertical(TwoCellId b, TwoCellId a, TwoCellId ba);
  void set_horizontal(TwoCellId b, TwoCellId a, TwoCellId ba);
  /// Adds every table entry implied by the unit laws and by
  /// id_g * id_f = id_{g∘f}, where the needed 1-cell composite is known.
  void complete_unit_laws();

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  void rename_object(ObjectId x, std::string name) { objects_.at(x) = std::move(name); }
  void rename_one_cell(OneCellId f, std::string name) { one_cells_.at(f).name = std::move(name); }
  void rename_two_cell(TwoCellId a, std::string name) { two_cells_.at(a).name = std::move(name); }
  /// Appends "~k" to repeated names so every cell name is unique in its dimension.
  void disambiguate_names();

  int object_count() const { return static_cast<int>(objects_.size()); }
  int one_cell_count() const { return static_cast<int>(one_cells_.size()); }
  int two_cell_count() const { return static_cast<int>(two_cells_.size()); }
  const std::string& object_name(ObjectId x) const { return objects_.at(x); }
  const OneCell& one_cell(OneCellId f) const { return one_cells_.at(f); }
  const TwoCell& two_cell(TwoCellId a) const { return two_cells_.at(a); }
  ObjectId source(OneCellId f) const { return one_cells_.at(f).source; }
  ObjectId target(OneCellId f) const { return one_cells_.at(f).target; }
  OneCellId source2(TwoCellId a) const { return two_cells_.at(a).source; }
  OneCellId target2(TwoCellId a) const { return two_cells_.at(a).target; }

  OneCellId identity(ObjectId x) const { return identity1_.at(x); }
  TwoCellId identity2(OneCellId f) const { return identity2_.at(f); }
  bool is_identity(OneCellId f) const { return identity1_of_.at(f) != kNone; }
  bool is_identity2(TwoCellId a) const { return identity2_of_.at(a) != kNone; }
  ObjectId identity_object(OneCellId f) const { return identity1_of_.at(f); }

  std::span<const OneCellId> hom(ObjectId a, ObjectId b) const;
  std::span<const TwoCellId> two_cells_between(OneCellId f, OneCellId g) const;
  /// All 2-cells whose source and target lie in hom(a, b).
  std::vector<TwoCellId> hom_two_cells(ObjectId a, ObjectId b) const;

  /// Composition lookups; these throw StructuralError on a missing entry.
  OneCellId compose(OneCellId g, OneCellId f) const;
  TwoCellId vertical(TwoCellId b, TwoCellId a) const;
  TwoCellId horizontal(TwoCellId b, TwoCellId a) const;
  /// g * a and b * f.
  TwoCellId whisker_left(OneCellId g, TwoCellId a) const { return horizontal(identity2(g), a); }
  TwoCellId whisker_right(TwoCellId b, OneCellId f) const { return horizontal(b, identity2(f)); }

  OneCellId find_compose(OneCellId g, OneCellId f) const { return compose_.find(g, f); }
  TwoCellId find_vertical(TwoCellId b, TwoCellId a) const { return vertical_.find(b, a); }
  TwoCellId find_horizontal(TwoCellId b, TwoCellId a) const { return horizontal_.find(b, a); }
  const PairTable& compose_table() const { return compose_; }
  const PairTable& vertical_table() const { return vertical_; }
  const PairTable& horizontal_table() const { return horizontal_; }

  std::optional<ObjectId> find_object(std::string_view name) const;
  std::optional<OneCellId> find_one_cell(std::string_view name) const;
  std::optional<TwoCellId> find_two_cell(std::string_view name) const;

  std::optional<TwoCellId> inverse2(TwoCellId a) const;
  bool is_invertible2(TwoCellId a) const { return inverse2(a).has_value(); }
  /// Some invertible 2-cell f => g, if any.
  std::optional<TwoCellId> find_invertible2(OneCellId f, OneCellId g) const;
  /// True iff every hom category is a preorder.
  bool is_locally_thin() const;
  bool is_locally_discrete() const;

  friend bool operator==(const TwoCategory& a, const TwoCategory& b) {
    return a.objects_ == b.objects_ && a.one_cells_ == b.one_cells_ &&
           a.two_cells_ == b.two_cells_ && a.identity1_ == b.identity1_ &&
           a.identity2_ == b.identity2_ && a.compose_ == b.compose_ &&
           a.vertical_ == b.vertical_ && a.horizontal_ == b.horizontal_;
  }

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<OneCell> one_cells_;
  std::vector<TwoCell> two_cells_;
  std::vector<OneCellId> identity1_;
  std::vector<TwoCellId> identity2_;
  std::vector<ObjectId> identity1_of_;
  std::vector<OneCellId> identity2_of_;
  std::map<std::pair<ObjectId, ObjectId>, std::vector<OneCellId>> homs_;
  std::map<std::pair<OneCellId, OneCellId>, std::vector<TwoCellId>> between_;
  PairTable compose_;
  PairTable vertical_;
  PairTable horizontal_;
};

/// Creation events in id order: (0, x) adds object x with its identity,
/// (1, f) adds the non-identity 1-cell f, (2, a) adds the non-identity
/// 2-cell a. Replaying them through add_* reproduces every id.
std::vector<std::pair<int, int>> creation_order(const TwoCategory& c);

/// The locally discrete 2-category on a 1-category. Ids are preserved:
/// object x and morphism m become object x and 1-cell m.
TwoCategory locally_discrete(const FiniteCategory& c);

/// The underlying 1-category, forgetting 2-cells. Ids are preserved.
FiniteCategory underlying_category(const TwoCategory& c);

/// The hom category C(a, b) with maps back to cell ids.
struct HomCategory {
  FiniteCategory category;
  std::vector<OneCellId> one_cell_of_object;
  std::vector<TwoCellId> two_cell_of_morphism;
  std::map<OneCellId, ObjectId> object_of_one_cell;
  std::map<TwoCellId, MorphismId> morphism_of_two_cell;
};
HomCategory hom_category(const TwoCategory& c, ObjectId a, ObjectId b);

/// Cartesian product of 2-categories. Cell (x, y) is named "(x,y)".
struct Product {
  TwoCategory category;
  std::map<std::pair<ObjectId, ObjectId>, ObjectId> object;
  std::map<std::pair<OneCellId, OneCellId>, OneCellId> one_cell;
  std::map<std::pair<TwoCellId, TwoCellId>, TwoCellId> two_cell;
  std::vector<std::pair<ObjectId, ObjectId>> object_parts;
  std::vector<std::pair<OneCellId, OneCellId>> one_cell_parts;
  std::vector<std::pair<TwoCellId, TwoCellId>> two_cell_parts;
};
Product product(const TwoCategory& a, const TwoCategory& b);

/// Full sub-2-category on the given objects, listed in order.
struct SubTwoCategory {
  TwoCategory category;
  std::vector<ObjectId> object_in_parent;
  std::vector<OneCellId> one_cell_in_parent;
  std::vector<TwoCellId> two_cell_in_parent;
};
SubTwoCategory full_subcategory(const TwoCategory& c, const std::vector<ObjectId>& objects);

}  // namespace tcat
