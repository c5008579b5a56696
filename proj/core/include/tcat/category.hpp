#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcat/ids.hpp"

namespace tcat {

struct Morphism {
  ObjectId source = kNone;
  ObjectId target = kNone;
  std::string name;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// A finite 1-category with an explicit composition table.
///
/// Every object owns an identity morphism, created together with the object.
/// The composition table is keyed by (g, f) and holds g ∘ f.
class FiniteCategory {
 public:
  FiniteCategory() = default;
  explicit FiniteCategory(std::string name) : name_(std::move(name)) {}

  ObjectId add_object(std::string name);
  ObjectId add_object(std::string name, std::string identity_name);
  MorphismId add_morphism(ObjectId source, ObjectId target, std::string name);
  void set_composite(MorphismId g, MorphismId f, MorphismId gf);
  /// Adds every table entry implied by the unit laws.
  void complete_unit_laws();

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  void rename_morphism(MorphismId m, std::string name) { morphisms_.at(m).name = std::move(name); }

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object_name(ObjectId x) const { return objects_.at(x); }
  const Morphism& morphism(MorphismId m) const { return morphisms_.at(m); }
  ObjectId source(MorphismId m) const { return morphisms_.at(m).source; }
  ObjectId target(MorphismId m) const { return morphisms_.at(m).target; }
  MorphismId identity(ObjectId x) const { return identities_.at(x); }
  bool is_identity(MorphismId m) const { return identity_of_.at(m) != kNone; }
  std::span<const MorphismId> hom(ObjectId a, ObjectId b) const;

  /// g ∘ f; throws StructuralError when the table has no entry.
  MorphismId compose(MorphismId g, MorphismId f) const;
  MorphismId find_composite(MorphismId g, MorphismId f) const { return composition_.find(g, f); }
  const PairTable& composition_table() const { return composition_; }

  std::optional<ObjectId> find_object(std::string_view name) const;
  std::optional<MorphismId> find_morphism(std::string_view name) const;

  std::optional<MorphismId> inverse(MorphismId m) const;
  bool is_isomorphism(MorphismId m) const { return inverse(m).has_value(); }

  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
    return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ &&
           a.identities_ == b.identities_ && a.composition_ == b.composition_;
  }

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorphismId> identities_;
  std::vector<ObjectId> identity_of_;
  std::map<std::pair<ObjectId, ObjectId>, std::vector<MorphismId>> homs_;
  PairTable composition_;
};

/// The category [n] = {0 < 1 < ... < n}; morphisms are named "i->j".
FiniteCategory interval_category(int n);

/// Full subcategory on the given objects, listed in order.
struct Subcategory {
  FiniteCategory category;
  std::vector<ObjectId> object_in_parent;
  std::vector<MorphismId> morphism_in_parent;
};
Subcategory full_subcategory(const FiniteCategory& c, const std::vector<ObjectId>& objects);

}  // namespace tcat
