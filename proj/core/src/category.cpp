#include "tcat/category.hpp"

#include <string>

#include "tcat/errors.hpp"

namespace tcat {

namespace {
const std::vector<MorphismId> kEmpty;
}

ObjectId FiniteCategory::add_object(std::string name) {
  std::string id_name = "id_" + name;
  return add_object(std::move(name), std::move(id_name));
}

ObjectId FiniteCategory::add_object(std::string name, std::string identity_name) {
  ObjectId x = object_count();
  objects_.push_back(std::move(name));
  MorphismId m = morphism_count();
  morphisms_.push_back({x, x, std::move(identity_name)});
  identity_of_.push_back(x);
  identities_.push_back(m);
  homs_[{x, x}].push_back(m);
  composition_.set(m, m, m);
  return x;
}

MorphismId FiniteCategory::add_morphism(ObjectId source, ObjectId target, std::string name) {
  if (source < 0 || source >= object_count() || target < 0 || target >= object_count()) {
    throw StructuralError("morphism " + name + " has a dangling endpoint");
  }
  MorphismId m = morphism_count();
  morphisms_.push_back({source, target, std::move(name)});
  identity_of_.push_back(kNone);
  homs_[{source, target}].push_back(m);
  return m;
}

void FiniteCategory::set_composite(MorphismId g, MorphismId f, MorphismId gf) {
  composition_.set(g, f, gf);
}

void FiniteCategory::complete_unit_laws() {
  for (MorphismId m = 0; m < morphism_count(); ++m) {
    const Morphism& mm = morphisms_[m];
    MorphismId is = identities_[mm.source];
    MorphismId it = identities_[mm.target];
    if (!composition_.contains(m, is)) composition_.set(m, is, m);
    if (!composition_.contains(it, m)) composition_.set(it, m, m);
  }
}

std::span<const MorphismId> FiniteCategory::hom(ObjectId a, ObjectId b) const {
  auto it = homs_.find({a, b});
  if (it == homs_.end()) return kEmpty;
  return it->second;
}

MorphismId FiniteCategory::compose(MorphismId g, MorphismId f) const {
  MorphismId r = composition_.find(g, f);
  if (r == kNone) {
    throw StructuralError("no composite recorded for (" + morphism(g).name + ", " +
                          morphism(f).name + ")");
  }
  return r;
}

std::optional<ObjectId> FiniteCategory::find_object(std::string_view name) const {
  for (ObjectId x = 0; x < object_count(); ++x) {
    if (objects_[x] == name) return x;
  }
  return std::nullopt;
}

std::optional<MorphismId> FiniteCategory::find_morphism(std::string_view name) const {
  for (MorphismId m = 0; m < morphism_count(); ++m) {
    if (morphisms_[m].name == name) return m;
  }
  return std::nullopt;
}

std::optional<MorphismId> FiniteCategory::inverse(MorphismId m) const {
  const Morphism& mm = morphism(m);
  for (MorphismId n : hom(mm.target, mm.source)) {
    if (find_composite(n, m) == identity(mm.source) &&
        find_composite(m, n) == identity(mm.target)) {
      return n;
    }
  }
  return std::nullopt;
}

FiniteCategory interval_category(int n) {
  if (n < 0) throw PreconditionError("interval length must be nonnegative");
  FiniteCategory c("[" + std::to_string(n) + "]");
  std::vector<std::vector<MorphismId>> arrow(n + 1, std::vector<MorphismId>(n + 1, kNone));
  for (int i = 0; i <= n; ++i) {
    c.add_object(std::to_string(i), std::to_string(i) + "->" + std::to_string(i));
    arrow[i][i] = c.identity(i);
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      arrow[i][j] = c.add_morphism(i, j, std::to_string(i) + "->" + std::to_string(j));
    }
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      for (int k = j; k <= n; ++k) c.set_composite(arrow[j][k], arrow[i][j], arrow[i][k]);
    }
  }
  return c;
}

Subcategory full_subcategory(const FiniteCategory& c, const std::vector<ObjectId>& objects) {
  Subcategory s;
  s.category.set_name(c.name());
  std::vector<ObjectId> local(c.object_count(), kNone);
  std::vector<MorphismId> local_m(c.morphism_count(), kNone);
  for (ObjectId x : objects) {
    ObjectId y = s.category.add_object(c.object_name(x), c.morphism(c.identity(x)).name);
    local[x] = y;
    s.object_in_parent.push_back(x);
    s.morphism_in_parent.push_back(c.identity(x));
    local_m[c.identity(x)] = s.category.identity(y);
  }
  for (ObjectId x : objects) {
    for (ObjectId y : objects) {
      for (MorphismId m : c.hom(x, y)) {
        if (c.is_identity(m)) continue;
        local_m[m] = s.category.add_morphism(local[x], local[y], c.morphism(m).name);
        s.morphism_in_parent.push_back(m);
      }
    }
  }
  for (MorphismId g = 0; g < s.category.morphism_count(); ++g) {
    for (MorphismId f = 0; f < s.category.morphism_count(); ++f) {
      if (s.category.target(f) != s.category.source(g)) continue;
      MorphismId gf = c.find_composite(s.morphism_in_parent[g], s.morphism_in_parent[f]);
      if (gf != kNone) s.category.set_composite(g, f, local_m[gf]);
    }
  }
  return s;
}

}  // namespace tcat
