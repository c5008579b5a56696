#include "tcat/two_category.hpp"

#include <unordered_map>

#include "tcat/errors.hpp"

namespace tcat {

namespace {
const std::vector<int> kEmpty;
}

ObjectId TwoCategory::add_object(std::string name) {
  std::string id_name = "id_" + name;
  return add_object(std::move(name), std::move(id_name));
}

ObjectId TwoCategory::add_object(std::string name, std::string identity_name) {
  ObjectId x = object_count();
  objects_.push_back(std::move(name));
  identity1_.push_back(kNone);
  OneCellId f = add_one_cell(x, x, std::move(identity_name));
  identity1_[x] = f;
  identity1_of_[f] = x;
  compose_.set(f, f, f);
  TwoCellId a = identity2_[f];
  horizontal_.set(a, a, a);
  return x;
}

OneCellId TwoCategory::add_one_cell(ObjectId source, ObjectId target, std::string name) {
  if (source < 0 || source >= object_count() || target < 0 || target >= object_count()) {
    throw StructuralError("1-cell " + name + " has a dangling endpoint");
  }
  OneCellId f = one_cell_count();
  one_cells_.push_back({source, target, name});
  identity1_of_.push_back(kNone);
  identity2_.push_back(kNone);
  homs_[{source, target}].push_back(f);
  TwoCellId a = add_two_cell(f, f, "id_" + name);
  identity2_[f] = a;
  identity2_of_[a] = f;
  vertical_.set(a, a, a);
  return f;
}

TwoCellId TwoCategory::add_two_cell(OneCellId source, OneCellId target, std::string name) {
  if (source < 0 || source >= one_cell_count() || target < 0 || target >= one_cell_count()) {
    throw StructuralError("2-cell " + name + " has a dangling endpoint");
  }
  if (one_cells_[source].source != one_cells_[target].source ||
      one_cells_[source].target != one_cells_[target].target) {
    throw StructuralError("2-cell " + name + " joins 1-cells of different homs");
  }
  TwoCellId a = two_cell_count();
  two_cells_.push_back({source, target, std::move(name)});
  identity2_of_.push_back(kNone);
  between_[{source, target}].push_back(a);
  return a;
}

void TwoCategory::set_compose(OneCellId g, OneCellId f, OneCellId gf) { compose_.set(g, f, gf); }
void TwoCategory::set_vertical(TwoCellId b, TwoCellId a, TwoCellId ba) { vertical_.set(b, a, ba); }
void TwoCategory::set_horizontal(TwoCellId b, TwoCellId a, TwoCellId ba) {
  horizontal_.set(b, a, ba);
}

void TwoCategory::complete_unit_laws() {
  for (OneCellId f = 0; f < one_cell_count(); ++f) {
    OneCellId is = identity1_[source(f)];
    OneCellId it = identity1_[target(f)];
    if (!compose_.contains(f, is)) compose_.set(f, is, f);
    if (!compose_.contains(it, f)) compose_.set(it, f, f);
  }
  for (TwoCellId a = 0; a < two_cell_count(); ++a) {
    const TwoCell& c = two_cells_[a];
    TwoCellId is = identity2_[c.source];
    TwoCellId it = identity2_[c.target];
    if (!vertical_.contains(a, is)) vertical_.set(a, is, a);
    if (!vertical_.contains(it, a)) vertical_.set(it, a, a);
    TwoCellId ia = identity2_[identity1_[one_cells_[c.source].source]];
    TwoCellId ib = identity2_[identity1_[one_cells_[c.source].target]];
    if (!horizontal_.contains(a, ia)) horizontal_.set(a, ia, a);
    if (!horizontal_.contains(ib, a)) horizontal_.set(ib, a, a);
  }
  for (auto const& [g, f, gf] : compose_.entries()) {
    TwoCellId ig = identity2_[g];
    TwoCellId jf = identity2_[f];
    if (!horizontal_.contains(ig, jf)) horizontal_.set(ig, jf, identity2_[gf]);
  }
}

void TwoCategory::disambiguate_names() {
  auto fix = [](auto& names) {
    std::unordered_map<std::string, int> seen;
    for (auto& n : names) {
      std::string& s = n;
      int k = seen[s]++;
      if (k > 0) s += "~" + std::to_string(k + 1);
    }
  };
  fix(objects_);
  std::vector<std::string> ones, twos;
  for (auto& c : one_cells_) ones.push_back(c.name);
  for (auto& c : two_cells_) twos.push_back(c.name);
  fix(ones);
  fix(twos);
  for (std::size_t i = 0; i < ones.size(); ++i) one_cells_[i].name = ones[i];
  for (std::size_t i = 0; i < twos.size(); ++i) two_cells_[i].name = twos[i];
}

std::span<const OneCellId> TwoCategory::hom(ObjectId a, ObjectId b) const {
  auto it = homs_.find({a, b});
  if (it == homs_.end()) return kEmpty;
  return it->second;
}

std::span<const TwoCellId> TwoCategory::two_cells_between(OneCellId f, OneCellId g) const {
  auto it = between_.find({f, g});
  if (it == between_.end()) return kEmpty;
  return it->second;
}

std::vector<TwoCellId> TwoCategory::hom_two_cells(ObjectId a, ObjectId b) const {
  std::vector<TwoCellId> out;
  for (OneCellId f : hom(a, b)) {
    for (OneCellId g : hom(a, b)) {
      for (TwoCellId t : two_cells_between(f, g)) out.push_back(t);
    }
  }
  return out;
}

OneCellId TwoCategory::compose(OneCellId g, OneCellId f) const {
  OneCellId r = compose_.find(g, f);
  if (r == kNone) {
    throw StructuralError("no composite recorded for 1-cells (" + one_cell(g).name + ", " +
                          one_cell(f).name + ")");
  }
  return r;
}

TwoCellId TwoCategory::vertical(TwoCellId b, TwoCellId a) const {
  TwoCellId r = vertical_.find(b, a);
  if (r == kNone) {
    throw StructuralError("no vertical composite recorded for (" + two_cell(b).name + ", " +
                          two_cell(a).name + ")");
  }
  return r;
}

TwoCellId TwoCategory::horizontal(TwoCellId b, TwoCellId a) const {
  TwoCellId r = horizontal_.find(b, a);
  if (r == kNone) {
    throw StructuralError("no horizontal composite recorded for (" + two_cell(b).name + ", " +
                          two_cell(a).name + ")");
  }
  return r;
}

std::optional<ObjectId> TwoCategory::find_object(std::string_view name) const {
  for (ObjectId x = 0; x < object_count(); ++x) {
    if (objects_[x] == name) return x;
  }
  return std::nullopt;
}

std::optional<OneCellId> TwoCategory::find_one_cell(std::string_view name) const {
  for (OneCellId f = 0; f < one_cell_count(); ++f) {
    if (one_cells_[f].name == name) return f;
  }
  return std::nullopt;
}

std::optional<TwoCellId> TwoCategory::find_two_cell(std::string_view name) const {
  for (TwoCellId a = 0; a < two_cell_count(); ++a) {
    if (two_cells_[a].name == name) return a;
  }
  return std::nullopt;
}

std::optional<TwoCellId> TwoCategory::inverse2(TwoCellId a) const {
  const TwoCell& c = two_cell(a);
  for (TwoCellId b : two_cells_between(c.target, c.source)) {
    if (find_vertical(b, a) == identity2(c.source) && find_vertical(a, b) == identity2(c.target)) {
      return b;
    }
  }
  return std::nullopt;
}

std::optional<TwoCellId> TwoCategory::find_invertible2(OneCellId f, OneCellId g) const {
  for (TwoCellId a : two_cells_between(f, g)) {
    if (is_invertible2(a)) return a;
  }
  return std::nullopt;
}

bool TwoCategory::is_locally_thin() const {
  for (auto const& [key, cells] : between_) {
    if (cells.size() > 1) return false;
  }
  return true;
}

bool TwoCategory::is_locally_discrete() const {
  for (TwoCellId a = 0; a < two_cell_count(); ++a) {
    if (!is_identity2(a)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> creation_order(const TwoCategory& c) {
  std::vector<std::pair<int, int>> events;
  for (TwoCellId a = 0; a < c.two_cell_count(); ++a) {
    if (!c.is_identity2(a)) {
      events.push_back({2, a});
      continue;
    }
    OneCellId f = c.source2(a);
    if (c.is_identity(f)) {
      events.push_back({0, c.identity_object(f)});
    } else {
      events.push_back({1, f});
    }
  }
  return events;
}

TwoCategory locally_discrete(const FiniteCategory& c) {
  TwoCategory t(c.name());
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    const Morphism& mm = c.morphism(m);
    if (c.is_identity(m)) {
      ObjectId x = t.add_object(c.object_name(mm.source), mm.name);
      if (t.identity(x) != m) throw StructuralError("identity ids are not aligned");
    } else {
      t.add_one_cell(mm.source, mm.target, mm.name);
    }
  }
  for (auto const& [g, f, gf] : c.composition_table().entries()) t.set_compose(g, f, gf);
  t.complete_unit_laws();
  return t;
}

FiniteCategory underlying_category(const TwoCategory& t) {
  FiniteCategory c(t.name());
  for (OneCellId f = 0; f < t.one_cell_count(); ++f) {
    const OneCell& ff = t.one_cell(f);
    if (t.is_identity(f)) {
      c.add_object(t.object_name(ff.source), ff.name);
    } else {
      c.add_morphism(ff.source, ff.target, ff.name);
    }
  }
  for (auto const& [g, f, gf] : t.compose_table().entries()) c.set_composite(g, f, gf);
  return c;
}

HomCategory hom_category(const TwoCategory& t, ObjectId a, ObjectId b) {
  HomCategory h;
  h.category.set_name(t.object_name(a) + "->" + t.object_name(b));
  for (OneCellId f : t.hom(a, b)) {
    ObjectId x = h.category.add_object(t.one_cell(f).name, t.two_cell(t.identity2(f)).name);
    h.one_cell_of_object.push_back(f);
    h.object_of_one_cell[f] = x;
    h.two_cell_of_morphism.push_back(t.identity2(f));
    h.morphism_of_two_cell[t.identity2(f)] = h.category.identity(x);
  }
  for (TwoCellId c : t.hom_two_cells(a, b)) {
    if (t.is_identity2(c)) continue;
    MorphismId m = h.category.add_morphism(h.object_of_one_cell.at(t.source2(c)),
                                           h.object_of_one_cell.at(t.target2(c)),
                                           t.two_cell(c).name);
    h.two_cell_of_morphism.push_back(c);
    h.morphism_of_two_cell[c] = m;
  }
  for (MorphismId m = 0; m < h.category.morphism_count(); ++m) {
    for (MorphismId n = 0; n < h.category.morphism_count(); ++n) {
      if (h.category.target(m) != h.category.source(n)) continue;
      TwoCellId r = t.find_vertical(h.two_cell_of_morphism[n], h.two_cell_of_morphism[m]);
      if (r != kNone) h.category.set_composite(n, m, h.morphism_of_two_cell.at(r));
    }
  }
  return h;
}

Product product(const TwoCategory& a, const TwoCategory& b) {
  Product p;
  p.category.set_name(a.name() + "x" + b.name());
  TwoCategory& c = p.category;
  for (ObjectId x = 0; x < a.object_count(); ++x) {
    for (ObjectId y = 0; y < b.object_count(); ++y) {
      ObjectId o = c.add_object("(" + a.object_name(x) + "," + b.object_name(y) + ")");
      p.object[{x, y}] = o;
      p.object_parts.push_back({x, y});
      OneCellId i = c.identity(o);
      p.one_cell[{a.identity(x), b.identity(y)}] = i;
      p.one_cell_parts.resize(c.one_cell_count());
      p.one_cell_parts[i] = {a.identity(x), b.identity(y)};
      c.rename_one_cell(i, "(" + a.one_cell(a.identity(x)).name + "," +
                               b.one_cell(b.identity(y)).name + ")");
      TwoCellId ii = c.identity2(i);
      p.two_cell[{a.identity2(a.identity(x)), b.identity2(b.identity(y))}] = ii;
      p.two_cell_parts.resize(c.two_cell_count());
      p.two_cell_parts[ii] = {a.identity2(a.identity(x)), b.identity2(b.identity(y))};
    }
  }
  for (OneCellId f = 0; f < a.one_cell_count(); ++f) {
    for (OneCellId g = 0; g < b.one_cell_count(); ++g) {
      if (a.is_identity(f) && b.is_identity(g)) continue;
      OneCellId h = c.add_one_cell(p.object.at({a.source(f), b.source(g)}),
                                   p.object.at({a.target(f), b.target(g)}),
                                   "(" + a.one_cell(f).name + "," + b.one_cell(g).name + ")");
      p.one_cell[{f, g}] = h;
      p.one_cell_parts.resize(c.one_cell_count());
      p.one_cell_parts[h] = {f, g};
      TwoCellId ih = c.identity2(h);
      p.two_cell[{a.identity2(f), b.identity2(g)}] = ih;
      p.two_cell_parts.resize(c.two_cell_count());
      p.two_cell_parts[ih] = {a.identity2(f), b.identity2(g)};
    }
  }
  for (TwoCellId s = 0; s < a.two_cell_count(); ++s) {
    for (TwoCellId t = 0; t < b.two_cell_count(); ++t) {
      if (a.is_identity2(s) && b.is_identity2(t)) continue;
      TwoCellId u = c.add_two_cell(p.one_cell.at({a.source2(s), b.source2(t)}),
                                   p.one_cell.at({a.target2(s), b.target2(t)}),
                                   "(" + a.two_cell(s).name + "," + b.two_cell(t).name + ")");
      p.two_cell[{s, t}] = u;
      p.two_cell_parts.resize(c.two_cell_count());
      p.two_cell_parts[u] = {s, t};
    }
  }
  for (auto const& [g1, f1, r1] : a.compose_table().entries()) {
    for (auto const& [g2, f2, r2] : b.compose_table().entries()) {
      c.set_compose(p.one_cell.at({g1, g2}), p.one_cell.at({f1, f2}), p.one_cell.at({r1, r2}));
    }
  }
  for (auto const& [g1, f1, r1] : a.vertical_table().entries()) {
    for (auto const& [g2, f2, r2] : b.vertical_table().entries()) {
      c.set_vertical(p.two_cell.at({g1, g2}), p.two_cell.at({f1, f2}), p.two_cell.at({r1, r2}));
    }
  }
  for (auto const& [g1, f1, r1] : a.horizontal_table().entries()) {
    for (auto const& [g2, f2, r2] : b.horizontal_table().entries()) {
      c.set_horizontal(p.two_cell.at({g1, g2}), p.two_cell.at({f1, f2}),
                       p.two_cell.at({r1, r2}));
    }
  }
  return p;
}

}  // namespace tcat

namespace tcat {

SubTwoCategory full_subcategory(const TwoCategory& c, const std::vector<ObjectId>& objects) {
  SubTwoCategory s;
  TwoCategory& out = s.category;
  out.set_name(c.name());
  std::vector<ObjectId> local(c.object_count(), kNone);
  std::vector<OneCellId> local1(c.one_cell_count(), kNone);
  std::vector<TwoCellId> local2(c.two_cell_count(), kNone);
  auto track = [&](OneCellId parent, OneCellId mine) {
    local1[parent] = mine;
    s.one_cell_in_parent.resize(out.one_cell_count());
    s.one_cell_in_parent[mine] = parent;
    TwoCellId i = out.identity2(mine);
    out.rename_two_cell(i, c.two_cell(c.identity2(parent)).name);
    local2[c.identity2(parent)] = i;
    s.two_cell_in_parent.resize(out.two_cell_count());
    s.two_cell_in_parent[i] = c.identity2(parent);
  };
  for (ObjectId x : objects) {
    if (x < 0 || x >= c.object_count()) throw StructuralError("unknown object in subcategory");
    ObjectId o = out.add_object(c.object_name(x), c.one_cell(c.identity(x)).name);
    local[x] = o;
    s.object_in_parent.push_back(x);
    track(c.identity(x), out.identity(o));
  }
  for (ObjectId x : objects) {
    for (ObjectId y : objects) {
      for (OneCellId f : c.hom(x, y)) {
        if (c.is_identity(f)) continue;
        track(f, out.add_one_cell(local[x], local[y], c.one_cell(f).name));
      }
    }
  }
  for (TwoCellId a = 0; a < c.two_cell_count(); ++a) {
    if (c.is_identity2(a) || local1[c.source2(a)] == kNone) continue;
    TwoCellId b = out.add_two_cell(local1[c.source2(a)], local1[c.target2(a)], c.two_cell(a).name);
    local2[a] = b;
    s.two_cell_in_parent.resize(out.two_cell_count());
    s.two_cell_in_parent[b] = a;
  }
  for (auto const& [g, f, gf] : c.compose_table().entries()) {
    if (local1[g] != kNone && local1[f] != kNone) out.set_compose(local1[g], local1[f], local1[gf]);
  }
  for (auto const& [b, a, ba] : c.vertical_table().entries()) {
    if (local2[b] != kNone && local2[a] != kNone) out.set_vertical(local2[b], local2[a], local2[ba]);
  }
  for (auto const& [b, a, ba] : c.horizontal_table().entries()) {
    if (local2[b] != kNone && local2[a] != kNone) {
      out.set_horizontal(local2[b], local2[a], local2[ba]);
    }
  }
  return s;
}

}  // namespace tcat
