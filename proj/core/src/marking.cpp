#include "tcat/marking.hpp"

namespace tcat {

Marking Marking::identities(const TwoCategory& c) {
  Marking m;
  for (ObjectId x = 0; x < c.object_count(); ++x) m.cells_.insert(c.identity(x));
  return m;
}

Marking Marking::all(const TwoCategory& c) {
  Marking m;
  for (OneCellId f = 0; f < c.one_cell_count(); ++f) m.cells_.insert(f);
  return m;
}

Marking Marking::of(const TwoCategory& c, const std::vector<OneCellId>& cells) {
  Marking m = identities(c);
  for (OneCellId f : cells) m.cells_.insert(f);
  return m;
}

MarkedTwoCategory minimal_marking(TwoCategory c) {
  Marking m = Marking::identities(c);
  return {std::move(c), std::move(m)};
}

MarkedTwoCategory maximal_marking(TwoCategory c) {
  Marking m = Marking::all(c);
  return {std::move(c), std::move(m)};
}

namespace {

bool composition_closed(const MarkedTwoCategory& c) {
  for (auto const& [g, f, gf] : c.category.compose_table().entries()) {
    if (c.marking.contains(g) && c.marking.contains(f) && !c.marking.contains(gf)) return false;
  }
  return true;
}

bool contains_all_equivalences(const MarkedTwoCategory& c) {
  for (OneCellId f = 0; f < c.category.one_cell_count(); ++f) {
    if (!c.marking.contains(f) && is_equivalence(c.category, f)) return false;
  }
  return true;
}

}  // namespace

MarkingFlags marking_flags(const MarkedTwoCategory& c) {
  return {composition_closed(c), contains_all_equivalences(c)};
}

bool is_equivalence(const TwoCategory& c, OneCellId f) {
  ObjectId a = c.source(f);
  ObjectId b = c.target(f);
  for (OneCellId g : c.hom(b, a)) {
    OneCellId gf = c.find_compose(g, f);
    OneCellId fg = c.find_compose(f, g);
    if (gf == kNone || fg == kNone) continue;
    if (c.find_invertible2(gf, c.identity(a)) && c.find_invertible2(fg, c.identity(b))) {
      return true;
    }
  }
  return false;
}

MarkedTwoCategory widen(const MarkedTwoCategory& c) {
  MarkedTwoCategory w = c;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto const& [g, f, gf] : w.category.compose_table().entries()) {
      if (w.marking.contains(g) && w.marking.contains(f) && !w.marking.contains(gf)) {
        w.marking.insert(gf);
        changed = true;
      }
    }
  }
  return w;
}

bool is_saturated(const MarkedTwoCategory& c) {
  if (!composition_closed(c) || !contains_all_equivalences(c)) return false;
  for (OneCellId f : c.marking.cells()) {
    ObjectId a = c.category.source(f);
    ObjectId b = c.category.target(f);
    for (OneCellId g : c.category.hom(a, b)) {
      if (!c.marking.contains(g) && c.category.find_invertible2(f, g)) return false;
    }
  }
  return true;
}

bool preserves_marking(const TwoFunctor& f, const MarkedTwoCategory& source,
                       const MarkedTwoCategory& target) {
  for (OneCellId m : source.marking.cells()) {
    if (!target.marking.contains(f.one_cells.at(m))) return false;
  }
  return true;
}

}  // namespace tcat
