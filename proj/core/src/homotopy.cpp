#include "tcat/homotopy.hpp"

#include <algorithm>
#include <numeric>

namespace tcat {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

HomotopyCategory homotopy_category(const TwoCategory& c) {
  std::vector<int> parent(c.one_cell_count());
  std::iota(parent.begin(), parent.end(), 0);
  for (TwoCellId a = 0; a < c.two_cell_count(); ++a) {
    int x = find_root(parent, c.source2(a));
    int y = find_root(parent, c.target2(a));
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  HomotopyCategory h;
  h.category.set_name("ho(" + c.name() + ")");
  h.class_of.assign(c.one_cell_count(), kNone);
  std::vector<MorphismId> of_root(c.one_cell_count(), kNone);
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    OneCellId i = c.identity(x);
    h.category.add_object(c.object_name(x), c.one_cell(i).name);
    of_root[find_root(parent, i)] = h.category.identity(x);
    h.representative.push_back(i);
  }
  for (OneCellId f = 0; f < c.one_cell_count(); ++f) {
    int root = find_root(parent, f);
    if (of_root[root] == kNone) {
      of_root[root] = h.category.add_morphism(c.source(root), c.target(root),
                                              c.one_cell(root).name);
      h.representative.push_back(root);
    }
    h.class_of[f] = of_root[root];
  }
  for (MorphismId m = 0; m < h.category.morphism_count(); ++m) {
    for (MorphismId n = 0; n < h.category.morphism_count(); ++n) {
      if (h.category.target(m) != h.category.source(n)) continue;
      OneCellId r = c.find_compose(h.representative[n], h.representative[m]);
      if (r != kNone) h.category.set_composite(n, m, h.class_of[r]);
    }
  }
  return h;
}

Functor homotopy_functor(const TwoFunctor& f, const HomotopyCategory& source,
                         const HomotopyCategory& target) {
  Functor g;
  g.objects = f.objects;
  for (MorphismId m = 0; m < source.category.morphism_count(); ++m) {
    g.morphisms.push_back(target.class_of.at(f.one_cells.at(source.representative[m])));
  }
  return g;
}

std::vector<MorphismId> homotopy_marking(const HomotopyCategory& h, const Marking& marking) {
  std::vector<MorphismId> out;
  for (OneCellId f : marking.cells()) out.push_back(h.class_of.at(f));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tcat
