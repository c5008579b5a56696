#include "tcat/functor.hpp"

#include "tcat/errors.hpp"

namespace tcat {

Functor identity_functor(const FiniteCategory& c) {
  Functor f;
  for (ObjectId x = 0; x < c.object_count(); ++x) f.objects.push_back(x);
  for (MorphismId m = 0; m < c.morphism_count(); ++m) f.morphisms.push_back(m);
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  Functor h;
  for (ObjectId x : f.objects) h.objects.push_back(g.objects.at(x));
  for (MorphismId m : f.morphisms) h.morphisms.push_back(g.morphisms.at(m));
  return h;
}

TwoFunctor identity_two_functor(const TwoCategory& c) {
  TwoFunctor f;
  for (ObjectId x = 0; x < c.object_count(); ++x) f.objects.push_back(x);
  for (OneCellId m = 0; m < c.one_cell_count(); ++m) f.one_cells.push_back(m);
  for (TwoCellId a = 0; a < c.two_cell_count(); ++a) f.two_cells.push_back(a);
  return f;
}

TwoFunctor compose(const TwoFunctor& g, const TwoFunctor& f) {
  TwoFunctor h;
  for (ObjectId x : f.objects) h.objects.push_back(g.objects.at(x));
  for (OneCellId m : f.one_cells) h.one_cells.push_back(g.one_cells.at(m));
  for (TwoCellId a : f.two_cells) h.two_cells.push_back(g.two_cells.at(a));
  return h;
}

LaxFunctor as_lax(const TwoFunctor& f, const TwoCategory& source, const TwoCategory& target) {
  LaxFunctor l{f.objects, f.one_cells, f.two_cells, {}};
  for (auto const& [g, h, gh] : source.compose_table().entries()) {
    l.compositor.set(g, h, target.identity2(f.one_cells.at(gh)));
  }
  return l;
}

LaxFunctor compose(const LaxFunctor& g, const LaxFunctor& f, const TwoCategory& a,
                   const TwoCategory& b, const TwoCategory& c) {
  LaxFunctor h;
  for (ObjectId x : f.objects) h.objects.push_back(g.objects.at(x));
  for (OneCellId m : f.one_cells) h.one_cells.push_back(g.one_cells.at(m));
  for (TwoCellId t : f.two_cells) h.two_cells.push_back(g.two_cells.at(t));
  for (auto const& [u, v, uv] : a.compose_table().entries()) {
    (void)uv;
    TwoCellId sf = f.sigma(u, v);
    if (sf == kNone) throw StructuralError("missing compositor in inner lax functor");
    TwoCellId sg = g.sigma(f.one_cells.at(u), f.one_cells.at(v));
    if (sg == kNone) throw StructuralError("missing compositor in outer lax functor");
    h.compositor.set(u, v, c.vertical(sg, g.two_cells.at(sf)));
  }
  (void)b;
  return h;
}

LaxFunctor lax_into_thin(const TwoCategory& source, const TwoCategory& target,
                         std::vector<ObjectId> objects, std::vector<OneCellId> one_cells) {
  auto unique_cell = [&](OneCellId x, OneCellId y) {
    auto cells = target.two_cells_between(x, y);
    if (cells.empty()) {
      throw PreconditionError("no 2-cell " + target.one_cell(x).name + " => " +
                              target.one_cell(y).name + " in target");
    }
    return cells.front();
  };
  LaxFunctor l;
  l.objects = std::move(objects);
  l.one_cells = std::move(one_cells);
  for (TwoCellId t = 0; t < source.two_cell_count(); ++t) {
    l.two_cells.push_back(unique_cell(l.one_cells.at(source.source2(t)),
                                      l.one_cells.at(source.target2(t))));
  }
  for (auto const& [g, f, gf] : source.compose_table().entries()) {
    OneCellId fg = target.find_compose(l.one_cells.at(g), l.one_cells.at(f));
    if (fg == kNone) throw StructuralError("target lacks a composite");
    l.compositor.set(g, f, unique_cell(l.one_cells.at(gf), fg));
  }
  return l;
}

}  // namespace tcat
