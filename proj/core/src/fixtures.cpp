#include "tcat/fixtures.hpp"

#include "tcat/errors.hpp"
#include "tcat/shapes.hpp"

namespace tcat::fixtures {

TwoCategory terminal() {
  TwoCategory t("terminal");
  t.add_object("*");
  return t;
}

TwoCategory walking_isomorphism() {
  FiniteCategory c("walking_iso");
  ObjectId a = c.add_object("a");
  ObjectId b = c.add_object("b");
  MorphismId f = c.add_morphism(a, b, "f");
  MorphismId g = c.add_morphism(b, a, "g");
  c.set_composite(g, f, c.identity(a));
  c.set_composite(f, g, c.identity(b));
  c.complete_unit_laws();
  return locally_discrete(c);
}

TwoCategory three_object_two_category() {
  TwoCategory c("three_object");
  ObjectId a = c.add_object("a");
  ObjectId b = c.add_object("b");
  ObjectId x = c.add_object("c");
  OneCellId f = c.add_one_cell(a, b, "f");
  OneCellId g = c.add_one_cell(b, x, "g");
  OneCellId h = c.add_one_cell(a, x, "h");
  c.set_compose(g, f, h);
  TwoCellId t = c.add_two_cell(h, h, "t");
  c.set_vertical(t, t, t);
  c.complete_unit_laws();
  return c;
}

MarkedTwoCategory interval_2_diamond() {
  TwoCategory c = interval(2);
  c.set_name("[2]^diamond");
  return {c, Marking::of(c, {*c.find_one_cell("0->1"), *c.find_one_cell("0->2")})};
}

MarkedTwoCategory interval_2_sharp() {
  TwoCategory c = interval(2);
  c.set_name("[2]^sharp");
  return maximal_marking(c);
}

std::vector<std::string> two_category_names() {
  return {"terminal", "interval_0", "interval_1", "interval_2", "interval_3",
          "oseg_0",   "oseg_1",     "oseg_2",     "oseg_3",     "walking_iso",
          "three_object", "interval_2_diamond", "interval_2_sharp"};
}

MarkedTwoCategory two_category(const std::string& name) {
  for (int n = 0; n <= 3; ++n) {
    if (name == "interval_" + std::to_string(n)) return minimal_marking(interval(n));
    if (name == "oseg_" + std::to_string(n)) return minimal_marking(oseg(n).category);
  }
  if (name == "terminal") return minimal_marking(terminal());
  if (name == "walking_iso") return minimal_marking(walking_isomorphism());
  if (name == "three_object") return minimal_marking(three_object_two_category());
  if (name == "interval_2_diamond") return interval_2_diamond();
  if (name == "interval_2_sharp") return interval_2_sharp();
  throw PreconditionError("unknown two_category fixture '" + name + "'");
}

MarkedFunctor diamond_to_sharp() {
  MarkedTwoCategory s = interval_2_diamond();
  return {"diamond_to_sharp", s, interval_2_sharp(), identity_two_functor(s.category)};
}

namespace {

TwoFunctor discrete_map(const TwoCategory& source, const TwoCategory& target,
                        std::vector<ObjectId> objects) {
  TwoFunctor f;
  f.objects = std::move(objects);
  for (OneCellId u = 0; u < source.one_cell_count(); ++u) {
    if (!source.is_identity(u)) throw PreconditionError("only identity 1-cells are mapped here");
    f.one_cells.push_back(target.identity(f.objects[source.identity_object(u)]));
  }
  for (TwoCellId a = 0; a < source.two_cell_count(); ++a) {
    f.two_cells.push_back(target.identity2(f.one_cells[source.source2(a)]));
  }
  return f;
}

}  // namespace

MarkedFunctor terminal_inclusion() {
  MarkedTwoCategory s = maximal_marking(interval(0));
  MarkedTwoCategory t = maximal_marking(interval(1));
  return {"terminal_inclusion", s, t, discrete_map(s.category, t.category, {1})};
}

MarkedFunctor isolated_object() {
  MarkedTwoCategory s = minimal_marking(interval(0));
  TwoCategory d("discrete_2");
  d.add_object("0", "0->0");
  d.add_object("1", "1->1");
  d.complete_unit_laws();
  MarkedTwoCategory t = maximal_marking(d);
  return {"isolated_object", s, t, discrete_map(s.category, t.category, {0})};
}

MarkedFunctor zero_into_interval() {
  MarkedTwoCategory s = maximal_marking(interval(0));
  MarkedTwoCategory t = maximal_marking(interval(1));
  return {"zero_into_interval", s, t, discrete_map(s.category, t.category, {0})};
}

std::vector<std::string> marked_functor_names() {
  return {"diamond_to_sharp", "terminal_inclusion", "isolated_object", "zero_into_interval"};
}

MarkedFunctor marked_functor(const std::string& name) {
  if (name == "diamond_to_sharp") return diamond_to_sharp();
  if (name == "terminal_inclusion") return terminal_inclusion();
  if (name == "isolated_object") return isolated_object();
  if (name == "zero_into_interval") return zero_into_interval();
  throw PreconditionError("unknown functor fixture '" + name + "'");
}

namespace {

CatValuedFunctor adjunction_over(MarkedTwoCategory source) {
  FiniteCategory c = interval_category(1);
  FiniteCategory d = interval_category(0);
  CatValuedFunctor t;
  t.source = std::move(source);
  t.categories = {d, c, d};
  const TwoCategory& s = t.source.category;
  Functor r{{1}, {c.identity(1)}};
  Functor l{{0, 0}, {d.identity(0), d.identity(0), d.identity(0)}};
  for (OneCellId u = 0; u < s.one_cell_count(); ++u) {
    ObjectId a = s.source(u), b = s.target(u);
    if (a == b) {
      t.one_cells.push_back(identity_functor(t.categories[a]));
    } else if (a == 0 && b == 1) {
      t.one_cells.push_back(r);
    } else if (a == 1 && b == 2) {
      t.one_cells.push_back(l);
    } else {
      t.one_cells.push_back(identity_functor(d));
    }
  }
  for (TwoCellId x = 0; x < s.two_cell_count(); ++x) {
    const Functor& f = t.one_cells[s.source2(x)];
    const FiniteCategory& target = t.categories[s.target(s.source2(x))];
    NaturalTransformation id;
    for (ObjectId o : f.objects) id.components.push_back(target.identity(o));
    t.two_cells.push_back(id);
  }
  return t;
}

}  // namespace

CatValuedFunctor adjunction_T() { return adjunction_over(interval_2_diamond()); }
CatValuedFunctor adjunction_T_sharp() { return adjunction_over(interval_2_sharp()); }

CatCocone adjunction_cocone() {
  CatValuedFunctor t = adjunction_T();
  const TwoCategory& s = t.source.category;
  FiniteCategory c = interval_category(1);
  MorphismId up = *c.find_morphism("0->1");
  Functor r{{1}, {c.identity(1)}};
  CatCocone k;
  k.tip = c;
  k.legs = {r, identity_functor(c), r};
  for (OneCellId u = 0; u < s.one_cell_count(); ++u) {
    ObjectId a = s.source(u), b = s.target(u);
    if (a == 1 && b == 2) {
      k.fillers.push_back({{up, c.identity(1)}});
    } else {
      NaturalTransformation id;
      for (ObjectId o : k.legs[a].objects) id.components.push_back(c.identity(o));
      k.fillers.push_back(id);
    }
  }
  return k;
}

std::vector<std::string> cat_valued_functor_names() { return {"adjunction_T", "adjunction_T_sharp"}; }

CatValuedFunctor cat_valued_functor(const std::string& name) {
  if (name == "adjunction_T") return adjunction_T();
  if (name == "adjunction_T_sharp") return adjunction_T_sharp();
  throw PreconditionError("unknown cat_valued_functor fixture '" + name + "'");
}

std::vector<std::string> category_names() { return {"point", "interval"}; }

FiniteCategory category(const std::string& name) {
  if (name == "point") return interval_category(0);
  if (name == "interval") return interval_category(1);
  throw PreconditionError("unknown category fixture '" + name + "'");
}

}  // namespace tcat::fixtures
