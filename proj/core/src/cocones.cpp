#include "tcat/cocones.hpp"

#include <algorithm>

#include "tcat/enumerate.hpp"
#include "tcat/errors.hpp"
#include "tcat/validate.hpp"

namespace tcat {

bool CoconeReport::cites(int condition) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const CoconeViolation& v) { return v.condition == condition; });
}

std::string CoconeReport::summary() const {
  if (violations.empty()) return "ok";
  std::string out;
  for (CoconeViolation const& v : violations) {
    out += "condition " + std::to_string(v.condition) + ": " + v.message + "\n";
  }
  return out;
}

namespace {

void check_ids(const TwoFunctor& f, const TwoCategory& c, const TwoCategory& a,
               const MarkedCocone& k) {
  if (static_cast<int>(f.objects.size()) != c.object_count() ||
      static_cast<int>(f.one_cells.size()) != c.one_cell_count() ||
      static_cast<int>(f.two_cells.size()) != c.two_cell_count()) {
    throw StructuralError("functor tables do not match the source");
  }
  if (k.tip < 0 || k.tip >= a.object_count()) throw StructuralError("cocone tip is not an object");
  if (static_cast<int>(k.legs.size()) != c.object_count() ||
      static_cast<int>(k.fillers.size()) != c.one_cell_count()) {
    throw StructuralError("cocone needs one leg per object and one filler per 1-cell");
  }
  for (OneCellId l : k.legs) {
    if (l < 0 || l >= a.one_cell_count()) throw StructuralError("cocone leg " + std::to_string(l) + " is dangling");
  }
  for (TwoCellId t : k.fillers) {
    if (t < 0 || t >= a.two_cell_count()) throw StructuralError("cocone filler " + std::to_string(t) + " is dangling");
  }
}

}  // namespace

CoconeReport check_marked_cocone(const TwoFunctor& f, const MarkedTwoCategory& cm,
                                 const TwoCategory& a, const MarkedCocone& k) {
  const TwoCategory& c = cm.category;
  check_ids(f, c, a, k);
  CoconeReport r;
  auto fail = [&](int cond, std::string msg) { r.violations.push_back({cond, std::move(msg)}); };
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    OneCellId l = k.legs[x];
    if (a.source(l) != f.objects[x] || a.target(l) != k.tip) {
      fail(0, "leg at " + c.object_name(x) + " has the wrong endpoints");
    }
  }
  if (!r.ok()) return r;
  for (OneCellId u = 0; u < c.one_cell_count(); ++u) {
    TwoCellId t = k.fillers[u];
    OneCellId want = a.find_compose(k.legs[c.target(u)], f.one_cells[u]);
    if (a.source2(t) != k.legs[c.source(u)] || a.target2(t) != want) {
      fail(0, "filler over " + c.one_cell(u).name + " has the wrong endpoints");
    }
  }
  if (!r.ok()) return r;
  for (OneCellId u = 0; u < c.one_cell_count(); ++u) {
    if (cm.marking.contains(u) && !a.is_invertible2(k.fillers[u])) {
      fail(1, "filler over marked " + c.one_cell(u).name + " is not invertible");
    }
    if (c.is_identity(u) && k.fillers[u] != a.identity2(k.legs[c.source(u)])) {
      fail(2, "filler over identity " + c.one_cell(u).name + " is not an identity");
    }
  }
  for (auto const& [v, u, vu] : c.compose_table().entries()) {
    TwoCellId lhs = a.vertical(a.whisker_right(k.fillers[v], f.one_cells[u]), k.fillers[u]);
    if (lhs != k.fillers[vu]) {
      fail(2, "fillers over " + c.one_cell(v).name + " and " + c.one_cell(u).name +
                  " do not compose to the filler over their composite");
    }
  }
  for (TwoCellId b = 0; b < c.two_cell_count(); ++b) {
    if (c.is_identity2(b)) continue;
    OneCellId u = c.source2(b), w = c.target2(b);
    TwoCellId lhs = a.vertical(a.whisker_left(k.legs[c.target(u)], f.two_cells[b]), k.fillers[u]);
    if (lhs != k.fillers[w]) {
      fail(3, "fillers over " + c.one_cell(u).name + " and " + c.one_cell(w).name +
                  " are not related by " + c.two_cell(b).name);
    }
  }
  return r;
}

CoconeReport check_cocone_morphism(const TwoFunctor& f, const TwoCategory& c,
                                   const TwoCategory& a, const MarkedCocone& alpha,
                                   const MarkedCocone& beta, const CoconeMorphism& m) {
  CoconeReport r;
  auto fail = [&](std::string msg) { r.violations.push_back({0, std::move(msg)}); };
  if (m.theta < 0 || m.theta >= a.one_cell_count() ||
      static_cast<int>(m.components.size()) != c.object_count()) {
    throw StructuralError("cocone morphism data is dangling");
  }
  if (a.source(m.theta) != alpha.tip || a.target(m.theta) != beta.tip) {
    fail("theta does not connect the tips");
    return r;
  }
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    TwoCellId e = m.components[x];
    if (e < 0 || e >= a.two_cell_count()) throw StructuralError("cocone morphism component is dangling");
    if (a.source2(e) != a.compose(m.theta, alpha.legs[x]) || a.target2(e) != beta.legs[x]) {
      fail("component at " + c.object_name(x) + " has the wrong endpoints");
    }
  }
  if (!r.ok()) return r;
  for (OneCellId u = 0; u < c.one_cell_count(); ++u) {
    ObjectId x = c.source(u), y = c.target(u);
    TwoCellId lhs = a.vertical(beta.fillers[u], m.components[x]);
    TwoCellId rhs = a.vertical(a.whisker_right(m.components[y], f.one_cells[u]),
                               a.whisker_left(m.theta, alpha.fillers[u]));
    if (lhs != rhs) fail("square over " + c.one_cell(u).name + " does not commute");
  }
  return r;
}

bool is_marked(const CoconeMorphism& m, const TwoCategory& a) {
  return std::all_of(m.components.begin(), m.components.end(),
                     [&](TwoCellId e) { return a.is_invertible2(e); });
}

std::size_t enumerate_marked_cocones(const TwoFunctor& f, const MarkedTwoCategory& cm,
                                     const TwoCategory& a,
                                     const std::function<bool(const MarkedCocone&)>& visit,
                                     const CoconeSearch& search) {
  const TwoCategory& c = cm.category;
  const int n1 = c.one_cell_count();
  // Constraints are checked as soon as their largest 1-cell is assigned.
  std::vector<std::vector<std::tuple<OneCellId, OneCellId, OneCellId>>> composites(n1);
  for (auto const& [v, u, vu] : c.compose_table().entries()) {
    composites[std::max({v, u, vu})].push_back({v, u, vu});
  }
  std::vector<std::vector<TwoCellId>> twos(n1);
  for (TwoCellId b = 0; b < c.two_cell_count(); ++b) {
    if (!c.is_identity2(b)) twos[std::max(c.source2(b), c.target2(b))].push_back(b);
  }
  std::size_t visited = 0, examined = 0;
  bool stop = false;
  MarkedCocone k;
  k.legs.assign(c.object_count(), kNone);
  k.fillers.assign(n1, kNone);

  std::function<void(int)> fill = [&](int u) {
    if (stop) return;
    if (u == n1) {
      ++visited;
      if (!visit(k)) stop = true;
      return;
    }
    OneCellId src = k.legs[c.source(u)];
    std::vector<TwoCellId> candidates;
    if (c.is_identity(u)) {
      candidates.push_back(a.identity2(src));
    } else {
      OneCellId tgt = a.find_compose(k.legs[c.target(u)], f.one_cells[u]);
      if (tgt == kNone) return;
      for (TwoCellId t : a.two_cells_between(src, tgt)) {
        if (cm.marking.contains(u) && !a.is_invertible2(t)) continue;
        candidates.push_back(t);
      }
    }
    for (TwoCellId t : candidates) {
      if (++examined > search.budget) throw ResourceError("cocone search budget exceeded", visited);
      k.fillers[u] = t;
      bool ok = true;
      for (auto const& [v, w, vw] : composites[u]) {
        if (a.vertical(a.whisker_right(k.fillers[v], f.one_cells[w]), k.fillers[w]) != k.fillers[vw]) {
          ok = false;
          break;
        }
      }
      for (TwoCellId b : twos[u]) {
        if (!ok) break;
        OneCellId s = c.source2(b);
        TwoCellId lhs = a.vertical(a.whisker_left(k.legs[c.target(s)], f.two_cells[b]), k.fillers[s]);
        if (lhs != k.fillers[c.target2(b)]) ok = false;
      }
      if (ok) fill(u + 1);
      if (stop) return;
    }
    k.fillers[u] = kNone;
  };

  std::function<void(int)> legs = [&](int x) {
    if (stop) return;
    if (x == c.object_count()) {
      fill(0);
      return;
    }
    for (OneCellId l : a.hom(f.objects[x], k.tip)) {
      if (++examined > search.budget) throw ResourceError("cocone search budget exceeded", visited);
      k.legs[x] = l;
      legs(x + 1);
      if (stop) return;
    }
  };

  for (ObjectId tip = 0; tip < a.object_count() && !stop; ++tip) {
    if (search.tip != kNone && tip != search.tip) continue;
    k.tip = tip;
    legs(0);
  }
  return visited;
}

std::size_t enumerate_cocone_morphisms(const TwoFunctor& f, const TwoCategory& c,
                                       const TwoCategory& a, const MarkedCocone& alpha,
                                       const MarkedCocone& beta,
                                       const std::function<bool(const CoconeMorphism&)>& visit) {
  std::size_t visited = 0;
  bool stop = false;
  for (OneCellId theta : a.hom(alpha.tip, beta.tip)) {
    CoconeMorphism m;
    m.theta = theta;
    m.components.assign(c.object_count(), kNone);
    std::function<void(int)> go = [&](int x) {
      if (stop) return;
      if (x == c.object_count()) {
        if (check_cocone_morphism(f, c, a, alpha, beta, m).ok()) {
          ++visited;
          if (!visit(m)) stop = true;
        }
        return;
      }
      OneCellId from = a.find_compose(theta, alpha.legs[x]);
      if (from == kNone) return;
      for (TwoCellId e : a.two_cells_between(from, beta.legs[x])) {
        m.components[x] = e;
        go(x + 1);
        if (stop) return;
      }
    };
    go(0);
    if (stop) break;
  }
  return visited;
}

CoconeReport check_marked_cocone(const CatValuedFunctor& f, const CatCocone& k) {
  const TwoCategory& c = f.source.category;
  CoconeReport r;
  auto fail = [&](int cond, std::string msg) { r.violations.push_back({cond, std::move(msg)}); };
  if (static_cast<int>(k.legs.size()) != c.object_count() ||
      static_cast<int>(k.fillers.size()) != c.one_cell_count()) {
    throw StructuralError("cocone needs one leg per object and one filler per 1-cell");
  }
  const FiniteCategory& x = k.tip;
  for (ObjectId o = 0; o < c.object_count(); ++o) {
    if (!validate(k.legs[o], f.categories[o], x).ok()) {
      fail(0, "leg at " + c.object_name(o) + " is not a functor");
    }
  }
  if (!r.ok()) return r;
  std::vector<Functor> target(c.one_cell_count());
  for (OneCellId u = 0; u < c.one_cell_count(); ++u) {
    target[u] = compose(k.legs[c.target(u)], f.one_cells[u]);
    if (!validate(k.fillers[u], k.legs[c.source(u)], target[u], f.categories[c.source(u)], x).ok()) {
      fail(0, "filler over " + c.one_cell(u).name + " is not a natural transformation");
    }
  }
  if (!r.ok()) return r;
  for (OneCellId u = 0; u < c.one_cell_count(); ++u) {
    const auto& comps = k.fillers[u].components;
    if (f.source.marking.contains(u)) {
      for (MorphismId m : comps) {
        if (!x.is_isomorphism(m)) {
          fail(1, "filler over marked " + c.one_cell(u).name + " is not invertible");
          break;
        }
      }
    }
    if (c.is_identity(u)) {
      for (MorphismId m : comps) {
        if (!x.is_identity(m)) {
          fail(2, "filler over identity " + c.one_cell(u).name + " is not an identity");
          break;
        }
      }
    }
  }
  for (auto const& [v, u, vu] : c.compose_table().entries()) {
    const FiniteCategory& fc = f.categories[c.source(u)];
    for (ObjectId o = 0; o < fc.object_count(); ++o) {
      ObjectId fuo = f.one_cells[u].objects[o];
      if (x.compose(k.fillers[v].components[fuo], k.fillers[u].components[o]) !=
          k.fillers[vu].components[o]) {
        fail(2, "fillers over " + c.one_cell(v).name + " and " + c.one_cell(u).name +
                    " do not compose at " + fc.object_name(o));
        break;
      }
    }
  }
  for (TwoCellId b = 0; b < c.two_cell_count(); ++b) {
    if (c.is_identity2(b)) continue;
    OneCellId u = c.source2(b), w = c.target2(b);
    const FiniteCategory& fc = f.categories[c.source(u)];
    const Functor& leg = k.legs[c.target(u)];
    for (ObjectId o = 0; o < fc.object_count(); ++o) {
      MorphismId lhs = x.compose(leg.morphisms[f.two_cells[b].components[o]], k.fillers[u].components[o]);
      if (lhs != k.fillers[w].components[o]) {
        fail(3, "fillers over " + c.one_cell(u).name + " and " + c.one_cell(w).name +
                    " are not related by " + c.two_cell(b).name);
        break;
      }
    }
  }
  return r;
}

OneCellId CatFragment::find_functor(ObjectId a, ObjectId b, const Functor& f) const {
  auto it = functor_index.find({a, b, f.objects, f.morphisms});
  return it == functor_index.end() ? kNone : it->second;
}

TwoCellId CatFragment::find_transformation(OneCellId from, OneCellId to,
                                           const NaturalTransformation& t) const {
  auto it = transformation_index.find({from, to, t.components});
  return it == transformation_index.end() ? kNone : it->second;
}

namespace {

std::string functor_name(const FiniteCategory& a, const FiniteCategory& b, const Functor& f) {
  std::string out = "[";
  for (ObjectId x = 0; x < a.object_count(); ++x) {
    if (x) out += ",";
    out += b.object_name(f.objects[x]);
  }
  return out + "]";
}

std::string transformation_name(const FiniteCategory& b, const NaturalTransformation& t) {
  std::string out = "<";
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    if (i) out += ",";
    out += b.morphism(t.components[i]).name;
  }
  return out + ">";
}

}  // namespace

CatFragment cat_fragment(const std::vector<FiniteCategory>& cats, std::size_t budget) {
  CatFragment fr;
  fr.categories = cats;
  TwoCategory& out = fr.category;
  out.set_name("Cat");
  const int n = static_cast<int>(cats.size());
  std::size_t cells = 0;
  auto count = [&] {
    if (++cells > budget) throw ResourceError("Cat fragment budget exceeded", cells);
  };
  for (int a = 0; a < n; ++a) {
    std::string name = cats[a].name().empty() ? "C" + std::to_string(a) : cats[a].name();
    ObjectId o = out.add_object(name, "id_" + name);
    Functor id = identity_functor(cats[a]);
    OneCellId i = out.identity(o);
    fr.functors.resize(out.one_cell_count());
    fr.functors[i] = id;
    fr.functor_index[{a, a, id.objects, id.morphisms}] = i;
    count();
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      enumerate_functors(cats[a], cats[b], [&](const Functor& f) {
        if (fr.find_functor(a, b, f) != kNone) return true;
        count();
        OneCellId k = out.add_one_cell(a, b, functor_name(cats[a], cats[b], f));
        fr.functors.resize(out.one_cell_count());
        fr.functors[k] = f;
        fr.functor_index[{a, b, f.objects, f.morphisms}] = k;
        return true;
      });
    }
  }
  const int m = out.one_cell_count();
  fr.transformations.resize(out.two_cell_count());
  for (OneCellId k = 0; k < m; ++k) {
    const FiniteCategory& tb = cats[out.target(k)];
    NaturalTransformation id;
    for (ObjectId x : fr.functors[k].objects) id.components.push_back(tb.identity(x));
    fr.transformations.resize(out.two_cell_count());
    fr.transformations[out.identity2(k)] = id;
    fr.transformation_index[{k, k, id.components}] = out.identity2(k);
  }
  for (OneCellId k = 0; k < m; ++k) {
    ObjectId a = out.source(k), b = out.target(k);
    for (OneCellId l : out.hom(a, b)) {
      enumerate_natural_transformations(cats[a], cats[b], fr.functors[k], fr.functors[l],
                                        [&](const NaturalTransformation& t) {
        if (fr.find_transformation(k, l, t) != kNone) return true;
        count();
        TwoCellId s = out.add_two_cell(k, l, transformation_name(cats[b], t));
        fr.transformations.resize(out.two_cell_count());
        fr.transformations[s] = t;
        fr.transformation_index[{k, l, t.components}] = s;
        return true;
      });
    }
  }
  for (OneCellId f = 0; f < m; ++f) {
    for (ObjectId c = 0; c < n; ++c) {
      for (OneCellId g : out.hom(out.target(f), c)) {
        Functor gf = compose(fr.functors[g], fr.functors[f]);
        out.set_compose(g, f, fr.find_functor(out.source(f), c, gf));
      }
    }
  }
  const int t2 = out.two_cell_count();
  for (TwoCellId s = 0; s < t2; ++s) {
    ObjectId a = out.source(out.source2(s)), b = out.target(out.source2(s));
    for (TwoCellId t = 0; t < t2; ++t) {
      if (out.source2(t) == out.target2(s)) {
        NaturalTransformation v;
        for (ObjectId x = 0; x < cats[a].object_count(); ++x) {
          v.components.push_back(cats[b].compose(fr.transformations[t].components[x],
                                                 fr.transformations[s].components[x]));
        }
        out.set_vertical(t, s, fr.find_transformation(out.source2(s), out.target2(t), v));
      }
      OneCellId f0 = out.source2(s), f1 = out.target2(s);
      OneCellId g0 = out.source2(t), g1 = out.target2(t);
      if (out.source(g0) != b) continue;
      ObjectId c = out.target(g0);
      // (t * s)_x = t_{f1 x} ∘ g0(s_x).
      NaturalTransformation h;
      for (ObjectId x = 0; x < cats[a].object_count(); ++x) {
        h.components.push_back(cats[c].compose(
            fr.transformations[t].components[fr.functors[f1].objects[x]],
            fr.functors[g0].morphisms[fr.transformations[s].components[x]]));
      }
      out.set_horizontal(t, s, fr.find_transformation(out.compose(g0, f0), out.compose(g1, f1), h));
    }
  }
  out.disambiguate_names();
  return fr;
}

TwoFunctor embed(const CatValuedFunctor& f, const CatFragment& fr,
                 const std::vector<ObjectId>& object_map) {
  const TwoCategory& c = f.source.category;
  TwoFunctor g;
  g.objects = object_map;
  for (OneCellId u = 0; u < c.one_cell_count(); ++u) {
    OneCellId k = fr.find_functor(object_map[c.source(u)], object_map[c.target(u)], f.one_cells[u]);
    if (k == kNone) throw StructuralError("functor image is missing from the fragment");
    g.one_cells.push_back(k);
  }
  for (TwoCellId t = 0; t < c.two_cell_count(); ++t) {
    TwoCellId k = fr.find_transformation(g.one_cells[c.source2(t)], g.one_cells[c.target2(t)],
                                         f.two_cells[t]);
    if (k == kNone) throw StructuralError("transformation image is missing from the fragment");
    g.two_cells.push_back(k);
  }
  return g;
}

MarkedCocone embed(const CatCocone& cocone, const CatValuedFunctor& f, const CatFragment& fr,
                   const std::vector<ObjectId>& object_map, ObjectId tip) {
  const TwoCategory& c = f.source.category;
  TwoFunctor g = embed(f, fr, object_map);
  MarkedCocone k;
  k.tip = tip;
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    OneCellId l = fr.find_functor(object_map[x], tip, cocone.legs[x]);
    if (l == kNone) throw StructuralError("cocone leg is missing from the fragment");
    k.legs.push_back(l);
  }
  for (OneCellId u = 0; u < c.one_cell_count(); ++u) {
    OneCellId to = fr.category.compose(k.legs[c.target(u)], g.one_cells[u]);
    TwoCellId t = fr.find_transformation(k.legs[c.source(u)], to, cocone.fillers[u]);
    if (t == kNone) throw StructuralError("cocone filler is missing from the fragment");
    k.fillers.push_back(t);
  }
  return k;
}

MarkedColimit marked_colimit(const CatValuedFunctor& f, const Limits& limits) {
  MarkedColimit out;
  out.el = grothendieck(f);
  out.ho = homotopy_category(out.el.category());
  out.marking = homotopy_marking(out.ho, out.el.marked.marking);
  out.localized = localize(out.ho.category, out.marking, limits);
  if (out.localized.status != Status::complete) return out;

  MaterializedLocalization m = materialize(out.localized);
  const TwoCategory& c = f.source.category;
  auto image = [&](OneCellId el_cell) { return m.unit.morphisms[out.ho.class_of[el_cell]]; };
  CatCocone k;
  k.tip = m.category;
  for (ObjectId a = 0; a < c.object_count(); ++a) {
    const FiniteCategory& fa = f.categories[a];
    Functor leg;
    for (ObjectId x = 0; x < fa.object_count(); ++x) leg.objects.push_back(*out.el.find_object(a, x));
    for (MorphismId phi = 0; phi < fa.morphism_count(); ++phi) {
      ObjectId p = leg.objects[fa.source(phi)], q = leg.objects[fa.target(phi)];
      leg.morphisms.push_back(image(*out.el.find_one_cell(p, q, c.identity(a), phi)));
    }
    k.legs.push_back(std::move(leg));
  }
  for (OneCellId u = 0; u < c.one_cell_count(); ++u) {
    ObjectId a = c.source(u), b = c.target(u);
    const FiniteCategory& fb = f.categories[b];
    NaturalTransformation t;
    for (ObjectId x = 0; x < f.categories[a].object_count(); ++x) {
      ObjectId y = f.one_cells[u].objects[x];
      OneCellId cell = *out.el.find_one_cell(*out.el.find_object(a, x), *out.el.find_object(b, y), u,
                                            fb.identity(y));
      t.components.push_back(image(cell));
    }
    k.fillers.push_back(std::move(t));
  }
  out.canonical = std::move(k);
  return out;
}

}  // namespace tcat
