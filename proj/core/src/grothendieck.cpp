#include "tcat/grothendieck.hpp"

#include <string>

#include "tcat/errors.hpp"

namespace tcat {

namespace {

void add(ValidationReport& r, ViolationKind kind, std::string message) {
  r.violations.push_back({kind, std::move(message)});
}

}  // namespace

ValidationReport validate(const CatValuedFunctor& f) {
  const TwoCategory& c = f.source.category;
  ValidationReport r = validate(f.source);
  if (static_cast<int>(f.categories.size()) != c.object_count() ||
      static_cast<int>(f.one_cells.size()) != c.one_cell_count() ||
      static_cast<int>(f.two_cells.size()) != c.two_cell_count()) {
    throw StructuralError("functor tables do not match the source cell counts");
  }
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    for (Violation const& v : validate(f.categories[x]).violations) {
      add(r, v.kind, "F(" + c.object_name(x) + "): " + v.message);
    }
  }
  if (!r.ok()) return r;
  for (OneCellId u = 0; u < c.one_cell_count(); ++u) {
    const FiniteCategory& a = f.categories[c.source(u)];
    const FiniteCategory& b = f.categories[c.target(u)];
    ValidationReport fu = validate(f.one_cells[u], a, b);
    for (Violation const& v : fu.violations) {
      add(r, v.kind, "F(" + c.one_cell(u).name + "): " + v.message);
    }
    if (fu.ok() && c.is_identity(u) && !(f.one_cells[u] == identity_functor(a))) {
      add(r, ViolationKind::unit, "F(" + c.one_cell(u).name + ") is not the identity functor");
    }
  }
  if (!r.ok()) return r;
  for (auto const& [g, h, gh] : c.compose_table().entries()) {
    if (!(compose(f.one_cells[g], f.one_cells[h]) == f.one_cells[gh])) {
      add(r, ViolationKind::functoriality,
          "F(" + c.one_cell(g).name + " o " + c.one_cell(h).name + ") differs from the composite");
    }
  }
  for (TwoCellId t = 0; t < c.two_cell_count(); ++t) {
    OneCellId u = c.source2(t), v = c.target2(t);
    const FiniteCategory& a = f.categories[c.source(u)];
    const FiniteCategory& b = f.categories[c.target(u)];
    ValidationReport ft = validate(f.two_cells[t], f.one_cells[u], f.one_cells[v], a, b);
    for (Violation const& vi : ft.violations) {
      add(r, vi.kind, "F(" + c.two_cell(t).name + "): " + vi.message);
    }
    if (ft.ok() && c.is_identity2(t)) {
      for (ObjectId x = 0; x < a.object_count(); ++x) {
        if (f.two_cells[t].components[x] != b.identity(f.one_cells[u].objects[x])) {
          add(r, ViolationKind::unit, "F(" + c.two_cell(t).name + ") is not an identity");
          break;
        }
      }
    }
  }
  if (!r.ok()) return r;
  for (auto const& [q, p, qp] : c.vertical_table().entries()) {
    const FiniteCategory& a = f.categories[c.source(c.source2(p))];
    const FiniteCategory& b = f.categories[c.target(c.source2(p))];
    for (ObjectId x = 0; x < a.object_count(); ++x) {
      if (b.compose(f.two_cells[q].components[x], f.two_cells[p].components[x]) !=
          f.two_cells[qp].components[x]) {
        add(r, ViolationKind::functoriality,
            "F(" + c.two_cell(q).name + " . " + c.two_cell(p).name + ") differs at " +
                a.object_name(x));
        break;
      }
    }
  }
  for (auto const& [q, p, qp] : c.horizontal_table().entries()) {
    // p: h => h' over x -> y, q: g => g' over y -> z.
    OneCellId hp = c.target2(p), g = c.source2(q);
    const FiniteCategory& a = f.categories[c.source(hp)];
    const FiniteCategory& e = f.categories[c.target(g)];
    const Functor& fhp = f.one_cells[hp];
    const Functor& fg = f.one_cells[g];
    for (ObjectId x = 0; x < a.object_count(); ++x) {
      MorphismId want = e.compose(f.two_cells[q].components[fhp.objects[x]],
                                  fg.morphisms[f.two_cells[p].components[x]]);
      if (want != f.two_cells[qp].components[x]) {
        add(r, ViolationKind::functoriality,
            "F(" + c.two_cell(q).name + " * " + c.two_cell(p).name + ") differs at " +
                a.object_name(x));
        break;
      }
    }
  }
  return r;
}

CatValuedFunctor constant_functor(const MarkedTwoCategory& source, const FiniteCategory& value) {
  CatValuedFunctor f;
  f.source = source;
  const TwoCategory& c = source.category;
  f.categories.assign(c.object_count(), value);
  f.one_cells.assign(c.one_cell_count(), identity_functor(value));
  NaturalTransformation id;
  for (ObjectId x = 0; x < value.object_count(); ++x) id.components.push_back(value.identity(x));
  f.two_cells.assign(c.two_cell_count(), id);
  return f;
}

CatValuedFunctor representable(const MarkedTwoCategory& dm, ObjectId apex) {
  const TwoCategory& d = dm.category;
  CatValuedFunctor f;
  f.source = dm;
  std::vector<HomCategory> homs;
  for (ObjectId x = 0; x < d.object_count(); ++x) {
    homs.push_back(hom_category(d, apex, x));
    homs.back().category.set_name(d.object_name(apex) + "->" + d.object_name(x));
    f.categories.push_back(homs.back().category);
  }
  for (OneCellId u = 0; u < d.one_cell_count(); ++u) {
    const HomCategory& a = homs[d.source(u)];
    const HomCategory& b = homs[d.target(u)];
    Functor fu;
    for (OneCellId g : a.one_cell_of_object) {
      fu.objects.push_back(b.object_of_one_cell.at(d.compose(u, g)));
    }
    for (TwoCellId beta : a.two_cell_of_morphism) {
      fu.morphisms.push_back(b.morphism_of_two_cell.at(d.whisker_left(u, beta)));
    }
    f.one_cells.push_back(std::move(fu));
  }
  for (TwoCellId t = 0; t < d.two_cell_count(); ++t) {
    OneCellId u = d.source2(t);
    const HomCategory& a = homs[d.source(u)];
    const HomCategory& b = homs[d.target(u)];
    NaturalTransformation n;
    for (OneCellId g : a.one_cell_of_object) {
      n.components.push_back(b.morphism_of_two_cell.at(d.whisker_right(t, g)));
    }
    f.two_cells.push_back(std::move(n));
  }
  return f;
}

CatValuedFunctor restrict(const CatValuedFunctor& f, const TwoFunctor& g,
                          const MarkedTwoCategory& source) {
  CatValuedFunctor r;
  r.source = source;
  const TwoCategory& c = source.category;
  for (ObjectId x = 0; x < c.object_count(); ++x) r.categories.push_back(f.categories.at(g.objects[x]));
  for (OneCellId u = 0; u < c.one_cell_count(); ++u) r.one_cells.push_back(f.one_cells.at(g.one_cells[u]));
  for (TwoCellId t = 0; t < c.two_cell_count(); ++t) r.two_cells.push_back(f.two_cells.at(g.two_cells[t]));
  return r;
}

std::optional<ObjectId> GrothendieckTotal::find_object(ObjectId c, ObjectId x) const {
  auto it = object_index.find({c, x});
  if (it == object_index.end()) return std::nullopt;
  return it->second;
}

std::optional<OneCellId> GrothendieckTotal::find_one_cell(ObjectId from, ObjectId to, OneCellId u,
                                                          MorphismId phi) const {
  auto it = one_cell_index.find({from, to, u, phi});
  if (it == one_cell_index.end()) return std::nullopt;
  return it->second;
}

GrothendieckTotal grothendieck(const CatValuedFunctor& f) {
  const TwoCategory& c = f.source.category;
  GrothendieckTotal el;
  TwoCategory& out = el.marked.category;
  out.set_name("El(" + c.name() + ")");
  std::vector<TwoCellId>& carrier = el.two_cells;
  std::map<std::tuple<OneCellId, OneCellId, TwoCellId>, TwoCellId> two_index;

  for (ObjectId a = 0; a < c.object_count(); ++a) {
    const FiniteCategory& fa = f.categories[a];
    for (ObjectId x = 0; x < fa.object_count(); ++x) {
      std::string name = "(" + c.object_name(a) + "," + fa.object_name(x) + ")";
      ObjectId o = out.add_object(name);
      el.objects.push_back({a, x});
      el.object_index[{a, x}] = o;
      OneCellId i = out.identity(o);
      MorphismId idx = fa.identity(x);
      out.rename_one_cell(i, "(" + c.one_cell(c.identity(a)).name + "," + fa.morphism(idx).name + ")");
      el.one_cells.resize(out.one_cell_count());
      el.one_cells[i] = {c.identity(a), idx};
      el.one_cell_index[{o, o, c.identity(a), idx}] = i;
      carrier.resize(out.two_cell_count());
      carrier[out.identity2(i)] = c.identity2(c.identity(a));
      two_index[{i, i, c.identity2(c.identity(a))}] = out.identity2(i);
    }
  }

  const int n = out.object_count();
  for (ObjectId p = 0; p < n; ++p) {
    auto [a, x] = el.objects[p];
    for (ObjectId q = 0; q < n; ++q) {
      auto [b, y] = el.objects[q];
      for (OneCellId u : c.hom(a, b)) {
        const FiniteCategory& fb = f.categories[b];
        for (MorphismId phi : fb.hom(f.one_cells[u].objects[x], y)) {
          if (p == q && u == c.identity(a) && phi == fb.identity(y)) continue;
          OneCellId k = out.add_one_cell(p, q, "(" + c.one_cell(u).name + "," + fb.morphism(phi).name + ")");
          el.one_cells.resize(out.one_cell_count());
          el.one_cells[k] = {u, phi};
          el.one_cell_index[{p, q, u, phi}] = k;
          carrier.resize(out.two_cell_count());
          carrier[out.identity2(k)] = c.identity2(u);
          two_index[{k, k, c.identity2(u)}] = out.identity2(k);
        }
      }
    }
  }

  const int m = out.one_cell_count();
  for (OneCellId k = 0; k < m; ++k) {
    auto [u, phi] = el.one_cells[k];
    ObjectId x = el.objects[out.source(k)].second;
    const FiniteCategory& fb = f.categories[c.target(u)];
    for (OneCellId l : out.hom(out.source(k), out.target(k))) {
      auto [v, psi] = el.one_cells[l];
      for (TwoCellId theta : c.two_cells_between(u, v)) {
        if (k == l && theta == c.identity2(u)) continue;
        if (fb.compose(psi, f.two_cells[theta].components[x]) != phi) continue;
        TwoCellId t = out.add_two_cell(k, l, c.two_cell(theta).name + ":" + out.one_cell(k).name +
                                                 "=>" + out.one_cell(l).name);
        carrier.resize(out.two_cell_count());
        carrier[t] = theta;
        two_index[{k, l, theta}] = t;
      }
    }
  }

  for (OneCellId k = 0; k < m; ++k) {
    auto [u, phi] = el.one_cells[k];
    ObjectId p = out.source(k);
    for (ObjectId r = 0; r < n; ++r) {
      for (OneCellId l : out.hom(out.target(k), r)) {
        auto [up, phip] = el.one_cells[l];
        const FiniteCategory& fr = f.categories[c.target(up)];
        MorphismId comp = fr.compose(phip, f.one_cells[up].morphisms[phi]);
        auto found = el.find_one_cell(p, r, c.compose(up, u), comp);
        if (!found) throw StructuralError("El composite is missing");
        out.set_compose(l, k, *found);
      }
    }
  }

  const int t2 = out.two_cell_count();
  auto lookup2 = [&](OneCellId from, OneCellId to, TwoCellId theta) {
    auto it = two_index.find({from, to, theta});
    if (it == two_index.end()) throw StructuralError("El 2-cell composite is missing");
    return it->second;
  };
  for (TwoCellId s = 0; s < t2; ++s) {
    for (TwoCellId t = 0; t < t2; ++t) {
      if (out.target2(s) == out.source2(t)) {
        out.set_vertical(t, s, lookup2(out.source2(s), out.target2(t),
                                       c.vertical(carrier[t], carrier[s])));
      }
      OneCellId s0 = out.source2(s), t0 = out.source2(t);
      if (out.target(s0) == out.source(t0)) {
        out.set_horizontal(t, s, lookup2(out.compose(t0, s0),
                                         out.compose(out.target2(t), out.target2(s)),
                                         c.horizontal(carrier[t], carrier[s])));
      }
    }
  }

  out.disambiguate_names();
  el.marked.marking = Marking::identities(out);
  for (OneCellId k = 0; k < m; ++k) {
    auto [u, phi] = el.one_cells[k];
    if (f.source.marking.contains(u) && f.categories[c.target(u)].is_isomorphism(phi)) {
      el.marked.marking.insert(k);
    }
  }

  for (ObjectId p = 0; p < n; ++p) el.projection.objects.push_back(el.objects[p].first);
  for (OneCellId k = 0; k < m; ++k) el.projection.one_cells.push_back(el.one_cells[k].first);
  el.projection.two_cells = carrier;
  return el;
}

}  // namespace tcat
