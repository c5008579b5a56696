#include "tcat/slices.hpp"

#include "tcat/dual.hpp"
#include "tcat/errors.hpp"

namespace tcat {

const char* to_string(Convention c) { return c == Convention::lax ? "lax" : "oplax"; }

std::optional<ObjectId> Slice::find_object(ObjectId c, OneCellId g) const {
  auto it = object_index.find({c, g});
  if (it == object_index.end()) return std::nullopt;
  return it->second;
}

std::optional<OneCellId> Slice::find_one_cell(ObjectId from, ObjectId to, OneCellId u,
                                              TwoCellId beta) const {
  auto it = one_cell_index.find({from, to, u, beta});
  if (it == one_cell_index.end()) return std::nullopt;
  return it->second;
}

std::optional<TwoCellId> Slice::find_two_cell(OneCellId from, OneCellId to,
                                              TwoCellId theta) const {
  auto it = two_cell_index.find({from, to, theta});
  if (it == two_cell_index.end()) return std::nullopt;
  return it->second;
}

namespace {

Slice build_slice(const TwoFunctor& f, const MarkedTwoCategory& cm, const TwoCategory& d,
                  ObjectId apex, Convention convention, bool name_by_cell) {
  const TwoCategory& c = cm.category;
  const bool lax = convention == Convention::lax;
  Slice s;
  s.convention = convention;
  s.apex = apex;
  TwoCategory& out = s.marked.category;
  out.set_name(c.name() + "_" + d.object_name(apex) + (lax ? "/lax" : "/oplax"));

  for (ObjectId x = 0; x < c.object_count(); ++x) {
    for (OneCellId g : d.hom(apex, f.objects[x])) {
      std::string name = name_by_cell ? d.one_cell(g).name
                                      : "(" + c.object_name(x) + "," + d.one_cell(g).name + ")";
      ObjectId o = out.add_object(name);
      s.objects.push_back({x, g});
      s.object_index[{x, g}] = o;
      OneCellId i = out.identity(o);
      TwoCellId ib = d.identity2(g);
      out.rename_one_cell(i, "id_" + name);
      s.one_cells.resize(out.one_cell_count());
      s.one_cells[i] = {c.identity(x), ib};
      s.one_cell_index[{o, o, c.identity(x), ib}] = i;
      s.two_cells.resize(out.two_cell_count());
      s.two_cells[out.identity2(i)] = c.identity2(c.identity(x));
      s.two_cell_index[{i, i, c.identity2(c.identity(x))}] = out.identity2(i);
    }
  }

  const int n = out.object_count();
  for (ObjectId p = 0; p < n; ++p) {
    auto [x, g] = s.objects[p];
    for (ObjectId q = 0; q < n; ++q) {
      auto [y, h] = s.objects[q];
      for (OneCellId u : c.hom(x, y)) {
        OneCellId fug = d.compose(f.one_cells[u], g);
        auto fillers = lax ? d.two_cells_between(h, fug) : d.two_cells_between(fug, h);
        for (TwoCellId beta : fillers) {
          if (p == q && u == c.identity(x) && beta == d.identity2(g)) continue;
          OneCellId k = out.add_one_cell(p, q, "(" + c.one_cell(u).name + "," +
                                                   d.two_cell(beta).name + ")");
          s.one_cells.resize(out.one_cell_count());
          s.one_cells[k] = {u, beta};
          s.one_cell_index[{p, q, u, beta}] = k;
          s.two_cells.resize(out.two_cell_count());
          s.two_cells[out.identity2(k)] = c.identity2(u);
          s.two_cell_index[{k, k, c.identity2(u)}] = out.identity2(k);
        }
      }
    }
  }

  // 2-cells θ: (u, β) => (v, γ) between the same objects.
  const int m = out.one_cell_count();
  for (OneCellId k = 0; k < m; ++k) {
    auto [u, beta] = s.one_cells[k];
    ObjectId p = out.source(k);
    OneCellId g = s.objects[p].second;
    for (OneCellId l : out.hom(p, out.target(k))) {
      auto [v, gamma] = s.one_cells[l];
      for (TwoCellId theta : c.two_cells_between(u, v)) {
        if (k == l && theta == c.identity2(u)) continue;
        TwoCellId whisk = d.whisker_right(f.two_cells[theta], g);
        bool ok = lax ? d.find_vertical(whisk, beta) == gamma
                      : d.find_vertical(gamma, whisk) == beta;
        if (!ok) continue;
        TwoCellId t = out.add_two_cell(k, l, c.two_cell(theta).name + ":" + out.one_cell(k).name +
                                                 "=>" + out.one_cell(l).name);
        s.two_cells.resize(out.two_cell_count());
        s.two_cells[t] = theta;
        s.two_cell_index[{k, l, theta}] = t;
      }
    }
  }

  // Composition of 1-cells: (u', β') ∘ (u, β).
  for (OneCellId k = 0; k < m; ++k) {
    auto [u, beta] = s.one_cells[k];
    ObjectId p = out.source(k);
    OneCellId g = s.objects[p].second;
    for (ObjectId r = 0; r < n; ++r) {
      for (OneCellId l : out.hom(out.target(k), r)) {
        auto [up, betap] = s.one_cells[l];
        OneCellId comp = c.compose(up, u);
        TwoCellId filler;
        if (lax) {
          filler = d.vertical(d.whisker_left(f.one_cells[up], beta), betap);
        } else {
          filler = d.vertical(betap, d.whisker_left(f.one_cells[up], beta));
        }
        (void)g;
        auto found = s.find_one_cell(p, r, comp, filler);
        if (!found) throw StructuralError("slice composite is missing");
        out.set_compose(l, k, *found);
      }
    }
  }

  const int t2 = out.two_cell_count();
  std::vector<std::vector<TwoCellId>> by_one(m);
  for (TwoCellId t = 0; t < t2; ++t) by_one[out.source2(t)].push_back(t);
  for (TwoCellId a = 0; a < t2; ++a) {
    OneCellId mid = out.target2(a);
    for (TwoCellId b : by_one[mid]) {
      TwoCellId carrier = c.vertical(s.two_cells[b], s.two_cells[a]);
      auto found = s.find_two_cell(out.source2(a), out.target2(b), carrier);
      if (!found) throw StructuralError("slice vertical composite is missing");
      out.set_vertical(b, a, *found);
    }
  }
  for (TwoCellId a = 0; a < t2; ++a) {
    OneCellId ka = out.source2(a);
    ObjectId y = out.target(ka);
    for (ObjectId r = 0; r < n; ++r) {
      for (OneCellId l : out.hom(y, r)) {
        for (TwoCellId b : by_one[l]) {
          TwoCellId carrier = c.horizontal(s.two_cells[b], s.two_cells[a]);
          OneCellId src = out.compose(out.source2(b), out.source2(a));
          OneCellId tgt = out.compose(out.target2(b), out.target2(a));
          auto found = s.find_two_cell(src, tgt, carrier);
          if (!found) throw StructuralError("slice horizontal composite is missing");
          out.set_horizontal(b, a, *found);
        }
      }
    }
  }

  std::vector<OneCellId> marked;
  for (OneCellId k = 0; k < m; ++k) {
    auto [u, beta] = s.one_cells[k];
    if (cm.marking.contains(u) && d.is_invertible2(beta)) marked.push_back(k);
  }
  s.marked.marking = Marking::of(out, marked);
  out.disambiguate_names();
  return s;
}

}  // namespace

Slice lax_slice(const TwoCategory& c, ObjectId apex) {
  return build_slice(identity_two_functor(c), minimal_marking(c), c, apex, Convention::lax, true);
}

Slice oplax_slice(const TwoCategory& c, ObjectId apex) {
  Slice s = lax_slice(dualize(c, DualMode::op2), apex);
  s.marked.category = dualize(s.marked.category, DualMode::op2);
  s.convention = Convention::oplax;
  std::map<std::tuple<OneCellId, OneCellId, TwoCellId>, TwoCellId> flipped;
  for (auto const& [key, t] : s.two_cell_index) {
    auto [from, to, theta] = key;
    flipped[{to, from, theta}] = t;
  }
  s.two_cell_index = std::move(flipped);
  TwoCategory& out = s.marked.category;
  for (TwoCellId t = 0; t < out.two_cell_count(); ++t) {
    if (out.is_identity2(t)) continue;
    out.rename_two_cell(t, c.two_cell(s.two_cells[t]).name + ":" +
                               out.one_cell(out.source2(t)).name + "=>" +
                               out.one_cell(out.target2(t)).name);
  }
  out.disambiguate_names();
  return s;
}

Slice marked_slice(const TwoFunctor& f, const MarkedTwoCategory& c, const TwoCategory& d,
                   ObjectId apex, Convention convention) {
  return build_slice(f, c, d, apex, convention, false);
}

TwoFunctor slice_forgetful(const Slice& s) {
  TwoFunctor u;
  for (auto const& [x, g] : s.objects) u.objects.push_back(x);
  for (auto const& [v, beta] : s.one_cells) u.one_cells.push_back(v);
  u.two_cells = s.two_cells;
  return u;
}

LaxFunctor slice_pushforward(const LaxFunctor& f, const TwoCategory& c, const TwoCategory& d,
                             const Slice& source, const Slice& target) {
  const TwoCategory& sc = source.category();
  const TwoCategory& tc = target.category();
  if (target.apex != f.objects.at(source.apex)) {
    throw PreconditionError("target slice is not taken at the image of the apex");
  }
  LaxFunctor p;
  for (auto const& [x, g] : source.objects) {
    auto o = target.find_object(f.objects[x], f.one_cells[g]);
    if (!o) throw StructuralError("image object missing from target slice");
    p.objects.push_back(*o);
  }
  for (OneCellId k = 0; k < sc.one_cell_count(); ++k) {
    auto [h, mu] = source.one_cells[k];
    OneCellId f1 = source.objects[sc.source(k)].second;
    TwoCellId filler = d.vertical(f.sigma(h, f1), f.two_cells[mu]);
    auto l = target.find_one_cell(p.objects[sc.source(k)], p.objects[sc.target(k)],
                                  f.one_cells[h], filler);
    if (!l) throw StructuralError("image 1-cell missing from target slice");
    p.one_cells.push_back(*l);
  }
  for (TwoCellId t = 0; t < sc.two_cell_count(); ++t) {
    auto l = target.find_two_cell(p.one_cells[sc.source2(t)], p.one_cells[sc.target2(t)],
                                  f.two_cells[source.two_cells[t]]);
    if (!l) throw StructuralError("image 2-cell missing from target slice");
    p.two_cells.push_back(*l);
  }
  for (auto const& [k2, k1, k21] : sc.compose_table().entries()) {
    OneCellId h2 = source.one_cells[k2].first;
    OneCellId h1 = source.one_cells[k1].first;
    OneCellId composite = tc.find_compose(p.one_cells[k2], p.one_cells[k1]);
    auto l = target.find_two_cell(p.one_cells[k21], composite, f.sigma(h2, h1));
    if (!l) throw StructuralError("compositor missing from target slice");
    p.compositor.set(k2, k1, *l);
  }
  (void)c;
  return p;
}

}  // namespace tcat
