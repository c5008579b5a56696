#include "tcat/cofinality.hpp"

#include <algorithm>

#include "tcat/dual.hpp"
#include "tcat/equivalence.hpp"
#include "tcat/errors.hpp"
#include "tcat/grothendieck.hpp"
#include "tcat/validate.hpp"

namespace tcat {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::cofinal: return "cofinal";
    case Verdict::not_cofinal: return "not cofinal";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

LocalizedSlice localized_slice(const MarkedFunctor& f, ObjectId d, Convention convention,
                               const Limits& limits) {
  LocalizedSlice s;
  s.slice = marked_slice(f.functor, f.source, f.target.category, d, convention);
  s.ho = homotopy_category(s.slice.category());
  s.localized = localize(s.ho.category, homotopy_marking(s.ho, s.slice.marked.marking), limits);
  return s;
}

namespace {

MarkedFunctor identity_of(const MarkedTwoCategory& d) {
  return {"id", d, d, identity_two_functor(d.category)};
}

std::string prefix(ObjectId x, const TwoCategory& d) { return "at " + d.object_name(x) + ": "; }

TriState with_prefix(TriState t, const std::string& p) {
  switch (t.value()) {
    case TriState::Value::yes: return t;
    case TriState::Value::no: return TriState::no(p + t.reason());
    case TriState::Value::unknown: return TriState::unknown(p + t.reason());
  }
  return t;
}

/// Conditions 1-3 per object, plus whether some marked d -> f(c) exists.
struct Evaluation {
  std::vector<ConditionTrace> traces;
  std::vector<TriState> exists_marked;
};

Evaluation evaluate(const MarkedFunctor& f, const Limits& limits, Convention convention) {
  const TwoCategory& d = f.target.category;
  std::vector<LocalizedSlice> lc, ld;
  for (ObjectId x = 0; x < d.object_count(); ++x) {
    lc.push_back(localized_slice(f, x, convention, limits));
    ld.push_back(localized_slice(identity_of(f.target), x, convention, limits));
  }
  Evaluation ev;
  for (ObjectId x = 0; x < d.object_count(); ++x) {
    const LocalizedSlice& sc = lc[x];
    const LocalizedSlice& sd = ld[x];
    const int n = sc.slice.category().object_count();
    std::vector<TriState> initial;
    for (ObjectId o = 0; o < n; ++o) initial.push_back(is_initial(sc.localized, o));

    // Condition 1.
    TriState c1 = TriState::no("no morphism " + d.object_name(x) + " -> f(c) is initial in both slices");
    bool unknown1 = false;
    std::string unknown_reason;
    for (ObjectId o = 0; o < n && !c1.is_yes(); ++o) {
      auto [c, g] = sc.slice.objects[o];
      ObjectId od = *sd.slice.find_object(f.functor.objects[c], g);
      TriState both = initial[o] && is_initial(sd.localized, od);
      if (both.is_yes()) {
        c1 = TriState::yes(d.one_cell(g).name);
      } else if (both.is_unknown()) {
        unknown1 = true;
        unknown_reason = both.reason();
      }
    }
    if (!c1.is_yes() && unknown1) c1 = TriState::unknown(unknown_reason);
    ev.traces.push_back({x, "1", with_prefix(c1, prefix(x, d))});

    // Condition 2.
    TriState c2 = TriState::yes();
    bool any_marked = false;
    for (ObjectId o = 0; o < n; ++o) {
      OneCellId g = sc.slice.objects[o].second;
      if (!f.target.marking.contains(g)) continue;
      any_marked = true;
      TriState t = initial[o];
      if (t.is_no()) t = TriState::no(d.one_cell(g).name);
      else if (t.is_unknown()) t = TriState::unknown(d.one_cell(g).name + ": " + t.reason());
      c2 = c2 && t;
      if (c2.is_no()) break;
    }
    ev.traces.push_back({x, "2", with_prefix(c2, prefix(x, d))});
    ev.exists_marked.push_back(any_marked ? TriState::yes()
                                          : TriState::no("no marked morphism out of " + d.object_name(x)));

    // Condition 3: for marked u: b -> x, precomposition sends the initial
    // objects of the slice at x to initial objects of the slice at b.
    TriState c3 = TriState::yes();
    for (ObjectId b = 0; b < d.object_count() && !c3.is_no(); ++b) {
      for (OneCellId u : d.hom(b, x)) {
        if (d.is_identity(u) || !f.target.marking.contains(u)) continue;
        const LocalizedSlice& sb = lc[b];
        for (ObjectId o = 0; o < n; ++o) {
          if (initial[o].is_no()) continue;
          if (initial[o].is_unknown()) {
            c3 = c3 && TriState::unknown(initial[o].reason());
            continue;
          }
          auto [c, g] = sc.slice.objects[o];
          ObjectId image = *sb.slice.find_object(c, d.compose(g, u));
          TriState t = is_initial(sb.localized, image);
          if (t.is_no()) {
            t = TriState::no(d.one_cell(u).name + " sends initial " + d.one_cell(g).name +
                             " to non-initial " + d.one_cell(d.compose(g, u)).name);
          }
          c3 = c3 && t;
          if (c3.is_no()) break;
        }
        if (c3.is_no()) break;
      }
    }
    ev.traces.push_back({x, "3", with_prefix(c3, prefix(x, d))});
  }
  return ev;
}

}  // namespace

CofinalityReport check_decat_cofinality(const MarkedFunctor& f, const Limits& limits,
                                        Convention convention) {
  CofinalityReport r;
  r.convention = convention;
  r.limits = limits;
  r.note = "ho-level check; condition 3 compares localized slices of the source";
  Evaluation ev = evaluate(f, limits, convention);
  r.traces = ev.traces;
  bool unknown = false;
  for (ConditionTrace const& t : r.traces) {
    if (t.result.is_no()) {
      r.verdict = Verdict::not_cofinal;
      r.witness_object = t.object;
      r.witness_condition = t.condition;
      std::string reason = t.result.reason();
      std::string p = prefix(t.object, f.target.category);
      r.witness = reason.rfind(p, 0) == 0 ? reason.substr(p.size()) : reason;
      return r;
    }
    if (t.result.is_unknown()) unknown = true;
  }
  r.verdict = unknown ? Verdict::unknown : Verdict::cofinal;
  return r;
}

HypothesisReport check_adagger_hypotheses(const MarkedFunctor& f, const Limits& limits,
                                          Convention convention) {
  HypothesisReport r;
  r.convention = convention;
  r.note = "ho-level evidence only; the statement concerns the infinity-categorical localizations";
  Evaluation ev = evaluate(f, limits, convention);
  const TwoCategory& d = f.target.category;
  for (ConditionTrace const& t : ev.traces) {
    r.traces.push_back(t);
    r.theorem = r.theorem && t.result;
    if (t.condition == "2") {
      r.traces.push_back({t.object, "cor.2", t.result});
      r.corollary = r.corollary && t.result;
    }
  }
  for (ObjectId x = 0; x < d.object_count(); ++x) {
    TriState c = with_prefix(ev.exists_marked[x], prefix(x, d));
    r.traces.push_back({x, "cor.1", c});
    r.corollary = r.corollary && c;
  }
  std::stable_sort(r.traces.begin(), r.traces.end(),
                   [](const ConditionTrace& a, const ConditionTrace& b) { return a.object < b.object; });
  return r;
}

namespace {

TwoFunctor discrete_functor(const Functor& f, const TwoCategory& source, const TwoCategory& target) {
  TwoFunctor g;
  g.objects = f.objects;
  g.one_cells = f.morphisms;
  for (TwoCellId t = 0; t < source.two_cell_count(); ++t) {
    g.two_cells.push_back(target.identity2(f.morphisms[source.source2(t)]));
  }
  return g;
}

FiniteCategory opposite(const FiniteCategory& c) {
  return underlying_category(dualize(locally_discrete(c), DualMode::op1));
}

}  // namespace

Coslice coslice(const Functor& f, const FiniteCategory& c, const FiniteCategory& d, ObjectId apex) {
  TwoCategory lc = locally_discrete(c), ldd = locally_discrete(d);
  Slice s = marked_slice(discrete_functor(f, lc, ldd), minimal_marking(lc), ldd, apex, Convention::lax);
  Coslice out;
  out.category = underlying_category(s.category());
  for (auto const& [x, g] : s.objects) out.objects.push_back({x, g});
  for (auto const& [u, beta] : s.one_cells) out.carriers.push_back(u);
  return out;
}

WeakFiber weak_fiber(const Functor& f, const FiniteCategory& c, const FiniteCategory& d,
                     ObjectId apex) {
  WeakFiber w;
  w.coslice = coslice(f, c, d, apex);
  std::vector<ObjectId> keep;
  for (ObjectId o = 0; o < w.coslice.category.object_count(); ++o) {
    if (d.is_isomorphism(w.coslice.objects[o].second)) keep.push_back(o);
  }
  w.fiber = full_subcategory(w.coslice.category, keep);
  return w;
}

TriState check_quillen_a(const Functor& f, const FiniteCategory& c, const FiniteCategory& d,
                         const Limits& limits) {
  TriState all = TriState::yes();
  for (ObjectId x = 0; x < d.object_count(); ++x) {
    Coslice cs = coslice(f, c, d, x);
    std::string p = "at " + d.object_name(x) + ": ";
    if (cs.category.object_count() == 0) return TriState::no(p + "empty coslice");
    std::vector<MorphismId> every(cs.category.morphism_count());
    for (MorphismId m = 0; m < cs.category.morphism_count(); ++m) every[m] = m;
    LocalizedCategory l = localize(cs.category, every, limits);
    for (ObjectId o = 0; o < cs.category.object_count(); ++o) {
      all = all && with_prefix(is_initial(l, o), p);
      if (all.is_no()) return all;
    }
  }
  return all;
}

TriState check_walde(const Functor& f, const FiniteCategory& c, const FiniteCategory& d,
                     const std::vector<std::vector<std::pair<ObjectId, MorphismId>>>& family,
                     const Limits& limits) {
  if (static_cast<int>(family.size()) != d.object_count()) {
    throw PreconditionError("one subcategory is needed per object of the target");
  }
  TriState all = TriState::yes();
  for (ObjectId x = 0; x < d.object_count(); ++x) {
    std::string p = "at " + d.object_name(x) + ": ";
    Coslice cs = coslice(f, c, d, x);
    std::vector<ObjectId> members;
    for (auto const& [obj, g] : family[x]) {
      if (!d.is_isomorphism(g)) {
        throw PreconditionError(p + d.morphism(g).name + " is not invertible, so it is outside the weak fiber");
      }
      auto it = std::find(cs.objects.begin(), cs.objects.end(), std::make_pair(obj, g));
      if (it == cs.objects.end()) throw PreconditionError(p + "subcategory member is not a coslice object");
      members.push_back(static_cast<ObjectId>(it - cs.objects.begin()));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) return TriState::no(p + "empty subcategory, no marked morphism exists");
    Subcategory b = full_subcategory(cs.category, members);
    const FiniteCategory& bc = b.category;
    bool certified = false;
    for (ObjectId o = 0; o < bc.object_count() && !certified; ++o) {
      bool init = true, term = true;
      for (ObjectId y = 0; y < bc.object_count(); ++y) {
        init = init && bc.hom(o, y).size() == 1;
        term = term && bc.hom(y, o).size() == 1;
      }
      certified = init || term;
    }
    TriState contractible =
        certified ? TriState::yes() : TriState::unknown(p + "no initial or terminal object certifies contractibility");
    Functor inclusion{b.object_in_parent, b.morphism_in_parent};
    TriState coinitial = check_quillen_a(inclusion, opposite(bc), opposite(cs.category), limits);
    all = all && contractible && with_prefix(coinitial, p + "inclusion into the coslice, ");
    if (all.is_no()) return all;
  }
  return all;
}

namespace {

/// Maps El of a functor valued in hom categories D(d, -) onto the slice.
bool el_matches_slice(const GrothendieckTotal& el, const Slice& s, const TwoCategory& d, ObjectId apex,
                      const std::vector<ObjectId>& image_object, const MarkedTwoCategory& base) {
  const TwoCategory& e = el.category();
  const TwoCategory& t = s.category();
  if (e.object_count() != t.object_count() || e.one_cell_count() != t.one_cell_count() ||
      e.two_cell_count() != t.two_cell_count()) {
    return false;
  }
  std::vector<HomCategory> homs;
  for (ObjectId x = 0; x < base.category.object_count(); ++x) {
    homs.push_back(hom_category(d, apex, image_object[x]));
  }
  TwoFunctor g;
  for (ObjectId o = 0; o < e.object_count(); ++o) {
    auto [c, x] = el.objects[o];
    auto found = s.find_object(c, homs[c].one_cell_of_object[x]);
    if (!found) return false;
    g.objects.push_back(*found);
  }
  for (OneCellId k = 0; k < e.one_cell_count(); ++k) {
    auto [u, phi] = el.one_cells[k];
    ObjectId c2 = base.category.target(u);
    auto found = s.find_one_cell(g.objects[e.source(k)], g.objects[e.target(k)], u,
                                 homs[c2].two_cell_of_morphism[phi]);
    if (!found) return false;
    g.one_cells.push_back(*found);
  }
  for (TwoCellId a = 0; a < e.two_cell_count(); ++a) {
    auto found = s.find_two_cell(g.one_cells[e.source2(a)], g.one_cells[e.target2(a)], el.two_cells[a]);
    if (!found) return false;
    g.two_cells.push_back(*found);
  }
  auto injective = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!injective(g.objects) || !injective(g.one_cells) || !injective(g.two_cells)) return false;
  if (!validate(g, e, t).ok()) return false;
  for (OneCellId k = 0; k < e.one_cell_count(); ++k) {
    if (el.marked.marking.contains(k) != s.marked.marking.contains(g.one_cells[k])) return false;
  }
  return true;
}

}  // namespace

ProbeReport representable_probe(const MarkedFunctor& f, ObjectId d, const Limits& limits) {
  const TwoCategory& dd = f.target.category;
  if (d < 0 || d >= dd.object_count()) throw StructuralError("unknown object for the probe");
  ProbeReport r;
  r.object = d;
  CatValuedFunctor rep = representable(f.target, d);
  MarkedFunctor id = identity_of(f.target);
  Slice sd = marked_slice(id.functor, f.target, dd, d, Convention::oplax);
  std::vector<ObjectId> same(dd.object_count());
  for (ObjectId x = 0; x < dd.object_count(); ++x) same[x] = x;
  r.target_el_matches = el_matches_slice(grothendieck(rep), sd, dd, d, same, f.target);
  Slice sc = marked_slice(f.functor, f.source, dd, d, Convention::oplax);
  r.source_el_matches = el_matches_slice(grothendieck(restrict(rep, f.functor, f.source)), sc, dd, d,
                                         f.functor.objects, f.source);

  LocalizedSlice lc = localized_slice(f, d, Convention::oplax, limits);
  LocalizedSlice ld = localized_slice(id, d, Convention::oplax, limits);
  if (lc.localized.status != Status::complete || ld.localized.status != Status::complete) {
    std::string why = lc.localized.status != Status::complete ? lc.localized.reason : ld.localized.reason;
    r.equivalent = TriState::unknown(why);
    r.induced_equivalence = TriState::unknown(why);
    return r;
  }
  MaterializedLocalization mc = materialize(lc.localized);
  MaterializedLocalization md = materialize(ld.localized);
  r.source_classes = iso_class_count(mc.category);
  r.target_classes = iso_class_count(md.category);
  r.equivalent = are_equivalent(mc.category, md.category);

  Functor on_ho;
  const TwoCategory& cs = lc.slice.category();
  for (ObjectId o = 0; o < cs.object_count(); ++o) {
    auto [c, g] = lc.slice.objects[o];
    on_ho.objects.push_back(*ld.slice.find_object(f.functor.objects[c], g));
  }
  for (MorphismId m = 0; m < lc.ho.category.morphism_count(); ++m) {
    OneCellId k = lc.ho.representative[m];
    auto [u, beta] = lc.slice.one_cells[k];
    OneCellId image = *ld.slice.find_one_cell(on_ho.objects[cs.source(k)], on_ho.objects[cs.target(k)],
                                              f.functor.one_cells[u], beta);
    on_ho.morphisms.push_back(ld.ho.class_of[image]);
  }
  try {
    Functor induced = induced_functor(on_ho, lc.localized, mc, ld.localized, md);
    r.induced_equivalence = is_equivalence(induced, mc.category, md.category)
                                ? TriState::yes()
                                : TriState::no("the induced functor is not an equivalence");
  } catch (const PreconditionError& e) {
    r.induced_equivalence = TriState::unknown(e.what());
  }
  return r;
}

}  // namespace tcat
