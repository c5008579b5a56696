#include "doctest.h"

#include "support/generators.hpp"
#include "tcat/cofinality.hpp"
#include "tcat/dual.hpp"
#include "tcat/enumerate.hpp"
#include "tcat/errors.hpp"
#include "tcat/fixtures.hpp"
#include "tcat/grothendieck.hpp"
#include "tcat/validate.hpp"

using namespace tcat;

namespace {

MarkedFunctor identity_of(const MarkedTwoCategory& c) {
  return {"id", c, c, identity_two_functor(c.category)};
}

/// Inclusion of the full sub-2-category on objects, with the restricted marking.
MarkedFunctor inclusion(const MarkedTwoCategory& d, const std::vector<ObjectId>& objects) {
  SubTwoCategory sub = full_subcategory(d.category, objects);
  Marking m;
  for (OneCellId k = 0; k < sub.category.one_cell_count(); ++k) {
    if (d.marking.contains(sub.one_cell_in_parent[k])) m.insert(k);
  }
  return {"incl", {sub.category, m}, d,
          TwoFunctor{sub.object_in_parent, sub.one_cell_in_parent, sub.two_cell_in_parent}};
}

MarkedFunctor random_inclusion(testing::Rng& rng, const MarkedTwoCategory& d) {
  std::vector<ObjectId> keep;
  for (ObjectId x = 0; x < d.category.object_count(); ++x) {
    if (rng.chance(0.6)) keep.push_back(x);
  }
  if (keep.empty()) keep.push_back(0);
  return inclusion(d, keep);
}

MarkedFunctor widened(const MarkedFunctor& f) {
  return {f.name, widen(f.source), widen(f.target), f.functor};
}

/// The functor underlying a locally discrete marked functor.
Functor underlying(const MarkedFunctor& f) { return {f.functor.objects, f.functor.one_cells}; }

bool decided(Verdict v) { return v != Verdict::unknown; }

}  // namespace

TEST_CASE("identity functors are cofinal") {
  for (const auto& name : fixtures::two_category_names()) {
    CAPTURE(name);
    MarkedFunctor id = identity_of(fixtures::two_category(name));
    CofinalityReport r = check_decat_cofinality(id);
    CHECK(r.verdict == Verdict::cofinal);
    CHECK(r.traces.size() == 3 * static_cast<std::size_t>(id.target.category.object_count()));
    HypothesisReport h = check_adagger_hypotheses(id);
    CHECK(h.theorem.is_yes());
    CHECK(h.corollary.is_yes());
    for (ObjectId d = 0; d < id.target.category.object_count(); ++d) {
      ProbeReport p = representable_probe(id, d);
      CHECK(p.equivalent.is_yes());
      CHECK(p.induced_equivalence.is_yes());
    }
  }
  testing::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    CofinalityReport r = check_decat_cofinality(identity_of(testing::random_marked_two_category(rng, 4, 10)));
    CHECK(r.verdict != Verdict::not_cofinal);
  }
}

TEST_CASE("the diamond inclusion is not cofinal") {
  MarkedFunctor f = fixtures::diamond_to_sharp();
  REQUIRE(validate(f.functor, f.source, f.target).ok());
  CofinalityReport r = check_decat_cofinality(f);
  CHECK(r.verdict == Verdict::not_cofinal);
  CHECK(r.witness_object == *f.target.category.find_object("1"));
  CHECK(r.witness_condition == "2");
  CHECK(r.witness == "1->2");
  CHECK(r.convention == Convention::oplax);
  CHECK(r.limits == Limits{});

  ProbeReport p = representable_probe(f, 1);
  CHECK(p.target_el_matches);
  CHECK(p.source_el_matches);
  CHECK(p.source_classes == 2);
  CHECK(p.target_classes == 1);
  CHECK(p.equivalent.is_no());
  CHECK(p.induced_equivalence.is_no());
}

TEST_CASE("fixture functors") {
  CHECK(check_decat_cofinality(fixtures::terminal_inclusion()).verdict == Verdict::cofinal);

  HypothesisReport h = check_adagger_hypotheses(fixtures::isolated_object());
  CHECK(h.corollary.is_no());
  bool cited = false;
  for (const ConditionTrace& t : h.traces) {
    if (t.condition == "cor.1" && t.result.is_no()) {
      cited = true;
      CHECK(t.object == 1);
    }
  }
  CHECK(cited);
  CHECK(check_decat_cofinality(fixtures::isolated_object()).verdict == Verdict::not_cofinal);
  CHECK(check_adagger_hypotheses(fixtures::zero_into_interval()).corollary.is_no());

  for (const auto& name : fixtures::marked_functor_names()) {
    MarkedFunctor f = fixtures::marked_functor(name);
    CAPTURE(name);
    CHECK(validate(f.functor, f.source, f.target).ok());
    CofinalityReport a = check_decat_cofinality(f);
    CofinalityReport b = check_decat_cofinality(f);
    CHECK(a.verdict == b.verdict);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("identity initiality in lax slices") {
  testing::Rng rng(32);
  int categories = 0, marked = 0, complete = 0;
  for (int trial = 0; trial < 60; ++trial) {
    MarkedTwoCategory c = testing::random_marked_two_category(rng, 4, 10);
    ++categories;
    MarkedFunctor id = identity_of(c);
    for (ObjectId d = 0; d < c.category.object_count(); ++d) {
      LocalizedSlice s = localized_slice(id, d, Convention::lax, Limits{});
      for (ObjectId o = 0; o < s.slice.category().object_count(); ++o) {
        OneCellId g = s.slice.objects[o].second;
        if (!c.marking.contains(g)) continue;
        ++marked;
        TriState t = is_initial(s.localized, o);
        CHECK_FALSE(t.is_no());
        if (s.localized.status == Status::complete) {
          ++complete;
          CHECK(t.is_yes());
        }
      }
    }
  }
  CHECK(categories >= 50);
  CHECK(complete > marked / 2);
}

TEST_CASE("cofinal verdicts agree with the probe") {
  testing::Rng rng(33);
  int cofinal = 0, not_cofinal = 0;
  auto check = [&](const MarkedFunctor& f) {
    CofinalityReport r = check_decat_cofinality(f);
    for (ObjectId d = 0; d < f.target.category.object_count(); ++d) {
      ProbeReport p = representable_probe(f, d);
      CHECK(p.target_el_matches);
      CHECK(p.source_el_matches);
      if (r.verdict == Verdict::cofinal) CHECK_FALSE(p.equivalent.is_no());
    }
    cofinal += r.verdict == Verdict::cofinal;
    not_cofinal += r.verdict == Verdict::not_cofinal;
  };
  for (const auto& name : fixtures::marked_functor_names()) check(fixtures::marked_functor(name));
  for (int trial = 0; trial < 40; ++trial) {
    check(random_inclusion(rng, testing::random_marked_two_category(rng, 4, 10)));
  }
  CHECK(cofinal > 5);
  CHECK(not_cofinal > 5);
}

TEST_CASE("widening does not change decided verdicts") {
  testing::Rng rng(34);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    MarkedFunctor f = random_inclusion(rng, testing::random_marked_two_category(rng, 4, 10));
    MarkedFunctor w = widened(f);
    REQUIRE(validate(w.functor, w.source, w.target).ok());
    CofinalityReport a = check_decat_cofinality(f);
    CofinalityReport b = check_decat_cofinality(w);
    if (!decided(a.verdict) || !decided(b.verdict)) continue;
    ++compared;
    CHECK(a.verdict == b.verdict);
  }
  CHECK(compared > 20);
  MarkedFunctor d = fixtures::diamond_to_sharp();
  CHECK(check_decat_cofinality(widened(d)).verdict == Verdict::not_cofinal);
}

TEST_CASE("hypotheses on the adjunction example") {
  GrothendieckTotal el = grothendieck(fixtures::adjunction_T());
  std::vector<ObjectId> low;
  for (ObjectId o = 0; o < el.category().object_count(); ++o) {
    if (el.objects[o].first <= 1) low.push_back(o);
  }
  MarkedFunctor f = inclusion(el.marked, low);
  f.source = dualize(f.source, DualMode::op1);
  f.target = dualize(f.target, DualMode::op1);
  REQUIRE(validate(f.functor, f.source, f.target).ok());

  HypothesisReport h = check_adagger_hypotheses(f);
  CHECK(h.convention == Convention::lax);
  CHECK(h.theorem.is_yes());
  CHECK(h.corollary.is_yes());
  CHECK(h.note.find("ho-level") != std::string::npos);

  // Objects in the image have id_d initial in both slices.
  for (std::size_t i = 0; i < low.size(); ++i) {
    ObjectId d = f.functor.objects[i];
    LocalizedSlice sc = localized_slice(f, d, Convention::lax, Limits{});
    LocalizedSlice sd = localized_slice(identity_of(f.target), d, Convention::lax, Limits{});
    OneCellId id = f.target.category.identity(d);
    CHECK(is_initial(sc.localized, *sc.slice.find_object(static_cast<ObjectId>(i), id)).is_yes());
    CHECK(is_initial(sd.localized, *sd.slice.find_object(d, id)).is_yes());
  }
  // Over (2, ∗) every marked morphism is initial, among them the one over 1->2 from (1, 1).
  ObjectId top = *el.find_object(2, 0);
  LocalizedSlice s = localized_slice(f, top, Convention::lax, Limits{});
  REQUIRE(s.localized.status == Status::complete);
  OneCellId u12 = el.category().hom(*el.find_object(1, 1), top)[0];
  bool found = false;
  for (ObjectId o = 0; o < s.slice.category().object_count(); ++o) {
    if (s.slice.objects[o].second != u12) continue;
    found = true;
    CHECK(is_initial(s.localized, o).is_yes());
  }
  CHECK(found);
}

TEST_CASE("classical Quillen A") {
  FiniteCategory point = interval_category(0);
  FiniteCategory one = interval_category(1);
  CHECK(check_quillen_a(identity_functor(one), one, one).is_yes());

  Functor at_top{{1}, {one.identity(1)}};
  CHECK(check_quillen_a(at_top, point, one).is_yes());
  CHECK(coslice(at_top, point, one, 0).category.object_count() == 1);

  Functor at_bottom{{0}, {one.identity(0)}};
  TriState t = check_quillen_a(at_bottom, point, one);
  CHECK(t.is_no());
  CHECK(t.reason() == "at 1: empty coslice");

  testing::Rng rng(35);
  for (int trial = 0; trial < 30; ++trial) {
    FiniteCategory c = testing::random_category(rng, 4, 10);
    CHECK(check_quillen_a(identity_functor(c), c, c).is_yes());
    // Each coslice of an inclusion of a terminal object has one object.
    for (ObjectId x = 0; x < c.object_count(); ++x) {
      bool terminal = true;
      for (ObjectId y = 0; y < c.object_count(); ++y) terminal = terminal && c.hom(y, x).size() == 1;
      if (!terminal) continue;
      Functor incl{{x}, {c.identity(x)}};
      CHECK(check_quillen_a(incl, point, c).is_yes());
    }
  }
}

TEST_CASE("coslices and weak fibers") {
  testing::Rng rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    FiniteCategory c = testing::random_category(rng, 3, 6);
    FiniteCategory d = testing::random_category(rng, 3, 6);
    int seen = 0;
    enumerate_functors(c, d, [&](const Functor& f) {
      for (ObjectId x = 0; x < d.object_count(); ++x) {
        Coslice cs = coslice(f, c, d, x);
        int expected = 0;
        for (ObjectId y = 0; y < c.object_count(); ++y) expected += static_cast<int>(d.hom(x, f.objects[y]).size());
        CHECK(cs.category.object_count() == expected);
        WeakFiber w = weak_fiber(f, c, d, x);
        for (ObjectId o : w.fiber.object_in_parent) CHECK(d.is_isomorphism(w.coslice.objects[o].second));
      }
      return ++seen < 5;
    });
  }
}

TEST_CASE("Walde criterion") {
  FiniteCategory one = interval_category(1);
  Functor id = identity_functor(one);
  std::vector<std::vector<std::pair<ObjectId, MorphismId>>> family{{{0, one.identity(0)}},
                                                                   {{1, one.identity(1)}}};
  CHECK(check_walde(id, one, one, family).is_yes());

  SUBCASE("equivalence onto a point") {
    FiniteCategory iso = underlying_category(fixtures::walking_isomorphism());
    FiniteCategory point = interval_category(0);
    Functor collapse{{0, 0}, std::vector<MorphismId>(iso.morphism_count(), point.identity(0))};
    WeakFiber w = weak_fiber(collapse, iso, point, 0);
    REQUIRE(w.fiber.category.object_count() == 2);
    std::vector<std::vector<std::pair<ObjectId, MorphismId>>> full(1);
    for (ObjectId o : w.fiber.object_in_parent) full[0].push_back(w.coslice.objects[o]);
    CHECK(check_walde(collapse, iso, point, full).is_yes());
  }

  SUBCASE("empty subcategory") {
    family[1].clear();
    TriState t = check_walde(id, one, one, family);
    CHECK(t.is_no());
    CHECK(t.reason().find("at 1") == 0);
  }

  SUBCASE("members outside the weak fiber") {
    family[0] = {{1, *one.find_morphism("0->1")}};
    CHECK_THROWS_AS(check_walde(id, one, one, family), PreconditionError);
    family[0] = {{1, one.identity(0)}};
    CHECK_THROWS_AS(check_walde(id, one, one, family), PreconditionError);
    family.pop_back();
    CHECK_THROWS_AS(check_walde(id, one, one, family), PreconditionError);
  }
}

TEST_CASE("locally discrete functors reduce to the classical checks") {
  MarkedFunctor f = fixtures::zero_into_interval();
  FiniteCategory c = underlying_category(f.source.category);
  FiniteCategory d = underlying_category(f.target.category);
  CHECK(check_quillen_a(underlying(f), c, d).is_no());
  CHECK(check_decat_cofinality(f).verdict == Verdict::not_cofinal);
}
