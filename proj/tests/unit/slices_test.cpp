#include "doctest.h"

#include <set>

#include "support/generators.hpp"
#include "tcat/dual.hpp"
#include "tcat/enumerate.hpp"
#include "tcat/fixtures.hpp"
#include "tcat/grothendieck.hpp"
#include "tcat/shapes.hpp"
#include "tcat/slices.hpp"
#include "tcat/validate.hpp"

using namespace tcat;

namespace {

/// Counts of the ordinary coslice c/C by brute force: objects g: c -> x,
/// morphisms u with u ∘ g = g'.
std::pair<int, int> coslice_counts(const FiniteCategory& c, ObjectId apex) {
  std::vector<MorphismId> objects;
  for (MorphismId g = 0; g < c.morphism_count(); ++g) {
    if (c.source(g) == apex) objects.push_back(g);
  }
  int morphisms = 0;
  for (MorphismId g : objects) {
    for (MorphismId h : objects) {
      for (MorphismId u : c.hom(c.target(g), c.target(h))) morphisms += c.compose(u, g) == h;
    }
  }
  return {static_cast<int>(objects.size()), morphisms};
}

std::set<OneCellId> carriers(const Slice& s) {
  std::set<OneCellId> out;
  for (auto const& [x, g] : s.objects) out.insert(g);
  return out;
}

}  // namespace

TEST_CASE("slices of the terminal 2-category are terminal") {
  TwoCategory t = fixtures::terminal();
  for (const Slice& s : {lax_slice(t, 0), oplax_slice(t, 0)}) {
    CHECK(s.category().object_count() == 1);
    CHECK(s.category().one_cell_count() == 1);
    CHECK(s.category().two_cell_count() == 1);
  }
}

TEST_CASE("lax slice of a 1-category is the ordinary coslice") {
  Slice s = lax_slice(interval(2), 0);
  CHECK(find_isomorphism(s.category(), interval(2)).has_value());
  testing::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    FiniteCategory c = testing::random_category(rng, 4, 12);
    for (ObjectId x = 0; x < c.object_count(); ++x) {
      Slice l = lax_slice(locally_discrete(c), x);
      CHECK(validate(l.category()).ok());
      auto [objects, morphisms] = coslice_counts(c, x);
      CHECK(l.category().object_count() == objects);
      CHECK(l.category().one_cell_count() == morphisms);
      Slice o = oplax_slice(locally_discrete(c), x);
      CHECK(find_isomorphism(o.category(), l.category()).has_value());
    }
  }
}

TEST_CASE("slices of oseg(2)") {
  Shape o = oseg(2);
  Slice l = lax_slice(o.category, 0);
  Slice op = oplax_slice(o.category, 0);
  CHECK(l.category().object_count() == 4);
  CHECK(carriers(l) == carriers(op));
  CHECK(validate(op.category()).ok());
  // Fillers point opposite ways: the 1-cell {0,1} -> {0,1,2} over {1,2}
  // exists in the lax slice only through {0,2} => {0,1,2}.
  CHECK(l.category().one_cell_count() != 0);
  CHECK(op.category().one_cell_count() != 0);
}

TEST_CASE("marked slices") {
  MarkedTwoCategory sharp = maximal_marking(interval(2));
  Slice s = marked_slice(identity_two_functor(sharp.category), sharp, sharp.category, 0, Convention::lax);
  for (OneCellId k = 0; k < s.category().one_cell_count(); ++k) CHECK(s.marked.marking.contains(k));

  MarkedFunctor t = fixtures::terminal_inclusion();
  Slice at0 = marked_slice(t.functor, t.source, t.target.category, 0, Convention::oplax);
  REQUIRE(at0.category().object_count() == 1);
  CHECK(t.target.category.one_cell(at0.objects[0].second).name == "0->1");
  CHECK(at0.category().one_cell_count() == 1);
  CHECK(at0.marked.marking.contains(0));
}

TEST_CASE("marked slice marking contains identities and is preserved by the forgetful functor") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    MarkedTwoCategory m = testing::random_marked_two_category(rng, 4, 10);
    for (ObjectId d = 0; d < m.category.object_count(); ++d) {
      for (Convention conv : {Convention::lax, Convention::oplax}) {
        Slice s = marked_slice(identity_two_functor(m.category), m, m.category, d, conv);
        REQUIRE(validate(s.marked).ok());
        for (ObjectId x = 0; x < s.category().object_count(); ++x) {
          CHECK(s.marked.marking.contains(s.category().identity(x)));
        }
        TwoFunctor u = slice_forgetful(s);
        CHECK(validate(u, s.marked, m).ok());
        for (OneCellId k = 0; k < s.category().one_cell_count(); ++k) {
          auto [carrier, beta] = s.one_cells[k];
          bool expected = m.marking.contains(carrier) && m.category.is_invertible2(beta);
          CHECK(s.marked.marking.contains(k) == expected);
        }
      }
    }
  }
}

TEST_CASE("the adjunction example has a marked terminal witness in the dual slice") {
  GrothendieckTotal el = grothendieck(fixtures::adjunction_T());
  std::vector<ObjectId> low;
  for (ObjectId o = 0; o < el.category().object_count(); ++o) {
    if (el.objects[o].first <= 1) low.push_back(o);
  }
  SubTwoCategory sub = full_subcategory(el.category(), low);
  MarkedTwoCategory d = dualize(el.marked, DualMode::op1);
  Marking sm;
  for (OneCellId k = 0; k < sub.category.one_cell_count(); ++k) {
    if (el.marked.marking.contains(sub.one_cell_in_parent[k])) sm.insert(k);
  }
  MarkedTwoCategory source = dualize(MarkedTwoCategory{sub.category, sm}, DualMode::op1);
  TwoFunctor inclusion{sub.object_in_parent, sub.one_cell_in_parent, sub.two_cell_in_parent};
  ObjectId top = *el.find_object(2, 0);
  Slice s = marked_slice(inclusion, source, d.category, top, Convention::oplax);
  REQUIRE(validate(s.marked).ok());
  // (1, R(∗)) -> (2, ∗) over 1->2 with φ = id.
  OneCellId u12 = el.category().hom(*el.find_object(1, 1), top)[0];
  bool found = false;
  for (ObjectId x = 0; x < s.category().object_count(); ++x) {
    if (s.objects[x].second != u12) continue;
    found = true;
    CHECK(s.marked.marking.contains(s.category().identity(x)));
    // Terminal over (2, ∗) in El, hence initial under it after dualizing.
    for (ObjectId y = 0; y < s.category().object_count(); ++y) CHECK(s.category().hom(x, y).size() == 1);
  }
  CHECK(found);
}

TEST_CASE("slice pushforward") {
  TwoCategory c = interval(2);
  Slice s = lax_slice(c, 0);
  LaxFunctor id = as_lax(identity_two_functor(c), c, c);
  LaxFunctor p = slice_pushforward(id, c, c, s, s);
  CHECK(p == as_lax(identity_two_functor(s.category()), s.category(), s.category()));

  Shape o = oseg(2);
  LaxFunctor x = xi(2, o);
  Slice t = lax_slice(o.category, 0);
  LaxFunctor px = slice_pushforward(x, c, o.category, s, t);
  CHECK(validate(px, s.category(), t.category()).ok());
  // The forgetful functors form a commuting square.
  TwoFunctor us = slice_forgetful(s), ut = slice_forgetful(t);
  for (ObjectId a = 0; a < s.category().object_count(); ++a) {
    CHECK(ut.objects[px.objects[a]] == x.objects[us.objects[a]]);
  }
  for (OneCellId k = 0; k < s.category().one_cell_count(); ++k) {
    CHECK(ut.one_cells[px.one_cells[k]] == x.one_cells[us.one_cells[k]]);
  }

  TwoFunctor strict = oseg_action(coface(2, 1), oseg(1), o);
  Shape o1 = oseg(1);
  Slice s1 = lax_slice(o1.category, 0);
  LaxFunctor ps = slice_pushforward(as_lax(strict, o1.category, o.category), o1.category, o.category, s1, t);
  CHECK(validate(ps, s1.category(), t.category()).ok());
  for (auto const& [g, f, sigma] : ps.compositor.entries()) CHECK(t.category().is_identity2(sigma));
}
