#include "doctest.h"

#include <algorithm>

#include "support/generators.hpp"
#include "tcat/enumerate.hpp"
#include "tcat/errors.hpp"
#include "tcat/fixtures.hpp"
#include "tcat/homotopy.hpp"
#include "tcat/nerve.hpp"
#include "tcat/validate.hpp"

using namespace tcat;

namespace {

int monotone_count(int n, int m) {
  // Nondecreasing sequences of length n + 1 in [0, m].
  int count = 0;
  std::vector<int> v(n + 1, 0);
  for (;;) {
    ++count;
    int k = n;
    while (k >= 0 && v[k] == m) --k;
    if (k < 0) return count;
    ++v[k];
    for (int r = k + 1; r <= n; ++r) v[r] = v[k];
  }
}

bool contains(const std::vector<NerveSimplex>& v, const NerveSimplex& s) {
  return std::binary_search(v.begin(), v.end(), s);
}

}  // namespace

TEST_CASE("terminal nerve has one simplex per dimension") {
  TwoCategory t = fixtures::terminal();
  for (int n = 0; n <= 3; ++n) CHECK(duskin_simplices(t, n).size() == 1);
}

TEST_CASE("nerve of an interval counts monotone maps") {
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 3; ++n) {
      CHECK(duskin_simplices(interval(m), n).size() == static_cast<std::size_t>(monotone_count(n, m)));
    }
  }
  CHECK(duskin_simplices(interval(1), 2).size() == 4);
}

TEST_CASE("strict and lax enumerations agree on every fixture") {
  for (auto const& name : fixtures::two_category_names()) {
    TwoCategory c = fixtures::two_category(name).category;
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      std::vector<NerveSimplex> strict = duskin_simplices(c, n);
      std::vector<LaxFunctor> lax = normal_lax_functors(c, n);
      CHECK(strict.size() == lax.size());
      std::vector<LaxFunctor> views;
      for (const NerveSimplex& s : strict) {
        CHECK(validate(s.lax, interval(n), c).ok());
        CHECK(s.lax == lax_view(s.strict, n, c));
        views.push_back(s.lax);
      }
      for (const LaxFunctor& l : lax) CHECK(std::find(views.begin(), views.end(), l) != views.end());
    }
  }
}

TEST_CASE("simplicial identities") {
  for (auto const& name : {"interval_2", "oseg_2", "walking_iso", "three_object"}) {
    TwoCategory c = fixtures::two_category(name).category;
    std::vector<std::vector<NerveSimplex>> s;
    for (int n = 0; n <= 3; ++n) s.push_back(duskin_simplices(c, n));
    for (int n = 1; n <= 3; ++n) {
      for (const NerveSimplex& x : s[n]) {
        for (int i = 0; i <= n; ++i) {
          NerveSimplex f = face(x, i, c);
          CHECK(f.dimension == n - 1);
          CHECK(contains(s[n - 1], f));
          for (int j = i + 1; j <= n && n >= 2; ++j) {
            CHECK(face(face(x, j, c), i, c) == face(face(x, i, c), j - 1, c));
          }
        }
      }
    }
    for (int n = 0; n <= 2; ++n) {
      for (const NerveSimplex& x : s[n]) {
        for (int j = 0; j <= n; ++j) {
          NerveSimplex d = degeneracy(x, j, c);
          CHECK(contains(s[n + 1], d));
          CHECK(face(d, j, c) == x);
          CHECK(face(d, j + 1, c) == x);
          for (int i = 0; i <= j; ++i) {
            CHECK(degeneracy(degeneracy(x, j, c), i, c) == degeneracy(degeneracy(x, i, c), j + 1, c));
          }
        }
      }
    }
  }
}

TEST_CASE("dimension bound and simplex budget") {
  NerveOptions small;
  small.max_simplices = 2;
  CHECK_THROWS_AS(duskin_simplices(interval(2), 2, small), ResourceError);
  NerveOptions low;
  low.max_dimension = 1;
  CHECK_THROWS_AS(duskin_simplices(interval(1), 2, low), PreconditionError);
}

TEST_CASE("nerve marking") {
  MarkedTwoCategory sharp = maximal_marking(interval(1));
  std::vector<NerveSimplex> edges = duskin_simplices(sharp.category, 1);
  std::vector<bool> m = nerve_marking(sharp, edges);
  CHECK(std::count(m.begin(), m.end(), true) == 3);

  MarkedTwoCategory flat = minimal_marking(interval(1));
  std::vector<bool> f = nerve_marking(flat, edges);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    bool degenerate = edges[k].strict.objects[0] == edges[k].strict.objects[1];
    CHECK(f[k] == degenerate);
  }

  testing::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    MarkedTwoCategory c = testing::random_marked_two_category(rng, 4, 10);
    std::vector<NerveSimplex> e = duskin_simplices(c.category, 1);
    std::vector<bool> before = nerve_marking(c, e);
    std::vector<bool> after = nerve_marking(widen(c), e);
    for (std::size_t k = 0; k < e.size(); ++k) CHECK((!before[k] || after[k]));
  }
}

TEST_CASE("homotopy category") {
  testing::Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    FiniteCategory c = testing::random_category(rng, 4, 12);
    HomotopyCategory h = homotopy_category(locally_discrete(c));
    CHECK(h.category.object_count() == c.object_count());
    CHECK(h.category.morphism_count() == c.morphism_count());
    CHECK(find_isomorphism(h.category, c).has_value());
  }
  HomotopyCategory o = homotopy_category(fixtures::two_category("oseg_2").category);
  CHECK(find_isomorphism(o.category, interval_category(2)).has_value());
  HomotopyCategory t = homotopy_category(fixtures::three_object_two_category());
  CHECK(validate(t.category).ok());
  CHECK(t.category.morphism_count() == 6);
}
