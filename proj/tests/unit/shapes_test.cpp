#include "doctest.h"

#include <bit>

#include "tcat/enumerate.hpp"
#include "tcat/errors.hpp"
#include "tcat/homotopy.hpp"
#include "tcat/shapes.hpp"
#include "tcat/validate.hpp"

using namespace tcat;

namespace {

std::vector<LinearIndexSet> subsets_of(int n) {
  std::vector<LinearIndexSet> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> el;
    for (int x = 0; x < n; ++x) {
      if (mask >> x & 1u) el.push_back(x);
    }
    out.emplace_back(el);
  }
  return out;
}

std::vector<MonotoneMap> monotone_maps(int n, int m) {
  std::vector<MonotoneMap> out;
  std::vector<int> v(n + 1, 0);
  for (;;) {
    out.push_back({n, m, v});
    int k = n;
    while (k >= 0 && v[k] == m) --k;
    if (k < 0) break;
    ++v[k];
    for (int r = k + 1; r <= n; ++r) v[r] = v[k];
  }
  return out;
}

template <class V>
bool injective(V v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

TEST_CASE("linear index sets reject bad input") {
  CHECK_THROWS_AS(LinearIndexSet(std::vector<int>{}), PreconditionError);
  CHECK_THROWS_AS(LinearIndexSet(std::vector<int>{2, 1}), PreconditionError);
  CHECK_THROWS_AS(CollapseIndex(2, 4), PreconditionError);
}

TEST_CASE("hom categories of oseg") {
  Shape o1 = oseg(1);
  CHECK(o1.category.hom(0, 1).size() == 1);
  Shape o2 = oseg(2);
  auto h02 = o2.category.hom(0, 2);
  CHECK(h02.size() == 2);
  int non_identity = 0;
  for (OneCellId f : h02) {
    for (OneCellId g : h02) {
      for (TwoCellId a : o2.category.two_cells_between(f, g)) non_identity += !o2.category.is_identity2(a);
    }
  }
  CHECK(non_identity == 1);
  CHECK(oseg(3).category.hom(0, 3).size() == 4);
}

TEST_CASE("hom sizes are powers of two on every index set") {
  for (auto const& index : subsets_of(5)) {
    Shape o = oseg(index);
    CHECK(validate(o.category).ok());
    const auto& el = index.elements();
    for (int a = 0; a < index.size(); ++a) {
      for (int b = a + 1; b < index.size(); ++b) {
        // Brute-force count of subsets with min el[a] and max el[b].
        int count = 0;
        for (std::uint32_t s = 0; s < (1u << 5); ++s) {
          if ((s & ~index.mask()) != 0 || !(s >> el[a] & 1u) || !(s >> el[b] & 1u)) continue;
          if (s >> (el[b] + 1) != 0 || (s & ((1u << el[a]) - 1)) != 0) continue;
          ++count;
        }
        CHECK(o.category.hom(a, b).size() == static_cast<std::size_t>(count));
        CHECK(count == 1 << (b - a - 1));
      }
    }
  }
}

TEST_CASE("xi is a normal lax functor with union compositors") {
  Shape o0 = oseg(0);
  LaxFunctor x0 = xi(0, o0);
  CHECK(x0.objects == std::vector<ObjectId>{0});
  CHECK(x0.one_cells == std::vector<OneCellId>{o0.category.identity(0)});
  Shape o2 = oseg(2);
  LaxFunctor x2 = xi(2, o2);
  TwoCategory in = interval(2);
  TwoCellId sigma = x2.sigma(*in.find_one_cell("1->2"), *in.find_one_cell("0->1"));
  CHECK(o2.category.source2(sigma) == o2.cell(0b101));
  CHECK(o2.category.target2(sigma) == o2.cell(0b111));
  Shape o3 = oseg(3);
  CHECK(validate(xi(3, o3), interval(3), o3.category).ok());
}

TEST_CASE("lax slices of oseg") {
  Slice s0 = oseg_lax_slice(LinearIndexSet::interval(0));
  CHECK(s0.category().object_count() == 1);
  CHECK(s0.category().one_cell_count() == 1);
  CHECK(s0.category().two_cell_count() == 1);
  Slice s2 = oseg_lax_slice(LinearIndexSet::interval(2));
  CHECK(s2.category().object_count() == 4);
  CHECK(validate(s2.category()).ok());
}

TEST_CASE("every nonempty hom poset of the slice has a greatest element") {
  for (auto const& index : subsets_of(5)) {
    if (index.min() != 0) continue;
    Slice s = oseg_lax_slice(index);
    const TwoCategory& c = s.category();
    for (ObjectId a = 0; a < c.object_count(); ++a) {
      for (ObjectId b = 0; b < c.object_count(); ++b) {
        auto hom = c.hom(a, b);
        if (hom.empty()) continue;
        bool found = false;
        for (OneCellId top : hom) {
          bool greatest = true;
          for (OneCellId u : hom) greatest = greatest && !c.two_cells_between(u, top).empty();
          found = found || greatest;
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("homotopy posets") {
  CHECK(homotopy_poset(LinearIndexSet::interval(0)).object_count() == 1);
  CHECK(homotopy_poset(LinearIndexSet::interval(2)).object_count() == 4);
  for (auto const& index : subsets_of(5)) {
    FiniteCategory d = homotopy_poset(index);
    CHECK(d.object_count() == oseg_lax_slice(index).category().object_count());
    for (ObjectId a = 0; a < d.object_count(); ++a) {
      for (ObjectId b = 0; b < d.object_count(); ++b) {
        CHECK(d.hom(a, b).size() <= 1);
        if (a != b) CHECK((d.hom(a, b).empty() || d.hom(b, a).empty()));
      }
    }
  }
}

TEST_CASE("rho lift is injective and valid") {
  CHECK_THROWS_AS(rho_tilde(LinearIndexSet({0, 3}), LinearIndexSet::interval(2)), PreconditionError);
  for (int n = 0; n <= 3; ++n) {
    LinearIndexSet i = LinearIndexSet::interval(n);
    for (auto const& j : subsets_of(n + 1)) {
      RhoLift r = rho_tilde(j, i);
      CAPTURE(j.mask());
      CHECK(validate(r.functor, r.source.category, r.target.category()).ok());
      CHECK(injective(r.functor.objects));
      CHECK(injective(r.functor.one_cells));
      CHECK(injective(r.functor.two_cells));
      // (L, S) ↦ L ∪ S on objects.
      for (ObjectId x = 0; x < r.source.category.object_count(); ++x) {
        auto [l, s] = r.source.object_parts[x];
        ObjectId image = r.functor.objects[x];
        OneCellId g = r.target.objects[image].second;
        OneCellId sg = r.left_factor_slice.objects[s].second;
        Shape oi = oseg(i), oj = oseg(j);
        std::uint32_t left = oi.subset[oi.category.hom(0, oi.object_of(j.min()))[l]];
        CHECK(oi.subset[g] == (left | oj.subset[sg]));
      }
    }
  }
  RhoLift same = rho_tilde(LinearIndexSet::interval(2), LinearIndexSet::interval(2));
  CHECK(same.source.category.object_count() == same.target.category().object_count());
  RhoLift r = rho_tilde(LinearIndexSet({1, 2}), LinearIndexSet::interval(2));
  Shape o = oseg(2);
  std::vector<std::uint32_t> images;
  for (ObjectId x : r.functor.objects) images.push_back(o.subset[r.target.objects[x].second]);
  std::sort(images.begin(), images.end());
  CHECK(images == std::vector<std::uint32_t>{0b011, 0b111});
}

TEST_CASE("extremal partial collapses") {
  for (int n = 0; n <= 3; ++n) {
    PartialCollapse bottom = partial_collapse(CollapseIndex(n, 0));
    CHECK(find_isomorphism(bottom.shape.category, interval(n)).has_value());
    PartialCollapse top = partial_collapse(CollapseIndex(n, n + 1));
    Shape o = oseg(n);
    CHECK(find_isomorphism(top.shape.category, o.category).has_value());
    CHECK(top.projection == identity_two_functor(top.shape.category));
    CHECK(top.lift == as_lax(identity_two_functor(o.category), o.category, o.category));
  }
}

TEST_CASE("partial collapse tables and the lift square") {
  PartialCollapse p = partial_collapse(CollapseIndex(2, 1));
  CHECK(p.shape.category.hom(0, 1).size() == 1);
  CHECK(p.shape.category.hom(0, 2).size() == 1);
  CHECK(p.shape.category.hom(1, 2).size() == 1);
  for (int n = 0; n <= 3; ++n) {
    Shape o = oseg(n);
    for (int i = 0; i <= n + 1; ++i) {
      PartialCollapse c = partial_collapse(CollapseIndex(n, i));
      CHECK(validate(c.projection, o.category, c.shape.category).ok());
      CHECK(validate(c.lift, c.shape.category, o.category).ok());
      for (OneCellId f = 0; f < o.category.one_cell_count(); ++f) {
        if (o.category.source(f) < i && o.category.target(f) < i) {
          CHECK(c.lift.one_cells[c.projection.one_cells[f]] == f);
        }
      }
    }
  }
}

TEST_CASE("collapse actions commute with projections and compose") {
  std::vector<Shape> o;
  for (int n = 0; n <= 3; ++n) o.push_back(oseg(n));
  std::vector<std::vector<PartialCollapse>> p(4);
  for (int n = 0; n <= 3; ++n) {
    for (int i = 0; i <= n + 1; ++i) p[n].push_back(partial_collapse(CollapseIndex(n, i)));
  }
  auto compatible = [](const MonotoneMap& f, int i, int j) {
    for (int x = 0; x <= f.n; ++x) {
      if ((x >= i) != (f(x) >= j)) return false;
    }
    return true;
  };
  int squares = 0;
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (const MonotoneMap& f : monotone_maps(n, m)) {
        TwoFunctor of = oseg_action(f, o[n], o[m]);
        for (int i = 0; i <= n + 1; ++i) {
          for (int j = 0; j <= m + 1; ++j) {
            if (!compatible(f, i, j)) {
              CHECK_THROWS_AS(collapse_action(f, p[n][i], p[m][j]), PreconditionError);
              continue;
            }
            TwoFunctor g = collapse_action(f, p[n][i], p[m][j]);
            CHECK(validate(g, p[n][i].shape.category, p[m][j].shape.category).ok());
            CHECK(compose(p[m][j].projection, of) == compose(g, p[n][i].projection));
            ++squares;
          }
        }
      }
    }
  }
  CHECK(squares > 0);
  for (int n = 0; n <= 3; ++n) {
    for (int i = 0; i <= n + 1; ++i) {
      CHECK(collapse_action(identity_map(n), p[n][i], p[n][i]) ==
            identity_two_functor(p[n][i].shape.category));
    }
  }
  // Functoriality over composable pairs [1] -> [2] -> [3].
  for (const MonotoneMap& f : monotone_maps(1, 2)) {
    for (const MonotoneMap& g : monotone_maps(2, 3)) {
      for (int i = 0; i <= 2; ++i) {
        for (int j = 0; j <= 3; ++j) {
          for (int k = 0; k <= 4; ++k) {
            if (!compatible(f, i, j) || !compatible(g, j, k)) continue;
            CHECK(collapse_action(compose(g, f), p[1][i], p[3][k]) ==
                  compose(collapse_action(g, p[2][j], p[3][k]), collapse_action(f, p[1][i], p[2][j])));
          }
        }
      }
    }
  }
}

TEST_CASE("face map over [1] gives a commuting square") {
  MonotoneMap d1 = coface(2, 1);
  Shape o1 = oseg(1), o2 = oseg(2);
  PartialCollapse a = partial_collapse(CollapseIndex(1, 1));
  PartialCollapse b = partial_collapse(CollapseIndex(2, 2));
  TwoFunctor g = collapse_action(d1, a, b);
  CHECK(compose(b.projection, oseg_action(d1, o1, o2)) == compose(g, a.projection));
}
