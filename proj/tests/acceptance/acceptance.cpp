// One line per acceptance criterion: PASS/FAIL, number, title, time, detail.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tcat/cocones.hpp"
#include "tcat/cofinality.hpp"
#include "tcat/document.hpp"
#include "tcat/enumerate.hpp"
#include "tcat/equivalence.hpp"
#include "tcat/homotopy.hpp"
#include "tcat/nerve.hpp"
#include "tcat/shapes.hpp"
#include "tcat/validate.hpp"

using namespace tcat;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

Document fixture(const std::string& name) {
  return load_document(std::filesystem::path(TCAT_FIXTURE_DIR) / (name + ".json"));
}

template <class T>
T payload(const std::string& name) {
  return std::get<T>(fixture(name).payload);
}

std::string str(const TriState& t) { return to_string(t.value()); }

Outcome adjunction_colimit() {
  CatValuedFunctor t = payload<CatValuedFunctor>("adjunction_T");
  FiniteCategory interval = payload<FiniteCategory>("interval");
  MarkedColimit m = marked_colimit(t);
  TriState eq = are_equivalent(m.localized, interval);
  CoconeDocument example = payload<CoconeDocument>("adjunction_cocone");
  bool example_ok = check_marked_cocone(example.functor, example.cocone).ok();
  bool canonical_ok = m.canonical && check_marked_cocone(t, *m.canonical).ok();
  return {m.localized.status == Status::complete && eq.is_yes() && example_ok && canonical_ok,
          std::string("status ") + to_string(m.localized.status) + ", equivalent to [1]: " + str(eq) +
              ", example cocone marked: " + (example_ok ? "yes" : "no") +
              ", canonical cocone marked: " + (canonical_ok ? "yes" : "no")};
}

Outcome marking_sensitivity() {
  MarkedColimit diamond = marked_colimit(payload<CatValuedFunctor>("adjunction_T"));
  MarkedColimit sharp = marked_colimit(payload<CatValuedFunctor>("adjunction_T_sharp"));
  TriState point = are_equivalent(sharp.localized, payload<FiniteCategory>("point"));
  TriState same = are_equivalent(diamond.localized, sharp.localized);
  return {sharp.localized.status == Status::complete && point.is_yes() && same.is_no(),
          "sharp colimit equivalent to [0]: " + str(point) + ", diamond vs sharp: " + str(same)};
}

Outcome non_cofinality_witness() {
  MarkedFunctor f = payload<MarkedFunctor>("diamond_to_sharp");
  CofinalityReport r = check_decat_cofinality(f);
  ObjectId one = *f.target.category.find_object("1");
  ProbeReport p = representable_probe(f, one);
  bool ok = r.verdict == Verdict::not_cofinal && r.witness_object == one && r.witness_condition == "2" &&
            r.witness == "1->2" && p.source_classes == 2 && p.target_classes == 1 &&
            p.source_el_matches && p.target_el_matches;
  return {ok, std::string(to_string(r.verdict)) + " at " + f.target.category.object_name(r.witness_object) +
                  ", condition " + r.witness_condition + ", witness " + r.witness + "; probe classes " +
                  std::to_string(p.source_classes) + " vs " + std::to_string(p.target_classes)};
}

Outcome identity_initiality() {
  testing::Rng rng(4);
  int categories = 0, marked = 0, yes = 0, complete = 0, violations = 0;
  for (; categories < 60; ++categories) {
    MarkedTwoCategory c = testing::random_marked_two_category(rng, 4, 10);
    if (c.category.object_count() > 4 || c.category.one_cell_count() > 10) return {false, "generator out of range"};
    MarkedFunctor id{"id", c, c, identity_two_functor(c.category)};
    for (ObjectId d = 0; d < c.category.object_count(); ++d) {
      LocalizedSlice s = localized_slice(id, d, Convention::lax, Limits{});
      bool is_complete = s.localized.status == Status::complete;
      for (ObjectId o = 0; o < s.slice.category().object_count(); ++o) {
        if (!c.marking.contains(s.slice.objects[o].second)) continue;
        ++marked;
        TriState t = is_initial(s.localized, o);
        yes += t.is_yes();
        complete += is_complete;
        if (t.is_no() || (is_complete && !t.is_yes())) ++violations;
      }
    }
  }
  return {violations == 0 && categories >= 50 && marked > 0,
          std::to_string(categories) + " categories, " + std::to_string(marked) + " marked g, " +
              std::to_string(yes) + " yes (" + std::to_string(complete) + " complete), " +
              std::to_string(violations) + " violations"};
}

Outcome nerve_bijection() {
  int compared = 0, mismatches = 0;
  std::vector<TwoCategory> cats;
  for (const auto& name : fixture_names()) {
    Document d = fixture(name);
    if (d.kind == DocumentKind::two_category) cats.push_back(std::get<MarkedTwoCategory>(d.payload).category);
    if (d.kind == DocumentKind::category) cats.push_back(locally_discrete(std::get<FiniteCategory>(d.payload)));
  }
  for (const TwoCategory& c : cats) {
    for (int n = 0; n <= 3; ++n) {
      ++compared;
      if (duskin_simplices(c, n).size() != normal_lax_functors(c, n).size()) ++mismatches;
    }
  }
  std::size_t interval2 = duskin_simplices(payload<MarkedTwoCategory>("interval_1").category, 2).size();
  return {mismatches == 0 && interval2 == 4,
          std::to_string(cats.size()) + " fixtures, " + std::to_string(compared) + " counts compared, " +
              std::to_string(mismatches) + " mismatches; [1] at n = 2: " + std::to_string(interval2)};
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

Outcome collapse_identities() {
  bool extremal = true;
  std::vector<Shape> o;
  std::vector<std::vector<PartialCollapse>> p(4);
  for (int n = 0; n <= 3; ++n) {
    o.push_back(oseg(n));
    for (int i = 0; i <= n + 1; ++i) p[n].push_back(partial_collapse(CollapseIndex(n, i)));
    extremal = extremal && find_isomorphism(p[n][0].shape.category, interval(n)).has_value();
    const PartialCollapse& top = p[n][n + 1];
    extremal = extremal && top.shape.category == o[n].category &&
               top.projection == identity_two_functor(o[n].category) &&
               top.lift == as_lax(identity_two_functor(o[n].category), o[n].category, o[n].category);
  }
  int squares = 0, broken = 0;
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (const MonotoneMap& f : monotone_maps(n, m)) {
        TwoFunctor of = oseg_action(f, o[n], o[m]);
        for (int i = 0; i <= n + 1; ++i) {
          for (int j = 0; j <= m + 1; ++j) {
            bool compatible = true;
            for (int x = 0; x <= n; ++x) compatible = compatible && ((x >= i) == (f(x) >= j));
            if (!compatible) continue;
            TwoFunctor g = collapse_action(f, p[n][i], p[m][j]);
            ++squares;
            if (!validate(g, p[n][i].shape.category, p[m][j].shape.category).ok() ||
                compose(p[m][j].projection, of) != compose(g, p[n][i].projection)) {
              ++broken;
            }
          }
        }
      }
    }
  }
  int composites = 0;
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (int c = 0; c <= 3; ++c) {
        for (const MonotoneMap& f : monotone_maps(a, b)) {
          for (const MonotoneMap& g : monotone_maps(b, c)) {
            for (int i = 0; i <= a + 1; ++i) {
              for (int j = 0; j <= b + 1; ++j) {
                for (int k = 0; k <= c + 1; ++k) {
                  bool ok = true;
                  for (int x = 0; x <= a; ++x) ok = ok && ((x >= i) == (f(x) >= j));
                  for (int x = 0; x <= b; ++x) ok = ok && ((x >= j) == (g(x) >= k));
                  if (!ok) continue;
                  ++composites;
                  if (collapse_action(compose(g, f), p[a][i], p[c][k]) !=
                      compose(collapse_action(g, p[b][j], p[c][k]), collapse_action(f, p[a][i], p[b][j]))) {
                    ++broken;
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return {extremal && broken == 0 && squares > 0,
          std::string("extremal cases ") + (extremal ? "hold" : "fail") + ", " + std::to_string(squares) +
              " squares and " + std::to_string(composites) + " composites checked, " + std::to_string(broken) +
              " broken"};
}

Outcome constant_diagram() {
  testing::Rng rng(7);
  int matched = 0, attempts = 0, failures = 0;
  FiniteCategory point = payload<FiniteCategory>("point");
  while (matched < 10 && attempts < 200) {
    ++attempts;
    FiniteCategory c = testing::random_category(rng, 4, 10);
    std::vector<MorphismId> w = testing::random_subset(rng, c, 0.4);
    TwoCategory t = locally_discrete(c);
    MarkedColimit m = marked_colimit(constant_functor(MarkedTwoCategory{t, Marking::of(t, w)}, point));
    LocalizedCategory direct = localize(c, w);
    if (m.localized.status != Status::complete || direct.status != Status::complete) continue;
    ++matched;
    if (!are_equivalent(m.localized, direct).is_yes()) ++failures;
  }
  return {matched == 10 && failures == 0,
          std::to_string(matched) + " decided cases in " + std::to_string(attempts) + " draws, " +
              std::to_string(failures) + " inequivalent"};
}

Outcome localization_oracle() {
  int compared = 0, disagreements = 0, skipped = 0;
  auto compare = [&](const FiniteCategory& c, const std::vector<MorphismId>& w) {
    LocalizedCategory l = localize(c, w);
    testing::OracleResult oracle = testing::zigzag_oracle(c, w);
    if (l.status != Status::complete || !oracle.stabilized) {
      ++skipped;
      return;
    }
    ++compared;
    for (ObjectId x = 0; x < c.object_count(); ++x) {
      for (ObjectId y = 0; y < c.object_count(); ++y) {
        auto it = oracle.counts.find({x, y});
        int expected = it == oracle.counts.end() ? 0 : it->second;
        if (static_cast<int>(hom_classes(l, x, y).words.size()) != expected) ++disagreements;
      }
    }
  };
  for (const auto& name : fixture_names()) {
    Document d = fixture(name);
    FiniteCategory c;
    if (d.kind == DocumentKind::two_category) {
      c = homotopy_category(std::get<MarkedTwoCategory>(d.payload).category).category;
    } else if (d.kind == DocumentKind::category) {
      c = std::get<FiniteCategory>(d.payload);
    } else {
      continue;
    }
    if (c.object_count() > 4 || c.morphism_count() > 12) continue;
    std::vector<MorphismId> arrows;
    for (MorphismId m = 0; m < c.morphism_count(); ++m) {
      if (!c.is_identity(m)) arrows.push_back(m);
    }
    if (arrows.size() > 8) continue;
    for (std::uint32_t mask = 0; mask < (1u << arrows.size()); ++mask) {
      std::vector<MorphismId> w;
      for (std::size_t k = 0; k < arrows.size(); ++k) {
        if (mask >> k & 1u) w.push_back(arrows[k]);
      }
      compare(c, w);
    }
  }
  testing::Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    FiniteCategory c = testing::random_category(rng, 4, 12);
    compare(c, testing::random_subset(rng, c, 0.5));
  }
  return {disagreements == 0 && compared > 0,
          std::to_string(compared) + " certified comparisons, " + std::to_string(skipped) + " skipped, " +
              std::to_string(disagreements) + " disagreements"};
}

Outcome quillen_a() {
  auto underlying = [](const MarkedFunctor& f) {
    return std::tuple{Functor{f.functor.objects, f.functor.one_cells}, underlying_category(f.source.category),
                      underlying_category(f.target.category)};
  };
  auto [tf, tc, td] = underlying(payload<MarkedFunctor>("terminal_inclusion"));
  TriState terminal = check_quillen_a(tf, tc, td);
  auto [zf, zc, zd] = underlying(payload<MarkedFunctor>("zero_into_interval"));
  TriState zero = check_quillen_a(zf, zc, zd);
  auto [if_, ic, id] = underlying(payload<MarkedFunctor>("isolated_object"));
  TriState isolated = check_quillen_a(if_, ic, id);
  bool ok = terminal.is_yes() && zero.is_no() && zero.reason() == "at 1: empty coslice" && isolated.is_no();
  return {ok, "terminal inclusion: " + str(terminal) + "; {0} -> [1]: " + str(zero) + " (" + zero.reason() +
                  "); isolated object: " + str(isolated)};
}

Outcome hom_poset_contractibility() {
  int homs = 0, missing = 0, posets = 0, not_posets = 0;
  for (std::uint32_t mask = 1; mask < 32; ++mask) {
    std::vector<int> el;
    for (int x = 0; x < 5; ++x) {
      if (mask >> x & 1u) el.push_back(x);
    }
    LinearIndexSet index(el);
    Slice s = oseg_lax_slice(index);
    const TwoCategory& c = s.category();
    for (ObjectId a = 0; a < c.object_count(); ++a) {
      for (ObjectId b = 0; b < c.object_count(); ++b) {
        auto hom = c.hom(a, b);
        if (hom.empty()) continue;
        ++homs;
        bool found = false;
        for (OneCellId top : hom) {
          bool greatest = true;
          for (OneCellId u : hom) greatest = greatest && !c.two_cells_between(u, top).empty();
          found = found || greatest;
        }
        missing += !found;
      }
    }
    FiniteCategory d = homotopy_category(c).category;
    bool poset = true;
    for (ObjectId a = 0; a < d.object_count(); ++a) {
      for (ObjectId b = 0; b < d.object_count(); ++b) {
        poset = poset && d.hom(a, b).size() <= 1;
        if (a != b) poset = poset && (d.hom(a, b).empty() || d.hom(b, a).empty());
      }
    }
    (poset ? posets : not_posets) += 1;
  }
  return {missing == 0 && not_posets == 0,
          std::to_string(homs) + " nonempty homs, " + std::to_string(missing) + " without a greatest element; " +
              std::to_string(posets) + " of 31 homotopy categories are posets"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "adjunction marked colimit is [1]", 5, adjunction_colimit},
      {2, "marking sensitivity", 5, marking_sensitivity},
      {3, "non-cofinality witness", 5, non_cofinality_witness},
      {4, "identity initiality suite", 60, identity_initiality},
      {5, "nerve bijection", 60, nerve_bijection},
      {6, "collapse identities", 60, collapse_identities},
      {7, "constant-diagram colimit", 60, constant_diagram},
      {8, "localization oracle equivalence", 60, localization_oracle},
      {9, "classical Quillen A", 60, quillen_a},
      {10, "hom-poset contractibility support", 30, hom_poset_contractibility},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      out.pass = false;
      out.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s budget";
    }
    failed += !out.pass;
    std::printf("%s %2d  %-36s %9.1f ms  %s\n", out.pass ? "PASS" : "FAIL", c.number, c.title, seconds * 1000.0,
                out.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
