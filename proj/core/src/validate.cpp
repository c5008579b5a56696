#include "tcat/validate.hpp"

#include <sstream>

#include "tcat/errors.hpp"

namespace tcat {

namespace {

constexpr std::size_t kMaxViolations = 200;

class Reporter {
 public:
  void add(ViolationKind kind, std::string message) {
    if (report_.violations.size() < kMaxViolations) {
      report_.violations.push_back({kind, std::move(message)});
    }
  }
  ValidationReport take() { return std::move(report_); }

 private:
  ValidationReport report_;
};

void check_range(const std::string& what, int id, int bound, std::vector<std::string>& bad) {
  if (id < 0 || id >= bound) bad.push_back(what + " " + std::to_string(id));
}

void throw_if_dangling(const std::vector<std::string>& bad) {
  if (bad.empty()) return;
  std::string msg = "dangling ids:";
  for (auto const& b : bad) msg += " " + b;
  throw StructuralError(msg);
}

void check_table_ids(const PairTable& t, int bound, const char* what,
                     std::vector<std::string>& bad) {
  for (auto const& [a, b, c] : t.entries()) {
    check_range(what, a, bound, bad);
    check_range(what, b, bound, bad);
    check_range(what, c, bound, bad);
  }
}

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::closure: return "closure";
    case ViolationKind::endpoints: return "endpoints";
    case ViolationKind::associativity: return "associativity";
    case ViolationKind::unit: return "unit";
    case ViolationKind::interchange: return "interchange";
    case ViolationKind::functoriality: return "functoriality";
    case ViolationKind::naturality: return "naturality";
    case ViolationKind::coherence: return "coherence";
    case ViolationKind::marking: return "marking";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  for (auto const& v : violations) {
    if (v.kind == kind) return true;
  }
  return false;
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (auto const& v : violations) out << to_string(v.kind) << ": " << v.message << "\n";
  return out.str();
}

ValidationReport validate(const FiniteCategory& c) {
  std::vector<std::string> bad;
  check_table_ids(c.composition_table(), c.morphism_count(), "morphism", bad);
  throw_if_dangling(bad);
  Reporter r;
  auto const& name = [&](MorphismId m) { return c.morphism(m).name; };
  for (auto const& [g, f, gf] : c.composition_table().entries()) {
    if (c.target(f) != c.source(g)) {
      r.add(ViolationKind::endpoints, "composite recorded for non-composable (" + name(g) + ", " +
                                          name(f) + ")");
    } else if (c.source(gf) != c.source(f) || c.target(gf) != c.target(g)) {
      r.add(ViolationKind::endpoints, "composite of (" + name(g) + ", " + name(f) +
                                          ") has wrong endpoints");
    }
  }
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    for (ObjectId z = 0; z < c.object_count(); ++z) {
      for (MorphismId g : c.hom(c.target(f), z)) {
        if (c.find_composite(g, f) == kNone) {
          r.add(ViolationKind::closure, "missing composite (" + name(g) + ", " + name(f) + ")");
        }
      }
    }
    if (c.find_composite(f, c.identity(c.source(f))) != f ||
        c.find_composite(c.identity(c.target(f)), f) != f) {
      r.add(ViolationKind::unit, "unit law fails at " + name(f));
    }
  }
  for (auto const& [g, f, gf] : c.composition_table().entries()) {
    if (c.target(f) != c.source(g)) continue;
    for (ObjectId z = 0; z < c.object_count(); ++z) {
      for (MorphismId h : c.hom(c.target(g), z)) {
        MorphismId hg = c.find_composite(h, g);
        if (hg == kNone) continue;
        MorphismId left = c.find_composite(hg, f);
        MorphismId right = c.find_composite(h, gf);
        if (left != kNone && right != kNone && left != right) {
          r.add(ViolationKind::associativity,
                "(" + name(h) + ", " + name(g) + ", " + name(f) + ") is not associative");
        }
      }
    }
  }
  return r.take();
}

ValidationReport validate(const TwoCategory& c) {
  std::vector<std::string> bad;
  check_table_ids(c.compose_table(), c.one_cell_count(), "1-cell", bad);
  check_table_ids(c.vertical_table(), c.two_cell_count(), "2-cell", bad);
  check_table_ids(c.horizontal_table(), c.two_cell_count(), "2-cell", bad);
  throw_if_dangling(bad);

  Reporter r;
  auto n1 = [&](OneCellId f) { return c.one_cell(f).name; };
  auto n2 = [&](TwoCellId a) { return c.two_cell(a).name; };
  auto src0 = [&](TwoCellId a) { return c.source(c.source2(a)); };
  auto tgt0 = [&](TwoCellId a) { return c.target(c.source2(a)); };

  // 1-cells.
  for (auto const& [g, f, gf] : c.compose_table().entries()) {
    if (c.target(f) != c.source(g)) {
      r.add(ViolationKind::endpoints, "composite recorded for non-composable 1-cells (" + n1(g) +
                                          ", " + n1(f) + ")");
    } else if (c.source(gf) != c.source(f) || c.target(gf) != c.target(g)) {
      r.add(ViolationKind::endpoints, "composite of (" + n1(g) + ", " + n1(f) +
                                          ") has wrong endpoints");
    }
  }
  for (OneCellId f = 0; f < c.one_cell_count(); ++f) {
    for (ObjectId z = 0; z < c.object_count(); ++z) {
      for (OneCellId g : c.hom(c.target(f), z)) {
        if (c.find_compose(g, f) == kNone) {
          r.add(ViolationKind::closure, "missing 1-cell composite (" + n1(g) + ", " + n1(f) + ")");
        }
      }
    }
    if (c.find_compose(f, c.identity(c.source(f))) != f ||
        c.find_compose(c.identity(c.target(f)), f) != f) {
      r.add(ViolationKind::unit, "unit law fails at 1-cell " + n1(f));
    }
  }
  for (auto const& [g, f, gf] : c.compose_table().entries()) {
    if (c.target(f) != c.source(g)) continue;
    for (ObjectId z = 0; z < c.object_count(); ++z) {
      for (OneCellId h : c.hom(c.target(g), z)) {
        OneCellId hg = c.find_compose(h, g);
        if (hg == kNone) continue;
        OneCellId left = c.find_compose(hg, f);
        OneCellId right = c.find_compose(h, gf);
        if (left != kNone && right != kNone && left != right) {
          r.add(ViolationKind::associativity,
                "1-cells (" + n1(h) + ", " + n1(g) + ", " + n1(f) + ") are not associative");
        }
      }
    }
  }

  // Vertical composition.
  for (auto const& [b, a, ba] : c.vertical_table().entries()) {
    if (c.target2(a) != c.source2(b)) {
      r.add(ViolationKind::endpoints, "vertical composite recorded for non-composable (" + n2(b) +
                                          ", " + n2(a) + ")");
    } else if (c.source2(ba) != c.source2(a) || c.target2(ba) != c.target2(b)) {
      r.add(ViolationKind::endpoints, "vertical composite of (" + n2(b) + ", " + n2(a) +
                                          ") has wrong endpoints");
    }
  }
  for (TwoCellId a = 0; a < c.two_cell_count(); ++a) {
    OneCellId g = c.target2(a);
    for (OneCellId h : c.hom(c.source(g), c.target(g))) {
      for (TwoCellId b : c.two_cells_between(g, h)) {
        TwoCellId ba = c.find_vertical(b, a);
        if (ba == kNone) {
          r.add(ViolationKind::closure,
                "missing vertical composite (" + n2(b) + ", " + n2(a) + ")");
          continue;
        }
        for (OneCellId k : c.hom(c.source(g), c.target(g))) {
          for (TwoCellId d : c.two_cells_between(h, k)) {
            TwoCellId db = c.find_vertical(d, b);
            if (db == kNone) continue;
            TwoCellId left = c.find_vertical(db, a);
            TwoCellId right = c.find_vertical(d, ba);
            if (left != kNone && right != kNone && left != right) {
              r.add(ViolationKind::associativity, "vertical (" + n2(d) + ", " + n2(b) + ", " +
                                                      n2(a) + ") is not associative");
            }
          }
        }
      }
    }
    if (c.find_vertical(a, c.identity2(c.source2(a))) != a ||
        c.find_vertical(c.identity2(c.target2(a)), a) != a) {
      r.add(ViolationKind::unit, "vertical unit law fails at " + n2(a));
    }
  }

  // Horizontal composition.
  std::vector<std::vector<std::vector<TwoCellId>>> by_hom(
      c.object_count(), std::vector<std::vector<TwoCellId>>(c.object_count()));
  for (TwoCellId a = 0; a < c.two_cell_count(); ++a) by_hom[src0(a)][tgt0(a)].push_back(a);

  for (auto const& [b, a, ba] : c.horizontal_table().entries()) {
    if (tgt0(a) != src0(b)) {
      r.add(ViolationKind::endpoints, "horizontal composite recorded for non-composable (" +
                                          n2(b) + ", " + n2(a) + ")");
      continue;
    }
    OneCellId s = c.find_compose(c.source2(b), c.source2(a));
    OneCellId t = c.find_compose(c.target2(b), c.target2(a));
    if (s != c.source2(ba) || t != c.target2(ba)) {
      r.add(ViolationKind::endpoints, "horizontal composite of (" + n2(b) + ", " + n2(a) +
                                          ") has wrong endpoints");
    }
  }
  for (TwoCellId a = 0; a < c.two_cell_count(); ++a) {
    ObjectId y = tgt0(a);
    for (ObjectId z = 0; z < c.object_count(); ++z) {
      for (TwoCellId b : by_hom[y][z]) {
        if (c.find_horizontal(b, a) == kNone) {
          r.add(ViolationKind::closure,
                "missing horizontal composite (" + n2(b) + ", " + n2(a) + ")");
        }
      }
    }
    if (c.find_horizontal(a, c.identity2(c.identity(src0(a)))) != a ||
        c.find_horizontal(c.identity2(c.identity(y)), a) != a) {
      r.add(ViolationKind::unit, "horizontal unit law fails at " + n2(a));
    }
  }
  for (auto const& [g, f, gf] : c.compose_table().entries()) {
    if (c.target(f) != c.source(g)) continue;
    TwoCellId h = c.find_horizontal(c.identity2(g), c.identity2(f));
    if (h != kNone && h != c.identity2(gf)) {
      r.add(ViolationKind::functoriality, "id_" + n1(g) + " * id_" + n1(f) +
                                              " is not the identity of the composite");
    }
  }
  for (auto const& [b, a, ba] : c.horizontal_table().entries()) {
    if (tgt0(a) != src0(b)) continue;
    for (ObjectId w = 0; w < c.object_count(); ++w) {
      for (TwoCellId d : by_hom[tgt0(b)][w]) {
        TwoCellId db = c.find_horizontal(d, b);
        TwoCellId dba = c.find_horizontal(d, ba);
        if (db == kNone || dba == kNone) continue;
        TwoCellId left = c.find_horizontal(db, a);
        if (left != kNone && left != dba) {
          r.add(ViolationKind::associativity, "horizontal (" + n2(d) + ", " + n2(b) + ", " +
                                                  n2(a) + ") is not associative");
        }
      }
    }
  }
  // Interchange: (b2 · b1) * (a2 · a1) = (b2 * a2) · (b1 * a1).
  for (auto const& [a2, a1, a21] : c.vertical_table().entries()) {
    if (c.target2(a1) != c.source2(a2)) continue;
    ObjectId y = tgt0(a1);
    for (ObjectId z = 0; z < c.object_count(); ++z) {
      for (TwoCellId b1 : by_hom[y][z]) {
        OneCellId mid = c.target2(b1);
        for (OneCellId g : c.hom(y, z)) {
          for (TwoCellId b2 : c.two_cells_between(mid, g)) {
            TwoCellId b21 = c.find_vertical(b2, b1);
            TwoCellId left = b21 == kNone ? kNone : c.find_horizontal(b21, a21);
            TwoCellId h1 = c.find_horizontal(b1, a1);
            TwoCellId h2 = c.find_horizontal(b2, a2);
            TwoCellId right = (h1 == kNone || h2 == kNone) ? kNone : c.find_vertical(h2, h1);
            if (left != kNone && right != kNone && left != right) {
              r.add(ViolationKind::interchange, "interchange fails for (" + n2(b2) + ", " +
                                                    n2(b1) + ") and (" + n2(a2) + ", " + n2(a1) +
                                                    ")");
            }
          }
        }
      }
    }
  }
  return r.take();
}

ValidationReport validate(const MarkedTwoCategory& c) {
  std::vector<std::string> bad;
  for (OneCellId f : c.marking.cells()) check_range("marked 1-cell", f, c.category.one_cell_count(), bad);
  throw_if_dangling(bad);
  ValidationReport report = validate(c.category);
  for (ObjectId x = 0; x < c.category.object_count(); ++x) {
    if (!c.marking.contains(c.category.identity(x))) {
      report.violations.push_back({ViolationKind::marking, "identity of " +
                                                               c.category.object_name(x) +
                                                               " is not marked"});
    }
  }
  return report;
}

ValidationReport validate(const Functor& f, const FiniteCategory& s, const FiniteCategory& t) {
  std::vector<std::string> bad;
  if (static_cast<int>(f.objects.size()) != s.object_count() ||
      static_cast<int>(f.morphisms.size()) != s.morphism_count()) {
    throw StructuralError("functor maps have the wrong size");
  }
  for (ObjectId x : f.objects) check_range("object", x, t.object_count(), bad);
  for (MorphismId m : f.morphisms) check_range("morphism", m, t.morphism_count(), bad);
  throw_if_dangling(bad);
  Reporter r;
  for (MorphismId m = 0; m < s.morphism_count(); ++m) {
    MorphismId fm = f.morphisms[m];
    if (t.source(fm) != f.objects[s.source(m)] || t.target(fm) != f.objects[s.target(m)]) {
      r.add(ViolationKind::endpoints, "image of " + s.morphism(m).name + " has wrong endpoints");
    }
  }
  for (ObjectId x = 0; x < s.object_count(); ++x) {
    if (f.morphisms[s.identity(x)] != t.identity(f.objects[x])) {
      r.add(ViolationKind::functoriality, "identity of " + s.object_name(x) + " is not preserved");
    }
  }
  for (auto const& [g, h, gh] : s.composition_table().entries()) {
    if (t.find_composite(f.morphisms[g], f.morphisms[h]) != f.morphisms[gh]) {
      r.add(ViolationKind::functoriality, "composite (" + s.morphism(g).name + ", " +
                                              s.morphism(h).name + ") is not preserved");
    }
  }
  return r.take();
}

ValidationReport validate(const NaturalTransformation& n, const Functor& f, const Functor& g,
                          const FiniteCategory& s, const FiniteCategory& t) {
  if (static_cast<int>(n.components.size()) != s.object_count()) {
    throw StructuralError("natural transformation has the wrong number of components");
  }
  std::vector<std::string> bad;
  for (MorphismId m : n.components) check_range("morphism", m, t.morphism_count(), bad);
  throw_if_dangling(bad);
  Reporter r;
  for (ObjectId x = 0; x < s.object_count(); ++x) {
    MorphismId c = n.components[x];
    if (t.source(c) != f.objects.at(x) || t.target(c) != g.objects.at(x)) {
      r.add(ViolationKind::endpoints, "component at " + s.object_name(x) + " has wrong endpoints");
    }
  }
  for (MorphismId m = 0; m < s.morphism_count(); ++m) {
    ObjectId x = s.source(m);
    ObjectId y = s.target(m);
    MorphismId left = t.find_composite(g.morphisms.at(m), n.components[x]);
    MorphismId right = t.find_composite(n.components[y], f.morphisms.at(m));
    if (left == kNone || left != right) {
      r.add(ViolationKind::naturality, "naturality square fails at " + s.morphism(m).name);
    }
  }
  return r.take();
}

namespace {

void check_cell_maps(const std::vector<ObjectId>& objects, const std::vector<OneCellId>& ones,
                     const std::vector<TwoCellId>& twos, const TwoCategory& s,
                     const TwoCategory& t) {
  if (static_cast<int>(objects.size()) != s.object_count() ||
      static_cast<int>(ones.size()) != s.one_cell_count() ||
      static_cast<int>(twos.size()) != s.two_cell_count()) {
    throw StructuralError("functor cell maps have the wrong size");
  }
  std::vector<std::string> bad;
  for (ObjectId x : objects) check_range("object", x, t.object_count(), bad);
  for (OneCellId f : ones) check_range("1-cell", f, t.one_cell_count(), bad);
  for (TwoCellId a : twos) check_range("2-cell", a, t.two_cell_count(), bad);
  throw_if_dangling(bad);
}

void check_endpoints_and_local(Reporter& r, const std::vector<ObjectId>& objects,
                               const std::vector<OneCellId>& ones,
                               const std::vector<TwoCellId>& twos, const TwoCategory& s,
                               const TwoCategory& t) {
  for (OneCellId f = 0; f < s.one_cell_count(); ++f) {
    if (t.source(ones[f]) != objects[s.source(f)] || t.target(ones[f]) != objects[s.target(f)]) {
      r.add(ViolationKind::endpoints, "image of 1-cell " + s.one_cell(f).name +
                                          " has wrong endpoints");
    }
    if (twos[s.identity2(f)] != t.identity2(ones[f])) {
      r.add(ViolationKind::functoriality, "identity 2-cell of " + s.one_cell(f).name +
                                              " is not preserved");
    }
  }
  for (TwoCellId a = 0; a < s.two_cell_count(); ++a) {
    if (t.source2(twos[a]) != ones[s.source2(a)] || t.target2(twos[a]) != ones[s.target2(a)]) {
      r.add(ViolationKind::endpoints, "image of 2-cell " + s.two_cell(a).name +
                                          " has wrong endpoints");
    }
  }
  for (auto const& [b, a, ba] : s.vertical_table().entries()) {
    if (t.find_vertical(twos[b], twos[a]) != twos[ba]) {
      r.add(ViolationKind::functoriality, "vertical composite (" + s.two_cell(b).name + ", " +
                                              s.two_cell(a).name + ") is not preserved");
    }
  }
  for (ObjectId x = 0; x < s.object_count(); ++x) {
    if (ones[s.identity(x)] != t.identity(objects[x])) {
      r.add(ViolationKind::functoriality, "identity of " + s.object_name(x) + " is not preserved");
    }
  }
}

}  // namespace

ValidationReport validate(const TwoFunctor& f, const TwoCategory& s, const TwoCategory& t) {
  check_cell_maps(f.objects, f.one_cells, f.two_cells, s, t);
  Reporter r;
  check_endpoints_and_local(r, f.objects, f.one_cells, f.two_cells, s, t);
  for (auto const& [g, h, gh] : s.compose_table().entries()) {
    if (t.find_compose(f.one_cells[g], f.one_cells[h]) != f.one_cells[gh]) {
      r.add(ViolationKind::functoriality, "1-cell composite (" + s.one_cell(g).name + ", " +
                                              s.one_cell(h).name + ") is not preserved");
    }
  }
  for (auto const& [b, a, ba] : s.horizontal_table().entries()) {
    if (t.find_horizontal(f.two_cells[b], f.two_cells[a]) != f.two_cells[ba]) {
      r.add(ViolationKind::functoriality, "horizontal composite (" + s.two_cell(b).name + ", " +
                                              s.two_cell(a).name + ") is not preserved");
    }
  }
  return r.take();
}

ValidationReport validate(const LaxFunctor& f, const TwoCategory& s, const TwoCategory& t) {
  check_cell_maps(f.objects, f.one_cells, f.two_cells, s, t);
  std::vector<std::string> bad;
  for (auto const& [g, h, sg] : f.compositor.entries()) {
    check_range("compositor", sg, t.two_cell_count(), bad);
  }
  throw_if_dangling(bad);
  Reporter r;
  check_endpoints_and_local(r, f.objects, f.one_cells, f.two_cells, s, t);
  auto n1 = [&](OneCellId x) { return s.one_cell(x).name; };
  bool complete = true;
  for (auto const& [g, h, gh] : s.compose_table().entries()) {
    TwoCellId sg = f.sigma(g, h);
    if (sg == kNone) {
      r.add(ViolationKind::closure, "missing compositor for (" + n1(g) + ", " + n1(h) + ")");
      complete = false;
      continue;
    }
    OneCellId fg = t.find_compose(f.one_cells[g], f.one_cells[h]);
    if (t.source2(sg) != f.one_cells[gh] || t.target2(sg) != fg) {
      r.add(ViolationKind::endpoints, "compositor for (" + n1(g) + ", " + n1(h) +
                                          ") has wrong endpoints");
      complete = false;
    }
    if ((s.is_identity(g) || s.is_identity(h)) && sg != t.identity2(f.one_cells[gh])) {
      r.add(ViolationKind::unit, "compositor for (" + n1(g) + ", " + n1(h) +
                                     ") is not an identity");
    }
  }
  if (!complete) return r.take();
  // Naturality: (Fb * Fa) · σ_{g,f} = σ_{g',f'} · F(b * a).
  for (auto const& [b, a, ba] : s.horizontal_table().entries()) {
    OneCellId g = s.source2(b), gp = s.target2(b);
    OneCellId h = s.source2(a), hp = s.target2(a);
    TwoCellId fab = t.find_horizontal(f.two_cells[b], f.two_cells[a]);
    TwoCellId left = fab == kNone ? kNone : t.find_vertical(fab, f.sigma(g, h));
    TwoCellId right = t.find_vertical(f.sigma(gp, hp), f.two_cells[ba]);
    if (left == kNone || left != right) {
      r.add(ViolationKind::naturality, "compositor is not natural at (" + s.two_cell(b).name +
                                           ", " + s.two_cell(a).name + ")");
    }
  }
  // Hexagon: (id_{Fk} * σ_{g,h}) · σ_{k,gh} = (σ_{k,g} * id_{Fh}) · σ_{kg,h}.
  for (auto const& [g, h, gh] : s.compose_table().entries()) {
    for (ObjectId z = 0; z < s.object_count(); ++z) {
      for (OneCellId k : s.hom(s.target(g), z)) {
        OneCellId kg = s.find_compose(k, g);
        OneCellId kgh = s.find_compose(k, gh);
        if (kg == kNone || kgh == kNone) continue;
        TwoCellId w1 = t.find_horizontal(t.identity2(f.one_cells[k]), f.sigma(g, h));
        TwoCellId w2 = t.find_horizontal(f.sigma(k, g), t.identity2(f.one_cells[h]));
        TwoCellId left = w1 == kNone ? kNone : t.find_vertical(w1, f.sigma(k, gh));
        TwoCellId right = w2 == kNone ? kNone : t.find_vertical(w2, f.sigma(kg, h));
        if (left == kNone || left != right) {
          r.add(ViolationKind::coherence, "compositor coherence fails at (" + n1(k) + ", " +
                                              n1(g) + ", " + n1(h) + ")");
        }
      }
    }
  }
  return r.take();
}

ValidationReport validate(const TwoFunctor& f, const MarkedTwoCategory& s,
                          const MarkedTwoCategory& t) {
  ValidationReport report = validate(f, s.category, t.category);
  for (OneCellId m : s.marking.cells()) {
    if (!t.marking.contains(f.one_cells[m])) {
      report.violations.push_back({ViolationKind::marking, "marked 1-cell " +
                                                               s.category.one_cell(m).name +
                                                               " is sent to an unmarked 1-cell"});
    }
  }
  return report;
}

}  // namespace tcat
