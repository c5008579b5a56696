#include "tcat/shapes.hpp"

#include <algorithm>
#include <bit>

#include "tcat/errors.hpp"
#include "tcat/homotopy.hpp"

namespace tcat {

LinearIndexSet::LinearIndexSet(std::vector<int> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw PreconditionError("index set must be nonempty");
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    int x = elements_[k];
    if (x < 0 || x > 31) throw PreconditionError("index elements must lie in [0, 31]");
    if (k > 0 && elements_[k - 1] >= x) {
      throw PreconditionError("index elements must be strictly increasing");
    }
    mask_ |= 1u << x;
  }
}

LinearIndexSet LinearIndexSet::interval(int n) {
  if (n < 0) throw PreconditionError("dimension must be nonnegative");
  std::vector<int> e(n + 1);
  for (int k = 0; k <= n; ++k) e[k] = k;
  return LinearIndexSet(std::move(e));
}

int LinearIndexSet::position(int x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) {
    throw PreconditionError("element " + std::to_string(x) + " is not in the index set");
  }
  return static_cast<int>(it - elements_.begin());
}

std::string subset_name(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (int x = 0; x < 32; ++x) {
    if (!((mask >> x) & 1u)) continue;
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + "}";
}

int mask_min(std::uint32_t mask) { return std::countr_zero(mask); }
int mask_max(std::uint32_t mask) { return 31 - std::countl_zero(mask); }

CollapseIndex::CollapseIndex(int n_, int i_) : n(n_), i(i_) {
  if (n < 0 || i < 0 || i > n + 1) throw PreconditionError("collapse index must satisfy 0 <= i <= n+1");
}

TwoCellId Shape::two_cell(OneCellId from, OneCellId to) const {
  if (from == to) return category.identity2(from);
  auto cells = category.two_cells_between(from, to);
  if (cells.empty()) {
    throw StructuralError("no 2-cell " + category.one_cell(from).name + " => " +
                          category.one_cell(to).name);
  }
  return cells.front();
}

namespace {

// Generates 𝕆^I with homs ending at elements >= collapse replaced by a point.
Shape build_shape(const LinearIndexSet& index, int collapse) {
  Shape s;
  s.index = index;
  TwoCategory& c = s.category;
  const auto& el = index.elements();
  const int k = index.size();
  auto is_collapsed = [&](int b) { return el[b] >= collapse; };
  for (int a = 0; a < k; ++a) {
    std::uint32_t m = 1u << el[a];
    ObjectId x = c.add_object(std::to_string(el[a]), subset_name(m));
    s.subset.push_back(m);
    s.cell_of_subset[m] = c.identity(x);
  }
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (is_collapsed(b)) {
        OneCellId f = c.add_one_cell(a, b, "*{" + std::to_string(el[a]) + "," +
                                               std::to_string(el[b]) + "}");
        s.subset.push_back(0);
        s.collapsed[{el[a], el[b]}] = f;
        continue;
      }
      std::uint32_t ends = (1u << el[a]) | (1u << el[b]);
      std::uint32_t interior = index.mask() & ((1u << el[b]) - 1) & ~((2u << el[a]) - 1);
      // Submasks of interior in increasing order.
      std::vector<std::uint32_t> subs;
      for (std::uint32_t t = interior;; t = (t - 1) & interior) {
        subs.push_back(t);
        if (t == 0) break;
      }
      std::sort(subs.begin(), subs.end());
      for (std::uint32_t t : subs) {
        OneCellId f = c.add_one_cell(a, b, subset_name(ends | t));
        s.subset.push_back(ends | t);
        s.cell_of_subset[ends | t] = f;
      }
    }
  }
  const int ones = c.one_cell_count();
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (is_collapsed(b)) continue;
      for (OneCellId f : c.hom(a, b)) {
        for (OneCellId g : c.hom(a, b)) {
          std::uint32_t sf = s.subset[f], sg = s.subset[g];
          if (f != g && (sf & ~sg) == 0) {
            c.add_two_cell(f, g, subset_name(sf) + "<=" + subset_name(sg));
          }
        }
      }
    }
  }
  auto cell_for = [&](int a, int b, std::uint32_t mask) -> OneCellId {
    if (a == b) return c.identity(a);
    if (is_collapsed(b)) return s.collapsed.at({el[a], el[b]});
    return s.cell_of_subset.at(mask);
  };
  auto two_for = [&](OneCellId f, OneCellId g) -> TwoCellId {
    if (f == g) return c.identity2(f);
    return c.two_cells_between(f, g).front();
  };
  for (OneCellId f = 0; f < ones; ++f) {
    for (OneCellId g = 0; g < ones; ++g) {
      if (c.target(f) != c.source(g)) continue;
      c.set_compose(g, f, cell_for(c.source(f), c.target(g), s.subset[f] | s.subset[g]));
    }
  }
  const int twos = c.two_cell_count();
  for (TwoCellId a = 0; a < twos; ++a) {
    for (TwoCellId b = 0; b < twos; ++b) {
      if (c.target2(a) == c.source2(b)) {
        c.set_vertical(b, a, two_for(c.source2(a), c.target2(b)));
      }
      if (c.target(c.source2(a)) == c.source(c.source2(b))) {
        OneCellId src = c.compose(c.source2(b), c.source2(a));
        OneCellId tgt = c.compose(c.target2(b), c.target2(a));
        c.set_horizontal(b, a, two_for(src, tgt));
      }
    }
  }
  return s;
}

}  // namespace

Shape oseg(const LinearIndexSet& index) {
  Shape s = build_shape(index, index.max() + 1);
  s.category.set_name("O^" + subset_name(index.mask()));
  return s;
}

Shape oseg(int n) {
  Shape s = oseg(LinearIndexSet::interval(n));
  s.category.set_name("O^" + std::to_string(n));
  return s;
}

TwoCategory interval(int n) { return locally_discrete(interval_category(n)); }

LaxFunctor xi(int n, const Shape& target) {
  TwoCategory source = interval(n);
  std::vector<ObjectId> objects;
  for (int x = 0; x <= n; ++x) objects.push_back(target.object_of(x));
  std::vector<OneCellId> ones;
  for (OneCellId f = 0; f < source.one_cell_count(); ++f) {
    ones.push_back(target.cell((1u << source.source(f)) | (1u << source.target(f))));
  }
  return lax_into_thin(source, target.category, std::move(objects), std::move(ones));
}

Slice oseg_lax_slice(const LinearIndexSet& index) {
  return lax_slice(oseg(index).category, 0);
}

FiniteCategory homotopy_poset(const LinearIndexSet& index) {
  Slice s = oseg_lax_slice(index);
  FiniteCategory d = homotopy_category(s.category()).category;
  d.set_name("D^" + subset_name(index.mask()));
  return d;
}

TwoCategory hom_poset_op(const Shape& o, int a, int b) {
  auto cells = o.category.hom(o.object_of(a), o.object_of(b));
  FiniteCategory p;
  std::vector<std::uint32_t> masks;
  for (OneCellId f : cells) {
    p.add_object(o.category.one_cell(f).name);
    masks.push_back(o.subset[f]);
  }
  const int k = static_cast<int>(masks.size());
  std::vector<std::vector<MorphismId>> arrow(k, std::vector<MorphismId>(k, kNone));
  for (int x = 0; x < k; ++x) arrow[x][x] = p.identity(x);
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      if (x != y && (masks[y] & ~masks[x]) == 0) {
        arrow[x][y] = p.add_morphism(x, y, subset_name(masks[x]) + ">=" + subset_name(masks[y]));
      }
    }
  }
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      for (int z = 0; z < k; ++z) {
        if (arrow[x][y] != kNone && arrow[y][z] != kNone) {
          p.set_composite(arrow[y][z], arrow[x][y], arrow[x][z]);
        }
      }
    }
  }
  p.set_name("O(" + std::to_string(a) + "," + std::to_string(b) + ")^op");
  return locally_discrete(p);
}

RhoLift rho_tilde(const LinearIndexSet& j, const LinearIndexSet& i) {
  if (!j.is_subset_of(i)) throw PreconditionError("J must be a subset of I");
  Shape oi = oseg(i);
  Shape oj = oseg(j);
  TwoCategory left = hom_poset_op(oi, i.min(), j.min());
  std::vector<std::uint32_t> left_mask;
  for (OneCellId f : oi.category.hom(oi.object_of(i.min()), oi.object_of(j.min()))) {
    left_mask.push_back(oi.subset[f]);
  }
  RhoLift r{product(left, lax_slice(oj.category, 0).marked.category), lax_slice(oj.category, 0),
            lax_slice(oi.category, 0), {}};
  const Slice& sj = r.left_factor_slice;
  const Slice& si = r.target;
  const TwoCategory& pc = r.source.category;
  auto object_mask = [&](ObjectId p) {
    auto [a, b] = r.source.object_parts[p];
    return left_mask[a] | oj.subset[sj.objects[b].second];
  };
  auto slice_object = [&](std::uint32_t mask) {
    return *si.find_object(oi.object_of(mask_max(mask)), oi.cell(mask));
  };
  for (ObjectId p = 0; p < pc.object_count(); ++p) {
    r.functor.objects.push_back(slice_object(object_mask(p)));
  }
  for (OneCellId k = 0; k < pc.one_cell_count(); ++k) {
    auto [e, l] = r.source.one_cell_parts[k];
    (void)e;
    std::uint32_t from = object_mask(pc.source(k));
    std::uint32_t to = object_mask(pc.target(k));
    OneCellId u = oi.cell(oj.subset[sj.one_cells[l].first]);
    OneCellId composite = oi.category.compose(u, oi.cell(from));
    TwoCellId beta = oi.two_cell(oi.cell(to), composite);
    auto img = si.find_one_cell(slice_object(from), slice_object(to), u, beta);
    if (!img) throw StructuralError("image 1-cell missing from slice");
    r.functor.one_cells.push_back(*img);
  }
  for (TwoCellId t = 0; t < pc.two_cell_count(); ++t) {
    auto [e, s] = r.source.two_cell_parts[t];
    (void)e;
    TwoCellId theta = sj.two_cells[s];
    TwoCellId carrier = oi.two_cell(oi.cell(oj.subset[oj.category.source2(theta)]),
                                    oi.cell(oj.subset[oj.category.target2(theta)]));
    auto img = si.find_two_cell(r.functor.one_cells[pc.source2(t)],
                                r.functor.one_cells[pc.target2(t)], carrier);
    if (!img) throw StructuralError("image 2-cell missing from slice");
    r.functor.two_cells.push_back(*img);
  }
  return r;
}

PartialCollapse partial_collapse(const LinearIndexSet& index, int i) {
  if (i < 0 || i > index.max() + 1) {
    throw PreconditionError("collapse index out of range");
  }
  Shape full = oseg(index);
  PartialCollapse p{build_shape(index, i), i, {}, {}};
  TwoCategory& c = p.shape.category;
  c.set_name("P^" + std::to_string(i) + full.category.name());
  const auto& el = index.elements();
  auto collapsed = [&](ObjectId b) { return el[b] >= i; };

  // Projection 𝕆^I -> P.
  TwoFunctor& proj = p.projection;
  for (ObjectId x = 0; x < full.category.object_count(); ++x) proj.objects.push_back(x);
  for (OneCellId f = 0; f < full.category.one_cell_count(); ++f) {
    ObjectId a = full.category.source(f), b = full.category.target(f);
    if (a == b) {
      proj.one_cells.push_back(c.identity(a));
    } else if (collapsed(b)) {
      proj.one_cells.push_back(p.shape.collapsed.at({el[a], el[b]}));
    } else {
      proj.one_cells.push_back(p.shape.cell(full.subset[f]));
    }
  }
  for (TwoCellId t = 0; t < full.category.two_cell_count(); ++t) {
    OneCellId s = proj.one_cells[full.category.source2(t)];
    OneCellId u = proj.one_cells[full.category.target2(t)];
    proj.two_cells.push_back(p.shape.two_cell(s, u));
  }

  // Lift P -> 𝕆^I.
  std::vector<ObjectId> objects;
  std::vector<OneCellId> ones;
  for (ObjectId x = 0; x < c.object_count(); ++x) objects.push_back(x);
  for (OneCellId f = 0; f < c.one_cell_count(); ++f) {
    std::uint32_t m = p.shape.subset[f];
    if (m == 0) m = (1u << el[c.source(f)]) | (1u << el[c.target(f)]);
    ones.push_back(full.cell(m));
  }
  p.lift = lax_into_thin(c, full.category, std::move(objects), std::move(ones));
  return p;
}

PartialCollapse partial_collapse(const CollapseIndex& ix) {
  return partial_collapse(LinearIndexSet::interval(ix.n), ix.i);
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.m != g.n) throw PreconditionError("monotone maps are not composable");
  MonotoneMap h{f.n, g.m, {}};
  for (int x : f.values) h.values.push_back(g(x));
  return h;
}

MonotoneMap identity_map(int n) {
  MonotoneMap f{n, n, {}};
  for (int x = 0; x <= n; ++x) f.values.push_back(x);
  return f;
}

MonotoneMap coface(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw PreconditionError("invalid coface");
  MonotoneMap f{n - 1, n, {}};
  for (int x = 0; x < n; ++x) f.values.push_back(x < k ? x : x + 1);
  return f;
}

MonotoneMap codegeneracy(int n, int k) {
  if (k < 0 || k > n) throw PreconditionError("invalid codegeneracy");
  MonotoneMap f{n + 1, n, {}};
  for (int x = 0; x <= n + 1; ++x) f.values.push_back(x <= k ? x : x - 1);
  return f;
}

namespace {

void check_monotone(const MonotoneMap& f) {
  if (static_cast<int>(f.values.size()) != f.n + 1) throw PreconditionError("map has wrong size");
  for (int x = 0; x <= f.n; ++x) {
    if (f.values[x] < 0 || f.values[x] > f.m) throw PreconditionError("map leaves its target");
    if (x > 0 && f.values[x - 1] > f.values[x]) throw PreconditionError("map is not monotone");
  }
}

std::uint32_t image(const MonotoneMap& f, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (int x = 0; x <= f.n; ++x) {
    if ((mask >> x) & 1u) out |= 1u << f(x);
  }
  return out;
}

}  // namespace

TwoFunctor oseg_action(const MonotoneMap& f, const Shape& source, const Shape& target) {
  check_monotone(f);
  TwoFunctor g;
  const TwoCategory& s = source.category;
  for (ObjectId x = 0; x < s.object_count(); ++x) g.objects.push_back(target.object_of(f(x)));
  for (OneCellId c = 0; c < s.one_cell_count(); ++c) {
    g.one_cells.push_back(target.cell(image(f, source.subset[c])));
  }
  for (TwoCellId t = 0; t < s.two_cell_count(); ++t) {
    g.two_cells.push_back(target.two_cell(g.one_cells[s.source2(t)], g.one_cells[s.target2(t)]));
  }
  return g;
}

TwoFunctor collapse_action(const MonotoneMap& f, const PartialCollapse& source,
                           const PartialCollapse& target) {
  check_monotone(f);
  const int i = source.collapse;
  const int j = target.collapse;
  for (int x = 0; x <= f.n; ++x) {
    if ((x >= i) != (f(x) >= j)) {
      throw PreconditionError("map does not commute with the collapse indices");
    }
  }
  const TwoCategory& s = source.shape.category;
  const TwoCategory& t = target.shape.category;
  TwoFunctor g;
  for (ObjectId x = 0; x < s.object_count(); ++x) g.objects.push_back(f(x));
  for (OneCellId c = 0; c < s.one_cell_count(); ++c) {
    ObjectId a = s.source(c), b = s.target(c);
    int fa = f(a), fb = f(b);
    if (fa == fb) {
      g.one_cells.push_back(t.identity(fa));
    } else if (fb >= j) {
      g.one_cells.push_back(target.shape.collapsed.at({fa, fb}));
    } else {
      g.one_cells.push_back(target.shape.cell(image(f, source.shape.subset[c])));
    }
  }
  for (TwoCellId c = 0; c < s.two_cell_count(); ++c) {
    g.two_cells.push_back(
        target.shape.two_cell(g.one_cells[s.source2(c)], g.one_cells[s.target2(c)]));
  }
  return g;
}

}  // namespace tcat
