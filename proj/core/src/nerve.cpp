#include "tcat/nerve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "tcat/enumerate.hpp"
#include "tcat/errors.hpp"

namespace tcat {

bool operator<(const NerveSimplex& a, const NerveSimplex& b) {
  return std::tie(a.dimension, a.strict.objects, a.strict.one_cells, a.strict.two_cells) <
         std::tie(b.dimension, b.strict.objects, b.strict.one_cells, b.strict.two_cells);
}

namespace {

struct ShapeCache {
  std::map<int, Shape> shapes;
  std::map<int, LaxFunctor> xis;
  const Shape& oseg_n(int n) {
    auto it = shapes.find(n);
    if (it == shapes.end()) it = shapes.emplace(n, oseg(n)).first;
    return it->second;
  }
  const LaxFunctor& xi_n(int n) {
    auto it = xis.find(n);
    if (it == xis.end()) it = xis.emplace(n, xi(n, oseg_n(n))).first;
    return it->second;
  }
};

ShapeCache& cache() {
  thread_local ShapeCache c;
  return c;
}

}  // namespace

LaxFunctor lax_view(const TwoFunctor& strict, int n, const TwoCategory& c) {
  const Shape& o = cache().oseg_n(n);
  return compose(as_lax(strict, o.category, c), cache().xi_n(n), interval(n), o.category, c);
}

std::vector<NerveSimplex> duskin_simplices(const TwoCategory& c, int n,
                                           const NerveOptions& options) {
  if (n < 0 || n > options.max_dimension) {
    throw PreconditionError("nerve dimension " + std::to_string(n) + " exceeds the bound " +
                            std::to_string(options.max_dimension));
  }
  const Shape& o = cache().oseg_n(n);
  std::vector<NerveSimplex> out;
  bool overflow = false;
  enumerate_two_functors(o.category, c, [&](const TwoFunctor& f) {
    if (out.size() >= options.max_simplices) {
      overflow = true;
      return false;
    }
    out.push_back({n, f, {}});
    return true;
  });
  if (overflow) {
    throw ResourceError("more than " + std::to_string(options.max_simplices) + " simplices",
                        out.size());
  }
  TwoCategory in = interval(n);
  for (auto& s : out) s.lax = lax_view(s.strict, n, c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LaxFunctor> normal_lax_functors(const TwoCategory& c, int n,
                                            const NerveOptions& options) {
  if (n < 0 || n > options.max_dimension) {
    throw PreconditionError("nerve dimension exceeds the bound");
  }
  const TwoCategory in = interval(n);
  // Indexing of [n]: arrow(i, j) is the 1-cell i -> j.
  std::vector<std::vector<OneCellId>> arrow(n + 1, std::vector<OneCellId>(n + 1, kNone));
  for (OneCellId f = 0; f < in.one_cell_count(); ++f) arrow[in.source(f)][in.target(f)] = f;

  std::vector<ObjectId> x(n + 1, kNone);
  std::vector<std::vector<OneCellId>> e(n + 1, std::vector<OneCellId>(n + 1, kNone));
  std::map<std::tuple<int, int, int>, TwoCellId> theta;
  std::vector<LaxFunctor> out;

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  }
  std::vector<std::tuple<int, int, int>> triples;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) triples.push_back({i, j, k});
    }
  }

  auto hexagons_hold = [&](int i, int j, int k) {
    // Checks every quadruple whose compositors are all chosen and that uses (i, j, k).
    for (int a = 0; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        for (int cc = b + 1; cc <= n; ++cc) {
          for (int d = cc + 1; d <= n; ++d) {
            auto has = [&](int p, int q, int r) { return theta.count({p, q, r}) != 0; };
            if (!(has(a, b, cc) && has(a, cc, d) && has(a, b, d) && has(b, cc, d))) continue;
            std::tuple<int, int, int> cur{i, j, k};
            if (cur != std::tuple{a, b, cc} && cur != std::tuple{a, cc, d} &&
                cur != std::tuple{a, b, d} && cur != std::tuple{b, cc, d}) {
              continue;
            }
            TwoCellId w1 = c.find_horizontal(c.identity2(e[cc][d]), theta[{a, b, cc}]);
            TwoCellId w2 = c.find_horizontal(theta[{b, cc, d}], c.identity2(e[a][b]));
            TwoCellId left = w1 == kNone ? kNone : c.find_vertical(w1, theta[{a, cc, d}]);
            TwoCellId right = w2 == kNone ? kNone : c.find_vertical(w2, theta[{a, b, d}]);
            if (left == kNone || left != right) return false;
          }
        }
      }
    }
    return true;
  };

  auto emit = [&]() {
    if (out.size() >= options.max_simplices) {
      throw ResourceError("too many lax functors", out.size());
    }
    LaxFunctor l;
    l.objects = x;
    l.one_cells.assign(in.one_cell_count(), kNone);
    for (int i = 0; i <= n; ++i) l.one_cells[arrow[i][i]] = c.identity(x[i]);
    for (auto [i, j] : edges) l.one_cells[arrow[i][j]] = e[i][j];
    for (TwoCellId t = 0; t < in.two_cell_count(); ++t) {
      l.two_cells.push_back(c.identity2(l.one_cells[in.source2(t)]));
    }
    for (int i = 0; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        for (int k = j; k <= n; ++k) {
          TwoCellId s = (i == j || j == k) ? c.identity2(l.one_cells[arrow[i][k]])
                                           : theta[{i, j, k}];
          l.compositor.set(arrow[j][k], arrow[i][j], s);
        }
      }
    }
    out.push_back(std::move(l));
  };

  std::function<void(std::size_t)> choose_theta = [&](std::size_t t) {
    if (t == triples.size()) {
      emit();
      return;
    }
    auto [i, j, k] = triples[t];
    OneCellId composite = c.find_compose(e[j][k], e[i][j]);
    if (composite == kNone) return;
    for (TwoCellId s : c.two_cells_between(e[i][k], composite)) {
      theta[{i, j, k}] = s;
      if (hexagons_hold(i, j, k)) choose_theta(t + 1);
    }
    theta.erase({i, j, k});
  };

  std::function<void(std::size_t)> choose_edge = [&](std::size_t t) {
    if (t == edges.size()) {
      choose_theta(0);
      return;
    }
    auto [i, j] = edges[t];
    for (OneCellId f : c.hom(x[i], x[j])) {
      e[i][j] = f;
      choose_edge(t + 1);
    }
    e[i][j] = kNone;
  };

  std::function<void(int)> choose_object = [&](int i) {
    if (i > n) {
      choose_edge(0);
      return;
    }
    for (ObjectId y = 0; y < c.object_count(); ++y) {
      x[i] = y;
      bool ok = true;
      for (int a = 0; a < i && ok; ++a) ok = !c.hom(x[a], y).empty();
      if (ok) choose_object(i + 1);
    }
    x[i] = kNone;
  };
  choose_object(0);
  return out;
}

NerveSimplex face(const NerveSimplex& s, int i, const TwoCategory& c) {
  const int n = s.dimension;
  if (n < 1 || i < 0 || i > n) throw PreconditionError("invalid face index");
  TwoFunctor d = oseg_action(coface(n, i), cache().oseg_n(n - 1), cache().oseg_n(n));
  TwoFunctor g = compose(s.strict, d);
  return {n - 1, g, lax_view(g, n - 1, c)};
}

NerveSimplex degeneracy(const NerveSimplex& s, int i, const TwoCategory& c) {
  const int n = s.dimension;
  if (i < 0 || i > n) throw PreconditionError("invalid degeneracy index");
  TwoFunctor d = oseg_action(codegeneracy(n, i), cache().oseg_n(n + 1), cache().oseg_n(n));
  TwoFunctor g = compose(s.strict, d);
  return {n + 1, g, lax_view(g, n + 1, c)};
}

std::vector<bool> nerve_marking(const MarkedTwoCategory& c,
                                const std::vector<NerveSimplex>& edges) {
  const Shape& o = cache().oseg_n(1);
  OneCellId edge = o.cell(0b11);
  std::vector<bool> out;
  for (auto const& s : edges) {
    if (s.dimension != 1) throw PreconditionError("nerve marking applies to 1-simplices");
    out.push_back(c.marking.contains(s.strict.one_cells.at(edge)));
  }
  return out;
}

std::string describe(const NerveSimplex& s, const TwoCategory& c) {
  const int n = s.dimension;
  TwoCategory in = interval(n);
  std::ostringstream out;
  out << "[";
  for (int i = 0; i <= n; ++i) out << (i ? "," : "") << c.object_name(s.lax.objects[i]);
  out << "]";
  for (OneCellId f = 0; f < in.one_cell_count(); ++f) {
    if (in.is_identity(f)) continue;
    out << " " << in.source(f) << in.target(f) << "=" << c.one_cell(s.lax.one_cells[f]).name;
  }
  for (auto const& [g, f, gf] : in.compose_table().entries()) {
    if (in.is_identity(g) || in.is_identity(f)) continue;
    out << " " << in.source(f) << in.target(f) << in.target(g) << ":"
        << c.two_cell(s.lax.sigma(g, f)).name;
  }
  return out.str();
}

}  // namespace tcat
