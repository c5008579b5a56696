#include "tcat/enumerate.hpp"

#include <tuple>

#include "tcat/errors.hpp"

namespace tcat {

namespace {

using Triple = std::tuple<int, int, int>;

class FunctorSearch {
 public:
  FunctorSearch(const TwoCategory& s, const TwoCategory& t,
                const std::function<bool(const TwoFunctor&)>& visit,
                const EnumerationOptions& options)
      : s_(s), t_(t), visit_(visit), options_(options) {
    f_.objects.assign(s.object_count(), kNone);
    f_.one_cells.assign(s.one_cell_count(), kNone);
    f_.two_cells.assign(s.two_cell_count(), kNone);
    used0_.assign(t.object_count(), 0);
    used1_.assign(t.one_cell_count(), 0);
    used2_.assign(t.two_cell_count(), 0);
    triples1_.resize(s.one_cell_count());
    decomp1_.resize(s.one_cell_count());
    for (auto const& [g, f, gf] : s.compose_table().entries()) {
      if (s.is_identity(g) || s.is_identity(f)) continue;
      Triple tr{g, f, gf};
      triples1_[g].push_back(tr);
      if (f != g) triples1_[f].push_back(tr);
      if (gf != g && gf != f) triples1_[gf].push_back(tr);
      decomp1_[gf].push_back(tr);
    }
    triples2_.resize(s.two_cell_count());
    decomp2_.resize(s.two_cell_count());
    auto add2 = [&](int kind, int b, int a, int ba) {
      Triple tr{b, a, ba};
      auto& list = kind == 0 ? vtriples_ : htriples_;
      int idx = static_cast<int>(list.size());
      list.push_back(tr);
      auto tag = std::make_pair(kind, idx);
      triples2_[b].push_back(tag);
      if (a != b) triples2_[a].push_back(tag);
      if (ba != b && ba != a) triples2_[ba].push_back(tag);
      decomp2_[ba].push_back(tag);
    };
    for (auto const& [b, a, ba] : s.vertical_table().entries()) {
      if (s.is_identity2(b) || s.is_identity2(a)) continue;
      add2(0, b, a, ba);
    }
    for (auto const& [b, a, ba] : s.horizontal_table().entries()) {
      if (s.is_identity2(b) && s.is_identity2(a)) continue;
      if (s.is_identity2(b) && s.is_identity(s.source2(b))) continue;
      if (s.is_identity2(a) && s.is_identity(s.source2(a))) continue;
      add2(1, b, a, ba);
    }
    for (OneCellId f = 0; f < s.one_cell_count(); ++f) {
      if (!s.is_identity(f)) free1_.push_back(f);
    }
    for (TwoCellId a = 0; a < s.two_cell_count(); ++a) {
      if (!s.is_identity2(a)) free2_.push_back(a);
    }
  }

  std::size_t run() {
    if (options_.injective && (s_.object_count() > t_.object_count() ||
                               s_.one_cell_count() > t_.one_cell_count() ||
                               s_.two_cell_count() > t_.two_cell_count())) {
      return 0;
    }
    objects(0);
    return count_;
  }

 private:
  bool take(std::vector<char>& used, int v) {
    if (!options_.injective) return true;
    if (used[v]) return false;
    used[v] = 1;
    return true;
  }
  void release(std::vector<char>& used, int v) {
    if (options_.injective) used[v] = 0;
  }

  bool objects_consistent(ObjectId x) {
    for (ObjectId y = 0; y <= x; ++y) {
      for (auto pair : {std::make_pair(x, y), std::make_pair(y, x)}) {
        if (!s_.hom(pair.first, pair.second).empty() &&
            t_.hom(f_.objects[pair.first], f_.objects[pair.second]).empty()) {
          return false;
        }
      }
    }
    return true;
  }

  void objects(ObjectId x) {
    if (stop_) return;
    if (x == s_.object_count()) {
      for (ObjectId y = 0; y < s_.object_count(); ++y) {
        OneCellId i = s_.identity(y);
        f_.one_cells[i] = t_.identity(f_.objects[y]);
        f_.two_cells[s_.identity2(i)] = t_.identity2(f_.one_cells[i]);
      }
      std::vector<char> done(s_.one_cell_count(), 0);
      ones(done, 0);
      return;
    }
    ObjectId fixed = x < static_cast<int>(options_.fixed_objects.size())
                         ? options_.fixed_objects[x]
                         : kNone;
    for (ObjectId y = 0; y < t_.object_count(); ++y) {
      if (fixed != kNone && y != fixed) continue;
      if (!take(used0_, y)) continue;
      f_.objects[x] = y;
      if (objects_consistent(x)) objects(x + 1);
      f_.objects[x] = kNone;
      release(used0_, y);
      if (stop_) return;
    }
  }

  bool check1(OneCellId h) {
    for (auto const& [g, f, gf] : triples1_[h]) {
      if (f_.one_cells[g] == kNone || f_.one_cells[f] == kNone || f_.one_cells[gf] == kNone) {
        continue;
      }
      if (t_.find_compose(f_.one_cells[g], f_.one_cells[f]) != f_.one_cells[gf]) return false;
    }
    return true;
  }

  // Picks the next 1-cell: a forced one if any, else the first free one.
  std::pair<OneCellId, OneCellId> next1(const std::vector<char>& done) {
    OneCellId first = kNone;
    for (OneCellId h : free1_) {
      if (done[h]) continue;
      if (first == kNone) first = h;
      for (auto const& [g, f, gf] : decomp1_[h]) {
        if (f_.one_cells[g] != kNone && f_.one_cells[f] != kNone) {
          return {h, t_.find_compose(f_.one_cells[g], f_.one_cells[f])};
        }
      }
    }
    return {first, kNone};
  }

  void ones(std::vector<char>& done, std::size_t depth) {
    if (stop_) return;
    if (depth == free1_.size()) {
      std::vector<char> done2(s_.two_cell_count(), 0);
      twos(done2, 0);
      return;
    }
    auto [h, forced] = next1(done);
    ObjectId a = f_.objects[s_.source(h)];
    ObjectId b = f_.objects[s_.target(h)];
    auto attempt = [&](OneCellId v) {
      if (t_.source(v) != a || t_.target(v) != b) return;
      if (!take(used1_, v)) return;
      f_.one_cells[h] = v;
      f_.two_cells[s_.identity2(h)] = t_.identity2(v);
      done[h] = 1;
      if (check1(h)) ones(done, depth + 1);
      done[h] = 0;
      f_.one_cells[h] = kNone;
      f_.two_cells[s_.identity2(h)] = kNone;
      release(used1_, v);
    };
    bool has_decomp = false;
    for (auto const& [g, f, gf] : decomp1_[h]) {
      if (f_.one_cells[g] != kNone && f_.one_cells[f] != kNone) has_decomp = true;
    }
    if (has_decomp) {
      if (forced != kNone) attempt(forced);
      return;
    }
    for (OneCellId v : t_.hom(a, b)) {
      attempt(v);
      if (stop_) return;
    }
  }

  bool check2(TwoCellId c) {
    for (auto const& [kind, idx] : triples2_[c]) {
      auto const& [b, a, ba] = kind == 0 ? vtriples_[idx] : htriples_[idx];
      if (f_.two_cells[b] == kNone || f_.two_cells[a] == kNone || f_.two_cells[ba] == kNone) {
        continue;
      }
      TwoCellId r = kind == 0 ? t_.find_vertical(f_.two_cells[b], f_.two_cells[a])
                              : t_.find_horizontal(f_.two_cells[b], f_.two_cells[a]);
      if (r != f_.two_cells[ba]) return false;
    }
    return true;
  }

  std::pair<TwoCellId, TwoCellId> next2(const std::vector<char>& done, bool& has_decomp) {
    TwoCellId first = kNone;
    has_decomp = false;
    for (TwoCellId c : free2_) {
      if (done[c]) continue;
      if (first == kNone) first = c;
      for (auto const& [kind, idx] : decomp2_[c]) {
        auto const& [b, a, ba] = kind == 0 ? vtriples_[idx] : htriples_[idx];
        if (f_.two_cells[b] != kNone && f_.two_cells[a] != kNone) {
          has_decomp = true;
          TwoCellId r = kind == 0 ? t_.find_vertical(f_.two_cells[b], f_.two_cells[a])
                                  : t_.find_horizontal(f_.two_cells[b], f_.two_cells[a]);
          return {c, r};
        }
      }
    }
    return {first, kNone};
  }

  void twos(std::vector<char>& done, std::size_t depth) {
    if (stop_) return;
    if (depth == free2_.size()) {
      if (!final_check()) return;
      ++count_;
      if (!visit_(f_)) stop_ = true;
      return;
    }
    bool has_decomp = false;
    auto [c, forced] = next2(done, has_decomp);
    OneCellId fs = f_.one_cells[s_.source2(c)];
    OneCellId ft = f_.one_cells[s_.target2(c)];
    auto attempt = [&](TwoCellId v) {
      if (t_.source2(v) != fs || t_.target2(v) != ft) return;
      if (!take(used2_, v)) return;
      f_.two_cells[c] = v;
      done[c] = 1;
      if (check2(c)) twos(done, depth + 1);
      done[c] = 0;
      f_.two_cells[c] = kNone;
      release(used2_, v);
    };
    if (has_decomp) {
      if (forced != kNone) attempt(forced);
      return;
    }
    for (TwoCellId v : t_.two_cells_between(fs, ft)) {
      attempt(v);
      if (stop_) return;
    }
  }

  // Checks the table entries skipped during search.
  bool final_check() {
    for (auto const& [g, f, gf] : s_.compose_table().entries()) {
      if (t_.find_compose(f_.one_cells[g], f_.one_cells[f]) != f_.one_cells[gf]) return false;
    }
    for (auto const& [b, a, ba] : s_.vertical_table().entries()) {
      if (t_.find_vertical(f_.two_cells[b], f_.two_cells[a]) != f_.two_cells[ba]) return false;
    }
    for (auto const& [b, a, ba] : s_.horizontal_table().entries()) {
      if (t_.find_horizontal(f_.two_cells[b], f_.two_cells[a]) != f_.two_cells[ba]) return false;
    }
    return true;
  }

  const TwoCategory& s_;
  const TwoCategory& t_;
  const std::function<bool(const TwoFunctor&)>& visit_;
  const EnumerationOptions& options_;
  TwoFunctor f_;
  std::vector<char> used0_, used1_, used2_;
  std::vector<std::vector<Triple>> triples1_, decomp1_;
  std::vector<Triple> vtriples_, htriples_;
  std::vector<std::vector<std::pair<int, int>>> triples2_, decomp2_;
  std::vector<OneCellId> free1_;
  std::vector<TwoCellId> free2_;
  std::size_t count_ = 0;
  bool stop_ = false;
};

}  // namespace

std::size_t enumerate_two_functors(const TwoCategory& source, const TwoCategory& target,
                                   const std::function<bool(const TwoFunctor&)>& visit,
                                   const EnumerationOptions& options) {
  FunctorSearch search(source, target, visit, options);
  return search.run();
}

std::optional<TwoFunctor> find_isomorphism(const TwoCategory& a, const TwoCategory& b) {
  if (a.object_count() != b.object_count() || a.one_cell_count() != b.one_cell_count() ||
      a.two_cell_count() != b.two_cell_count()) {
    return std::nullopt;
  }
  std::optional<TwoFunctor> found;
  EnumerationOptions options;
  options.injective = true;
  enumerate_two_functors(
      a, b,
      [&](const TwoFunctor& f) {
        found = f;
        return false;
      },
      options);
  return found;
}

std::size_t enumerate_functors(const FiniteCategory& source, const FiniteCategory& target,
                               const std::function<bool(const Functor&)>& visit) {
  TwoCategory s = locally_discrete(source);
  TwoCategory t = locally_discrete(target);
  return enumerate_two_functors(s, t, [&](const TwoFunctor& f) {
    return visit(Functor{f.objects, f.one_cells});
  });
}

std::optional<Functor> find_isomorphism(const FiniteCategory& a, const FiniteCategory& b) {
  auto f = find_isomorphism(locally_discrete(a), locally_discrete(b));
  if (!f) return std::nullopt;
  return Functor{f->objects, f->one_cells};
}

std::size_t enumerate_natural_transformations(
    const FiniteCategory& source, const FiniteCategory& target, const Functor& f,
    const Functor& g, const std::function<bool(const NaturalTransformation&)>& visit) {
  NaturalTransformation n;
  n.components.assign(source.object_count(), kNone);
  std::size_t count = 0;
  bool stop = false;
  auto square_ok = [&](ObjectId x) {
    for (MorphismId m = 0; m < source.morphism_count(); ++m) {
      ObjectId a = source.source(m);
      ObjectId b = source.target(m);
      if (a > x || b > x) continue;
      if (a != x && b != x) continue;
      MorphismId left = target.find_composite(g.morphisms[m], n.components[a]);
      MorphismId right = target.find_composite(n.components[b], f.morphisms[m]);
      if (left == kNone || left != right) return false;
    }
    return true;
  };
  std::function<void(ObjectId)> rec = [&](ObjectId x) {
    if (stop) return;
    if (x == source.object_count()) {
      ++count;
      if (!visit(n)) stop = true;
      return;
    }
    for (MorphismId c : target.hom(f.objects[x], g.objects[x])) {
      n.components[x] = c;
      if (square_ok(x)) rec(x + 1);
      if (stop) break;
    }
    n.components[x] = kNone;
  };
  rec(0);
  return count;
}

}  // namespace tcat
