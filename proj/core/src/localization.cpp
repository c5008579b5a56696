#include "tcat/localization.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

#include "tcat/errors.hpp"

namespace tcat {

namespace {

struct Fnv {
  std::uint64_t h = 14695981039346656037ull;
  void add(std::int64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>(v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  void add(const Word& w) {
    add(static_cast<std::int64_t>(w.size()));
    for (int a : w) add(a);
  }
};

}  // namespace

Limits parse_limits(std::string_view text) {
  Limits l;
  std::size_t values[3] = {0, 0, 0};
  int k = 0;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (k >= 3) throw PreconditionError("limits take three values: len,classes,steps");
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), values[k]);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw PreconditionError("malformed limit value '" + std::string(part) + "'");
    }
    ++k;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (k != 3) throw PreconditionError("limits take three values: len,classes,steps");
  if (values[0] == 0 || values[1] == 0 || values[2] == 0) {
    throw PreconditionError("limits must be positive");
  }
  l.max_word_len = static_cast<int>(values[0]);
  l.max_classes = static_cast<int>(values[1]);
  l.max_rewrite_steps = values[2];
  return l;
}

std::string to_string(const Limits& l) {
  return std::to_string(l.max_word_len) + "," + std::to_string(l.max_classes) + "," +
         std::to_string(l.max_rewrite_steps);
}

TriState TriState::operator&&(const TriState& other) const {
  if (is_no()) return *this;
  if (other.is_no()) return other;
  if (is_unknown()) return *this;
  if (other.is_unknown()) return other;
  return yes();
}

const char* to_string(TriState::Value v) {
  switch (v) {
    case TriState::Value::yes: return "yes";
    case TriState::Value::no: return "no";
    case TriState::Value::unknown: return "unknown";
  }
  return "?";
}

const char* to_string(Status s) { return s == Status::complete ? "complete" : "bounded"; }

Word LocalizedCategory::word_of(MorphismId m) const {
  if (base.is_identity(m)) return {};
  for (int g = 0; g < static_cast<int>(generator_morphism.size()); ++g) {
    if (generator_morphism[g] == m && !generator_is_inverse[g]) return {g};
  }
  throw StructuralError("no generator for morphism " + std::to_string(m));
}

Word LocalizedCategory::inverse_word(MorphismId m) const {
  if (base.is_identity(m)) return {};
  for (int g = 0; g < static_cast<int>(generator_morphism.size()); ++g) {
    if (generator_morphism[g] == m && generator_is_inverse[g]) return {g};
  }
  throw PreconditionError("morphism " + base.morphism(m).name + " is not inverted");
}

Word LocalizedCategory::then(const Word& a, const Word& b) const {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return reduce(w);
}

std::string LocalizedCategory::word_name(const Word& w, ObjectId at) const {
  if (w.empty()) return base.morphism(base.identity(at)).name;
  std::string out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!out.empty()) out += " o ";
    out += system.generators()[*it].name;
  }
  return out;
}

ObjectId LocalizedCategory::word_source(const Word& w, ObjectId empty_at) const {
  return w.empty() ? empty_at : system.generators()[w.front()].source;
}

LocalizedCategory localize(const FiniteCategory& c, const std::vector<MorphismId>& w,
                           const Limits& limits) {
  if (limits.max_word_len <= 0 || limits.max_classes <= 0 || limits.max_rewrite_steps == 0) {
    throw PreconditionError("localization limits must be positive");
  }
  for (MorphismId m : w) {
    if (m < 0 || m >= c.morphism_count()) {
      throw StructuralError("inverted morphism " + std::to_string(m) + " is not in the category");
    }
  }
  LocalizedCategory l;
  l.base = c;
  l.limits = limits;
  for (MorphismId m : w) {
    if (!c.is_identity(m)) l.inverted.push_back(m);
  }
  std::sort(l.inverted.begin(), l.inverted.end());
  l.inverted.erase(std::unique(l.inverted.begin(), l.inverted.end()), l.inverted.end());

  std::vector<Generator> gens;
  std::vector<int> gen_of(c.morphism_count(), kNone);
  std::vector<int> inv_of(c.morphism_count(), kNone);
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    gen_of[m] = static_cast<int>(gens.size());
    gens.push_back({c.source(m), c.target(m), c.morphism(m).name});
    l.generator_morphism.push_back(m);
    l.generator_is_inverse.push_back(false);
  }
  for (MorphismId m : l.inverted) {
    inv_of[m] = static_cast<int>(gens.size());
    gens.push_back({c.target(m), c.source(m), "inv(" + c.morphism(m).name + ")"});
    l.generator_morphism.push_back(m);
    l.generator_is_inverse.push_back(true);
  }
  l.system = RewritingSystem(c.object_count(), gens);
  for (auto const& [g, f, gf] : c.composition_table().entries()) {
    if (c.is_identity(g) || c.is_identity(f)) continue;
    Word rhs = c.is_identity(gf) ? Word{} : Word{gen_of[gf]};
    l.system.add_relation({gen_of[f], gen_of[g]}, rhs);
  }
  for (MorphismId m : l.inverted) {
    l.system.add_relation({gen_of[m], inv_of[m]}, {});
    l.system.add_relation({inv_of[m], gen_of[m]}, {});
  }
  CompletionResult done = l.system.complete(
      {limits.max_rewrite_steps, static_cast<std::size_t>(2 * limits.max_word_len)});
  l.confluent = done.confluent;
  l.reason = done.reason;

  // Irreducible words by breadth-first extension; prefixes of irreducible
  // words are irreducible, so each extension only tests suffixes.
  const int n = c.object_count();
  bool finite = true;
  std::string overflow;
  for (ObjectId x = 0; x < n; ++x) {
    std::vector<std::pair<Word, ObjectId>> level{{Word{}, x}};
    l.classes[{x, x}].push_back({});
    for (int len = 1; !level.empty(); ++len) {
      std::vector<std::pair<Word, ObjectId>> next;
      for (auto const& [word, end] : level) {
        for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
          if (gens[g].source != end) continue;
          Word ext = word;
          ext.push_back(g);
          if (l.system.has_reducible_suffix(ext)) continue;
          next.push_back({std::move(ext), gens[g].target});
        }
      }
      if (next.empty()) break;
      if (len > limits.max_word_len) {
        finite = false;
        if (overflow.empty()) overflow = "word length limit " + std::to_string(limits.max_word_len) + " reached";
        break;
      }
      bool full = false;
      for (auto const& [word, end] : next) {
        auto& bucket = l.classes[{x, end}];
        if (static_cast<int>(bucket.size()) >= limits.max_classes) {
          full = true;
          continue;
        }
        bucket.push_back(word);
      }
      if (full) {
        finite = false;
        if (overflow.empty()) overflow = "class limit " + std::to_string(limits.max_classes) + " reached";
        break;
      }
      level = std::move(next);
    }
  }
  if (l.reason.empty()) l.reason = overflow;
  l.status = l.confluent && finite ? Status::complete : Status::bounded;
  if (l.status == Status::complete) l.reason.clear();

  l.reachable.assign(n, std::vector<bool>(n, false));
  for (ObjectId x = 0; x < n; ++x) {
    std::deque<ObjectId> queue{x};
    l.reachable[x][x] = true;
    while (!queue.empty()) {
      ObjectId y = queue.front();
      queue.pop_front();
      for (Generator const& g : gens) {
        if (g.source == y && !l.reachable[x][g.target]) {
          l.reachable[x][g.target] = true;
          queue.push_back(g.target);
        }
      }
    }
  }

  Fnv h;
  for (Rule const& r : l.system.rules()) {
    h.add(r.lhs);
    h.add(r.rhs);
  }
  for (auto const& [key, words] : l.classes) {
    h.add(key.first);
    h.add(key.second);
    for (Word const& word : words) h.add(word);
  }
  l.certificate = h.h;
  return l;
}

HomClasses hom_classes(const LocalizedCategory& l, ObjectId x, ObjectId y) {
  if (x < 0 || y < 0 || x >= l.object_count() || y >= l.object_count()) {
    throw StructuralError("unknown object in hom_classes");
  }
  HomClasses out;
  out.status = l.status;
  auto it = l.classes.find({x, y});
  if (it == l.classes.end()) return out;
  out.words = it->second;
  for (Word const& w : out.words) out.names.push_back(l.word_name(w, x));
  return out;
}

TriState is_initial(const LocalizedCategory& l, ObjectId x) {
  if (x < 0 || x >= l.object_count()) throw StructuralError("unknown object in is_initial");
  const FiniteCategory& c = l.base;
  for (ObjectId y = 0; y < l.object_count(); ++y) {
    if (!l.reachable[x][y]) {
      return TriState::no("no morphism " + c.object_name(x) + " -> " + c.object_name(y));
    }
    if (l.confluent) {
      auto it = l.classes.find({x, y});
      if (it != l.classes.end() && it->second.size() >= 2) {
        return TriState::no("distinct morphisms " + l.word_name(it->second[0], x) + " and " +
                            l.word_name(it->second[1], x) + " from " + c.object_name(x) + " to " +
                            c.object_name(y));
      }
    }
  }
  if (l.status != Status::complete) return TriState::unknown(l.reason);
  for (ObjectId y = 0; y < l.object_count(); ++y) {
    auto it = l.classes.find({x, y});
    if (it == l.classes.end() || it->second.size() != 1) {
      return TriState::no("hom " + c.object_name(x) + " -> " + c.object_name(y) +
                          " is not a singleton");
    }
  }
  return TriState::yes();
}

MorphismId MaterializedLocalization::morphism(const LocalizedCategory& l, ObjectId source,
                                              const Word& w) const {
  auto it = morphism_of_word.find({source, l.reduce(w)});
  if (it == morphism_of_word.end()) throw StructuralError("word is not a class of the localization");
  return it->second;
}

MaterializedLocalization materialize(const LocalizedCategory& l) {
  if (l.status != Status::complete) {
    throw PreconditionError("localization is not complete: " + l.reason);
  }
  MaterializedLocalization m;
  const FiniteCategory& c = l.base;
  m.category.set_name(c.name() + "[W^-1]");
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    m.category.add_object(c.object_name(x), c.morphism(c.identity(x)).name);
    m.morphism_of_word[{x, Word{}}] = m.category.identity(x);
  }
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    for (ObjectId y = 0; y < c.object_count(); ++y) {
      auto it = l.classes.find({x, y});
      if (it == l.classes.end()) continue;
      for (Word const& w : it->second) {
        if (w.empty()) continue;
        m.morphism_of_word[{x, w}] = m.category.add_morphism(x, y, l.word_name(w, x));
      }
    }
  }
  std::vector<std::pair<ObjectId, Word>> by_id(m.category.morphism_count());
  for (auto const& [key, id] : m.morphism_of_word) by_id[id] = key;
  for (MorphismId a = 0; a < m.category.morphism_count(); ++a) {
    for (MorphismId b = 0; b < m.category.morphism_count(); ++b) {
      if (m.category.target(a) != m.category.source(b)) continue;
      Word w = l.then(by_id[a].second, by_id[b].second);
      m.category.set_composite(b, a, m.morphism(l, m.category.source(a), w));
    }
  }
  for (ObjectId x = 0; x < c.object_count(); ++x) m.unit.objects.push_back(x);
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    m.unit.morphisms.push_back(m.morphism(l, c.source(f), l.word_of(f)));
  }
  return m;
}

Functor induced_functor(const Functor& f, const LocalizedCategory& a,
                        const MaterializedLocalization& ma, const LocalizedCategory& b,
                        const MaterializedLocalization& mb) {
  (void)b;
  Functor out;
  out.objects = f.objects;
  std::vector<std::pair<ObjectId, Word>> by_id(ma.category.morphism_count());
  for (auto const& [key, id] : ma.morphism_of_word) by_id[id] = key;
  const FiniteCategory& target = mb.category;
  for (MorphismId m = 0; m < ma.category.morphism_count(); ++m) {
    auto const& [x, w] = by_id[m];
    MorphismId acc = target.identity(f.objects[x]);
    for (int g : w) {
      MorphismId base = a.generator_morphism[g];
      MorphismId image = mb.unit.morphisms[f.morphisms[base]];
      if (a.generator_is_inverse[g]) {
        auto inv = target.inverse(image);
        if (!inv) throw PreconditionError("functor does not send inverted morphisms to isomorphisms");
        image = *inv;
      }
      acc = target.compose(image, acc);
    }
    out.morphisms.push_back(acc);
  }
  return out;
}

}  // namespace tcat
