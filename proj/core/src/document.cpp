#include "tcat/document.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "tcat/errors.hpp"
#include "tcat/fixtures.hpp"
#include "tcat/validate.hpp"

namespace tcat {

using nlohmann::ordered_json;

const char* to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::two_category: return "two_category";
    case DocumentKind::category: return "category";
    case DocumentKind::functor: return "functor";
    case DocumentKind::cat_valued_functor: return "cat_valued_functor";
    case DocumentKind::cocone: return "cocone";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError("at " + (path.empty() ? std::string("/") : path) + ": " + message, 0);
}

/// A JSON value together with its path in the document.
struct Node {
  const ordered_json& j;
  std::string path;

  bool has(const char* key) const { return j.is_object() && j.contains(key); }
  Node at(const std::string& key) const {
    if (!j.is_object()) fail(path, "expected an object");
    if (!j.contains(key)) fail(path, "missing field '" + key + "'");
    return {j.at(key), path + "/" + key};
  }
  Node at(std::size_t i) const { return {j.at(i), path + "/" + std::to_string(i)}; }
  std::string str() const {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }
  int integer() const {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
  }
  std::size_t size() const {
    if (!j.is_array()) fail(path, "expected an array");
    return j.size();
  }
  std::vector<std::pair<std::string, Node>> items() const {
    if (!j.is_object()) fail(path, "expected an object");
    std::vector<std::pair<std::string, Node>> out;
    for (auto it = j.begin(); it != j.end(); ++it) out.push_back({it.key(), Node{it.value(), path + "/" + it.key()}});
    return out;
  }
};

/// Name lookup that insists on unique names.
class Names {
 public:
  void add(const std::string& name, int id, const std::string& path) {
    if (!ids_.emplace(name, id).second) fail(path, "duplicate name '" + name + "'");
  }
  int find(const Node& n, const char* what) const {
    std::string name = n.str();
    auto it = ids_.find(name);
    if (it == ids_.end()) fail(n.path, std::string("unknown ") + what + " '" + name + "'");
    return it->second;
  }

 private:
  std::map<std::string, int> ids_;
};

void check_kind(const Node& n, DocumentKind expected) {
  if (!n.has("kind")) return;
  std::string k = n.at("kind").str();
  if (k != to_string(expected)) fail(n.path + "/kind", "expected kind " + std::string(to_string(expected)) + ", found " + k);
}

template <class Report>
void require_ok(const Report& r, const std::string& path) {
  if (!r.ok()) fail(path, r.summary());
}

template <class Names>
void require_unique(const Names& names, const char* what) {
  std::map<std::string, int> seen;
  for (auto const& n : names) {
    if (seen[n]++ == 1) throw PreconditionError(std::string("cannot serialize: duplicate ") + what + " name '" + n + "'");
  }
}

// ---- category -------------------------------------------------------------

ordered_json write_category(const FiniteCategory& c, const std::string& name) {
  std::vector<std::string> names;
  for (MorphismId m = 0; m < c.morphism_count(); ++m) names.push_back(c.morphism(m).name);
  require_unique(names, "morphism");
  ordered_json j;
  j["kind"] = "category";
  j["name"] = name;
  j["objects"] = ordered_json::array();
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    ordered_json o;
    o["name"] = c.object_name(x);
    const std::string& id = c.morphism(c.identity(x)).name;
    if (id != "id_" + c.object_name(x)) o["identity"] = id;
    j["objects"].push_back(o);
  }
  j["morphisms"] = ordered_json::array();
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    const Morphism& mm = c.morphism(m);
    j["morphisms"].push_back({{"name", mm.name}, {"source", c.object_name(mm.source)}, {"target", c.object_name(mm.target)}});
  }
  j["compose"] = ordered_json::array();
  for (auto const& [g, f, gf] : c.composition_table().entries()) {
    if ((c.is_identity(g) && gf == f) || (c.is_identity(f) && gf == g)) continue;
    j["compose"].push_back({c.morphism(g).name, c.morphism(f).name, c.morphism(gf).name});
  }
  return j;
}

struct ParsedCategory {
  FiniteCategory category;
  Names objects, morphisms;
};

ParsedCategory read_category(const Node& n) {
  check_kind(n, DocumentKind::category);
  ParsedCategory p;
  p.category.set_name(n.has("name") ? n.at("name").str() : "");
  Node objects = n.at("objects");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    Node o = objects.at(i);
    std::string name = o.at("name").str();
    std::string id = o.has("identity") ? o.at("identity").str() : "id_" + name;
    ObjectId x = p.category.add_object(name, id);
    p.objects.add(name, x, o.path);
    p.morphisms.add(id, p.category.identity(x), o.path);
  }
  if (n.has("morphisms")) {
    Node ms = n.at("morphisms");
    for (std::size_t i = 0; i < ms.size(); ++i) {
      Node m = ms.at(i);
      std::string name = m.at("name").str();
      MorphismId k = p.category.add_morphism(p.objects.find(m.at("source"), "object"),
                                             p.objects.find(m.at("target"), "object"), name);
      p.morphisms.add(name, k, m.path);
    }
  }
  if (n.has("compose")) {
    Node cs = n.at("compose");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      Node e = cs.at(i);
      if (e.size() != 3) fail(e.path, "expected [g, f, g∘f]");
      p.category.set_composite(p.morphisms.find(e.at(0), "morphism"), p.morphisms.find(e.at(1), "morphism"),
                               p.morphisms.find(e.at(2), "morphism"));
    }
  }
  p.category.complete_unit_laws();
  require_ok(validate(p.category), n.path);
  return p;
}

// ---- two_category ---------------------------------------------------------

ordered_json write_two_category(const MarkedTwoCategory& m, const std::string& name) {
  const TwoCategory& c = m.category;
  std::vector<std::string> ones, twos;
  for (OneCellId f = 0; f < c.one_cell_count(); ++f) ones.push_back(c.one_cell(f).name);
  for (TwoCellId a = 0; a < c.two_cell_count(); ++a) twos.push_back(c.two_cell(a).name);
  require_unique(ones, "1-cell");
  require_unique(twos, "2-cell");
  auto n1 = [&](OneCellId f) { return c.one_cell(f).name; };
  auto n2 = [&](TwoCellId a) { return c.two_cell(a).name; };
  ordered_json j;
  j["kind"] = "two_category";
  j["name"] = name;
  j["objects"] = ordered_json::array();
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    ordered_json o;
    o["name"] = c.object_name(x);
    if (n1(c.identity(x)) != "id_" + c.object_name(x)) o["identity"] = n1(c.identity(x));
    j["objects"].push_back(o);
  }
  j["one_cells"] = ordered_json::array();
  for (OneCellId f = 0; f < c.one_cell_count(); ++f) {
    if (c.is_identity(f)) continue;
    j["one_cells"].push_back({{"name", n1(f)}, {"source", c.object_name(c.source(f))}, {"target", c.object_name(c.target(f))}});
  }
  j["two_cells"] = ordered_json::array();
  for (TwoCellId a = 0; a < c.two_cell_count(); ++a) {
    if (c.is_identity2(a)) continue;
    j["two_cells"].push_back({{"name", n2(a)}, {"source", n1(c.source2(a))}, {"target", n1(c.target2(a))}});
  }
  j["compose"] = ordered_json::array();
  for (auto const& [g, f, gf] : c.compose_table().entries()) {
    if ((c.is_identity(g) && gf == f) || (c.is_identity(f) && gf == g)) continue;
    j["compose"].push_back({n1(g), n1(f), n1(gf)});
  }
  j["vertical"] = ordered_json::array();
  for (auto const& [b, a, ba] : c.vertical_table().entries()) {
    if ((c.is_identity2(b) && ba == a) || (c.is_identity2(a) && ba == b)) continue;
    j["vertical"].push_back({n2(b), n2(a), n2(ba)});
  }
  auto object_unit = [&](TwoCellId a) { return c.is_identity2(a) && c.is_identity(c.source2(a)); };
  j["horizontal"] = ordered_json::array();
  for (auto const& [b, a, ba] : c.horizontal_table().entries()) {
    if ((object_unit(b) && ba == a) || (object_unit(a) && ba == b)) continue;
    if (c.is_identity2(b) && c.is_identity2(a)) {
      OneCellId gf = c.find_compose(c.source2(b), c.source2(a));
      if (gf != kNone && ba == c.identity2(gf)) continue;
    }
    j["horizontal"].push_back({n2(b), n2(a), n2(ba)});
  }
  j["marked"] = ordered_json::array();
  for (OneCellId f : m.marking.cells()) {
    if (!c.is_identity(f)) j["marked"].push_back(n1(f));
  }
  return j;
}

struct ParsedTwoCategory {
  MarkedTwoCategory marked;
  Names objects, one_cells, two_cells;
};

void read_table(const Node& n, const char* key, const Names& names, const char* what,
                const std::function<void(int, int, int)>& set) {
  if (!n.has(key)) return;
  Node t = n.at(key);
  for (std::size_t i = 0; i < t.size(); ++i) {
    Node e = t.at(i);
    if (e.size() != 3) fail(e.path, "expected a triple [second, first, composite]");
    set(names.find(e.at(0), what), names.find(e.at(1), what), names.find(e.at(2), what));
  }
}

ParsedTwoCategory read_two_category(const Node& n) {
  check_kind(n, DocumentKind::two_category);
  ParsedTwoCategory p;
  TwoCategory& c = p.marked.category;
  c.set_name(n.has("name") ? n.at("name").str() : "");
  Node objects = n.at("objects");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    Node o = objects.at(i);
    std::string name = o.at("name").str();
    std::string id = o.has("identity") ? o.at("identity").str() : "id_" + name;
    ObjectId x = c.add_object(name, id);
    p.objects.add(name, x, o.path);
    p.one_cells.add(id, c.identity(x), o.path);
    p.two_cells.add("id_" + id, c.identity2(c.identity(x)), o.path);
  }
  if (n.has("one_cells")) {
    Node ones = n.at("one_cells");
    for (std::size_t i = 0; i < ones.size(); ++i) {
      Node o = ones.at(i);
      std::string name = o.at("name").str();
      OneCellId f = c.add_one_cell(p.objects.find(o.at("source"), "object"), p.objects.find(o.at("target"), "object"), name);
      p.one_cells.add(name, f, o.path);
      p.two_cells.add("id_" + name, c.identity2(f), o.path);
    }
  }
  if (n.has("two_cells")) {
    Node twos = n.at("two_cells");
    for (std::size_t i = 0; i < twos.size(); ++i) {
      Node o = twos.at(i);
      std::string name = o.at("name").str();
      OneCellId s = p.one_cells.find(o.at("source"), "1-cell");
      OneCellId t = p.one_cells.find(o.at("target"), "1-cell");
      if (c.source(s) != c.source(t) || c.target(s) != c.target(t)) fail(o.path, "2-cell joins 1-cells of different homs");
      p.two_cells.add(name, c.add_two_cell(s, t, name), o.path);
    }
  }
  read_table(n, "compose", p.one_cells, "1-cell", [&](int g, int f, int gf) { c.set_compose(g, f, gf); });
  read_table(n, "vertical", p.two_cells, "2-cell", [&](int b, int a, int ba) { c.set_vertical(b, a, ba); });
  read_table(n, "horizontal", p.two_cells, "2-cell", [&](int b, int a, int ba) { c.set_horizontal(b, a, ba); });
  c.complete_unit_laws();
  std::vector<OneCellId> marked;
  if (n.has("marked")) {
    Node ms = n.at("marked");
    for (std::size_t i = 0; i < ms.size(); ++i) marked.push_back(p.one_cells.find(ms.at(i), "1-cell"));
  }
  p.marked.marking = Marking::of(c, marked);
  require_ok(validate(p.marked), n.path);
  return p;
}

// ---- functors -------------------------------------------------------------

ordered_json write_functor_map(const Functor& f, const FiniteCategory& a, const FiniteCategory& b) {
  ordered_json j;
  j["objects"] = ordered_json::object();
  for (ObjectId x = 0; x < a.object_count(); ++x) j["objects"][a.object_name(x)] = b.object_name(f.objects[x]);
  j["morphisms"] = ordered_json::object();
  for (MorphismId m = 0; m < a.morphism_count(); ++m) {
    if (!a.is_identity(m)) j["morphisms"][a.morphism(m).name] = b.morphism(f.morphisms[m]).name;
  }
  return j;
}

Functor read_functor_map(const Node& n, const ParsedCategory& a, const ParsedCategory& b) {
  Functor f;
  f.objects.assign(a.category.object_count(), kNone);
  f.morphisms.assign(a.category.morphism_count(), kNone);
  for (auto const& [key, value] : n.at("objects").items()) {
    f.objects.at(a.objects.find(Node{ordered_json(key), value.path}, "object")) = b.objects.find(value, "object");
  }
  for (ObjectId x = 0; x < a.category.object_count(); ++x) {
    if (f.objects[x] == kNone) fail(n.path + "/objects", "object '" + a.category.object_name(x) + "' is not mapped");
    f.morphisms[a.category.identity(x)] = b.category.identity(f.objects[x]);
  }
  if (n.has("morphisms")) {
    for (auto const& [key, value] : n.at("morphisms").items()) {
      f.morphisms.at(a.morphisms.find(Node{ordered_json(key), value.path}, "morphism")) = b.morphisms.find(value, "morphism");
    }
  }
  for (MorphismId m = 0; m < a.category.morphism_count(); ++m) {
    if (f.morphisms[m] == kNone) fail(n.path + "/morphisms", "morphism '" + a.category.morphism(m).name + "' is not mapped");
  }
  require_ok(validate(f, a.category, b.category), n.path);
  return f;
}

ordered_json write_components(const NaturalTransformation& t, const FiniteCategory& a, const FiniteCategory& b) {
  ordered_json j = ordered_json::object();
  for (ObjectId x = 0; x < a.object_count(); ++x) j[a.object_name(x)] = b.morphism(t.components[x]).name;
  return j;
}

NaturalTransformation read_components(const Node& n, const ParsedCategory& a, const ParsedCategory& b) {
  NaturalTransformation t;
  t.components.assign(a.category.object_count(), kNone);
  for (auto const& [key, value] : n.items()) {
    t.components.at(a.objects.find(Node{ordered_json(key), value.path}, "object")) = b.morphisms.find(value, "morphism");
  }
  for (ObjectId x = 0; x < a.category.object_count(); ++x) {
    if (t.components[x] == kNone) fail(n.path, "no component at '" + a.category.object_name(x) + "'");
  }
  return t;
}

NaturalTransformation identity_transformation(const Functor& f, const FiniteCategory& target) {
  NaturalTransformation t;
  for (ObjectId x : f.objects) t.components.push_back(target.identity(x));
  return t;
}

ordered_json write_marked_functor(const MarkedFunctor& f) {
  const TwoCategory& a = f.source.category;
  const TwoCategory& b = f.target.category;
  ordered_json j;
  j["kind"] = "functor";
  j["name"] = f.name;
  j["source"] = write_two_category(f.source, a.name());
  j["target"] = write_two_category(f.target, b.name());
  j["objects"] = ordered_json::object();
  for (ObjectId x = 0; x < a.object_count(); ++x) j["objects"][a.object_name(x)] = b.object_name(f.functor.objects[x]);
  j["one_cells"] = ordered_json::object();
  for (OneCellId u = 0; u < a.one_cell_count(); ++u) {
    if (!a.is_identity(u)) j["one_cells"][a.one_cell(u).name] = b.one_cell(f.functor.one_cells[u]).name;
  }
  j["two_cells"] = ordered_json::object();
  for (TwoCellId t = 0; t < a.two_cell_count(); ++t) {
    if (!a.is_identity2(t)) j["two_cells"][a.two_cell(t).name] = b.two_cell(f.functor.two_cells[t]).name;
  }
  return j;
}

MarkedFunctor read_marked_functor(const Node& n) {
  MarkedFunctor f;
  f.name = n.has("name") ? n.at("name").str() : "";
  ParsedTwoCategory a = read_two_category(n.at("source"));
  ParsedTwoCategory b = read_two_category(n.at("target"));
  const TwoCategory& ac = a.marked.category;
  const TwoCategory& bc = b.marked.category;
  TwoFunctor& g = f.functor;
  g.objects.assign(ac.object_count(), kNone);
  g.one_cells.assign(ac.one_cell_count(), kNone);
  g.two_cells.assign(ac.two_cell_count(), kNone);
  for (auto const& [key, value] : n.at("objects").items()) {
    g.objects.at(a.objects.find(Node{ordered_json(key), value.path}, "object")) = b.objects.find(value, "object");
  }
  for (ObjectId x = 0; x < ac.object_count(); ++x) {
    if (g.objects[x] == kNone) fail(n.path + "/objects", "object '" + ac.object_name(x) + "' is not mapped");
    g.one_cells[ac.identity(x)] = bc.identity(g.objects[x]);
  }
  if (n.has("one_cells")) {
    for (auto const& [key, value] : n.at("one_cells").items()) {
      g.one_cells.at(a.one_cells.find(Node{ordered_json(key), value.path}, "1-cell")) = b.one_cells.find(value, "1-cell");
    }
  }
  for (OneCellId u = 0; u < ac.one_cell_count(); ++u) {
    if (g.one_cells[u] == kNone) fail(n.path + "/one_cells", "1-cell '" + ac.one_cell(u).name + "' is not mapped");
    g.two_cells[ac.identity2(u)] = bc.identity2(g.one_cells[u]);
  }
  if (n.has("two_cells")) {
    for (auto const& [key, value] : n.at("two_cells").items()) {
      g.two_cells.at(a.two_cells.find(Node{ordered_json(key), value.path}, "2-cell")) = b.two_cells.find(value, "2-cell");
    }
  }
  for (TwoCellId t = 0; t < ac.two_cell_count(); ++t) {
    if (g.two_cells[t] == kNone) fail(n.path + "/two_cells", "2-cell '" + ac.two_cell(t).name + "' is not mapped");
  }
  f.source = std::move(a.marked);
  f.target = std::move(b.marked);
  require_ok(validate(g, f.source, f.target), n.path);
  return f;
}

// ---- Cat-valued functors and cocones --------------------------------------

ordered_json write_cat_valued(const CatValuedFunctor& f, const std::string& name) {
  const TwoCategory& s = f.source.category;
  ordered_json j;
  j["kind"] = "cat_valued_functor";
  j["name"] = name;
  j["source"] = write_two_category(f.source, s.name());
  j["categories"] = ordered_json::object();
  for (ObjectId x = 0; x < s.object_count(); ++x) {
    j["categories"][s.object_name(x)] = write_category(f.categories[x], f.categories[x].name());
  }
  j["one_cells"] = ordered_json::object();
  for (OneCellId u = 0; u < s.one_cell_count(); ++u) {
    if (s.is_identity(u)) continue;
    j["one_cells"][s.one_cell(u).name] =
        write_functor_map(f.one_cells[u], f.categories[s.source(u)], f.categories[s.target(u)]);
  }
  j["two_cells"] = ordered_json::object();
  for (TwoCellId t = 0; t < s.two_cell_count(); ++t) {
    if (s.is_identity2(t)) continue;
    OneCellId u = s.source2(t);
    j["two_cells"][s.two_cell(t).name] =
        write_components(f.two_cells[t], f.categories[s.source(u)], f.categories[s.target(u)]);
  }
  return j;
}

struct ParsedCatValued {
  CatValuedFunctor functor;
  ParsedTwoCategory source;
  std::vector<ParsedCategory> categories;
};

ParsedCatValued read_cat_valued(const Node& n) {
  check_kind(n, DocumentKind::cat_valued_functor);
  ParsedCatValued p;
  p.source = read_two_category(n.at("source"));
  const TwoCategory& s = p.source.marked.category;
  std::vector<std::optional<ParsedCategory>> cats(s.object_count());
  for (auto const& [key, value] : n.at("categories").items()) {
    cats.at(p.source.objects.find(Node{ordered_json(key), value.path}, "object")) = read_category(value);
  }
  for (ObjectId x = 0; x < s.object_count(); ++x) {
    if (!cats[x]) fail(n.path + "/categories", "no category at '" + s.object_name(x) + "'");
    p.categories.push_back(std::move(*cats[x]));
    p.functor.categories.push_back(p.categories.back().category);
  }
  p.functor.source = p.source.marked;
  std::vector<std::optional<Functor>> ones(s.one_cell_count());
  if (n.has("one_cells")) {
    for (auto const& [key, value] : n.at("one_cells").items()) {
      OneCellId u = p.source.one_cells.find(Node{ordered_json(key), value.path}, "1-cell");
      ones[u] = read_functor_map(value, p.categories[s.source(u)], p.categories[s.target(u)]);
    }
  }
  for (OneCellId u = 0; u < s.one_cell_count(); ++u) {
    if (!ones[u] && s.is_identity(u)) ones[u] = identity_functor(p.functor.categories[s.source(u)]);
    if (!ones[u]) fail(n.path + "/one_cells", "1-cell '" + s.one_cell(u).name + "' is not mapped");
    p.functor.one_cells.push_back(*ones[u]);
  }
  std::vector<std::optional<NaturalTransformation>> twos(s.two_cell_count());
  if (n.has("two_cells")) {
    for (auto const& [key, value] : n.at("two_cells").items()) {
      TwoCellId t = p.source.two_cells.find(Node{ordered_json(key), value.path}, "2-cell");
      OneCellId u = s.source2(t);
      twos[t] = read_components(value, p.categories[s.source(u)], p.categories[s.target(u)]);
    }
  }
  for (TwoCellId t = 0; t < s.two_cell_count(); ++t) {
    OneCellId u = s.source2(t);
    if (!twos[t] && s.is_identity2(t)) {
      twos[t] = identity_transformation(p.functor.one_cells[u], p.functor.categories[s.target(u)]);
    }
    if (!twos[t]) fail(n.path + "/two_cells", "2-cell '" + s.two_cell(t).name + "' is not mapped");
    p.functor.two_cells.push_back(*twos[t]);
  }
  require_ok(validate(p.functor), n.path);
  return p;
}

ordered_json write_cocone(const CoconeDocument& d, const std::string& name) {
  const TwoCategory& s = d.functor.source.category;
  ordered_json j;
  j["kind"] = "cocone";
  j["name"] = name;
  j["functor"] = write_cat_valued(d.functor, s.name());
  j["tip"] = write_category(d.cocone.tip, d.cocone.tip.name());
  j["legs"] = ordered_json::object();
  for (ObjectId x = 0; x < s.object_count(); ++x) {
    j["legs"][s.object_name(x)] = write_functor_map(d.cocone.legs[x], d.functor.categories[x], d.cocone.tip);
  }
  j["fillers"] = ordered_json::object();
  for (OneCellId u = 0; u < s.one_cell_count(); ++u) {
    const FiniteCategory& from = d.functor.categories[s.source(u)];
    if (s.is_identity(u) &&
        d.cocone.fillers[u] == identity_transformation(d.cocone.legs[s.source(u)], d.cocone.tip)) {
      continue;
    }
    j["fillers"][s.one_cell(u).name] = write_components(d.cocone.fillers[u], from, d.cocone.tip);
  }
  return j;
}

CoconeDocument read_cocone(const Node& n) {
  CoconeDocument d;
  ParsedCatValued f = read_cat_valued(n.at("functor"));
  ParsedCategory tip = read_category(n.at("tip"));
  const TwoCategory& s = f.functor.source.category;
  d.functor = f.functor;
  d.cocone.tip = tip.category;
  std::vector<std::optional<Functor>> legs(s.object_count());
  for (auto const& [key, value] : n.at("legs").items()) {
    ObjectId x = f.source.objects.find(Node{ordered_json(key), value.path}, "object");
    legs[x] = read_functor_map(value, f.categories[x], tip);
  }
  for (ObjectId x = 0; x < s.object_count(); ++x) {
    if (!legs[x]) fail(n.path + "/legs", "no leg at '" + s.object_name(x) + "'");
    d.cocone.legs.push_back(*legs[x]);
  }
  std::vector<std::optional<NaturalTransformation>> fillers(s.one_cell_count());
  if (n.has("fillers")) {
    for (auto const& [key, value] : n.at("fillers").items()) {
      OneCellId u = f.source.one_cells.find(Node{ordered_json(key), value.path}, "1-cell");
      fillers[u] = read_components(value, f.categories[s.source(u)], tip);
    }
  }
  for (OneCellId u = 0; u < s.one_cell_count(); ++u) {
    if (!fillers[u] && s.is_identity(u)) fillers[u] = identity_transformation(d.cocone.legs[s.source(u)], tip.category);
    if (!fillers[u]) fail(n.path + "/fillers", "no filler over '" + s.one_cell(u).name + "'");
    d.cocone.fillers.push_back(*fillers[u]);
  }
  return d;
}

DocumentKind parse_kind(const Node& n) {
  std::string k = n.str();
  for (DocumentKind kind : {DocumentKind::two_category, DocumentKind::category, DocumentKind::functor,
                            DocumentKind::cat_valued_functor, DocumentKind::cocone}) {
    if (k == to_string(kind)) return kind;
  }
  fail(n.path, "unknown kind '" + k + "'");
}

}  // namespace

Document make_document(std::string name, MarkedTwoCategory c) {
  c.category.set_name(name);
  return {kSchemaVersion, DocumentKind::two_category, std::move(name), std::move(c)};
}

Document make_document(std::string name, FiniteCategory c) {
  c.set_name(name);
  return {kSchemaVersion, DocumentKind::category, std::move(name), std::move(c)};
}

Document make_document(MarkedFunctor f) {
  std::string name = f.name;
  return {kSchemaVersion, DocumentKind::functor, std::move(name), std::move(f)};
}

Document make_document(std::string name, CatValuedFunctor f) {
  return {kSchemaVersion, DocumentKind::cat_valued_functor, std::move(name), std::move(f)};
}

Document make_document(std::string name, CatValuedFunctor f, CatCocone cocone) {
  return {kSchemaVersion, DocumentKind::cocone, std::move(name), CoconeDocument{std::move(f), std::move(cocone)}};
}

Document parse_document(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    int line = 1;
    std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) line += text[i] == '\n';
    std::string what = e.what();
    auto pos = what.find("syntax error");
    throw ParseError(pos == std::string::npos ? what : what.substr(pos), line);
  }
  Node root{j, ""};
  Document d;
  d.schema = root.at("schema").integer();
  if (d.schema != kSchemaVersion) fail("/schema", "unsupported schema version " + std::to_string(d.schema));
  d.kind = parse_kind(root.at("kind"));
  d.name = root.has("name") ? root.at("name").str() : "";
  switch (d.kind) {
    case DocumentKind::two_category: d.payload = read_two_category(root).marked; break;
    case DocumentKind::category: d.payload = read_category(root).category; break;
    case DocumentKind::functor: d.payload = read_marked_functor(root); break;
    case DocumentKind::cat_valued_functor: d.payload = read_cat_valued(root).functor; break;
    case DocumentKind::cocone: d.payload = read_cocone(root); break;
  }
  return d;
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string(), 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_document(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.filename().string() + ": " + e.what(), 0);
  }
}

std::string serialize(const Document& doc) {
  ordered_json body;
  switch (doc.kind) {
    case DocumentKind::two_category: body = write_two_category(std::get<MarkedTwoCategory>(doc.payload), doc.name); break;
    case DocumentKind::category: body = write_category(std::get<FiniteCategory>(doc.payload), doc.name); break;
    case DocumentKind::functor: body = write_marked_functor(std::get<MarkedFunctor>(doc.payload)); break;
    case DocumentKind::cat_valued_functor: body = write_cat_valued(std::get<CatValuedFunctor>(doc.payload), doc.name); break;
    case DocumentKind::cocone: body = write_cocone(std::get<CoconeDocument>(doc.payload), doc.name); break;
  }
  ordered_json j;
  j["schema"] = doc.schema;
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  j["name"] = doc.name;
  return j.dump(2) + "\n";
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out = fixtures::two_category_names();
  for (auto const& n : fixtures::marked_functor_names()) out.push_back(n);
  for (auto const& n : fixtures::cat_valued_functor_names()) out.push_back(n);
  out.push_back("adjunction_cocone");
  for (auto const& n : fixtures::category_names()) out.push_back(n);
  return out;
}

Document fixture_document(const std::string& name) {
  for (auto const& n : fixtures::two_category_names()) {
    if (n == name) return make_document(name, fixtures::two_category(name));
  }
  for (auto const& n : fixtures::marked_functor_names()) {
    if (n == name) return make_document(fixtures::marked_functor(name));
  }
  for (auto const& n : fixtures::cat_valued_functor_names()) {
    if (n == name) return make_document(name, fixtures::cat_valued_functor(name));
  }
  if (name == "adjunction_cocone") return make_document(name, fixtures::adjunction_T(), fixtures::adjunction_cocone());
  for (auto const& n : fixtures::category_names()) {
    if (n == name) return make_document(name, fixtures::category(name));
  }
  throw PreconditionError("unknown fixture '" + name + "'");
}

}  // namespace tcat
