#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tcat/cocones.hpp"
#include "tcat/cofinality.hpp"
#include "tcat/document.hpp"
#include "tcat/equivalence.hpp"
#include "tcat/errors.hpp"
#include "tcat/grothendieck.hpp"
#include "tcat/homotopy.hpp"
#include "tcat/localization.hpp"
#include "tcat/nerve.hpp"
#include "tcat/shapes.hpp"
#include "tcat/slices.hpp"
#include "tcat/validate.hpp"

using namespace tcat;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kYes = 0, kNo = 1, kUnknown = 2, kInput = 3 };

struct Options {
  std::string format = "text";
  std::string limits;
  std::string input;
};

Limits resolve_limits(const Options& o) {
  if (!o.limits.empty()) return parse_limits(o.limits);
  if (const char* env = std::getenv("TCAT_LIMITS"); env && *env) {
    try {
      return parse_limits(env);
    } catch (const PreconditionError& e) {
      throw PreconditionError(std::string("TCAT_LIMITS: ") + e.what());
    }
  }
  return Limits{};
}

Document load(const std::string& ref) {
  if (ref.empty()) throw PreconditionError("no input document given");
  if (std::filesystem::exists(ref)) return load_document(ref);
  for (const auto& name : fixture_names()) {
    if (name == ref) return fixture_document(ref);
  }
  throw PreconditionError("no file or fixture named '" + ref + "'");
}

MarkedTwoCategory as_two_category(const Document& d) {
  if (d.kind == DocumentKind::two_category) return std::get<MarkedTwoCategory>(d.payload);
  if (d.kind == DocumentKind::category) {
    return minimal_marking(locally_discrete(std::get<FiniteCategory>(d.payload)));
  }
  throw PreconditionError("expected a two_category or category document, found " + std::string(to_string(d.kind)));
}

MarkedFunctor as_functor(const Document& d) {
  if (d.kind != DocumentKind::functor) {
    throw PreconditionError("expected a functor document, found " + std::string(to_string(d.kind)));
  }
  return std::get<MarkedFunctor>(d.payload);
}

CatValuedFunctor as_cat_valued(const Document& d) {
  if (d.kind == DocumentKind::cat_valued_functor) return std::get<CatValuedFunctor>(d.payload);
  if (d.kind == DocumentKind::cocone) return std::get<CoconeDocument>(d.payload).functor;
  throw PreconditionError("expected a cat_valued_functor document, found " + std::string(to_string(d.kind)));
}

FiniteCategory as_category(const Document& d) {
  if (d.kind == DocumentKind::category) return std::get<FiniteCategory>(d.payload);
  if (d.kind == DocumentKind::two_category) {
    return homotopy_category(std::get<MarkedTwoCategory>(d.payload).category).category;
  }
  throw PreconditionError("expected a category document, found " + std::string(to_string(d.kind)));
}

ObjectId object_named(const TwoCategory& c, const std::string& name) {
  auto x = c.find_object(name);
  if (!x) throw PreconditionError("no object named '" + name + "'");
  return *x;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    while (!part.empty() && part.front() == ' ') part.erase(part.begin());
    while (!part.empty() && part.back() == ' ') part.pop_back();
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

Json tri(const TriState& t) {
  Json j;
  j["result"] = to_string(t.value());
  if (!t.reason().empty()) j["reason"] = t.reason();
  return j;
}

int exit_of(const TriState& t) {
  return t.is_yes() ? kYes : t.is_no() ? kNo : kUnknown;
}

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool flat(const Json& j) {
  if (j.is_array()) {
    std::size_t width = 0;
    for (const auto& e : j) {
      if (e.is_structured()) return false;
      width += scalar(e).size() + 2;
    }
    return width <= 100;
  }
  return !j.is_object();
}

std::string inline_text(const Json& j) {
  if (j.is_array()) {
    std::string out;
    for (const auto& e : j) out += (out.empty() ? "" : ", ") + (e.is_structured() ? inline_text(e) : scalar(e));
    return "[" + out + "]";
  }
  if (j.is_object()) {
    std::string out;
    for (auto it = j.begin(); it != j.end(); ++it) {
      out += (out.empty() ? "" : "  ") + it.key() + "=" + (it->is_structured() ? inline_text(*it) : scalar(*it));
    }
    return out;
  }
  return scalar(j);
}

void print_text(const Json& j, int indent, std::ostream& out) {
  std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = *it;
    if (flat(v)) {
      out << pad << it.key() << ": " << (v.is_array() ? inline_text(v) : scalar(v)) << "\n";
    } else if (v.is_object()) {
      out << pad << it.key() << ":\n";
      print_text(v, indent + 2, out);
    } else {
      out << pad << it.key() << ":\n";
      for (const auto& e : v) out << pad << "  - " << (e.is_structured() ? inline_text(e) : scalar(e)) << "\n";
    }
  }
}

void emit(const Options& o, const Json& report) {
  if (o.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    print_text(report, 0, std::cout);
  }
}

Json limits_json(const Limits& l) { return to_string(l); }

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json hom_table(const LocalizedCategory& l) {
  Json rows = Json::array();
  const FiniteCategory& c = l.base;
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    for (ObjectId y = 0; y < c.object_count(); ++y) {
      HomClasses h = hom_classes(l, x, y);
      if (h.words.empty() && h.status == Status::complete) continue;
      Json row;
      row["from"] = c.object_name(x);
      row["to"] = c.object_name(y);
      row["classes"] = h.words.size();
      row["status"] = to_string(h.status);
      row["words"] = h.names;
      rows.push_back(row);
    }
  }
  return rows;
}

Json localized_json(const LocalizedCategory& l) {
  Json j;
  j["status"] = to_string(l.status);
  if (!l.reason.empty()) j["reason"] = l.reason;
  j["limits"] = limits_json(l.limits);
  j["objects"] = l.object_count();
  Json inverted = Json::array();
  for (MorphismId m : l.inverted) inverted.push_back(l.base.morphism(m).name);
  j["inverted"] = inverted;
  j["certificate"] = hex(l.certificate);
  j["homs"] = hom_table(l);
  return j;
}

std::string serialize_two_category(std::string name, MarkedTwoCategory c) {
  c.category.disambiguate_names();
  return serialize(make_document(std::move(name), std::move(c)));
}

int run_validate(const Options& o) {
  Document d = load(o.input);
  Json r;
  r["name"] = d.name;
  r["kind"] = to_string(d.kind);
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, MarkedTwoCategory>) {
          r["objects"] = p.category.object_count();
          r["one_cells"] = p.category.one_cell_count();
          r["two_cells"] = p.category.two_cell_count();
          r["marked"] = p.marking.size();
          MarkingFlags flags = marking_flags(p);
          r["composition_closed"] = flags.composition_closed;
          r["contains_equivalences"] = flags.contains_equivalences;
          r["saturated"] = is_saturated(p);
        } else if constexpr (std::is_same_v<T, FiniteCategory>) {
          r["objects"] = p.object_count();
          r["morphisms"] = p.morphism_count();
        } else if constexpr (std::is_same_v<T, MarkedFunctor>) {
          r["source"] = p.source.category.name();
          r["target"] = p.target.category.name();
          r["preserves_marking"] = preserves_marking(p.functor, p.source, p.target);
        } else if constexpr (std::is_same_v<T, CatValuedFunctor>) {
          r["source_objects"] = p.source.category.object_count();
        } else {
          r["source_objects"] = p.functor.source.category.object_count();
          r["tip_objects"] = p.cocone.tip.object_count();
        }
      },
      d.payload);
  r["valid"] = true;
  emit(o, r);
  return kYes;
}

struct NerveFlags {
  int dim = 1;
  bool list = false;
  bool lax = false;
  std::size_t max_simplices = 1000000;
};

int run_nerve(const Options& o, const NerveFlags& f) {
  MarkedTwoCategory c = as_two_category(load(o.input));
  NerveOptions opts;
  opts.max_simplices = f.max_simplices;
  std::vector<NerveSimplex> simplices = duskin_simplices(c.category, f.dim, opts);
  Json r;
  r["dimension"] = f.dim;
  r["simplices"] = simplices.size();
  if (f.lax) {
    std::size_t lax = normal_lax_functors(c.category, f.dim, opts).size();
    r["normal_lax_functors"] = lax;
    r["agree"] = lax == simplices.size();
  }
  if (f.dim == 1) {
    std::vector<bool> marked = nerve_marking(c, simplices);
    r["marked_edges"] = std::count(marked.begin(), marked.end(), true);
  }
  if (f.list) {
    Json list = Json::array();
    for (const NerveSimplex& s : simplices) list.push_back(describe(s, c.category));
    r["list"] = list;
  }
  emit(o, r);
  return f.lax && !r["agree"].get<bool>() ? kNo : kYes;
}

struct SliceFlags {
  std::string at;
  std::string convention = "lax";
  std::string under;
  bool marked = false;
};

Convention convention_of(const std::string& s) {
  if (s == "lax") return Convention::lax;
  if (s == "oplax") return Convention::oplax;
  throw PreconditionError("convention must be lax or oplax");
}

int run_slice(const Options& o, const SliceFlags& f) {
  MarkedFunctor fun;
  if (!f.under.empty()) {
    if (!o.input.empty()) throw PreconditionError("give either a 2-category or --under, not both");
    fun = as_functor(load(f.under));
  } else {
    MarkedTwoCategory c = as_two_category(load(o.input));
    fun = {"id", c, c, identity_two_functor(c.category)};
  }
  if (f.at.empty()) throw PreconditionError("--at is required");
  ObjectId d = object_named(fun.target.category, f.at);
  Slice s = marked_slice(fun.functor, fun.source, fun.target.category, d, convention_of(f.convention));
  MarkedTwoCategory out = s.marked;
  if (!f.marked) out.marking = Marking::identities(out.category);
  if (o.format == "json") {
    std::cout << serialize_two_category("slice", out);
    return kYes;
  }
  Json r;
  r["apex"] = f.at;
  r["convention"] = to_string(s.convention);
  r["objects"] = s.category().object_count();
  r["one_cells"] = s.category().one_cell_count();
  r["two_cells"] = s.category().two_cell_count();
  r["marked"] = out.marking.size();
  Json objs = Json::array();
  for (auto const& [c, g] : s.objects) {
    objs.push_back(Json{{"object", fun.source.category.object_name(c)}, {"via", fun.target.category.one_cell(g).name}});
  }
  r["slice_objects"] = objs;
  emit(o, r);
  return kYes;
}

struct ShapeFlags {
  int dim = 1;
  int collapse = -1;
  std::string subset;
  bool slice = false;
};

int run_shapes(const Options& o, const ShapeFlags& f) {
  if (f.dim < 0) throw PreconditionError("--dim must be nonnegative");
  LinearIndexSet index = LinearIndexSet::interval(f.dim);
  if (!f.subset.empty()) {
    std::vector<int> elements;
    for (const auto& p : split(f.subset)) {
      try {
        elements.push_back(std::stoi(p));
      } catch (const std::exception&) {
        throw PreconditionError("malformed subset element '" + p + "'");
      }
    }
    index = LinearIndexSet(elements);
  }
  std::string name = "oseg";
  MarkedTwoCategory shape;
  if (f.collapse >= 0) {
    PartialCollapse p = partial_collapse(index, f.collapse);
    shape = minimal_marking(p.shape.category);
    name = "collapse_" + std::to_string(f.collapse);
  } else if (f.slice) {
    shape = minimal_marking(oseg_lax_slice(index).category());
    name = "oseg_slice";
  } else {
    shape = minimal_marking(oseg(index).category);
  }
  if (o.format == "json") {
    std::cout << serialize_two_category(name, shape);
    return kYes;
  }
  Json r;
  r["shape"] = name;
  Json el = Json::array();
  for (int x : index.elements()) el.push_back(x);
  r["index"] = el;
  r["objects"] = shape.category.object_count();
  r["one_cells"] = shape.category.one_cell_count();
  r["two_cells"] = shape.category.two_cell_count();
  r["valid"] = validate(shape.category).ok();
  emit(o, r);
  return kYes;
}

int run_localize(const Options& o, const std::string& at) {
  Document d = load(o.input);
  FiniteCategory c;
  std::vector<MorphismId> w;
  std::string mode = at.empty() ? "marked" : at;
  if (d.kind == DocumentKind::two_category) {
    const auto& m = std::get<MarkedTwoCategory>(d.payload);
    HomotopyCategory h = homotopy_category(m.category);
    c = h.category;
    if (mode == "marked") w = homotopy_marking(h, m.marking);
  } else {
    c = as_category(d);
  }
  if (mode == "all") {
    for (MorphismId m = 0; m < c.morphism_count(); ++m) w.push_back(m);
  } else if (mode != "marked") {
    for (const auto& name : split(mode)) {
      auto m = c.find_morphism(name);
      if (!m) throw PreconditionError("no morphism named '" + name + "'");
      w.push_back(*m);
    }
  }
  LocalizedCategory l = localize(c, w, resolve_limits(o));
  Json r;
  r["category"] = d.name;
  Json body = localized_json(l);
  for (auto it = body.begin(); it != body.end(); ++it) r[it.key()] = *it;
  emit(o, r);
  return l.status == Status::complete ? kYes : kUnknown;
}

int run_colim(const Options& o, const std::string& expect) {
  CatValuedFunctor f = as_cat_valued(load(o.input));
  MarkedColimit m = marked_colimit(f, resolve_limits(o));
  Json r;
  r["el_objects"] = m.el.category().object_count();
  r["el_one_cells"] = m.el.category().one_cell_count();
  r["el_marked"] = m.el.marked.marking.size();
  Json body = localized_json(m.localized);
  for (auto it = body.begin(); it != body.end(); ++it) r[it.key()] = *it;
  if (m.canonical) {
    r["iso_classes"] = iso_class_count(m.canonical->tip);
    CoconeReport cr = check_marked_cocone(f, *m.canonical);
    r["canonical_cocone"] = cr.ok() ? "marked" : cr.summary();
  }
  int code = m.localized.status == Status::complete ? kYes : kUnknown;
  if (!expect.empty()) {
    Document e = load(expect);
    TriState t = are_equivalent(m.localized, as_category(e));
    r["expect"] = e.name;
    r["equivalent"] = tri(t);
    code = exit_of(t);
  }
  emit(o, r);
  return code;
}

struct CoconeFlags {
  bool enumerate = false;
  std::string tip;
  std::size_t budget = 1000000;
};

int run_cocone(const Options& o, const CoconeFlags& f) {
  Document d = load(o.input);
  CatValuedFunctor fun = as_cat_valued(d);
  Json r;
  int code = kYes;
  std::optional<CatCocone> given;
  if (d.kind == DocumentKind::cocone) {
    given = std::get<CoconeDocument>(d.payload).cocone;
    CoconeReport cr = check_marked_cocone(fun, *given);
    r["marked_cocone"] = cr.ok();
    Json v = Json::array();
    for (const CoconeViolation& x : cr.violations) {
      v.push_back(Json{{"condition", x.condition}, {"message", x.message}});
    }
    r["violations"] = v;
    code = cr.ok() ? kYes : kNo;
  }
  if (f.enumerate) {
    FiniteCategory tip;
    if (!f.tip.empty()) {
      tip = as_category(load(f.tip));
    } else if (given) {
      tip = given->tip;
    } else {
      throw PreconditionError("--enumerate needs --tip or a cocone document");
    }
    std::vector<FiniteCategory> cats;
    auto index_of = [&](const FiniteCategory& c) {
      for (std::size_t i = 0; i < cats.size(); ++i) {
        if (cats[i] == c) return static_cast<ObjectId>(i);
      }
      cats.push_back(c);
      return static_cast<ObjectId>(cats.size() - 1);
    };
    std::vector<ObjectId> object_map;
    for (const FiniteCategory& c : fun.categories) object_map.push_back(index_of(c));
    ObjectId tip_object = index_of(tip);
    CatFragment fragment = cat_fragment(cats);
    TwoFunctor g = embed(fun, fragment, object_map);
    std::optional<MarkedCocone> wanted;
    if (given && given->tip == tip) wanted = embed(*given, fun, fragment, object_map, tip_object);
    bool found = false;
    std::size_t n = enumerate_marked_cocones(
        g, fun.source, fragment.category,
        [&](const MarkedCocone& k) {
          found = found || (wanted && k == *wanted);
          return true;
        },
        CoconeSearch{tip_object, f.budget});
    r["cocones_with_tip"] = n;
    if (wanted) r["given_cocone_found"] = found;
  }
  emit(o, r);
  return code;
}

Json traces_json(const std::vector<ConditionTrace>& traces, const TwoCategory& d) {
  Json out = Json::array();
  for (const ConditionTrace& t : traces) {
    Json j;
    j["object"] = d.object_name(t.object);
    j["condition"] = t.condition;
    j["result"] = to_string(t.result.value());
    if (!t.result.reason().empty()) j["reason"] = t.result.reason();
    out.push_back(j);
  }
  return out;
}

struct CofinalFlags {
  std::string convention = "oplax";
  bool probe = false;
  bool hypotheses = false;
};

int run_cofinal(const Options& o, const CofinalFlags& f) {
  MarkedFunctor fun = as_functor(load(o.input));
  Limits limits = resolve_limits(o);
  Convention conv = convention_of(f.convention);
  CofinalityReport rep = check_decat_cofinality(fun, limits, conv);
  const TwoCategory& d = fun.target.category;
  Json r;
  r["functor"] = fun.name;
  r["verdict"] = to_string(rep.verdict);
  if (rep.verdict == Verdict::not_cofinal) {
    r["witness"] = Json{{"object", d.object_name(rep.witness_object)},
                        {"condition", rep.witness_condition},
                        {"morphism", rep.witness}};
  }
  r["convention"] = to_string(rep.convention);
  r["limits"] = limits_json(rep.limits);
  r["note"] = rep.note;
  r["traces"] = traces_json(rep.traces, d);
  if (f.hypotheses) {
    HypothesisReport h = check_adagger_hypotheses(fun, limits, Convention::lax);
    Json hj;
    hj["theorem"] = to_string(h.theorem.value());
    hj["corollary"] = to_string(h.corollary.value());
    hj["convention"] = to_string(h.convention);
    hj["note"] = h.note;
    hj["traces"] = traces_json(h.traces, d);
    r["hypotheses"] = hj;
  }
  if (f.probe) {
    Json probes = Json::array();
    for (ObjectId x = 0; x < d.object_count(); ++x) {
      ProbeReport p = representable_probe(fun, x, limits);
      Json j;
      j["object"] = d.object_name(x);
      j["target_el_matches"] = p.target_el_matches;
      j["source_el_matches"] = p.source_el_matches;
      j["source_classes"] = p.source_classes;
      j["target_classes"] = p.target_classes;
      j["equivalent"] = to_string(p.equivalent.value());
      j["induced_equivalence"] = to_string(p.induced_equivalence.value());
      probes.push_back(j);
    }
    r["probe"] = probes;
  }
  emit(o, r);
  switch (rep.verdict) {
    case Verdict::cofinal: return kYes;
    case Verdict::not_cofinal: return kNo;
    case Verdict::unknown: return kUnknown;
  }
  return kUnknown;
}

struct Classical {
  Functor functor;
  FiniteCategory source;
  FiniteCategory target;
};

Classical classical(const MarkedFunctor& f) {
  if (!f.source.category.is_locally_discrete() || !f.target.category.is_locally_discrete()) {
    throw PreconditionError("this check needs locally discrete source and target");
  }
  return {{f.functor.objects, f.functor.one_cells},
          underlying_category(f.source.category),
          underlying_category(f.target.category)};
}

int run_quillen(const Options& o) {
  MarkedFunctor fun = as_functor(load(o.input));
  Classical c = classical(fun);
  TriState t = check_quillen_a(c.functor, c.source, c.target, resolve_limits(o));
  Json r;
  r["functor"] = fun.name;
  Json body = tri(t);
  for (auto it = body.begin(); it != body.end(); ++it) r[it.key()] = *it;
  emit(o, r);
  return exit_of(t);
}

int run_walde(const Options& o, const std::string& family_path) {
  MarkedFunctor fun = as_functor(load(o.input));
  Classical c = classical(fun);
  const int n = c.target.object_count();
  std::vector<std::vector<std::pair<ObjectId, MorphismId>>> family(n);
  if (family_path.empty()) {
    for (ObjectId x = 0; x < n; ++x) {
      WeakFiber w = weak_fiber(c.functor, c.source, c.target, x);
      for (ObjectId obj : w.fiber.object_in_parent) family[x].push_back(w.coslice.objects[obj]);
    }
  } else {
    std::ifstream in(family_path);
    if (!in) throw PreconditionError("cannot read " + family_path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(family_path + ": " + e.what(), 0);
    }
    if (!j.is_object()) throw ParseError(family_path + ": expected an object keyed by target objects", 0);
    for (auto it = j.begin(); it != j.end(); ++it) {
      auto x = c.target.find_object(it.key());
      if (!x) throw PreconditionError("no target object named '" + it.key() + "'");
      for (const auto& e : *it) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
          throw ParseError(family_path + ": members are [object, morphism] pairs", 0);
        }
        auto obj = c.source.find_object(e[0].get<std::string>());
        auto g = c.target.find_morphism(e[1].get<std::string>());
        if (!obj || !g) throw PreconditionError("unknown member " + e.dump());
        family[*x].push_back({*obj, *g});
      }
    }
  }
  TriState t = check_walde(c.functor, c.source, c.target, family, resolve_limits(o));
  Json r;
  r["functor"] = fun.name;
  Json members;
  for (ObjectId x = 0; x < n; ++x) {
    Json list = Json::array();
    for (auto [obj, g] : family[x]) list.push_back(c.source.object_name(obj) + " via " + c.target.morphism(g).name);
    members[c.target.object_name(x)] = list;
  }
  r["family"] = members;
  Json body = tri(t);
  for (auto it = body.begin(); it != body.end(); ++it) r[it.key()] = *it;
  emit(o, r);
  return exit_of(t);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tcat: finite marked 2-categories, localizations, colimits and cofinality"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--limits", o.limits, "len,classes,steps (default from TCAT_LIMITS, else 8,64,100000)");

  auto input = [&](CLI::App* sub, bool required = true, const char* name = "input") {
    auto* opt = sub->add_option(name, o.input, "Document file or bundled fixture name");
    if (required) opt->required();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a document");
  input(validate_cmd);

  NerveFlags nf;
  auto* nerve_cmd = app.add_subcommand("nerve", "Count or list Duskin nerve simplices");
  input(nerve_cmd);
  nerve_cmd->add_option("--dim", nf.dim, "Simplex dimension")->check(CLI::Range(0, 4));
  auto* count_flag = nerve_cmd->add_flag("--count", "Print counts only (default)");
  nerve_cmd->add_flag("--list", nf.list, "List simplices")->excludes(count_flag);
  nerve_cmd->add_flag("--lax", nf.lax, "Also count normal lax functors [n] -> C");
  nerve_cmd->add_option("--max-simplices", nf.max_simplices, "Abort past this many simplices");

  SliceFlags sf;
  auto* slice_cmd = app.add_subcommand("slice", "Slice under an object");
  input(slice_cmd, false);
  slice_cmd->add_option("--at", sf.at, "Apex object")->required();
  slice_cmd->add_option("--convention", sf.convention, "Slice convention (default lax)")->check(CLI::IsMember({"lax", "oplax"}));
  slice_cmd->add_option("--under", sf.under, "Functor document; slices its source under --at");
  slice_cmd->add_flag("--marked", sf.marked, "Keep the induced marking");

  std::string at;
  auto* localize_cmd = app.add_subcommand("localize", "Localize a category");
  input(localize_cmd);
  localize_cmd->add_option("--at", at, "marked, all, or comma-separated morphism names");

  std::string expect;
  auto* colim_cmd = app.add_subcommand("colim", "Marked colimit of a Cat-valued functor");
  input(colim_cmd, true, "input,--functor");
  colim_cmd->add_option("--expect", expect, "Category document to compare against");

  CoconeFlags kf;
  auto* cocone_cmd = app.add_subcommand("cocone", "Check or enumerate marked cocones");
  input(cocone_cmd, true, "input,--functor");
  cocone_cmd->add_flag("--enumerate", kf.enumerate, "Enumerate marked cocones with a fixed tip");
  cocone_cmd->add_option("--tip", kf.tip, "Tip category document");
  cocone_cmd->add_option("--budget", kf.budget, "Search budget for enumeration");

  CofinalFlags cf;
  auto* cofinal_cmd = app.add_subcommand("cofinal", "Decategorified marked cofinality");
  input(cofinal_cmd, true, "input,--functor");
  cofinal_cmd->add_option("--convention", cf.convention, "Slice convention (default oplax)")->check(CLI::IsMember({"lax", "oplax"}));
  cofinal_cmd->add_flag("--probe", cf.probe, "Compare localized slices through representables");
  cofinal_cmd->add_flag("--hypotheses", cf.hypotheses, "Also report the ho-level hypotheses");

  auto* quillen_cmd = app.add_subcommand("quillen-a", "Classical Quillen A for locally discrete functors");
  input(quillen_cmd, true, "input,--functor");

  std::string family;
  auto* walde_cmd = app.add_subcommand("walde", "Walde criterion with weak fiber subcategories");
  input(walde_cmd, true, "input,--functor");
  walde_cmd->add_option("--family", family, "JSON object: target object -> [[object, morphism], ...]");

  ShapeFlags shf;
  auto* shapes_cmd = app.add_subcommand("shapes", "Generate oseg shapes and partial collapses");
  shapes_cmd->add_option("--dim", shf.dim, "n for [n]")->check(CLI::Range(0, 6));
  shapes_cmd->add_option("--subset", shf.subset, "Comma-separated index set; overrides --dim");
  shapes_cmd->add_option("--collapse", shf.collapse, "Collapse index i");
  shapes_cmd->add_flag("--slice", shf.slice, "The lax slice under the least element");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInput;
  }

  try {
    if (*validate_cmd) return run_validate(o);
    if (*nerve_cmd) return run_nerve(o, nf);
    if (*slice_cmd) return run_slice(o, sf);
    if (*localize_cmd) return run_localize(o, at);
    if (*colim_cmd) return run_colim(o, expect);
    if (*cocone_cmd) return run_cocone(o, kf);
    if (*cofinal_cmd) return run_cofinal(o, cf);
    if (*quillen_cmd) return run_quillen(o);
    if (*walde_cmd) return run_walde(o, family);
    if (*shapes_cmd) return run_shapes(o, shf);
  } catch (const ResourceError& e) {
    std::cerr << "tcat: " << e.what() << "\n";
    return kUnknown;
  } catch (const Error& e) {
    std::cerr << "tcat: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
