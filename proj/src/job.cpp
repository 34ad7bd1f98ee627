#include "hfitt/job.hpp"

#include <chrono>
#include <map>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "hfitt/errors.hpp"
#include "hfitt/loci.hpp"

namespace hfitt {
namespace {

using json = nlohmann::ordered_json;

/// Document does not match the job schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

using Value = std::variant<PolyMatrix, FpModule, FreeComplex, ChainMap, AffineScheme, Ideal>;

const char* kind_name(std::size_t index) {
  static const char* names[] = {"matrix", "module", "complex", "chain_map", "scheme", "ideal"};
  return names[index];
}

template <class T>
struct KindIndex;
template <>
struct KindIndex<PolyMatrix> : std::integral_constant<std::size_t, 0> {};
template <>
struct KindIndex<FpModule> : std::integral_constant<std::size_t, 1> {};
template <>
struct KindIndex<FreeComplex> : std::integral_constant<std::size_t, 2> {};
template <>
struct KindIndex<ChainMap> : std::integral_constant<std::size_t, 3> {};
template <>
struct KindIndex<AffineScheme> : std::integral_constant<std::size_t, 4> {};
template <>
struct KindIndex<Ideal> : std::integral_constant<std::size_t, 5> {};

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(where, std::string("missing \"") + key + "\"");
  return *it;
}

const json* optional_member(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) schema(where, "expected an integer");
  auto x = v.get<std::int64_t>();
  if (x < -1000000 || x > 1000000) schema(where, "integer out of range");
  return static_cast<int>(x);
}

std::size_t as_count(const json& v, const std::string& where) {
  int x = as_int(v, where);
  if (x < 0) schema(where, "expected a non-negative integer");
  return static_cast<std::size_t>(x);
}

const std::string& as_string(const json& v, const std::string& where) {
  if (!v.is_string()) schema(where, "expected a string");
  return v.get_ref<const std::string&>();
}

bool as_bool(const json& v, const std::string& where) {
  if (!v.is_boolean()) schema(where, "expected a boolean");
  return v.get<bool>();
}

std::string entry_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  schema(where, "matrix entries must be strings or integers");
}

FieldSpec parse_field(const std::string& text, const std::string& where) {
  if (text == "QQ" || text == "Q") return FieldSpec::rationals();
  if (text.size() > 4 && text.rfind("GF(", 0) == 0 && text.back() == ')') {
    std::int64_t p = 0;
    for (std::size_t i = 3; i + 1 < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9' || p > (std::int64_t{1} << 40)) schema(where, "bad field \"" + text + "\"");
      p = p * 10 + (text[i] - '0');
    }
    try {
      return FieldSpec::prime(p);
    } catch (const Error& e) {
      schema(where, e.what());
    }
  }
  schema(where, "field must be \"QQ\" or \"GF(p)\"");
}

Orientation parse_orientation(const json* v, const std::string& where) {
  if (!v) return Orientation::Chain;
  const std::string& s = as_string(*v, where);
  if (s == "chain") return Orientation::Chain;
  if (s == "cochain") return Orientation::Cochain;
  schema(where, "orientation must be \"chain\" or \"cochain\"");
}

// ---------------------------------------------------------------------------
// Rendering

json render_ideal(const Ideal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.groebner_basis()) gens.push_back(render_polynomial(g));
  return gens;
}

json render_matrix(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(render_polynomial(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json render_complex(const FreeComplex& c) {
  json out;
  out["orientation"] = c.orientation() == Orientation::Chain ? "chain" : "cochain";
  out["lowest_index"] = c.lowest();
  out["ranks"] = c.ranks();
  json ds = json::array();
  for (const auto& d : c.differentials()) {
    json entry;
    entry["rows"] = d.rows();
    entry["cols"] = d.cols();
    entry["entries"] = render_matrix(d);
    ds.push_back(std::move(entry));
  }
  out["differentials"] = std::move(ds);
  return out;
}

std::string text_ideal(const json& gens) {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].get<std::string>();
  }
  if (gens.empty()) s += "0";
  return s + ")";
}

std::string text_value(const json& result) {
  const std::string kind = result.value("kind", "");
  const json& v = result["value"];
  if (kind == "ideal") return text_ideal(v);
  if (kind == "resolution") {
    std::ostringstream os;
    os << "ranks";
    for (const auto& r : v["ranks"]) os << ' ' << r.get<std::size_t>();
    os << ", length " << v["length"].get<int>() << (v["truncated"].get<bool>() ? ", truncated" : "");
    return os.str();
  }
  if (kind == "liftable") {
    if (v.is_null()) return "none";
    return "k = " + std::to_string(v["k"].get<int>()) + ", rank " + std::to_string(v["locally_free_rank"].get<int>());
  }
  return v.dump();
}

std::string render_text(const json& report) {
  std::ostringstream os;
  os << report["tool"].get<std::string>() << ' ' << report["version"].get<std::string>() << " seed "
     << report["seed"].get<std::uint64_t>() << '\n';
  if (report.contains("error")) {
    os << "error: " << report["error"]["message"].get<std::string>() << '\n';
    return os.str();
  }
  for (const auto& r : report["results"]) {
    os << r["output"].get<std::string>() << " [" << r["command"].get<std::string>() << "]: ";
    if (r["status"] == "ok")
      os << text_value(r);
    else
      os << "error (" << r["error"]["type"].get<std::string>() << "): " << r["error"]["message"].get<std::string>();
    if (r.contains("milliseconds")) os << " (" << r["milliseconds"].get<double>() << " ms)";
    os << '\n';
  }
  return os.str();
}

const char* error_type(const std::exception& e) {
  if (dynamic_cast<const ResourceError*>(&e)) return "ResourceError";
  if (dynamic_cast<const InvariantError*>(&e)) return "InvariantError";
  if (dynamic_cast<const RingMismatch*>(&e)) return "RingMismatch";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const InputError*>(&e)) return "InputError";
  return "Error";
}

// ---------------------------------------------------------------------------
// Commands

enum class Arg { Matrix, Module, Complex, Map, Scheme, Ideal, IdealOrScheme, Int, OptInt, OptBool };

struct CommandSpec {
  std::vector<std::pair<const char*, Arg>> arguments;
  /// Kind index of the stored output, if later tasks may refer to it.
  std::optional<std::size_t> produces;
};

const std::map<std::string, CommandSpec>& commands() {
  static const std::map<std::string, CommandSpec> table = {
      {"minors", {{{"matrix", Arg::Matrix}, {"k", Arg::Int}}, KindIndex<Ideal>::value}},
      {"determinantal", {{{"matrix", Arg::Matrix}, {"k", Arg::Int}}, KindIndex<Ideal>::value}},
      {"fitting-module", {{{"module", Arg::Module}, {"k", Arg::Int}}, KindIndex<Ideal>::value}},
      {"fitting-complex", {{{"complex", Arg::Complex}, {"i", Arg::Int}, {"k", Arg::Int}}, KindIndex<Ideal>::value}},
      {"underline-fitting", {{{"complex", Arg::Complex}, {"i", Arg::Int}, {"k", Arg::Int}}, KindIndex<Ideal>::value}},
      {"resolve", {{{"module", Arg::Module}, {"length", Arg::Int}}, KindIndex<FreeComplex>::value}},
      {"minimalize", {{{"module", Arg::Module}, {"length", Arg::Int}}, KindIndex<FreeComplex>::value}},
      {"sing", {{{"scheme", Arg::Scheme}, {"dimension", Arg::OptInt}}, KindIndex<Ideal>::value}},
      {"sing-i",
       {{{"scheme", Arg::Scheme}, {"i", Arg::Int}, {"length", Arg::OptInt}, {"dimension", Arg::OptInt}},
        KindIndex<Ideal>::value}},
      {"pd-locus",
       {{{"module", Arg::Module}, {"d", Arg::Int}, {"rank", Arg::OptInt}, {"length", Arg::OptInt}},
        KindIndex<Ideal>::value}},
      {"bn", {{{"complex", Arg::Complex}, {"k", Arg::Int}}, KindIndex<Ideal>::value}},
      {"liftable-rank", {{{"complex", Arg::Complex}}, std::nullopt}},
      {"qis-check", {{{"map", Arg::Map}}, std::nullopt}},
      {"exact-at", {{{"complex", Arg::Complex}, {"i", Arg::Int}}, std::nullopt}},
      {"dim", {{{"of", Arg::IdealOrScheme}}, std::nullopt}},
      {"rank", {{{"module", Arg::Module}}, std::nullopt}},
  };
  return table;
}

std::optional<std::size_t> arg_kind(Arg a) {
  switch (a) {
    case Arg::Matrix: return KindIndex<PolyMatrix>::value;
    case Arg::Module: return KindIndex<FpModule>::value;
    case Arg::Complex: return KindIndex<FreeComplex>::value;
    case Arg::Map: return KindIndex<ChainMap>::value;
    case Arg::Scheme: return KindIndex<AffineScheme>::value;
    case Arg::Ideal: return KindIndex<Ideal>::value;
    default: return std::nullopt;
  }
}

struct Task {
  std::string command;
  json arguments;
  std::string output;
  std::string where;
};

class Job {
 public:
  Job(const json& doc, const JobOptions& options) : options_(options) {
    if (!doc.is_object()) schema("document", "expected an object");
    for (const auto& [key, value] : doc.items())
      if (key != "ring" && key != "quotient" && key != "objects" && key != "tasks")
        schema("document", "unknown key \"" + key + "\"");
    parse_ring(member(doc, "ring", "document"));
    parse_quotient(optional_member(doc, "quotient"));
    if (const json* objs = optional_member(doc, "objects")) {
      if (!objs->is_object()) schema("objects", "expected an object");
      for (const auto& [name, spec] : objs->items()) {
        check_name(name, "objects." + name);
        values_.emplace(name, build_object(spec, "objects." + name));
        kinds_[name] = values_.at(name).index();
      }
    }
    if (const json* tasks = optional_member(doc, "tasks")) parse_tasks(*tasks);
  }

  json run() {
    json results = json::array();
    for (const auto& t : tasks_) results.push_back(run_task(t));
    return results;
  }

  int exit_code() const { return exit_code_; }

 private:
  void parse_ring(const json& spec) {
    const std::string where = "ring";
    const json& vars = member(spec, "variables", where);
    if (!vars.is_array() || vars.empty()) schema(where + ".variables", "expected a non-empty array");
    std::vector<std::string> names;
    for (const auto& v : vars) names.push_back(as_string(v, where + ".variables"));
    FieldSpec k = FieldSpec::rationals();
    if (const json* f = optional_member(spec, "field")) k = parse_field(as_string(*f, where + ".field"), where + ".field");
    MonomialOrder order = MonomialOrder::GrevLex;
    if (const json* o = optional_member(spec, "order")) {
      const std::string& s = as_string(*o, where + ".order");
      if (s == "lex")
        order = MonomialOrder::Lex;
      else if (s != "grevlex")
        schema(where + ".order", "order must be \"grevlex\" or \"lex\"");
    }
    try {
      ring_ = make_ring(std::move(names), k, order);
    } catch (const Error& e) {
      schema(where, e.what());
    }
  }

  Polynomial poly(const json& v, const RingPtr& ring, const std::string& where) const {
    try {
      return parse_polynomial(entry_text(v, where), ring);
    } catch (const ParseError& e) {
      schema(where, e.what());
    } catch (const InputError& e) {
      schema(where, e.what());
    }
  }

  std::vector<Polynomial> poly_list(const json& v, const RingPtr& ring, const std::string& where) const {
    if (!v.is_array()) schema(where, "expected an array of polynomials");
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(poly(v[i], ring, where + "[" + std::to_string(i) + "]"));
    return out;
  }

  void parse_quotient(const json* spec) {
    relations_ = spec ? poly_list(*spec, ring_, "quotient") : std::vector<Polynomial>{};
    base_ = make_quotient(ring_, relations_);
    if (!relations_.empty() && Ideal(ambient(ring_), relations_).is_unit()) schema("quotient", "relations generate the unit ideal");
  }

  void check_name(const std::string& name, const std::string& where) const {
    if (name.empty() || name == "zero") schema(where, "reserved or empty name");
    if (values_.count(name) || kinds_.count(name)) schema(where, "name \"" + name + "\" is already defined");
  }

  template <class T>
  const T& lookup(const std::string& name, const std::string& where) const {
    auto it = values_.find(name);
    if (it == values_.end()) schema(where, "undefined name \"" + name + "\"");
    if (!std::holds_alternative<T>(it->second))
      schema(where, "\"" + name + "\" is a " + kind_name(it->second.index()) + ", expected a " +
                        kind_name(KindIndex<T>::value));
    return std::get<T>(it->second);
  }

  /// Inline matrix: a name, "zero", a row-major array, or {rows, cols, entries}.
  PolyMatrix matrix(const json& spec, const std::string& where, const QuotientPtr& base,
                    std::optional<std::pair<std::size_t, std::size_t>> shape = std::nullopt) const {
    std::optional<std::size_t> rows, cols;
    const json* entries = nullptr;
    if (spec.is_string()) {
      const std::string& s = spec.get_ref<const std::string&>();
      if (s == "zero") {
        if (!shape) schema(where, "\"zero\" needs a known shape");
        return PolyMatrix(base, shape->first, shape->second);
      }
      PolyMatrix m = lookup<PolyMatrix>(s, where);
      if (!same_base(m.base(), base)) schema(where, "matrix \"" + s + "\" lives over a different ring");
      if (shape && (m.rows() != shape->first || m.cols() != shape->second)) schema(where, "shape mismatch");
      return m;
    }
    if (spec.is_array()) {
      entries = &spec;
    } else if (spec.is_object()) {
      if (const json* r = optional_member(spec, "rows")) rows = as_count(*r, where + ".rows");
      if (const json* c = optional_member(spec, "cols")) cols = as_count(*c, where + ".cols");
      entries = optional_member(spec, "entries");
    } else {
      schema(where, "expected a matrix");
    }
    if (entries && !entries->is_array()) schema(where, "entries must be an array of rows");
    if (entries && !entries->empty()) {
      if (rows && *rows != entries->size()) schema(where, "row count mismatch");
      rows = entries->size();
      if (!(*entries)[0].is_array()) schema(where, "entries must be an array of rows");
      if (cols && *cols != (*entries)[0].size()) schema(where, "column count mismatch");
      cols = (*entries)[0].size();
    }
    if (!rows && shape) rows = shape->first;
    if (!cols && shape) cols = shape->second;
    if (!rows || !cols) schema(where, "cannot infer the shape of an empty matrix");
    if (shape && (*rows != shape->first || *cols != shape->second))
      schema(where, "expected a " + std::to_string(shape->first) + "x" + std::to_string(shape->second) + " matrix");
    PolyMatrix m(base, *rows, *cols);
    if (entries && !entries->empty())
      for (std::size_t r = 0; r < *rows; ++r) {
        const json& row = (*entries)[r];
        if (!row.is_array() || row.size() != *cols) schema(where, "ragged row " + std::to_string(r));
        for (std::size_t c = 0; c < *cols; ++c)
          m.set(r, c, base->reduce(poly(row[c], base->ring(),
                                        where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]")));
      }
    return m;
  }

  template <class T>
  T named_or_inline(const json& spec, const std::string& where) const {
    if (spec.is_string()) return lookup<T>(spec.get<std::string>(), where);
    return std::get<T>(build_object(spec, where));
  }

  Value build_object(const json& spec, const std::string& where) const {
    const std::string type = as_string(member(spec, "type", where), where + ".type");
    try {
      if (type == "matrix") return matrix(spec, where, base_);
      if (type == "ideal") return Ideal(base_, reduced(poly_list(member(spec, "generators", where), ring_, where + ".generators")));
      if (type == "module") return build_module(spec, where);
      if (type == "kaehler")
        return kaehler_presentation(named_or_inline<AffineScheme>(member(spec, "scheme", where), where + ".scheme"));
      if (type == "scheme") {
        const json* eqs = optional_member(spec, "equations");
        return AffineScheme(ring_, eqs ? poly_list(*eqs, ring_, where + ".equations") : relations_);
      }
      if (type == "complex") return build_complex(spec, where);
      if (type == "resolution") return build_resolution(spec, where);
      if (type == "chain_map") return build_map(spec, where);
    } catch (const SchemaError&) {
      throw;
    } catch (const ResourceError&) {
      throw;
    } catch (const InvariantError&) {
      throw;
    } catch (const Error& e) {
      schema(where, e.what());
    }
    schema(where + ".type", "unknown object type \"" + type + "\"");
  }

  std::vector<Polynomial> reduced(std::vector<Polynomial> ps) const {
    for (auto& p : ps) p = base_->reduce(p);
    return ps;
  }

  FpModule build_module(const json& spec, const std::string& where) const {
    const json* pres = optional_member(spec, "presentation");
    const json* gens = optional_member(spec, "generators");
    if (!pres) {
      if (!gens) schema(where, "a module needs \"presentation\" or \"generators\"");
      return FpModule::free(base_, as_count(*gens, where + ".generators"));
    }
    return FpModule(matrix(*pres, where + ".presentation", base_));
  }

  FreeComplex build_complex(const json& spec, const std::string& where) const {
    if (const json* from = optional_member(spec, "from")) {
      FreeComplex c = named_or_inline<FreeComplex>(*from, where + ".from");
      if (const json* pads = optional_member(spec, "pad")) {
        if (!pads->is_array()) schema(where + ".pad", "expected [[position, rank], ...]");
        for (const auto& p : *pads) {
          if (!p.is_array() || p.size() != 2) schema(where + ".pad", "expected [position, rank]");
          c = pad_trivial(c, as_int(p[0], where + ".pad"), as_count(p[1], where + ".pad"));
        }
      }
      if (const json* o = optional_member(spec, "orientation")) c = c.reoriented(parse_orientation(o, where + ".orientation"));
      return c;
    }
    Orientation o = parse_orientation(optional_member(spec, "orientation"), where + ".orientation");
    int lowest = 0;
    if (const json* l = optional_member(spec, "lowest_index")) lowest = as_int(*l, where + ".lowest_index");
    const json& rs = member(spec, "ranks", where);
    if (!rs.is_array() || rs.empty()) schema(where + ".ranks", "expected a non-empty array");
    std::vector<std::size_t> ranks;
    for (const auto& r : rs) ranks.push_back(as_count(r, where + ".ranks"));
    std::vector<PolyMatrix> ds;
    const json* dspec = optional_member(spec, "differentials");
    std::size_t count = ranks.size() - 1;
    if (dspec && (!dspec->is_array() || dspec->size() != count))
      schema(where + ".differentials", "expected " + std::to_string(count) + " differentials");
    for (std::size_t t = 0; t < count; ++t) {
      // Chain: d_{lowest+t+1} : r[t+1] -> r[t]. Cochain: d^{lowest+t} : r[t] -> r[t+1].
      auto shape = o == Orientation::Chain ? std::pair{ranks[t], ranks[t + 1]} : std::pair{ranks[t + 1], ranks[t]};
      const std::string w = where + ".differentials[" + std::to_string(t) + "]";
      ds.push_back(dspec ? matrix((*dspec)[t], w, base_, shape) : PolyMatrix(base_, shape.first, shape.second));
    }
    return FreeComplex(base_, o, lowest, std::move(ranks), std::move(ds));
  }

  Resolution resolution_of(const FpModule& m, int length, bool minimal) const {
    Resolution r = free_resolution(m, length);
    return minimal ? minimalize(r) : r;
  }

  FreeComplex build_resolution(const json& spec, const std::string& where) const {
    FpModule m = named_or_inline<FpModule>(member(spec, "module", where), where + ".module");
    int length = as_int(member(spec, "length", where), where + ".length");
    bool minimal = false;
    if (const json* v = optional_member(spec, "minimal")) minimal = as_bool(*v, where + ".minimal");
    return resolution_of(m, length, minimal).complex;
  }

  ChainMap build_map(const json& spec, const std::string& where) const {
    if (const json* id = optional_member(spec, "identity"))
      return ChainMap::identity(named_or_inline<FreeComplex>(*id, where + ".identity"));
    if (const json* pad = optional_member(spec, "padding")) {
      FreeComplex c = named_or_inline<FreeComplex>(member(*pad, "complex", where + ".padding"), where + ".padding.complex");
      return padding_inclusion(c, as_int(member(*pad, "position", where + ".padding"), where + ".padding.position"),
                               as_count(member(*pad, "rank", where + ".padding"), where + ".padding.rank"));
    }
    FreeComplex source = named_or_inline<FreeComplex>(member(spec, "source", where), where + ".source");
    FreeComplex target = named_or_inline<FreeComplex>(member(spec, "target", where), where + ".target");
    const json* comps = optional_member(spec, "components");
    if (!comps) return ChainMap::zero(source, target);
    if (!comps->is_array()) schema(where + ".components", "expected an array of matrices");
    int lowest = 0;
    if (const json* l = optional_member(spec, "lowest_index")) lowest = as_int(*l, where + ".lowest_index");
    std::vector<PolyMatrix> ms;
    for (std::size_t t = 0; t < comps->size(); ++t) {
      int i = lowest + static_cast<int>(t);
      ms.push_back(matrix((*comps)[t], where + ".components[" + std::to_string(t) + "]", base_,
                          std::pair{target.rank(i), source.rank(i)}));
    }
    return ChainMap(std::move(source), std::move(target), lowest, std::move(ms));
  }

  void parse_tasks(const json& tasks) {
    if (!tasks.is_array()) schema("tasks", "expected an array");
    for (std::size_t n = 0; n < tasks.size(); ++n) {
      const std::string where = "tasks[" + std::to_string(n) + "]";
      const json& t = tasks[n];
      Task task;
      task.where = where;
      task.command = as_string(member(t, "command", where), where + ".command");
      auto spec = commands().find(task.command);
      if (spec == commands().end()) schema(where + ".command", "unknown command \"" + task.command + "\"");
      const json* a = optional_member(t, "arguments");
      task.arguments = a ? *a : json::object();
      if (!task.arguments.is_object()) schema(where + ".arguments", "expected an object");
      task.output = t.contains("output") ? as_string(t["output"], where + ".output") : task.command + "_" + std::to_string(n);
      check_name(task.output, where + ".output");
      for (const auto& [key, value] : task.arguments.items()) {
        bool known = false;
        for (const auto& [name, kind] : spec->second.arguments) known = known || key == name;
        if (!known) schema(where + ".arguments", "unknown argument \"" + key + "\" for " + task.command);
      }
      for (const auto& [name, kind] : spec->second.arguments) {
        inline_argument(task, name, kind);
        check_argument(task, name, kind);
      }
      kinds_[task.output] = spec->second.produces.value_or(static_cast<std::size_t>(-1));
      tasks_.push_back(std::move(task));
    }
  }

  /// Objects written inline in a task are built now and stored under "<output>.<argument>".
  void inline_argument(Task& t, const char* name, Arg kind) {
    auto target = arg_kind(kind);
    auto it = t.arguments.find(name);
    if (!target || it == t.arguments.end() || it->is_string() || it->is_null()) return;
    const std::string where = t.where + ".arguments." + name;
    const std::string hidden = t.output + "." + name;
    Value v = [&]() -> Value {
      bool typed = it->is_object() && it->contains("type");
      if (!typed && (kind == Arg::Matrix || kind == Arg::Module)) {
        PolyMatrix m = matrix(*it, where, base_);
        if (kind == Arg::Module) return FpModule(std::move(m));
        return m;
      }
      if (!typed) schema(where, "inline objects need a \"type\"");
      return build_object(*it, where);
    }();
    if (v.index() != *target) schema(where, std::string("expected a ") + kind_name(*target));
    kinds_[hidden] = v.index();
    values_.emplace(hidden, std::move(v));
    *it = hidden;
  }

  void check_argument(const Task& t, const char* name, Arg kind) const {
    const std::string where = t.where + ".arguments." + name;
    const json* v = optional_member(t.arguments, name);
    if (kind == Arg::OptInt || kind == Arg::OptBool) {
      if (v && kind == Arg::OptInt) as_int(*v, where);
      if (v && kind == Arg::OptBool) as_bool(*v, where);
      return;
    }
    if (!v) schema(t.where + ".arguments", std::string("missing \"") + name + "\"");
    if (kind == Arg::Int) {
      as_int(*v, where);
      return;
    }
    const std::string& ref = as_string(*v, where);
    auto it = kinds_.find(ref);
    if (it == kinds_.end()) schema(where, "undefined name \"" + ref + "\"");
    std::size_t have = it->second;
    if (kind == Arg::IdealOrScheme) {
      if (have != KindIndex<Ideal>::value && have != KindIndex<AffineScheme>::value)
        schema(where, "\"" + ref + "\" is not an ideal or scheme");
      return;
    }
    // Modules may also be given by a presentation matrix.
    if (kind == Arg::Module && have == KindIndex<PolyMatrix>::value) return;
    if (have != *arg_kind(kind))
      schema(where, "\"" + ref + "\" is not a " + std::string(kind_name(*arg_kind(kind))));
  }

  // Runtime accessors; names were checked statically, but the producing task may have failed.
  const Value& fetch(const Task& t, const char* name) const {
    const std::string& ref = t.arguments[name].get_ref<const std::string&>();
    auto it = values_.find(ref);
    if (it == values_.end()) throw InputError("dependency \"" + ref + "\" has no value");
    return it->second;
  }
  int integer(const Task& t, const char* name) const { return t.arguments[name].get<int>(); }
  std::optional<int> opt_integer(const Task& t, const char* name) const {
    const json* v = optional_member(t.arguments, name);
    return v ? std::optional<int>(v->get<int>()) : std::nullopt;
  }
  const FreeComplex& complex(const Task& t) const { return std::get<FreeComplex>(fetch(t, "complex")); }
  FpModule module(const Task& t) const {
    const Value& v = fetch(t, "module");
    if (const auto* m = std::get_if<PolyMatrix>(&v)) return FpModule(*m);
    return std::get<FpModule>(v);
  }
  const PolyMatrix& matrix_arg(const Task& t) const { return std::get<PolyMatrix>(fetch(t, "matrix")); }
  const AffineScheme& scheme(const Task& t) const { return std::get<AffineScheme>(fetch(t, "scheme")); }

  json ideal_result(const Task& t, Ideal ideal) {
    json r;
    r["kind"] = "ideal";
    r["value"] = render_ideal(ideal);
    r["zero"] = ideal.is_zero();
    r["unit"] = ideal.is_unit();
    values_.emplace(t.output, std::move(ideal));
    return r;
  }

  json resolution_result(const Task& t, const Resolution& res) {
    json r;
    r["kind"] = "resolution";
    json v;
    v["ranks"] = res.complex.ranks();
    v["length"] = res.length;
    v["truncated"] = res.truncated;
    v["complex"] = render_complex(res.complex);
    r["value"] = std::move(v);
    values_.emplace(t.output, res.complex);
    return r;
  }

  static json scalar_result(const char* kind, json value) {
    json r;
    r["kind"] = kind;
    r["value"] = std::move(value);
    return r;
  }

  json execute(const Task& t) {
    const std::string& c = t.command;
    if (c == "minors") return ideal_result(t, minors_ideal(matrix_arg(t), integer(t, "k")));
    if (c == "determinantal") return ideal_result(t, determinantal_scheme(matrix_arg(t), integer(t, "k")));
    if (c == "fitting-module") return ideal_result(t, classical_fitting(module(t), integer(t, "k")));
    if (c == "fitting-complex") return ideal_result(t, fitting_ideal(complex(t), integer(t, "i"), integer(t, "k")));
    if (c == "underline-fitting")
      return ideal_result(t, underline_fitting_ideal(complex(t), integer(t, "i"), integer(t, "k")));
    if (c == "resolve") return resolution_result(t, resolution_of(module(t), integer(t, "length"), false));
    if (c == "minimalize") return resolution_result(t, resolution_of(module(t), integer(t, "length"), true));
    if (c == "sing") return ideal_result(t, singular_locus(scheme(t), opt_integer(t, "dimension")));
    if (c == "sing-i") {
      int i = integer(t, "i");
      return ideal_result(t, higher_singular_locus(scheme(t), i, opt_integer(t, "length").value_or(i + 2),
                                                   opt_integer(t, "dimension")));
    }
    if (c == "pd-locus") {
      FpModule m = module(t);
      int d = integer(t, "d");
      int rank = opt_integer(t, "rank").value_or(generic_rank(m));
      return ideal_result(t, pd_locus(free_resolution(m, opt_integer(t, "length").value_or(d)), d, rank));
    }
    if (c == "bn") return ideal_result(t, brill_noether_ideal(PushforwardComplex(complex(t)), integer(t, "k")));
    if (c == "liftable-rank") {
      auto lr = liftable_sections_rank(PushforwardComplex(complex(t)));
      json v = nullptr;
      if (lr) v = json{{"k", lr->k}, {"locally_free_rank", lr->locally_free_rank}};
      return scalar_result("liftable", std::move(v));
    }
    if (c == "qis-check") return scalar_result("boolean", is_quasi_iso(std::get<ChainMap>(fetch(t, "map"))));
    if (c == "exact-at") return scalar_result("boolean", is_exact_at(complex(t), integer(t, "i")));
    if (c == "dim") {
      const Value& v = fetch(t, "of");
      if (const auto* x = std::get_if<AffineScheme>(&v)) return scalar_result("integer", x->dimension());
      return scalar_result("integer", std::get<Ideal>(v).krull_dimension());
    }
    if (c == "rank") return scalar_result("integer", generic_rank(module(t)));
    throw InvariantError("unhandled command " + c);
  }

  json run_task(const Task& t) {
    json r;
    r["output"] = t.output;
    r["command"] = t.command;
    auto start = std::chrono::steady_clock::now();
    try {
      json body = execute(t);
      r["status"] = "ok";
      for (auto& [k, v] : body.items()) r[k] = v;
    } catch (const std::exception& e) {
      const char* type = error_type(e);
      r["status"] = "error";
      r["error"] = json{{"type", type}, {"message", e.what()}};
      if (dynamic_cast<const ResourceError*>(&e) && exit_code_ == exit_code::ok) exit_code_ = exit_code::budget;
      if (dynamic_cast<const InvariantError*>(&e)) exit_code_ = exit_code::invariant;
    }
    if (options_.timing)
      r["milliseconds"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

  JobOptions options_;
  RingPtr ring_;
  std::vector<Polynomial> relations_;
  QuotientPtr base_;
  std::map<std::string, Value> values_;
  std::map<std::string, std::size_t> kinds_;  // static kinds, including task outputs
  std::vector<Task> tasks_;
  int exit_code_ = exit_code::ok;
};

}  // namespace

JobResult run_job(std::string_view document, const JobOptions& options) {
  std::optional<StepBudgetScope> budget;
  if (options.budget) budget.emplace(*options.budget);
  json report;
  report["tool"] = "hfitt";
  report["version"] = kVersion;
  report["seed"] = options.seed;
  int code = exit_code::ok;
  try {
    json doc = json::parse(document);
    Job job(doc, options);
    report["results"] = job.run();
    code = job.exit_code();
  } catch (const json::exception& e) {
    report["error"] = json{{"type", "ParseError"}, {"message", e.what()}};
    code = exit_code::input;
  } catch (const ResourceError& e) {
    report["error"] = json{{"type", "ResourceError"}, {"message", e.what()}};
    code = exit_code::budget;
  } catch (const InvariantError& e) {
    report["error"] = json{{"type", "InvariantError"}, {"message", e.what()}};
    code = exit_code::invariant;
  } catch (const Error& e) {
    report["error"] = json{{"type", "SchemaError"}, {"message", e.what()}};
    code = exit_code::input;
  }
  JobResult out;
  out.exit_code = code;
  out.report = options.format == ReportFormat::Json ? report.dump(2) + "\n" : render_text(report);
  return out;
}

}  // namespace hfitt
