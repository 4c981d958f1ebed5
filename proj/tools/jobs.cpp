#include "jobs.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "cdelab/errors.hpp"
#include "cdelab/hecke.hpp"
#include "cdelab/parse.hpp"
#include "cdelab/structure.hpp"

#ifndef CDELAB_VERSION
#define CDELAB_VERSION "unknown"
#endif

namespace cdelab::tools {

using nlohmann::json;

namespace {

const std::vector<std::pair<JobKind, std::string>> kKindNames = {{JobKind::verify_cde, "verify-cde"},
                                                                 {JobKind::hecke_example, "hecke-example"},
                                                                 {JobKind::osl2_duality, "osl2-duality"},
                                                                 {JobKind::lift_demo, "lift-demo"}};

std::string pointer(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

const json& require(const json& obj, const std::string& key, const std::string& base) {
  if (!obj.is_object()) throw SchemaError("expected an object", base);
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError("missing key '" + key + "'", base);
  return *it;
}

long require_int(const json& v, const std::string& ptr, long lo, long hi) {
  if (!v.is_number_integer()) throw SchemaError("expected an integer", ptr);
  const long x = v.get<long>();
  if (x < lo || x > hi) {
    throw SchemaError("integer " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
                      ptr);
  }
  return x;
}

const json& require_array(const json& v, const std::string& ptr, std::size_t size) {
  if (!v.is_array()) throw SchemaError("expected an array", ptr);
  if (v.size() != size) {
    throw SchemaError("expected " + std::to_string(size) + " entries, found " + std::to_string(v.size()), ptr);
  }
  return v;
}

RatFunc json_scalar(const json& v, int order, const std::string& ptr) {
  if (v.is_number_integer()) return RatFunc(Cyclo(v.get<long>()));
  if (!v.is_string()) throw SchemaError("expected a scalar string or integer", ptr);
  try {
    return parse_scalar(v.get<std::string>(), order);
  } catch (const InputError& e) {
    throw SchemaError(e.what(), ptr);
  }
}

Cyclo constant_scalar(const std::string& text, int order, const std::string& what) {
  const RatFunc x = parse_scalar(text, order);
  if (!x.is_constant()) throw InputError(what + " '" + text + "' must not involve t");
  return x.constant_value();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

CdeResult cde_result(const Algebra<RatFunc>& algebra, const CdeReport& r) {
  CdeResult out;
  out.dimension = algebra.dimension();
  out.cyclotomic_order = algebra.cyclotomic_order();
  out.labels = algebra.labels();
  for (const auto& s : r.K_simples) out.K_simples.push_back({s.label, s.dimension, s.projective_dimension});
  for (const auto& s : r.k_simples) out.k_simples.push_back({s.label, s.dimension, s.projective_dimension});
  out.D = r.D;
  out.C = r.C;
  out.E = r.E;
  out.audits = r.audits;
  out.passed = r.passed();
  return out;
}

HeckeSpec hecke_spec(const std::string& type, const std::string& q, int cyclo) {
  HeckeSpec spec;
  spec.type = parse_hecke_type(type);
  spec.q = parse_scalar(q, cyclo);
  spec.cyclotomic_order = cyclo;
  return spec;
}

LoadedAlgebra load_hecke(const HeckeSpec& spec) {
  LoadedAlgebra out;
  out.algebra = hecke_algebra(spec);
  out.simples = hecke_k_simples(spec, extend_to_K(*out.algebra));
  return out;
}

DualityResult duality_result(const DualityReport& r) {
  const WeightWindow& w = *r.window;
  DualityResult out;
  for (const auto& g : w.gammas()) out.gammas.push_back(g.to_string());
  out.deformed = w.deformed();
  out.depth = w.depth();
  for (std::size_t s = 0; s < w.slot_count(); ++s) out.weights.push_back(w.reduced_weight(s).to_string());
  for (const auto& c : r.cells) {
    out.pairs.push_back({out.weights[c.lambda], out.weights[c.mu], c.lhs, c.rhs, c.equal()});
  }
  out.generic_gram_nonzero = r.generic_gram_nonzero;
  out.generic_filtration_match = r.generic_filtration_match;
  out.all_equal = r.all_equal();
  return out;
}

LiftResult lift_result(const JobSpec& spec) {
  const LoadedAlgebra loaded = load_input(spec.input);
  const auto reduced = reduce_to_k(*loaded.algebra);
  const int order = loaded.algebra->cyclotomic_order();
  const std::size_t d = loaded.algebra->dimension();
  Vec<Cyclo> e;
  const std::string prefix = "primitive:";
  if (spec.idempotent.rfind(prefix, 0) == 0) {
    const std::string index = spec.idempotent.substr(prefix.size());
    std::size_t used = 0;
    long i = 0;
    try {
      i = std::stol(index, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != index.size() || index.empty()) throw InputError("bad idempotent index '" + index + "'");
    const SplitAlgebra split(reduced);
    const auto& all = split.idempotents().idempotents;
    if (i < 1 || static_cast<std::size_t>(i) > all.size()) {
      throw InputError("primitive idempotent index " + std::to_string(i) + " outside 1.." +
                       std::to_string(all.size()));
    }
    e = all[static_cast<std::size_t>(i - 1)];
  } else {
    const auto parts = split(spec.idempotent, ',');
    if (parts.size() != d) {
      throw InputError("idempotent needs " + std::to_string(d) + " coordinates, got " + std::to_string(parts.size()));
    }
    for (const auto& p : parts) e.push_back(constant_scalar(p, order, "idempotent coordinate"));
  }
  const IdempotentLift lift = lift_idempotent_trunc(e, *loaded.algebra, spec.precision);
  LiftResult out;
  for (const auto& x : e) out.idempotent.push_back(x.to_string());
  out.precision = lift.precision;
  for (const auto& c : lift.coordinates) out.coordinates.push_back(c.to_string());
  out.defect_valuations = lift.defect_valuations;
  out.certified = lift.certified;
  return out;
}

json to_json(const JobSpec& s) {
  return json{{"kind", to_string(s.kind)},
              {"input", s.input},
              {"type", s.type},
              {"q", s.q},
              {"cyclo", s.cyclo},
              {"gamma", s.gamma},
              {"depth", s.depth},
              {"deform", s.deform},
              {"idempotent", s.idempotent},
              {"precision", s.precision},
              {"format", s.format},
              {"output", s.output},
              {"timing", s.timing}};
}

JobSpec job_from_json(const json& j) {
  JobSpec s;
  s.kind = parse_job_kind(j.at("kind").get<std::string>());
  j.at("input").get_to(s.input);
  j.at("type").get_to(s.type);
  j.at("q").get_to(s.q);
  j.at("cyclo").get_to(s.cyclo);
  j.at("gamma").get_to(s.gamma);
  j.at("depth").get_to(s.depth);
  j.at("deform").get_to(s.deform);
  j.at("idempotent").get_to(s.idempotent);
  j.at("precision").get_to(s.precision);
  j.at("format").get_to(s.format);
  j.at("output").get_to(s.output);
  j.at("timing").get_to(s.timing);
  return s;
}

json simples_json(const std::vector<SimpleEntry>& v, bool projective) {
  json out = json::array();
  for (const auto& s : v) {
    json e{{"label", s.label}, {"dimension", s.dimension}};
    if (projective) e["projective_dimension"] = s.projective_dimension;
    out.push_back(e);
  }
  return out;
}

std::vector<SimpleEntry> simples_from_json(const json& j) {
  std::vector<SimpleEntry> out;
  for (const auto& e : j) {
    SimpleEntry s;
    e.at("label").get_to(s.label);
    e.at("dimension").get_to(s.dimension);
    if (e.contains("projective_dimension")) e.at("projective_dimension").get_to(s.projective_dimension);
    out.push_back(s);
  }
  return out;
}

json result_json(const CdeResult& r) {
  json audits = json::array();
  for (const auto& a : r.audits) audits.push_back({{"name", a.name}, {"passed", a.passed}, {"lhs", a.lhs}, {"rhs", a.rhs}});
  return json{{"algebra", {{"dimension", r.dimension}, {"cyclotomic_order", r.cyclotomic_order}, {"labels", r.labels}}},
              {"K_simples", simples_json(r.K_simples, false)},
              {"k_simples", simples_json(r.k_simples, true)},
              {"D", r.D},
              {"C", r.C},
              {"E", r.E},
              {"audits", audits},
              {"passed", r.passed}};
}

json result_json(const DualityResult& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"lambda", p.lambda}, {"mu", p.mu}, {"lhs", p.lhs}, {"rhs", p.rhs}, {"equal", p.equal}});
  }
  return json{{"window", {{"gammas", r.gammas}, {"deformed", r.deformed}, {"depth", r.depth}, {"weights", r.weights}}},
              {"pairs", pairs},
              {"generic_gram_nonzero", r.generic_gram_nonzero},
              {"generic_filtration_match", r.generic_filtration_match},
              {"all_equal", r.all_equal}};
}

json result_json(const LiftResult& r) {
  // A zero defect has infinite valuation, written as null.
  json defects = json::array();
  for (int v : r.defect_valuations) defects.push_back(v == kInfiniteValuation ? json(nullptr) : json(v));
  return json{{"idempotent", r.idempotent},
              {"precision", r.precision},
              {"coordinates", r.coordinates},
              {"defect_valuations", defects},
              {"certified", r.certified}};
}

CdeResult cde_from_json(const json& j) {
  CdeResult r;
  const json& a = j.at("algebra");
  a.at("dimension").get_to(r.dimension);
  a.at("cyclotomic_order").get_to(r.cyclotomic_order);
  a.at("labels").get_to(r.labels);
  r.K_simples = simples_from_json(j.at("K_simples"));
  r.k_simples = simples_from_json(j.at("k_simples"));
  j.at("D").get_to(r.D);
  j.at("C").get_to(r.C);
  j.at("E").get_to(r.E);
  for (const auto& e : j.at("audits")) {
    r.audits.push_back({e.at("name").get<std::string>(), e.at("passed").get<bool>(), e.at("lhs").get<std::string>(),
                        e.at("rhs").get<std::string>()});
  }
  j.at("passed").get_to(r.passed);
  return r;
}

DualityResult duality_from_json(const json& j) {
  DualityResult r;
  const json& w = j.at("window");
  w.at("gammas").get_to(r.gammas);
  w.at("deformed").get_to(r.deformed);
  w.at("depth").get_to(r.depth);
  w.at("weights").get_to(r.weights);
  for (const auto& p : j.at("pairs")) {
    r.pairs.push_back({p.at("lambda").get<std::string>(), p.at("mu").get<std::string>(), p.at("lhs").get<long>(),
                       p.at("rhs").get<long>(), p.at("equal").get<bool>()});
  }
  j.at("generic_gram_nonzero").get_to(r.generic_gram_nonzero);
  j.at("generic_filtration_match").get_to(r.generic_filtration_match);
  j.at("all_equal").get_to(r.all_equal);
  return r;
}

LiftResult lift_from_json(const json& j) {
  LiftResult r;
  j.at("idempotent").get_to(r.idempotent);
  j.at("precision").get_to(r.precision);
  j.at("coordinates").get_to(r.coordinates);
  for (const auto& v : j.at("defect_valuations")) r.defect_valuations.push_back(v.is_null() ? kInfiniteValuation : v.get<int>());
  j.at("certified").get_to(r.certified);
  return r;
}

std::string matrix_block(const std::string& name, const IntMatrix& m) {
  std::ostringstream out;
  out << name << " =\n";
  for (const auto& row : m) {
    out << " ";
    for (long x : row) out << " " << std::setw(2) << x;
    out << "\n";
  }
  return out.str();
}

std::string table(const CdeResult& r) {
  std::ostringstream out;
  out << "algebra: dimension " << r.dimension << ", cyclotomic order " << r.cyclotomic_order << "\n";
  out << "K-simples:";
  for (const auto& s : r.K_simples) out << " " << s.label << " (dim " << s.dimension << ")";
  out << "\nk-simples:";
  for (const auto& s : r.k_simples) {
    out << " " << s.label << " (dim " << s.dimension << ", cover " << s.projective_dimension << ")";
  }
  out << "\n" << matrix_block("D", r.D) << matrix_block("C", r.C) << matrix_block("E", r.E) << "audits:\n";
  for (const auto& a : r.audits) {
    out << "  " << std::left << std::setw(8) << a.name << (a.passed ? " pass  " : " FAIL  ") << a.lhs << " | " << a.rhs
        << "\n";
  }
  return out.str();
}

std::string table(const DualityResult& r) {
  std::ostringstream out;
  out << "window: gamma {";
  for (std::size_t i = 0; i < r.gammas.size(); ++i) out << (i ? ", " : "") << r.gammas[i];
  out << "}, depth " << r.depth << (r.deformed ? ", deformed by t" : ", undeformed") << "\n";
  out << "rows lambda, columns mu: [Z(lambda) : V(mu)] / [I(mu) : Z(lambda)]\n";
  std::size_t width = 5;
  for (const auto& w : r.weights) width = std::max(width, w.size() + 1);
  out << std::setw(static_cast<int>(width)) << "";
  for (const auto& w : r.weights) out << std::setw(static_cast<int>(width)) << w;
  out << "\n";
  const std::size_t n = r.weights.size();
  for (std::size_t i = 0; i < n; ++i) {
    out << std::setw(static_cast<int>(width)) << r.weights[i];
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = r.pairs[i * n + j];
      std::string cell = p.lhs == 0 && p.rhs == 0 ? "." : std::to_string(p.lhs) + "/" + std::to_string(p.rhs);
      if (!p.equal) cell += "!";
      out << std::setw(static_cast<int>(width)) << cell;
    }
    out << "\n";
  }
  out << "all equal: " << (r.all_equal ? "yes" : "NO") << "\n";
  out << "generic Gram determinants nonzero: " << (r.generic_gram_nonzero ? "yes" : "no") << "\n";
  out << "generic Verma multiplicities match filtrations: " << (r.generic_filtration_match ? "yes" : "no") << "\n";
  return out.str();
}

std::string table(const LiftResult& r) {
  std::ostringstream out;
  out << "idempotent over k: (";
  for (std::size_t i = 0; i < r.idempotent.size(); ++i) out << (i ? ", " : "") << r.idempotent[i];
  out << ")\nlift mod t^" << r.precision << ":\n";
  for (std::size_t i = 0; i < r.coordinates.size(); ++i) {
    out << "  e" << i + 1 << " = " << r.coordinates[i] << "   defect valuation ";
    if (r.defect_valuations[i] == kInfiniteValuation) {
      out << "exact\n";
    } else {
      out << r.defect_valuations[i] << "\n";
    }
  }
  out << "certified: " << (r.certified ? "yes" : "NO") << "\n";
  return out.str();
}

}  // namespace

std::string to_string(JobKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  throw InternalError("unknown job kind");
}

JobKind parse_job_kind(const std::string& name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw InputError("unknown job kind '" + name + "'");
}

void validate(const JobSpec& spec) {
  if (spec.format != "json" && spec.format != "table") throw InputError("format must be json or table");
  if (spec.cyclo < 1) throw InputError("cyclotomic order must be positive");
  switch (spec.kind) {
    case JobKind::verify_cde:
      if (spec.input.empty()) throw InputError("verify needs --input");
      break;
    case JobKind::hecke_example:
      if (spec.type.empty() || spec.q.empty()) throw InputError("hecke needs --type and --q");
      break;
    case JobKind::osl2_duality:
      if (spec.gamma.empty()) throw InputError("osl2 needs at least one --gamma weight");
      if (spec.depth < 1) throw InputError("osl2 needs --depth >= 1");
      break;
    case JobKind::lift_demo:
      if (spec.input.empty() || spec.idempotent.empty()) throw InputError("lift needs --input and --idempotent");
      if (spec.precision < 1) throw InputError("lift needs --precision >= 1");
      break;
  }
}

LoadedAlgebra load_algebra(const json& j) {
  const long order = require_int(require(require(j, "field", ""), "cyclotomic_order", "/field"),
                                 "/field/cyclotomic_order", 1, 1000000);
  const auto d = static_cast<std::size_t>(require_int(require(j, "dimension", ""), "/dimension", 1, 4096));
  const auto unit = static_cast<std::size_t>(require_int(require(j, "unit", ""), "/unit", 1, static_cast<long>(d)));
  const json& structure = require_array(require(j, "structure", ""), "/structure", d * d);
  std::vector<Vec<RatFunc>> products;
  for (std::size_t idx = 0; idx < d * d; ++idx) {
    const std::string base = pointer("/structure", idx);
    const json& entry = structure[idx];
    if (!entry.is_array()) throw SchemaError("expected an array of [k, scalar] pairs", base);
    Vec<RatFunc> v(d);
    std::vector<bool> seen(d, false);
    for (std::size_t p = 0; p < entry.size(); ++p) {
      const std::string ptr = pointer(base, p);
      const json& pair = require_array(entry[p], ptr, 2);
      const auto k = static_cast<std::size_t>(require_int(pair[0], ptr + "/0", 1, static_cast<long>(d)));
      if (seen[k - 1]) throw SchemaError("basis index " + std::to_string(k) + " repeated", ptr + "/0");
      seen[k - 1] = true;
      v[k - 1] = json_scalar(pair[1], static_cast<int>(order), ptr + "/1");
    }
    products.push_back(std::move(v));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& l = require_array(j.at("labels"), "/labels", d);
    for (std::size_t i = 0; i < d; ++i) {
      if (!l[i].is_string()) throw SchemaError("expected a string", pointer("/labels", i));
      labels.push_back(l[i].get<std::string>());
    }
  }
  LoadedAlgebra out;
  out.algebra = std::make_shared<const Algebra<RatFunc>>(ScalarRing::R, static_cast<int>(order), std::move(products),
                                                         unit - 1, std::move(labels));
  const auto over_k_field = extend_to_K(*out.algebra);
  if (!j.contains("simples")) {
    if (d == 1) {
      // The only simple of a one-dimensional algebra is the algebra itself.
      Matrix<RatFunc> m(1, 1);
      m(0, 0) = out.algebra->constant(0, 0, 0);
      out.simples.emplace_back(over_k_field, std::vector<Matrix<RatFunc>>{m}, ModuleKind::simple, "M1");
    }
    return out;
  }
  const json& simples = j.at("simples");
  if (!simples.is_array()) throw SchemaError("expected an array", "/simples");
  for (std::size_t i = 0; i < simples.size(); ++i) {
    const std::string base = pointer("/simples", i);
    const json& actions = require_array(require(simples[i], "actions", base), base + "/actions", d);
    std::vector<Matrix<RatFunc>> mats;
    std::size_t m = 0;
    for (std::size_t a = 0; a < d; ++a) {
      const std::string mp = pointer(base + "/actions", a);
      if (!actions[a].is_array() || actions[a].empty()) throw SchemaError("expected a nonempty square matrix", mp);
      if (a == 0) m = actions[a].size();
      require_array(actions[a], mp, m);
      Matrix<RatFunc> mat(m, m);
      for (std::size_t r = 0; r < m; ++r) {
        const json& row = require_array(actions[a][r], pointer(mp, r), m);
        for (std::size_t c = 0; c < m; ++c) mat(r, c) = json_scalar(row[c], static_cast<int>(order), pointer(pointer(mp, r), c));
      }
      mats.push_back(std::move(mat));
    }
    std::string label = "M" + std::to_string(i + 1);
    if (simples[i].contains("label")) {
      if (!simples[i].at("label").is_string()) throw SchemaError("expected a string", base + "/label");
      label = simples[i].at("label").get<std::string>();
    }
    out.simples.emplace_back(over_k_field, std::move(mats), ModuleKind::simple, label);
  }
  return out;
}

LoadedAlgebra load_input(const std::string& input) {
  const std::string prefix = "hecke:";
  if (input.rfind(prefix, 0) == 0) {
    const auto parts = split(input.substr(prefix.size()), ':');
    if (parts.size() != 3) throw InputError("builtin input must read hecke:<A1|A2>:<q>:<cyclo>");
    int cyclo = 0;
    try {
      cyclo = std::stoi(parts[2]);
    } catch (const std::exception&) {
      throw InputError("bad cyclotomic order '" + parts[2] + "'");
    }
    return load_hecke(hecke_spec(parts[0], parts[1], cyclo));
  }
  std::ifstream in(input);
  if (!in) throw InputError("cannot read input file '" + input + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what(), "");
  }
  return load_algebra(j);
}

Report run_job(const JobSpec& spec) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.job = spec;
  report.version = CDELAB_VERSION;
  switch (spec.kind) {
    case JobKind::verify_cde: {
      const LoadedAlgebra loaded = load_input(spec.input);
      if (loaded.simples.empty()) throw SchemaError("verify needs the K-simples of the algebra", "/simples");
      report.result = cde_result(*loaded.algebra, cde_report(loaded.algebra, loaded.simples));
      break;
    }
    case JobKind::hecke_example: {
      const LoadedAlgebra loaded = load_hecke(hecke_spec(spec.type, spec.q, spec.cyclo));
      report.result = cde_result(*loaded.algebra, cde_report(loaded.algebra, loaded.simples));
      break;
    }
    case JobKind::osl2_duality: {
      std::vector<Cyclo> gammas;
      for (const auto& g : spec.gamma) gammas.push_back(constant_scalar(g, spec.cyclo, "weight"));
      report.result = duality_result(duality_table(gammas, spec.depth, spec.deform));
      break;
    }
    case JobKind::lift_demo:
      report.result = lift_result(spec);
      break;
  }
  if (spec.timing) {
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

bool Report::passed() const {
  if (const auto* c = std::get_if<CdeResult>(&result)) return c->passed;
  if (const auto* d = std::get_if<DualityResult>(&result)) {
    return d->all_equal && (!d->deformed || (d->generic_gram_nonzero && d->generic_filtration_match));
  }
  return std::get<LiftResult>(result).certified;
}

json to_json(const Report& report) {
  json j{{"job", to_json(report.job)}, {"version", report.version}};
  std::visit([&](const auto& r) { j["result"] = result_json(r); }, report.result);
  if (report.seconds) j["timing"] = {{"seconds", *report.seconds}};
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.job = job_from_json(j.at("job"));
  j.at("version").get_to(r.version);
  const json& res = j.at("result");
  switch (r.job.kind) {
    case JobKind::verify_cde:
    case JobKind::hecke_example:
      r.result = cde_from_json(res);
      break;
    case JobKind::osl2_duality:
      r.result = duality_from_json(res);
      break;
    case JobKind::lift_demo:
      r.result = lift_from_json(res);
      break;
  }
  if (j.contains("timing")) r.seconds = j.at("timing").at("seconds").get<double>();
  return r;
}

std::string serialize(const Report& report) { return to_json(report).dump(2) + "\n"; }

std::string render_table(const Report& report) {
  std::string out = "cdelab " + report.version + ": " + to_string(report.job.kind) + "\n";
  std::visit([&](const auto& r) { out += table(r); }, report.result);
  if (report.seconds) {
    std::ostringstream t;
    t << "time: " << std::fixed << std::setprecision(3) << *report.seconds << " s\n";
    out += t.str();
  }
  return out;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const AuditFailure*>(&e)) return 3;
  if (dynamic_cast<const UnsupportedError*>(&e)) return 4;
  if (dynamic_cast<const InputError*>(&e)) return 2;
  if (dynamic_cast<const json::exception*>(&e)) return 2;
  return 1;
}

}  // namespace cdelab::tools
