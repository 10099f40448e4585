#include "gaugenorm/json_io.hpp"

#include <fstream>
#include <sstream>

#include "gaugenorm/errors.hpp"
#include "overloaded.hpp"

namespace gaugenorm::json {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

Rational rational(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("breakpoints must be rational strings such as \"1/3\"");
}

Complex complex_entry(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("complex entries must be numbers or [re, im] pairs");
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number()) return Scalar(j.get<double>());
  throw ParseError("parameter must be a number or a rational string");
}

json to_json(const Scalar& s) {
  if (s.exact) return s.exact->str();
  return s.value;
}

StepFn stepfn_from_json(const json& j) {
  const auto& bj = field(j, "breakpoints");
  const auto& vj = field(j, "values");
  if (!bj.is_array() || !vj.is_array()) throw ParseError("breakpoints and values must be arrays");
  std::vector<Rational> bps;
  for (const auto& b : bj) bps.push_back(rational(b));
  std::vector<double> vals;
  for (const auto& v : vj) vals.push_back(number(v, "step value"));
  return StepFn(std::move(bps), std::move(vals));
}

json to_json(const StepFn& f) {
  json bps = json::array();
  for (const auto& b : f.breakpoints()) bps.push_back(b.str());
  return {{"breakpoints", bps}, {"values", f.values()}};
}

CMatrix matrix_from_json(const json& j) {
  const auto& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<std::int64_t>() < 1) throw ParseError("n must be a positive integer");
  const auto n = nj.get<std::size_t>();
  const auto& rows = field(j, "entries");
  if (!rows.is_array() || rows.size() != n) throw ParseError("entries must have n rows");
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw ParseError("every row must have n entries");
    for (const auto& e : row) entries.push_back(complex_entry(e));
  }
  return CMatrix(n, std::move(entries));
}

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.n(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.n()}, {"entries", rows}};
}

std::vector<Complex> vector_from_json(const json& j) {
  const auto& vj = field(j, "vector");
  if (!vj.is_array() || vj.empty()) throw ParseError("vector must be a nonempty array");
  std::vector<Complex> out;
  for (const auto& e : vj) out.push_back(complex_entry(e));
  return out;
}

Operand operand_from_json(const json& j) {
  if (j.is_object() && j.contains("entries")) return matrix_from_json(j);
  if (j.is_object() && j.contains("vector")) return vector_from_json(j);
  throw ParseError("operand must be a matrix ({\"n\", \"entries\"}) or a vector ({\"vector\"})");
}

NormSpec spec_from_json(const json& j) {
  const auto& kj = field(j, "kind");
  if (!kj.is_string()) throw ParseError("kind must be a string");
  const auto kind = kj.get<std::string>();
  if (kind == "operator") return NormSpec::operator_norm();
  if (kind == "trace") return NormSpec::trace();
  if (kind == "lp") return NormSpec::lp(scalar_from_json(field(j, "p")).value);
  if (kind == "kyfan") return NormSpec::kyfan(scalar_from_json(field(j, "t")));
  if (kind == "kyfanzero") return NormSpec::kyfan(Scalar(Rational(0)));
  if (kind == "weight") return NormSpec::weight(WeightFn(stepfn_from_json(field(j, "f"))));
  if (kind == "supof") {
    const auto& fs = field(j, "fs");
    if (!fs.is_array()) throw ParseError("fs must be an array of step functions");
    std::vector<WeightFn> ws;
    for (const auto& f : fs) ws.emplace_back(stepfn_from_json(f));
    return NormSpec::sup_of(std::move(ws));
  }
  if (kind == "tbracket") return NormSpec::tbracket(scalar_from_json(field(j, "t")));
  if (kind == "csup") return NormSpec::csup(stepfn_from_json(field(j, "c")));
  throw ParseError("unknown norm kind '" + kind + "'");
}

json to_json(const NormSpec& spec) {
  using detail::overloaded;
  json j = {{"kind", spec.kind()}};
  std::visit(overloaded{
                 [](const spec::Operator&) {},
                 [](const spec::Trace&) {},
                 [](const spec::KyFanZero&) {},
                 [&](const spec::Lp& s) { j["p"] = s.p; },
                 [&](const spec::KyFan& s) { j["t"] = to_json(s.t); },
                 [&](const spec::Weight& s) { j["f"] = to_json(s.f.fn()); },
                 [&](const spec::SupOf& s) {
                   json fs = json::array();
                   for (const auto& f : s.fs) fs.push_back(to_json(f.fn()));
                   j["fs"] = fs;
                 },
                 [&](const spec::TBracket& s) { j["t"] = to_json(s.t); },
                 [&](const spec::CSup& s) { j["c"] = to_json(s.c); },
             },
             spec.value());
  return j;
}

AtomicMeasure measure_from_json(const json& j) {
  const auto& aj = field(j, "atoms");
  if (!aj.is_array()) throw ParseError("atoms must be an array");
  std::vector<Atom> atoms;
  for (const auto& a : aj) atoms.push_back({number(field(a, "t"), "t"), number(field(a, "w"), "w")});
  return AtomicMeasure(std::move(atoms));
}

json to_json(const AtomicMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms()) atoms.push_back({{"t", a.t}, {"w", a.w}});
  return {{"atoms", atoms}};
}

Profile profile_from_json(const json& j) {
  if (j.is_object() && j.contains("lp")) return Profile::lp(number(j["lp"], "lp"));
  const auto& kj = field(j, "knots");
  const auto& vj = field(j, "values");
  if (!kj.is_array() || !vj.is_array()) throw ParseError("knots and values must be arrays");
  std::vector<double> knots, values;
  for (const auto& k : kj) knots.push_back(number(k, "knot"));
  for (const auto& v : vj) values.push_back(number(v, "profile value"));
  return Profile::piecewise_linear(std::move(knots), std::move(values));
}

json to_json(const Profile& p) {
  if (p.is_lp()) return {{"lp", *p.lp_exponent()}};
  return {{"knots", p.knots()}, {"values", p.values()}};
}

json to_json(const DominanceVerdict& v) {
  json j = {{"dominates", v.dominates}, {"partial_sums_S", v.partial_sums_s}, {"partial_sums_T", v.partial_sums_t}};
  j["violating_k"] = v.violating_k ? json(*v.violating_k) : json(nullptr);
  return j;
}

json to_json(const TransferReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back(
        {{"spec", e.spec}, {"norm_S", e.norm_s}, {"norm_T", e.norm_t}, {"margin", e.margin}, {"holds", e.holds}});
  return {{"all_hold", r.all_hold()}, {"entries", entries}};
}

json to_json(const Admissibility& a) {
  return {{"admissible", a.admissible()},
          {"nondecreasing", a.nondecreasing},
          {"convex", a.convex},
          {"endpoint_one", a.endpoint_one},
          {"left_derivative", a.left_derivative},
          {"sandwich", a.sandwich},
          {"sandwich_form", a.sandwich_form},
          {"derivative_form", a.derivative_form},
          {"mixture_form", a.mixture_form},
          {"violated", a.violated}};
}

}  // namespace gaugenorm::json
