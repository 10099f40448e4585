#pragma once

#include <filesystem>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaugenorm/dominance.hpp"
#include "gaugenorm/duality.hpp"
#include "gaugenorm/extreme2.hpp"
#include "gaugenorm/linalg.hpp"
#include "gaugenorm/norm_spec.hpp"
#include "gaugenorm/stepfn.hpp"

namespace gaugenorm::json {

using nlohmann::json;

// All readers throw ParseError on malformed or ill-typed input. Parameter
// checks performed by the library constructors (DomainError) propagate.
json read_file(const std::filesystem::path& path);
json parse(std::string_view text);

// "2/3" is exact, a JSON number is taken as a binary double.
Scalar scalar_from_json(const json& j);
json to_json(const Scalar& s);

// { "breakpoints": ["0","1/3","1"], "values": [3.0, 1.0] }
StepFn stepfn_from_json(const json& j);
json to_json(const StepFn& f);

// { "n": 2, "entries": [[[re, im], ...], ...] }
CMatrix matrix_from_json(const json& j);
json to_json(const CMatrix& m);

// { "vector": [x0, [re, im], ...] }
std::vector<Complex> vector_from_json(const json& j);

using Operand = std::variant<CMatrix, std::vector<Complex>>;
// Matrix if the object has "entries", vector if it has "vector".
Operand operand_from_json(const json& j);

// { "kind": "kyfan", "t": "2/3" } and friends.
NormSpec spec_from_json(const json& j);
json to_json(const NormSpec& spec);

// { "atoms": [{"t": 0.75, "w": 1.0}] }
AtomicMeasure measure_from_json(const json& j);
json to_json(const AtomicMeasure& mu);

// { "knots": [...], "values": [...] } or { "lp": p }
Profile profile_from_json(const json& j);
json to_json(const Profile& p);

json to_json(const DominanceVerdict& v);
json to_json(const TransferReport& r);
json to_json(const Admissibility& a);

}  // namespace gaugenorm::json
