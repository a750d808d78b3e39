#pragma once

#include "gvm/cells.hpp"
#include "gvm/classify.hpp"
#include "gvm/elementary.hpp"
#include "gvm/jantzen.hpp"
#include "gvm/orbits.hpp"
#include "gvm/parabolic.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

// JSON forms of the result types. Rationals are canonical "p/q" strings;
// objects are key-sorted, so dumps are byte-stable.
namespace gvm {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(Family f);
Family family_from_json(const Json& j);

Json to_json(const NodeSet& s);

Json to_json(const HomVerdict& v);
HomVerdict hom_verdict_from_json(const Json& j);

Json to_json(const VerifyReport& r);
VerifyReport verify_report_from_json(const Json& j);

Json to_json(const FormalSum& s);
FormalSum formal_sum_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const OrbitDatum& o);
OrbitDatum orbit_datum_from_json(const Json& j);

Json to_json(const Symbol& s);
Symbol symbol_from_json(const Json& j);

Json to_json(const CellReport& r);
CellReport cell_report_from_json(const Json& j);

Json to_json(const ElementaryVerdict& v);
ElementaryVerdict elementary_verdict_from_json(const Json& j);

Json to_json(const CompositionInclusion& c);
CompositionInclusion composition_inclusion_from_json(const Json& j);

// theta, rho_theta, rho_upper, omega, c, d, dim_nilradical
Json rootdata_json(const ParabolicDatum& pd);

// Stable text: two-space indented JSON.
std::string dump(const Json& j);

// Leaves as (path, value) in key order. Paths look like "a.b[2].c"; an
// array whose entries are all numbers, booleans or rational strings is one
// leaf rendered "[x y z]". Strings print bare.
std::vector<std::pair<std::string, std::string>> flatten(const Json& j);
// One "path: value" line per leaf.
std::string render_text(const Json& j);

}  // namespace gvm
