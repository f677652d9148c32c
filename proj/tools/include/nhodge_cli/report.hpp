#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nhodge/cayley.hpp"
#include "nhodge/consistency.hpp"
#include "nhodge/monodromy.hpp"
#include "nhodge/newton.hpp"

namespace nhodge::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Exact integers: JSON numbers when they fit in 53 bits, strings otherwise.
Json integer_json(const Integer& x);
Json poly_json(const IntPoly& p);

Json newton_json(const NewtonData& nd);
Json predicates_json(const NewtonData& nd);
Json spectrum_json(const std::vector<RootOfUnity>& roots);
Json orders_json(const std::set<Integer>& orders);
Json hodge_json(const HodgeResult& h);
Json jordan_json(const JordanTable& via_e, const JordanTable& via_formula);
Json multiplicity_json(const MultiplicityFactorization& m);
Json consistency_json(const std::vector<OracleReport>& reports);

// Skeleton shared by every command: version, input echo and assumption banner.
Json document(const std::string& command, const std::vector<TPolynomial>& input);

// Plain-text rendering of a report document.
std::string render_table(const Json& doc);

}  // namespace nhodge::cli
