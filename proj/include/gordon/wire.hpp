#pragma once

// JSON forms of the library's value types. Every to_json has a matching
// parser and parse(emit(x)) == x.

#include <json.hpp>

#include <gordon/bailey.hpp>
#include <gordon/identities.hpp>
#include <gordon/lattice_path.hpp>
#include <gordon/qseries.hpp>

namespace gordon::wire
{

using json = nlohmann::json;

// "p/q", or "p" when q = 1.
json rational_to_json(const Rational &r);
Rational rational_from_json(const json &j);

// {"denom": d, "order_num": p, "order_den": q, "coeffs": [[slot, "decimal"], ...]}
// listing nonzero coefficients by increasing slot.
json to_json(const Series &s);
Series series_from_json(const json &j);

json to_json(const Discrepancy &d);
Discrepancy discrepancy_from_json(const json &j);

// {"start_height": h, "steps": "NSE...", "peaks": [...], "major_index": m}
json to_json(const paths::LatticePath &p);
paths::LatticePath path_from_json(const json &j);

json to_json(const paths::ConstructionData &cd);
paths::ConstructionData construction_from_json(const json &j);

json to_json(const bailey::BaileyPair &bp);
bailey::BaileyPair pair_from_json(const json &j);

json to_json(const identities::IdentitySpec &spec);
identities::IdentitySpec spec_from_json(const json &j);

json to_json(const identities::VerificationReport &r);
identities::VerificationReport report_from_json(const json &j);

} // namespace gordon::wire
