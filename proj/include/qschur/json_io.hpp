#pragma once

#include <string>

#include "json.hpp"
#include "qschur/schur_algebra.hpp"

namespace qschur {

using nlohmann::json;

json laurent_to_json(const Laurent& x);
Laurent laurent_from_json(const json& j);

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

/// Dump of a q-Schur algebra table:
/// { n, r, lprime, basis: [matrix...], structconst: [{left, right, out, coeff}] }
/// with Laurent coefficients as exponent -> integer maps.  lprime is 0 for the
/// generic (unspecialized) table.  Round-trips bit-exactly.
json schur_table_to_json(const SchurTable& T, int lprime = 0);

/// Rebuild the product rows from a dump and check them against a freshly
/// built table; returns true when they agree entry by entry.
bool schur_table_matches_json(const SchurTable& T, const json& j);

}
