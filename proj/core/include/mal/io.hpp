#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "mal/bigraded.hpp"
#include "mal/euler_poly.hpp"
#include "mal/reports.hpp"
#include "mal/simplicial_complex.hpp"

namespace mal {
namespace io {

/// Facet text format: one facet per line as whitespace-separated 1-based
/// vertex indices; an optional leading header `m <count>`; `#` starts a
/// comment.  Throws ParseError carrying the offending line number.
SimplicialComplex parse_facets(std::istream& in);
SimplicialComplex parse_facets(const std::string& text);

/// Reads the facet format from a file; throws InputError when unreadable.
SimplicialComplex load_complex(const std::string& path);

/// Betti tables as JSON: {"m":…, "n":…, "table":[{"q":…, "p2":…, "betti":…}]}.
/// Values that fit a 64-bit integer are emitted as numbers, larger ones as
/// decimal strings; the parser accepts both.
std::string betti_table_to_json(const BigradedBettiTable& t);
BigradedBettiTable betti_table_from_json(const std::string& text);

/// Per-bidegree cell counts, same shape with "dim" in place of "betti".
std::string cell_counts_to_json(int m, int n, const std::map<Bidegree, int>& dims);

/// Check list as JSON: [{"check":…, "status":"pass|fail|skipped",
/// "lhs":…, "rhs":…, "citation":…}].
std::string report_to_json(const VerificationReport& rep);

/// {"space":…, "coefficients":[c_0, c_1, …], "polynomial": "1 - t^6"} with
/// coefficient index p meaning the t^{2p} term.
std::string euler_poly_to_json(const EulerPolynomial& poly, const std::string& space);

}  // namespace io
}  // namespace mal
