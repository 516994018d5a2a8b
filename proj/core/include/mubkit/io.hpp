#pragma once

// JSON file formats for every artifact the toolkit produces or consumes.
//
// Complex numbers are [re, im] pairs; doubles are written in shortest
// round-trip form so a reload reproduces every amplitude bit for bit.

#include <string>
#include <string_view>
#include <vector>

#include "mubkit/builder.hpp"
#include "mubkit/checker.hpp"
#include "mubkit/geometry.hpp"
#include "mubkit/phase.hpp"
#include "mubkit/search.hpp"

namespace mubkit::io {

inline constexpr int kSchemaVersion = 1;

/// {"schema_version":1, "dim", "method", "field"?: {"p","m","modulus"},
///  "labels": [...], "bases": [[[[re,im],...],...],...]}
std::string mubset_to_json(const MubSet& s);
MubSet mubset_from_json(std::string_view text);

/// {"dim", "bases", "max_deviation", "tolerance", "verdict", "exceeds_bound",
///  "ortho": [...], "pairs": [{"i","j","dev","a","b"}]}
std::string report_to_json(const MubReport& r);

/// {"schema_version":1, "dim", "vectors": [[[re,im],...],...]}
std::string sic_to_json(const std::vector<CVec>& vectors);
std::vector<CVec> sic_from_json(std::string_view text);
std::string sic_report_to_json(const SicReport& r);

/// {"kind", "order", "points", "lines": [[...],...], "parallel_classes"?}
std::string plane_to_json(const IncidenceStructure& s);
IncidenceStructure plane_from_json(std::string_view text);
std::string axiom_report_to_json(const AxiomReport& r);

/// {"dim", "spectrum", "source", "matrix": [[[re,im],...],...]} per operator,
/// wrapped as {"schema_version":1, "operators": [...]}.
std::string operators_to_json(const std::vector<PhaseOperator>& ops);
std::string operator_to_json(const PhaseOperator& op);

/// {"p", "m", "modulus", "trace": [t_0, ..., t_{d-1}]}
std::string field_to_json(const Field& f);

std::string search_report_to_json(const SearchReport& r, const SearchConfig& cfg);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace mubkit::io
