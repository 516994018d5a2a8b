#pragma once

// Finite projective and affine planes as incidence structures.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mubkit/gf.hpp"

namespace mubkit {

enum class PlaneKind { Projective, Affine, Raw };

std::string_view plane_kind_name(PlaneKind k);
PlaneKind plane_kind_from_name(std::string_view name);

struct IncidenceStructure {
  PlaneKind kind = PlaneKind::Raw;
  int order = 0;
  std::size_t num_points = 0;
  /// Optional coordinate labels, one per point.
  std::vector<std::string> point_labels;
  /// Sorted point indices on each line.
  std::vector<std::vector<int>> lines;
  /// Affine planes only: groups of line indices, one group per direction.
  std::vector<std::vector<int>> parallel_classes;

  std::size_t num_lines() const { return lines.size(); }
};

/// PG(2, q) over the given field. Points and lines are nonzero triples with
/// first nonzero coordinate 1; a point lies on a line when x u + y v + z w = 0.
IncidenceStructure pg2(const Field& field);

/// Swaps points and lines. Requires a structure that passes the projective
/// axioms.
IncidenceStructure dual(const IncidenceStructure& s);

/// Deletes one line and every point on it. The surviving lines are grouped
/// into parallel classes by the deleted point they used to pass through.
IncidenceStructure affinize(const IncidenceStructure& s, std::size_t line_index);

/// Inverse of affinize: one new point per parallel class and a new line
/// through all of them.
IncidenceStructure projective_completion(const IncidenceStructure& affine);

struct AxiomViolation {
  std::string axiom;
  /// Witness objects (points or lines, depending on the axiom); -1 if unused.
  int first = -1;
  int second = -1;
  std::string detail;
};

struct AxiomReport {
  PlaneKind kind = PlaneKind::Raw;
  std::vector<AxiomViolation> violations;
  std::size_t parallel_class_count = 0;

  bool pass() const { return violations.empty(); }
};

AxiomReport check_axioms(const IncidenceStructure& s);

struct CorrespondenceRow {
  int d = 0;
  bool prime_power = false;
  bool maximal_mubs_constructed = false;
  std::size_t mub_count = 0;  // verified bases actually built
  std::string mub_method;
  bool plane_constructed = false;
  std::size_t plane_points = 0;
  long long lower_bound = 0;
  long long upper_bound = 0;
  std::string note;
};

/// Side-by-side summary of what this library builds in dimension/order d:
/// a verified MUB set and a verified projective plane. It only reports
/// constructions performed.
CorrespondenceRow correspondence_report(int d);

}  // namespace mubkit
