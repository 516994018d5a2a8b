#include "mubkit/geometry.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "mubkit/builder.hpp"
#include "mubkit/checker.hpp"
#include "mubkit/error.hpp"

namespace mubkit {

namespace {

constexpr int kMaxPlaneOrder = 64;

using Triple = std::array<int, 3>;

// Nonzero triples over {0..q-1} whose first nonzero entry is 1, in the order
// (1,y,z), (0,1,z), (0,0,1).
std::vector<Triple> canonical_triples(int q) {
  std::vector<Triple> out;
  for (int y = 0; y < q; ++y)
    for (int z = 0; z < q; ++z) out.push_back({1, y, z});
  for (int z = 0; z < q; ++z) out.push_back({0, 1, z});
  out.push_back({0, 0, 1});
  return out;
}

bool lines_well_formed(const IncidenceStructure& s, AxiomReport& rep) {
  bool ok = true;
  for (std::size_t l = 0; l < s.lines.size(); ++l) {
    const auto& line = s.lines[l];
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (line[k] < 0 || static_cast<std::size_t>(line[k]) >= s.num_points ||
          (k > 0 && line[k] <= line[k - 1])) {
        rep.violations.push_back({"line lists sorted and in range", static_cast<int>(l), -1,
                                  "bad entry at position " + std::to_string(k)});
        ok = false;
        break;
      }
    }
  }
  return ok;
}

// Number of common lines for each point pair, saturating at 255.
std::vector<std::uint8_t> point_pair_counts(const IncidenceStructure& s) {
  const std::size_t n = s.num_points;
  std::vector<std::uint8_t> counts(n * n, 0);
  for (const auto& line : s.lines) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      for (std::size_t j = i + 1; j < line.size(); ++j) {
        auto& c = counts[static_cast<std::size_t>(line[i]) * n + line[j]];
        if (c < 255) ++c;
      }
    }
  }
  return counts;
}

std::vector<std::vector<int>> lines_through_points(const IncidenceStructure& s) {
  std::vector<std::vector<int>> through(s.num_points);
  for (std::size_t l = 0; l < s.lines.size(); ++l)
    for (int pt : s.lines[l]) through[pt].push_back(static_cast<int>(l));
  return through;
}

// Number of common points for each line pair, saturating at 255.
std::vector<std::uint8_t> line_pair_counts(const IncidenceStructure& s,
                                           const std::vector<std::vector<int>>& through) {
  const std::size_t n = s.lines.size();
  std::vector<std::uint8_t> counts(n * n, 0);
  for (const auto& ls : through) {
    for (std::size_t i = 0; i < ls.size(); ++i) {
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        auto& c = counts[static_cast<std::size_t>(ls[i]) * n + ls[j]];
        if (c < 255) ++c;
      }
    }
  }
  return counts;
}

// Groups lines into classes of pairwise-disjoint lines, first fit.
std::vector<std::vector<int>> disjoint_classes(const IncidenceStructure& s, const std::vector<std::uint8_t>& meets) {
  const std::size_t n = s.lines.size();
  std::vector<std::vector<int>> classes;
  for (std::size_t l = 0; l < n; ++l) {
    bool placed = false;
    for (auto& cls : classes) {
      const bool disjoint = std::all_of(cls.begin(), cls.end(), [&](int m) {
        const auto lo = std::min<std::size_t>(l, m), hi = std::max<std::size_t>(l, m);
        return meets[lo * n + hi] == 0;
      });
      if (disjoint) {
        cls.push_back(static_cast<int>(l));
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({static_cast<int>(l)});
  }
  return classes;
}

void check_counts(const IncidenceStructure& s, std::size_t points, std::size_t lines, std::size_t per_line,
                  std::size_t per_point, const std::vector<std::vector<int>>& through, AxiomReport& rep) {
  if (s.num_points != points) {
    rep.violations.push_back({"point count", -1, -1,
                              "expected " + std::to_string(points) + ", found " + std::to_string(s.num_points)});
  }
  if (s.lines.size() != lines) {
    rep.violations.push_back({"line count", -1, -1,
                              "expected " + std::to_string(lines) + ", found " + std::to_string(s.lines.size())});
  }
  for (std::size_t l = 0; l < s.lines.size(); ++l) {
    if (s.lines[l].size() != per_line) {
      rep.violations.push_back({"points per line", static_cast<int>(l), -1,
                                "line has " + std::to_string(s.lines[l].size()) + " points"});
      break;
    }
  }
  for (std::size_t p = 0; p < through.size(); ++p) {
    if (through[p].size() != per_point) {
      rep.violations.push_back({"lines per point", static_cast<int>(p), -1,
                                "point lies on " + std::to_string(through[p].size()) + " lines"});
      break;
    }
  }
}

void check_unique_joins(const IncidenceStructure& s, AxiomReport& rep) {
  const auto counts = point_pair_counts(s);
  const std::size_t n = s.num_points;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const int c = counts[a * n + b];
      if (c != 1) {
        rep.violations.push_back({"two points on exactly one line", static_cast<int>(a), static_cast<int>(b),
                                  "common lines: " + std::to_string(c)});
        return;
      }
    }
  }
}

}  // namespace

std::string_view plane_kind_name(PlaneKind k) {
  switch (k) {
    case PlaneKind::Projective: return "projective";
    case PlaneKind::Affine: return "affine";
    case PlaneKind::Raw: return "raw";
  }
  return "raw";
}

PlaneKind plane_kind_from_name(std::string_view name) {
  for (PlaneKind k : {PlaneKind::Projective, PlaneKind::Affine, PlaneKind::Raw}) {
    if (plane_kind_name(k) == name) return k;
  }
  throw Error(Errc::Parse, "unknown plane kind '" + std::string(name) + "'");
}

IncidenceStructure pg2(const Field& field) {
  const int q = field.order();
  if (q > kMaxPlaneOrder) throw Error(Errc::Unsupported, "plane order above 64");

  std::vector<Element> elems;
  for (int i = 0; i < q; ++i) elems.push_back(field.element_at(i));
  std::vector<int> mul(static_cast<std::size_t>(q) * q), add(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      mul[a * q + b] = static_cast<int>((elems[a] * elems[b]).index());
      add[a * q + b] = static_cast<int>((elems[a] + elems[b]).index());
    }
  }

  const auto triples = canonical_triples(q);
  IncidenceStructure s;
  s.kind = PlaneKind::Projective;
  s.order = q;
  s.num_points = triples.size();
  for (const auto& t : triples) {
    s.point_labels.push_back("(" + std::to_string(t[0]) + ":" + std::to_string(t[1]) + ":" + std::to_string(t[2]) + ")");
  }
  for (const auto& u : triples) {
    std::vector<int> line;
    for (std::size_t pt = 0; pt < triples.size(); ++pt) {
      const auto& x = triples[pt];
      const int form = add[add[mul[x[0] * q + u[0]] * q + mul[x[1] * q + u[1]]] * q + mul[x[2] * q + u[2]]];
      if (form == 0) line.push_back(static_cast<int>(pt));
    }
    s.lines.push_back(std::move(line));
  }
  return s;
}

AxiomReport check_axioms(const IncidenceStructure& s) {
  AxiomReport rep;
  rep.kind = s.kind;
  if (!lines_well_formed(s, rep)) return rep;
  if (s.kind == PlaneKind::Raw) return rep;

  const auto q = static_cast<std::size_t>(s.order);
  if (q < 2) {
    rep.violations.push_back({"order at least 2", -1, -1, "order " + std::to_string(s.order)});
    return rep;
  }
  const auto through = lines_through_points(s);

  if (s.kind == PlaneKind::Projective) {
    const std::size_t n = q * q + q + 1;
    check_counts(s, n, n, q + 1, q + 1, through, rep);
    check_unique_joins(s, rep);
    const auto meets = line_pair_counts(s, through);
    const std::size_t lines = s.lines.size();
    for (std::size_t a = 0; a < lines; ++a) {
      for (std::size_t b = a + 1; b < lines; ++b) {
        const int c = meets[a * lines + b];
        if (c != 1) {
          rep.violations.push_back({"two lines meet in exactly one point", static_cast<int>(a), static_cast<int>(b),
                                    "common points: " + std::to_string(c)});
          return rep;
        }
      }
    }
    return rep;
  }

  // Affine.
  check_counts(s, q * q, q * q + q, q, q + 1, through, rep);
  check_unique_joins(s, rep);
  const auto meets = line_pair_counts(s, through);
  const std::size_t lines = s.lines.size();
  auto disjoint = [&](int a, int b) {
    const auto lo = std::min<std::size_t>(a, b), hi = std::max<std::size_t>(a, b);
    return meets[lo * lines + hi] == 0;
  };

  const auto classes = s.parallel_classes.empty() ? disjoint_classes(s, meets) : s.parallel_classes;
  rep.parallel_class_count = classes.size();
  if (classes.size() != q + 1) {
    rep.violations.push_back({"q+1 parallel classes", -1, -1, "found " + std::to_string(classes.size())});
  }
  std::vector<int> seen(lines, 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& cls = classes[c];
    if (cls.size() != q) {
      rep.violations.push_back({"q lines per parallel class", static_cast<int>(c), -1,
                                "class has " + std::to_string(cls.size()) + " lines"});
    }
    std::vector<int> covered(s.num_points, 0);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (cls[i] < 0 || static_cast<std::size_t>(cls[i]) >= lines) {
        rep.violations.push_back({"parallel class entries in range", static_cast<int>(c), cls[i], ""});
        return rep;
      }
      ++seen[cls[i]];
      for (int pt : s.lines[cls[i]]) ++covered[pt];
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (!disjoint(cls[i], cls[j])) {
          rep.violations.push_back({"parallel lines are disjoint", cls[i], cls[j], "class " + std::to_string(c)});
        }
      }
    }
    if (std::any_of(covered.begin(), covered.end(), [](int k) { return k != 1; })) {
      rep.violations.push_back({"parallel class covers every point once", static_cast<int>(c), -1, ""});
    }
  }
  for (std::size_t l = 0; l < lines; ++l) {
    if (seen[l] != 1) {
      rep.violations.push_back({"each line in exactly one parallel class", static_cast<int>(l), -1, ""});
      break;
    }
  }
  return rep;
}

IncidenceStructure dual(const IncidenceStructure& s) {
  if (s.kind != PlaneKind::Projective || !check_axioms(s).pass()) {
    throw Error(Errc::NotProjective, "duality requires a projective plane");
  }
  IncidenceStructure out;
  out.kind = PlaneKind::Projective;
  out.order = s.order;
  out.num_points = s.lines.size();
  for (std::size_t l = 0; l < s.lines.size(); ++l) out.point_labels.push_back("L" + std::to_string(l));
  out.lines = lines_through_points(s);
  return out;
}

IncidenceStructure affinize(const IncidenceStructure& s, std::size_t line_index) {
  if (s.kind != PlaneKind::Projective || !check_axioms(s).pass()) {
    throw Error(Errc::NotProjective, "affinization requires a projective plane");
  }
  if (line_index >= s.lines.size()) {
    throw Error(Errc::IndexOutOfRange, "line " + std::to_string(line_index) + " does not exist");
  }
  const auto& removed = s.lines[line_index];
  std::vector<int> remap(s.num_points, -1);
  std::vector<int> class_of_point(s.num_points, -1);
  for (std::size_t k = 0; k < removed.size(); ++k) class_of_point[removed[k]] = static_cast<int>(k);

  IncidenceStructure out;
  out.kind = PlaneKind::Affine;
  out.order = s.order;
  for (std::size_t p = 0; p < s.num_points; ++p) {
    if (class_of_point[p] >= 0) continue;
    remap[p] = static_cast<int>(out.num_points++);
    if (!s.point_labels.empty()) out.point_labels.push_back(s.point_labels[p]);
  }
  out.parallel_classes.assign(removed.size(), {});
  for (std::size_t l = 0; l < s.lines.size(); ++l) {
    if (l == line_index) continue;
    std::vector<int> line;
    int cls = -1;
    for (int p : s.lines[l]) {
      if (remap[p] >= 0) {
        line.push_back(remap[p]);
      } else {
        cls = class_of_point[p];
      }
    }
    out.parallel_classes[cls].push_back(static_cast<int>(out.lines.size()));
    out.lines.push_back(std::move(line));
  }
  return out;
}

IncidenceStructure projective_completion(const IncidenceStructure& affine) {
  if (affine.kind != PlaneKind::Affine || !check_axioms(affine).pass()) {
    throw Error(Errc::InvalidConfig, "completion requires an affine plane");
  }
  auto classes = affine.parallel_classes;
  if (classes.empty()) {
    const auto through = lines_through_points(affine);
    classes = disjoint_classes(affine, line_pair_counts(affine, through));
  }
  IncidenceStructure out;
  out.kind = PlaneKind::Projective;
  out.order = affine.order;
  out.num_points = affine.num_points + classes.size();
  out.point_labels = affine.point_labels;
  if (!out.point_labels.empty()) {
    for (std::size_t c = 0; c < classes.size(); ++c) out.point_labels.push_back("inf" + std::to_string(c));
  }
  out.lines = affine.lines;
  std::vector<int> at_infinity;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const int ideal = static_cast<int>(affine.num_points + c);
    at_infinity.push_back(ideal);
    for (int l : classes[c]) out.lines[l].push_back(ideal);
  }
  out.lines.push_back(std::move(at_infinity));
  return out;
}

CorrespondenceRow correspondence_report(int d) {
  if (d < 2 || d > kMaxPlaneOrder) throw Error(Errc::OutOfRange, "dimension must lie in [2, 64]");
  const BoundsReport bounds = nmax_bounds(d);
  CorrespondenceRow row;
  row.d = d;
  row.prime_power = bounds.is_prime_power;
  row.lower_bound = bounds.lower;
  row.upper_bound = bounds.upper;

  MubSet mubs;
  if (bounds.is_prime_power) {
    const auto [p, e] = bounds.factorization.front();
    const Field field = Field::create(static_cast<int>(p), e);
    const IncidenceStructure plane = pg2(field);
    row.plane_constructed = check_axioms(plane).pass();
    row.plane_points = plane.num_points;
    if (p != 2) {
      mubs = wootters_fields_mubs(field);
    } else if (e == 1) {
      mubs = qubit_mubs();
    } else {
      mubs = factorized_mubs(static_cast<std::size_t>(d));
      row.note = "maximal set in characteristic 2 needs Galois rings; not built by this toolkit";
    }
  } else {
    mubs = factorized_mubs(static_cast<std::size_t>(d));
    row.note = "no prime-power construction; plane of order " + std::to_string(d) + " not constructed";
  }

  const MubReport rep = check_mub_set(mubs);
  row.mub_count = rep.pass ? mubs.count() : 0;
  row.mub_method = std::string(method_name(mubs.method));
  row.maximal_mubs_constructed = rep.pass && mubs.count() == static_cast<std::size_t>(d) + 1;
  if (!bounds.is_prime_power) {
    row.note += row.mub_count >= static_cast<std::size_t>(bounds.lower) ? "; lower bound reached by tensor products"
                                                                         : "; lower bound not reached by tensor products";
  }
  return row;
}

}  // namespace mubkit
