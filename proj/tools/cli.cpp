#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mubkit/builder.hpp"
#include "mubkit/checker.hpp"
#include "mubkit/error.hpp"
#include "mubkit/geometry.hpp"
#include "mubkit/gf.hpp"
#include "mubkit/io.hpp"
#include "mubkit/phase.hpp"
#include "mubkit/search.hpp"

namespace mubkit::cli {

namespace {

const std::map<std::string, std::string>& synopses() {
  static const std::map<std::string, std::string> s{
      {"field", "mubkit field --p P --m M [--modulus c0,c1,...,1] [--json] [-o FILE]"},
      {"mub gen", "mubkit mub gen --method {fourier|qubit|clock-shift|wf|tensor} [--p P --m M | --dim D] -o FILE"},
      {"mub verify", "mubkit mub verify FILE [--tol T] [--json]"},
      {"sic verify", "mubkit sic verify FILE [--tol T] [--json]"},
      {"plane gen", "mubkit plane gen --q Q -o FILE"},
      {"plane check", "mubkit plane check FILE [--affinize K] [--dual] [-o FILE] [--json]"},
      {"bounds", "mubkit bounds --dim D"},
      {"phase", "mubkit phase --from FILE -o FILE"},
      {"search",
       "mubkit search --dim D --bases K [--restarts R] [--max-iters N] [--seed S] [--tol T] [--step H] "
       "[--init FILE [--extend]] [--threads N] [-o FILE]"},
      {"correspond", "mubkit correspond --dim D"},
  };
  return s;
}

std::string synopsis_for(const std::vector<std::string>& args) {
  const auto& s = synopses();
  if (args.size() >= 2) {
    if (auto it = s.find(args[0] + " " + args[1]); it != s.end()) return it->second;
  }
  if (!args.empty()) {
    if (auto it = s.find(args[0]); it != s.end()) return it->second;
    std::string joined;
    for (const auto& [key, syn] : s) {
      if (key.rfind(args[0] + " ", 0) == 0) joined += (joined.empty() ? "" : "\n       ") + syn;
    }
    if (!joined.empty()) return joined;
  }
  return "mubkit {field|mub|sic|plane|bounds|phase|search|correspond} ...";
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string poly_string(const std::vector<int>& coeffs) {
  std::string out;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string c = coeffs[i] == 1 && i > 0 ? "" : std::to_string(coeffs[i]);
    if (i == 0) out += std::to_string(coeffs[i]);
    else if (i == 1) out += c + "x";
    else out += c + "x^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_file(path, text);
  }
}

std::vector<int> parse_modulus(const std::string& text) {
  std::vector<int> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coeffs.push_back(std::stoi(item));
  return coeffs;
}

int field_cmd(int p, int m, const std::string& modulus, bool as_json, const std::string& path, std::ostream& out) {
  std::optional<std::vector<int>> mod;
  if (!modulus.empty()) mod = parse_modulus(modulus);
  const Field f = Field::create(p, m, mod);
  if (as_json) {
    emit(path, io::field_to_json(f), out);
    return kExitOk;
  }
  const int d = f.order();
  std::ostringstream s;
  s << "GF(" << p << "^" << m << "), " << d << " elements, modulus " << poly_string(f.modulus()) << "\n";
  s << "elements are indexed by base-" << p << " digits of their coefficients (constant term first)\n\n";
  auto table = [&](const char* title, auto op) {
    s << title << "\n";
    const int width = static_cast<int>(std::to_string(d - 1).size()) + 1;
    s << std::setw(width) << "" << " |";
    for (int b = 0; b < d; ++b) s << std::setw(width) << b;
    s << "\n" << std::string(static_cast<std::size_t>(width + 2 + width * d), '-') << "\n";
    for (int a = 0; a < d; ++a) {
      s << std::setw(width) << a << " |";
      for (int b = 0; b < d; ++b) s << std::setw(width) << op(f.element_at(a), f.element_at(b)).index();
      s << "\n";
    }
    s << "\n";
  };
  table("addition", [](const Element& a, const Element& b) { return a + b; });
  table("multiplication", [](const Element& a, const Element& b) { return a * b; });
  s << "trace\n";
  for (int n = 0; n < d; ++n) s << "  tr(" << poly_string(f.element_at(n).coeffs()) << ") = " << f.trace_at(n) << "\n";
  emit(path, s.str(), out);
  return kExitOk;
}

MubSet generate(const std::string& method, int p, int m, int dim) {
  if (method == "fourier") {
    if (dim < 1) throw Error(Errc::InvalidConfig, "--dim is required for the fourier method");
    return fourier_mubs(static_cast<std::size_t>(dim));
  }
  if (method == "qubit") return qubit_mubs();
  if (method == "clock-shift") {
    if (p < 1) throw Error(Errc::InvalidConfig, "--p is required for the clock-shift method");
    return clock_shift_mubs(p);
  }
  if (method == "wf") {
    if (p < 1) throw Error(Errc::InvalidConfig, "--p is required for the wf method");
    return wootters_fields_mubs(Field::create(p, m));
  }
  if (method == "tensor") {
    if (dim < 1) throw Error(Errc::InvalidConfig, "--dim is required for the tensor method");
    return factorized_mubs(static_cast<std::size_t>(dim));
  }
  throw Error(Errc::InvalidConfig, "unknown method '" + method + "'");
}

int verify_cmd(const std::string& path, double tol, bool as_json, std::ostream& out) {
  const MubSet s = io::mubset_from_json(io::read_file(path));
  const MubReport r = check_mub_set(s, tol);
  if (as_json) {
    out << io::report_to_json(r);
  } else {
    out << "dim " << r.dim << ", " << r.basis_count << " bases, method " << method_name(s.method) << "\n";
    out << "max deviation " << sci(r.max_deviation) << " (tolerance " << sci(tol) << ")\n";
    if (r.exceeds_bound) out << "more than d+1 bases supplied\n";
    for (std::size_t k = 0; k < r.ortho.size(); ++k) {
      if (!r.ortho[k].pass) out << "basis " << k << " not orthonormal: deviation " << sci(r.ortho[k].deviation) << "\n";
    }
    for (const auto& p : r.pairs) {
      if (!p.pass) {
        out << "pair (" << p.i << ", " << p.j << ") fails: deviation " << sci(p.deviation) << " at vectors ("
            << p.worst_a << ", " << p.worst_b << ")\n";
      }
    }
    out << "verdict " << (r.pass ? "pass" : "fail") << "\n";
  }
  return r.pass ? kExitOk : kExitFailed;
}

int sic_cmd(const std::string& path, double tol, bool as_json, std::ostream& out) {
  const auto vectors = io::sic_from_json(io::read_file(path));
  const SicReport r = check_sic_povm(vectors, tol);
  if (as_json) {
    out << io::sic_report_to_json(r);
  } else {
    out << "dim " << r.dim << ", " << r.count << " vectors\n";
    out << "norm deviation " << sci(r.norm_deviation) << ", overlap deviation " << sci(r.overlap_deviation)
        << " at pair (" << r.worst_pair.first << ", " << r.worst_pair.second << ")\n";
    out << "frame deviation " << sci(r.frame_deviation) << " (informational)\n";
    out << "verdict " << (r.pass ? "pass" : "fail") << "\n";
  }
  return r.pass ? kExitOk : kExitFailed;
}

int plane_check_cmd(const std::string& path, std::optional<std::size_t> affinize_at, bool take_dual,
                    const std::string& out_path, bool as_json, std::ostream& out) {
  IncidenceStructure s = io::plane_from_json(io::read_file(path));
  if (take_dual) s = dual(s);
  if (affinize_at) s = affinize(s, *affinize_at);
  const AxiomReport r = check_axioms(s);
  if (!out_path.empty()) io::write_file(out_path, io::plane_to_json(s));
  if (as_json) {
    out << io::axiom_report_to_json(r);
  } else {
    out << plane_kind_name(s.kind) << " plane of order " << s.order << ": " << s.num_points << " points, "
        << s.num_lines() << " lines";
    if (s.kind == PlaneKind::Affine) out << ", " << r.parallel_class_count << " parallel classes";
    out << "\n";
    for (const auto& v : r.violations) {
      out << "violated: " << v.axiom << " (witness " << v.first << ", " << v.second << ")";
      if (!v.detail.empty()) out << ": " << v.detail;
      out << "\n";
    }
    out << "verdict " << (r.pass() ? "pass" : "fail") << "\n";
  }
  return r.pass() ? kExitOk : kExitFailed;
}

int bounds_cmd(long long d, std::ostream& out) {
  const BoundsReport b = nmax_bounds(d);
  out << "d " << b.d << "\nfactorization";
  for (const auto& [p, e] : b.factorization) out << " " << p << "^" << e;
  out << "\nlower " << b.lower << "\nupper " << b.upper << "\nprime_power " << (b.is_prime_power ? "yes" : "no")
      << "\n";
  return kExitOk;
}

int phase_cmd(const std::string& from, const std::string& path, std::ostream& out) {
  const MubSet s = io::mubset_from_json(io::read_file(from));
  const auto ops = mub_phase_operators(s);
  bool all_pass = true;
  for (std::size_t a = 0; a < ops.size(); ++a) {
    const RoundtripReport r = roundtrip_check(ops[a], s.bases[a]);
    all_pass = all_pass && r.pass;
    out << "operator " << a << ": min matched overlap " << std::setprecision(12) << r.min_overlap
        << ", eigenvalue error " << sci(r.max_eigenvalue_error) << ", " << (r.pass ? "pass" : "fail") << "\n";
  }
  emit(path, io::operators_to_json(ops), out);
  return all_pass ? kExitOk : kExitFailed;
}

int correspond_cmd(int d, std::ostream& out) {
  const CorrespondenceRow row = correspondence_report(d);
  out << "d " << row.d << (row.prime_power ? " (prime power)" : " (not a prime power)") << "\n";
  out << "bounds " << row.lower_bound << " <= N_max <= " << row.upper_bound << "\n";
  out << "mubs constructed " << row.mub_count << " via " << row.mub_method
      << (row.maximal_mubs_constructed ? " (maximal, d+1)" : " (not maximal)") << "\n";
  if (row.plane_constructed) {
    out << "projective plane of order " << row.d << " constructed: " << row.plane_points << " points\n";
  } else {
    out << "projective plane of order " << row.d << " not constructed\n";
  }
  if (!row.note.empty()) out << "note " << row.note << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mutually unbiased bases toolkit", "mubkit"};
  app.require_subcommand(1);

  int field_p = 0, field_m = 1;
  std::string field_modulus, field_out;
  bool field_json = false;
  auto* field = app.add_subcommand("field", "Addition, multiplication and trace tables of GF(p^m)");
  field->add_option("--p", field_p, "Characteristic")->required();
  field->add_option("--m", field_m, "Extension degree");
  field->add_option("--modulus", field_modulus, "Monic modulus, constant term first");
  field->add_flag("--json", field_json, "JSON output");
  field->add_option("-o,--output", field_out, "Output file");

  auto* mub = app.add_subcommand("mub", "Construct or verify MUB sets");
  mub->require_subcommand(1);
  std::string gen_method, gen_out;
  int gen_p = 0, gen_m = 1, gen_dim = 0;
  auto* gen = mub->add_subcommand("gen", "Construct a MUB set");
  gen->add_option("--method", gen_method, "fourier|qubit|clock-shift|wf|tensor")
      ->required()
      ->check(CLI::IsMember({"fourier", "qubit", "clock-shift", "wf", "tensor"}));
  gen->add_option("--p", gen_p, "Prime");
  gen->add_option("--m", gen_m, "Extension degree");
  gen->add_option("--dim", gen_dim, "Dimension");
  gen->add_option("-o,--output", gen_out, "Output file")->required();
  std::string verify_file;
  double verify_tol = kDefaultTol;
  bool verify_json = false;
  auto* verify = mub->add_subcommand("verify", "Check a MUB file");
  verify->add_option("file", verify_file)->required();
  verify->add_option("--tol", verify_tol, "Tolerance");
  verify->add_flag("--json", verify_json, "JSON report");

  auto* sic = app.add_subcommand("sic", "SIC-POVM verification");
  sic->require_subcommand(1);
  std::string sic_file;
  double sic_tol = kDefaultTol;
  bool sic_json = false;
  auto* sic_verify = sic->add_subcommand("verify", "Check a SIC-POVM file");
  sic_verify->add_option("file", sic_file)->required();
  sic_verify->add_option("--tol", sic_tol, "Tolerance");
  sic_verify->add_flag("--json", sic_json, "JSON report");

  auto* plane = app.add_subcommand("plane", "Finite projective planes");
  plane->require_subcommand(1);
  int plane_q = 0;
  std::string plane_out;
  auto* plane_gen = plane->add_subcommand("gen", "Build PG(2,q)");
  plane_gen->add_option("--q", plane_q, "Prime-power order")->required();
  plane_gen->add_option("-o,--output", plane_out, "Output file")->required();
  std::string check_file, check_out;
  std::optional<std::size_t> check_affinize;
  bool check_dual = false, check_json = false;
  auto* plane_check = plane->add_subcommand("check", "Check incidence axioms");
  plane_check->add_option("file", check_file)->required();
  plane_check->add_option("--affinize", check_affinize, "Delete this line first");
  plane_check->add_flag("--dual", check_dual, "Check the dual plane");
  plane_check->add_option("-o,--output", check_out, "Write the transformed plane");
  plane_check->add_flag("--json", check_json, "JSON report");

  long long bounds_dim = 0;
  auto* bounds = app.add_subcommand("bounds", "Bounds on the number of MUBs");
  bounds->add_option("--dim", bounds_dim, "Dimension")->required();

  std::string phase_from, phase_out;
  auto* phase = app.add_subcommand("phase", "Phase operators of a MUB set");
  phase->add_option("--from", phase_from, "MUB file")->required();
  phase->add_option("-o,--output", phase_out, "Output file")->required();

  SearchConfig cfg;
  std::string search_init, search_out;
  bool search_extend = false;
  auto* srch = app.add_subcommand("search", "Numerical MUB search");
  srch->add_option("--dim", cfg.dim, "Dimension")->required();
  srch->add_option("--bases", cfg.target_bases, "Number of bases");
  srch->add_option("--restarts", cfg.restarts, "Random restarts");
  srch->add_option("--max-iters", cfg.max_iters, "Iterations per restart");
  srch->add_option("--seed", cfg.seed, "Master seed");
  srch->add_option("--tol", cfg.tolerance, "Success threshold on the residual");
  srch->add_option("--step", cfg.step, "Initial step");
  srch->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  srch->add_option("--init", search_init, "MUB file to start from");
  srch->add_flag("--extend", search_extend, "Hold the --init set fixed and add one basis");
  srch->add_option("-o,--output", search_out, "Report file");

  int corr_dim = 0;
  auto* corr = app.add_subcommand("correspond", "MUB and projective-plane constructions side by side");
  corr->add_option("--dim", corr_dim, "Dimension / order")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nusage: " << synopsis_for(args) << "\n";
    return kExitUsage;
  }

  try {
    if (*field) return field_cmd(field_p, field_m, field_modulus, field_json, field_out, out);
    if (*gen) {
      const MubSet s = generate(gen_method, gen_p, gen_m, gen_dim);
      io::write_file(gen_out, io::mubset_to_json(s));
      out << "wrote " << s.count() << " bases in dimension " << s.dim << " (" << method_name(s.method) << ") to "
          << gen_out << "\n";
      return kExitOk;
    }
    if (*verify) return verify_cmd(verify_file, verify_tol, verify_json, out);
    if (*sic_verify) return sic_cmd(sic_file, sic_tol, sic_json, out);
    if (*plane_gen) {
      const auto factors = factorize(plane_q);
      if (plane_q < 2 || factors.size() != 1) throw Error(Errc::InvalidConfig, "--q must be a prime power");
      const IncidenceStructure s = pg2(Field::create(static_cast<int>(factors[0].first), factors[0].second));
      io::write_file(plane_out, io::plane_to_json(s));
      out << "wrote PG(2," << plane_q << "): " << s.num_points << " points, " << s.num_lines() << " lines to "
          << plane_out << "\n";
      return kExitOk;
    }
    if (*plane_check) return plane_check_cmd(check_file, check_affinize, check_dual, check_out, check_json, out);
    if (*bounds) return bounds_cmd(bounds_dim, out);
    if (*phase) return phase_cmd(phase_from, phase_out, out);
    if (*srch) {
      SearchReport rep;
      if (!search_init.empty()) {
        MubSet init = io::mubset_from_json(io::read_file(search_init));
        if (search_extend) {
          rep = extend_search(init, cfg);
          cfg.target_bases = init.count() + 1;
          cfg.dim = init.dim;
        } else {
          cfg.init = std::move(init);
          rep = search(cfg);
        }
      } else {
        if (search_extend) throw Error(Errc::InvalidConfig, "--extend needs --init");
        rep = search(cfg);
      }
      cfg.init.reset();
      if (!search_out.empty()) io::write_file(search_out, io::search_report_to_json(rep, cfg));
      out << "best residual " << std::setprecision(17) << rep.best_residual << " (restart " << rep.best_restart
          << " of " << rep.residual_history.size() << ")\n";
      out << (rep.success ? "success: residual within tolerance\n"
                          : "no set within tolerance found; this is not evidence of nonexistence\n");
      return rep.success ? kExitOk : kExitFailed;
    }
    if (*corr) return correspond_cmd(corr_dim, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\nusage: " << synopsis_for(args) << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\nusage: " << synopsis_for(args) << "\n";
    return kExitUsage;
  }
  err << "usage: " << synopsis_for(args) << "\n";
  return kExitUsage;
}

}  // namespace mubkit::cli
