// prolab: exact prolongation computations for projective cones.
//
// Subcommands: variety list|show|check, prolong, secant, vmrt, project,
// battery. Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prolab/algebras.hpp"
#include "prolab/geometry.hpp"
#include "prolab/report.hpp"
#include "prolab/rng.hpp"
#include "prolab/variety_zoo.hpp"

namespace {

using namespace prolab;

int cmd_variety_list() {
  for (const auto& id : zoo_ids()) std::cout << id << "\n";
  return 0;
}

VarietyPresentation load_variety(const std::string& id, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_variety_file(buf.str());
  }
  return build_variety(id);
}

int cmd_variety_show(const std::string& id, const std::string& file, bool as_json,
                     Index samples, std::uint64_t seed) {
  const VarietyPresentation v = load_variety(id, file);
  if (as_json) {
    std::cout << emit_variety_json(v, samples, seed);
    return 0;
  }
  std::cout << "name: " << v.name << "\n";
  std::cout << "ambient_dim: " << v.ambient << "\n";
  std::cout << "quadrics: " << v.quadrics.dim() << "\n";
  if (v.expected.dim_s) std::cout << "dim S: " << *v.expected.dim_s << "\n";
  if (v.expected.dim_sec) std::cout << "dim Sec(S): " << *v.expected.dim_sec << "\n";
  if (v.expected.dim_aut) std::cout << "dim aut: " << *v.expected.dim_aut << "\n";
  if (v.expected.dim_g1) std::cout << "dim g^(1): " << *v.expected.dim_g1 << "\n";
  return 0;
}

int cmd_variety_check(const std::string& id, const std::string& file,
                      std::uint64_t seed) {
  const VarietyPresentation v = load_variety(id, file);
  int failures = 0;
  auto check = [&](const std::string& what, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << v.name << ": " << what << "\n";
    if (!ok) ++failures;
  };

  bool base_on_cone = true;
  for (const auto& q : v.quadrics.forms())
    if (!q.eval(v.base_point).is_zero()) base_on_cone = false;
  check("base point satisfies the quadrics", base_on_cone);

  if (v.sampler) {
    Index count = v.ambient + 10;
    if (v.fixed_sample_count > 0) count = std::min(count, v.fixed_sample_count);
    bool sampled = true, spans = true;
    try {
      const MatQ pts = sample_points(v, count, seed, /*check_spanning=*/false);
      spans = rank(pts) == v.ambient;
    } catch (const std::exception& e) {
      sampled = false;
      std::cout << "       sampler: " << e.what() << "\n";
    }
    check("samples lie on the cone with zero residual", sampled);
    if (count >= v.ambient)
      check("samples span the ambient space", spans);
    else
      std::cout << "[SKIP] " << v.name << ": spanning probe needs at least "
                << v.ambient << " samples\n";
  }

  const Subspace g = cone_aut(v.quadrics);
  check("identity endomorphism lies in cone_aut", g.contains(vec_endo(identity_q(v.ambient))));
  if (v.expected.dim_aut)
    check("cone_aut dimension = " + std::to_string(*v.expected.dim_aut),
          g.dim() == *v.expected.dim_aut);
  if (v.expected.dim_s) {
    const Subspace t = tangent_space(v.quadrics, v.base_point);
    check("tangent dimension at base = dim S + 1",
          t.dim() == *v.expected.dim_s + 1);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prolab: exact prolongations for projective cones"};
  app.require_subcommand(1);

  // variety
  auto* variety = app.add_subcommand("variety", "inspect registered varieties");
  variety->require_subcommand(1);
  auto* vlist = variety->add_subcommand("list", "list registered variety ids");
  std::string vid, vfile;
  bool vjson = false;
  Index vsamples = 0;
  std::uint64_t seed = 0;
  auto* vshow = variety->add_subcommand("show", "print a variety presentation");
  vshow->add_option("id", vid, "variety id, e.g. veronese(2)");
  vshow->add_option("--file", vfile, "load a custom variety from JSON");
  vshow->add_flag("--json", vjson, "emit the JSON document");
  vshow->add_option("--samples", vsamples, "number of sample points to embed");
  vshow->add_option("--seed", seed, "sampler seed");
  auto* vcheck = variety->add_subcommand("check", "run the presentation invariants");
  vcheck->add_option("id", vid, "variety id");
  vcheck->add_option("--file", vfile, "load a custom variety from JSON");
  vcheck->add_option("--seed", seed, "sampler seed");

  // prolong
  auto* prolong_cmd = app.add_subcommand("prolong", "compute g^(k)");
  std::string algebra_id, variety_id, field_name = "exact", route_name = "auto";
  int k = 1;
  std::uint64_t prime = 0;
  prolong_cmd->add_option("--algebra", algebra_id, "named algebra, e.g. gl(3), co(4)");
  prolong_cmd->add_option("--variety", variety_id, "variety id; uses cone_aut(I2)");
  prolong_cmd->add_option("--k", k, "prolongation degree")->default_val(1);
  prolong_cmd->add_option("--field", field_name, "exact or modp")->default_val("exact");
  prolong_cmd->add_option("--prime", prime, "explicit prime for modp");
  prolong_cmd->add_option("--seed", seed, "seed (also derives the modp prime)");
  prolong_cmd->add_option("--route", route_name, "auto, direct or contracted")
      ->default_val("auto");
  std::string lfile;
  Index lrandom = 0;

  // secant
  auto* secant = app.add_subcommand("secant", "Terracini secant dimension");
  int trials = 2;
  secant->add_option("--variety", variety_id, "variety id")->required();
  secant->add_option("--trials", trials, "tangent-pair trials")->default_val(2);
  secant->add_option("--seed", seed, "sampler seed");

  // vmrt
  auto* vmrt = app.add_subcommand("vmrt", "dimension of the variety of lines");
  int draws = 5;
  vmrt->add_option("--variety", variety_id, "variety id")->required();
  vmrt->add_option("--draws", draws, "line draws")->default_val(5);
  vmrt->add_option("--seed", seed, "sampler seed");

  // project
  auto* project = app.add_subcommand("project", "prolongation after projection from L");
  project->add_option("--variety", variety_id, "variety id")->required();
  project->add_option("--l-random", lrandom, "random center of this dimension");
  project->add_option("--l-file", lfile, "JSON file with basis vectors of L");
  project->add_option("--seed", seed, "seed for the random center");

  // battery
  auto* battery = app.add_subcommand("battery", "run registered claim checks");
  std::vector<std::string> select;
  std::string out_file, format = "text";
  bool no_timings = false;
  battery->add_option("--select", select, "groups or case ids (default: all but stretch)");
  battery->add_option("--field", field_name, "exact or modp")->default_val("exact");
  battery->add_option("--seed", seed, "battery seed");
  battery->add_option("--out", out_file, "write the report to this file");
  battery->add_option("--format", format, "json, csv or text")->default_val("json");
  battery->add_flag("--no-timings", no_timings, "omit wall-clock fields (bit-stable output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (vlist->parsed()) return cmd_variety_list();
    if (vshow->parsed()) return cmd_variety_show(vid, vfile, vjson, vsamples, seed);
    if (vcheck->parsed()) return cmd_variety_check(vid, vfile, seed);

    if (prolong_cmd->parsed()) {
      if (algebra_id.empty() == variety_id.empty()) {
        std::cerr << "prolong: give exactly one of --algebra or --variety\n";
        return 2;
      }
      Subspace g = algebra_id.empty() ? cone_aut(build_variety(variety_id).quadrics)
                                      : named_algebra(algebra_id);
      ProlongOptions opts;
      opts.seed = seed;
      opts.prime = prime;
      if (field_name == "exact")
        opts.field = Field::exact;
      else if (field_name == "modp")
        opts.field = Field::modp;
      else {
        std::cerr << "prolong: unknown field '" << field_name << "'\n";
        return 2;
      }
      if (route_name == "auto")
        opts.route = Route::automatic;
      else if (route_name == "direct")
        opts.route = Route::direct;
      else if (route_name == "contracted")
        opts.route = Route::contracted;
      else {
        std::cerr << "prolong: unknown route '" << route_name << "'\n";
        return 2;
      }
      const int n =
          static_cast<int>(std::llround(std::sqrt(static_cast<double>(g.ambient_dim()))));
      const Index unknowns = static_cast<Index>(sym_dim(n, k + 1)) * n;
      if (opts.field == Field::exact && unknowns > opts.route_threshold) {
        std::cerr << "note: " << unknowns
                  << " unknowns exceed the exact-route threshold; switching to modp\n";
        opts.field = Field::modp;
      }
      const ProlongationResult r = prolong(g, k, opts);
      std::cout << "dim g^(" << k << ") = " << r.dim << "\n";
      std::cout << "field: "
                << (r.field == Field::exact ? std::string("exact")
                                            : "modp(" + std::to_string(r.prime) + ")")
                << "\n";
      std::cout << "constraint shape: " << r.constraint_shape.first << " x "
                << r.constraint_shape.second << "\n";
      return 0;
    }

    if (secant->parsed()) {
      const VarietyPresentation v = build_variety(variety_id);
      const SecantReport rep = terracini_secant_dim(v, trials, seed);
      std::cout << "dim Sec(" << v.name << ") = " << rep.dim
                << (rep.certified ? " (two trials agree)" : " (uncertified)") << "\n";
      if (v.expected.dim_sec) {
        const bool ok = rep.dim == *v.expected.dim_sec && rep.certified;
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " expected " << *v.expected.dim_sec
                  << "\n";
        return ok ? 0 : 1;
      }
      return 0;
    }

    if (vmrt->parsed()) {
      const VarietyPresentation v = build_variety(variety_id);
      const VmrtReport rep = vmrt_dimension(v, draws, seed);
      if (!rep.has_lines) {
        std::cout << v.name << ": no lines through the sampled points\n";
        return 0;
      }
      std::cout << "dim VMRT(" << v.name << ") = " << rep.dim << " (" << rep.draws_used
                << " line draws)\n";
      return 0;
    }

    if (project->parsed()) {
      const VarietyPresentation v = build_variety(variety_id);
      Subspace l = Subspace::zero(v.ambient);
      if (!lfile.empty()) {
        std::ifstream in(lfile);
        if (!in) throw std::runtime_error("cannot open " + lfile);
        std::stringstream buf;
        buf << in.rdbuf();
        // The file holds {"vectors": [[...], ...]} with exact fractions.
        auto doc = nlohmann::json::parse(buf.str());
        if (!doc.contains("vectors") || !doc["vectors"].is_array())
          throw std::invalid_argument("l-file: expected {\"vectors\": [[...], ...]}");
        MatQ rows(static_cast<Index>(doc["vectors"].size()), v.ambient);
        Index r = 0;
        for (const auto& vec : doc["vectors"]) {
          if (!vec.is_array() || static_cast<Index>(vec.size()) != v.ambient)
            throw std::invalid_argument("l-file: vector length mismatch");
          for (Index i = 0; i < v.ambient; ++i) {
            const auto& e = vec[static_cast<size_t>(i)];
            rows(r, i) = e.is_string() ? Rational(e.get<std::string>())
                                       : Rational(e.get<long>());
          }
          ++r;
        }
        l = Subspace::span(v.ambient, rows);
      } else if (lrandom > 0) {
        Rng rng(hash_combine(seed, 0x9f0));
        MatQ rows(lrandom, v.ambient);
        for (Index r = 0; r < lrandom; ++r)
          for (Index i = 0; i < v.ambient; ++i) rows(r, i) = rng.small_int(9);
        l = Subspace::span(v.ambient, rows);
      } else {
        std::cerr << "project: give --l-random D or --l-file F\n";
        return 2;
      }
      const Subspace g = cone_aut(v.quadrics);
      const ProlongationResult g1 = prolong(g, 1);
      const KilledProlongation killed = kill_prolongation(g1.basis, l);
      std::cout << "dim L = " << l.dim() << "\n";
      std::cout << "dim g^(1) = " << g1.dim << "\n";
      std::cout << "dim {A in g^(1) : A(L, .) = 0} = " << killed.dim << "\n";
      return 0;
    }

    if (battery->parsed()) {
      Field field;
      if (field_name == "exact")
        field = Field::exact;
      else if (field_name == "modp")
        field = Field::modp;
      else {
        std::cerr << "battery: unknown field '" << field_name << "'\n";
        return 2;
      }
      const BatteryReport report = run_battery(select, field, seed);
      std::string payload;
      if (format == "json")
        payload = emit_report_json(report, !no_timings);
      else if (format == "csv")
        payload = emit_report_csv(report, !no_timings);
      else if (format == "text")
        payload = emit_report_text(report);
      else {
        std::cerr << "battery: unknown format '" << format << "'\n";
        return 2;
      }
      if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) throw std::runtime_error("cannot write " + out_file);
        out << payload;
        std::cout << emit_report_text(report);
      } else {
        std::cout << payload;
      }
      return report.all_pass() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
