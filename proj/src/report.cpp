#include "prolab/report.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <semaphore>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "prolab/algebras.hpp"
#include "prolab/geometry.hpp"
#include "prolab/modp.hpp"
#include "prolab/projection.hpp"
#include "prolab/rng.hpp"
#include "prolab/variety_zoo.hpp"

namespace prolab {

namespace {

using nlohmann::json;

// Shared, lazily built state: presentations, automorphism algebras and first
// prolongations are reused across cases. Everything stored is immutable.
class BatteryContext {
 public:
  const VarietyPresentation& variety(const std::string& id) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = varieties_.find(id);
    if (it == varieties_.end())
      it = varieties_.emplace(id, std::make_shared<VarietyPresentation>(build_variety(id))).first;
    return *it->second;
  }
  const Subspace& aut(const std::string& id) {
    const VarietyPresentation& v = variety(id);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = auts_.find(id);
    if (it == auts_.end())
      it = auts_.emplace(id, std::make_shared<Subspace>(cone_aut(v.quadrics))).first;
    return *it->second;
  }
  const ProlongationResult& g1(const std::string& id) {
    const Subspace& g = aut(id);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = g1s_.find(id);
    if (it == g1s_.end())
      it = g1s_.emplace(id, std::make_shared<ProlongationResult>(prolong(g, 1))).first;
    return *it->second;
  }

 private:
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<VarietyPresentation>> varieties_;
  std::map<std::string, std::shared_ptr<Subspace>> auts_;
  std::map<std::string, std::shared_ptr<ProlongationResult>> g1s_;
};

struct CaseOutcome {
  long computed = 0;
  std::optional<long> expected;
  Index rows = 0, cols = 0;
  std::string note;
};

struct BatteryCase {
  std::string id;
  std::string group;
  std::string citation;
  std::function<CaseOutcome(BatteryContext&, Field, std::uint64_t)> run;
};

const std::vector<std::string> kIhssIds = {
    "quadric(3)", "quadric(4)", "quadric(5)", "quadric(6)", "quadric(7)",
    "segre(2,2)", "segre(2,3)", "segre(3,3)", "veronese(1)", "veronese(2)",
    "veronese(3)", "plucker_gr2(5)", "plucker_gr2(6)"};

ProlongOptions opts_for(Field field, std::uint64_t seed, int which_prime = 0) {
  ProlongOptions o;
  o.field = field;
  o.seed = seed;
  if (field == Field::modp) o.prime = random_prime_62(seed, which_prime);
  return o;
}

CaseOutcome prolong_dim_case(BatteryContext& ctx, const std::string& id, int k,
                             long expected, Field field, std::uint64_t seed) {
  const Subspace& g = ctx.aut(id);
  const ProlongationResult r = prolong(g, k, opts_for(field, seed));
  CaseOutcome out;
  out.computed = r.dim;
  out.expected = expected;
  out.rows = r.constraint_shape.first;
  out.cols = r.constraint_shape.second;
  return out;
}

MatQ random_invertible(Rng& rng, int n) {
  for (;;) {
    MatQ p(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) p(i, j) = rng.small_int(3);
    for (Index i = 0; i < n; ++i) p(i, i) += Rational(1);
    MatQ w = p;
    if (static_cast<Index>(rref_in_place(w).size()) == n) return p;
  }
}

std::vector<BatteryCase> make_cases() {
  std::vector<BatteryCase> cases;

  // Criterion-style dimension cases: first prolongation of the cone
  // automorphism algebra is V* for every minimal-tangent model variety.
  for (const std::string& id : kIhssIds) {
    cases.push_back(
        {"ihss-prolong/" + id, "ihss-prolong",
         "first prolongation of the cone symmetry algebra is V*",
         [id](BatteryContext& ctx, Field field, std::uint64_t seed) {
           const long expect = static_cast<long>(ctx.variety(id).ambient);
           return prolong_dim_case(ctx, id, 1, expect, field, seed);
         }});
    cases.push_back({"k2-vanishing/" + id, "k2-vanishing",
                     "second and higher prolongations vanish",
                     [id](BatteryContext& ctx, Field field, std::uint64_t seed) {
                       return prolong_dim_case(ctx, id, 2, 0, field, seed);
                     }});
  }

  for (const std::string& id :
       {std::string("symp_vmrt(2,2)"), std::string("symp_vmrt(3,2)"),
        std::string("symp_vmrt(2,3)")}) {
    cases.push_back({"z-family/aut/" + id, "z-family",
                     "aut of the projective-bundle cone is (W* x Q) + gl(W) + gl(Q)",
                     [id](BatteryContext& ctx, Field, std::uint64_t) {
                       CaseOutcome out;
                       out.computed = static_cast<long>(ctx.aut(id).dim());
                       out.expected = static_cast<long>(*ctx.variety(id).expected.dim_aut);
                       return out;
                     }});
    cases.push_back({"z-family/g1/" + id, "z-family",
                     "first prolongation of the bundle cone is Sym^2 W*",
                     [id](BatteryContext& ctx, Field field, std::uint64_t seed) {
                       const long expect =
                           static_cast<long>(*ctx.variety(id).expected.dim_g1);
                       return prolong_dim_case(ctx, id, 1, expect, field, seed);
                     }});
  }

  const std::vector<std::pair<std::string, std::string>> section_cases = {
      {"s5_hyperplane", "spinor-section symmetries: C + W x (so(7) + C), g1 = Q*"},
      {"gr25_hyperplane", "odd symplectic Grassmannian symmetries, g1 = Q*"},
      {"segre_hyperplane(3,3)", "Segre hyperplane sections have vanishing g1"}};
  for (const auto& [id, cite] : section_cases) {
    if (id != "segre_hyperplane(3,3)") {
      cases.push_back({"hyperplane-sections/aut/" + id, "hyperplane-sections", cite,
                       [id](BatteryContext& ctx, Field, std::uint64_t) {
                         CaseOutcome out;
                         out.computed = static_cast<long>(ctx.aut(id).dim());
                         out.expected = static_cast<long>(*ctx.variety(id).expected.dim_aut);
                         return out;
                       }});
    }
    cases.push_back({"hyperplane-sections/g1/" + id, "hyperplane-sections", cite,
                     [id](BatteryContext& ctx, Field field, std::uint64_t seed) {
                       const long expect =
                           static_cast<long>(*ctx.variety(id).expected.dim_g1);
                       return prolong_dim_case(ctx, id, 1, expect, field, seed);
                     }});
  }

  for (const std::string& id : zoo_ids()) {
    if (id == "cayley_op2") continue;  // covered by the stretch group
    if (!build_variety(id).expected.dim_sec) continue;
    cases.push_back({"secant-table/" + id, "secant-table",
                     "secant dimension from tangent-pair sampling",
                     [id](BatteryContext& ctx, Field, std::uint64_t seed) {
                       const VarietyPresentation& v = ctx.variety(id);
                       const SecantReport rep = terracini_secant_dim(v, 4, seed);
                       CaseOutcome out;
                       out.computed = rep.dim;
                       out.expected = static_cast<long>(*v.expected.dim_sec);
                       if (!rep.certified) {
                         out.note = "trials disagree";
                         out.computed = -1;
                       }
                       return out;
                     }});
  }
  cases.push_back({"secant-table/cayley_op2", "secant-table",
                   "secant of the Cayley plane is a cubic hypersurface",
                   [](BatteryContext& ctx, Field, std::uint64_t seed) {
                     const VarietyPresentation& v = ctx.variety("cayley_op2");
                     const SecantReport rep = terracini_secant_dim(v, 4, seed);
                     CaseOutcome out;
                     out.computed = rep.certified ? rep.dim : -1;
                     out.expected = 25;
                     return out;
                   }});

  const std::vector<std::pair<std::string, ProjType>> proj_types = {
      {"I", ProjType::I}, {"II", ProjType::II}, {"III", ProjType::III},
      {"Symp", ProjType::Symp}};
  for (const auto& [name, type] : proj_types) {
    cases.push_back(
        {"projection-formulas/type-" + name, "projection-formulas",
         "projected prolongation dimension equals its closed form",
         [type](BatteryContext&, Field, std::uint64_t seed) {
           ProjParams params;  // a=b=3, n=6 (II), k=3, m=2
           ProjParams p = params;
           if (type == ProjType::III) p.n = 4;
           const ProjContext ctx = make_projection_context(type, p);
           CaseOutcome out;
           out.expected = 0;
           long mismatches = 0;
           for (int s = 0; s < 50; ++s) {
             const Index d = 2 + static_cast<Index>(s % 3);
             const Subspace l = random_projection_center(
                 type, p, d, hash_combine(seed, static_cast<std::uint64_t>(s)));
             const ProjectionCheck chk = verify_with_context(ctx, l);
             if (!chk.ok()) {
               ++mismatches;
               if (out.note.empty())
                 out.note = "seed " + std::to_string(s) + ": engine " +
                            std::to_string(chk.engine_dim) + ", model " +
                            std::to_string(chk.model_dim) + ", formula " +
                            std::to_string(chk.formula_dim);
             }
           }
           out.computed = mismatches;
           return out;
         }});
  }

  // The four point-projection families with their matrix models; a drawn
  // center must satisfy the general-position hypothesis (maximal rank), so
  // degenerate draws are skipped deterministically.
  const std::vector<std::tuple<std::string, ProjType, ProjParams>> general_cases = {
      {"veronese(2)", ProjType::III, [] { ProjParams q; q.n = 3; return q; }()},
      {"segre(2,3)", ProjType::I, [] { ProjParams q; q.a = 2; q.b = 3; return q; }()},
      {"symp_vmrt(3,2)", ProjType::Symp, [] { ProjParams q; q.k = 3; q.m = 2; return q; }()},
      {"plucker_gr2(6)", ProjType::II, [] { ProjParams q; q.n = 6; return q; }()}};
  for (const auto& [id, type, params] : general_cases) {
    cases.push_back(
        {"mainprolong-general/" + id, "mainprolong-general",
         "projection from a general point kills the prolongation",
         [id, type, params](BatteryContext& ctx, Field, std::uint64_t seed) {
           const VarietyPresentation& v = ctx.variety(id);
           const ProlongationResult& g1 = ctx.g1(id);
           CaseOutcome out;
           out.expected = 0;
           long bad = 0;
           for (int s = 0; s < 20; ++s) {
             VecQ center;
             for (int attempt = 0; attempt < 64; ++attempt) {
               Rng rng(hash_combine(seed, hash_combine(0x917 + s, 1 + attempt)));
               VecQ cand(v.ambient);
               for (Index i = 0; i < v.ambient; ++i) cand(i) = rng.small_int(9);
               if (max_rank_point(type, params, cand)) {
                 center = cand;
                 break;
               }
             }
             if (center.size() == 0) {
               ++bad;
               out.note = "seed " + std::to_string(s) + ": no general point found";
               continue;
             }
             MatQ row(1, v.ambient);
             row.row(0) = center.transpose();
             const auto killed = kill_prolongation(g1.basis, Subspace::span(v.ambient, row));
             if (killed.dim != 0) {
               ++bad;
               if (out.note.empty()) out.note = "seed " + std::to_string(s);
             }
           }
           out.computed = bad;
           return out;
         }});
  }

  // Extended vanishing checks beyond the timed criteria.
  cases.push_back({"extended-prolong/g1/spinor_s5", "extended-prolong",
                   "first prolongation of the cone symmetry algebra is V*",
                   [](BatteryContext& ctx, Field field, std::uint64_t seed) {
                     return prolong_dim_case(ctx, "spinor_s5", 1, 16, field, seed);
                   }});
  for (const std::string& id :
       {std::string("spinor_s5"), std::string("s5_hyperplane"),
        std::string("gr25_hyperplane"), std::string("symp_vmrt(2,2)"),
        std::string("symp_vmrt(3,2)"), std::string("symp_vmrt(2,3)"),
        std::string("segre_hyperplane(3,3)")}) {
    cases.push_back({"extended-prolong/k2/" + id, "extended-prolong",
                     "second and higher prolongations vanish",
                     [id](BatteryContext& ctx, Field field, std::uint64_t seed) {
                       return prolong_dim_case(ctx, id, 2, 0, field, seed);
                     }});
  }

  cases.push_back(
      {"property-suite/equivariance", "property-suite",
       "prolongation dimension is conjugation-invariant",
       [](BatteryContext& ctx, Field, std::uint64_t seed) {
         CaseOutcome out;
         out.expected = 0;
         long bad = 0;
         const std::vector<std::string> ids = {"quadric(3)", "quadric(4)",
                                               "segre(2,2)", "veronese(1)"};
         for (const auto& id : ids) {
           const Subspace& g = ctx.aut(id);
           const ProlongationResult& base = ctx.g1(id);
           const int n = base.n;
           for (int s = 0; s < 10; ++s) {
             Rng rng(hash_combine(seed, hash_combine(0xe9 + s, n)));
             const MatQ p = random_invertible(rng, n);
             const MatQ p_inv = inverse(p);
             const ProlongationResult conj_res = prolong(conjugate(g, p), 1);
             if (conj_res.dim != base.dim) {
               ++bad;
               continue;
             }
             std::vector<SymMultiMap> moved;
             for (const auto& a : base.basis) moved.push_back(transform(a, p, p_inv));
             if (span_of_maps(moved, n, 2) != span_of_maps(conj_res.basis, n, 2)) ++bad;
           }
         }
         out.computed = bad;
         return out;
       }});

  cases.push_back(
      {"property-suite/lambda-identity", "property-suite",
       "A(a,a) = lambda(a) a and the polarized tangent identity hold exactly",
       [](BatteryContext& ctx, Field, std::uint64_t seed) {
         CaseOutcome out;
         out.expected = 0;
         long bad = 0;
         const std::vector<std::string> ids = {
             "quadric(3)", "quadric(4)", "quadric(5)", "quadric(6)",
             "veronese(1)", "veronese(2)", "segre(2,2)", "segre(2,3)",
             "plucker_gr2(5)", "symp_vmrt(2,2)"};
         for (const auto& id : ids) {
           const VarietyPresentation& v = ctx.variety(id);
           const ProlongationResult& g1 = ctx.g1(id);
           const MatQ samples =
               sample_points(v, v.ambient + 8, hash_combine(seed, 0x5a));
           for (const auto& a : g1.basis) {
             const LambdaReport rep = lambda_of(a, samples, &v.quadrics, 20, seed);
             if (!rep.ok) {
               ++bad;
               if (out.note.empty()) out.note = id + ": " + rep.diagnostic;
             }
           }
         }
         out.computed = bad;
         return out;
       }});

  cases.push_back(
      {"property-suite/lambda-q-star", "property-suite",
       "spinor-section eigen-covectors span Q* and annihilate the W factor",
       [](BatteryContext& ctx, Field, std::uint64_t seed) {
         CaseOutcome out;
         out.expected = 0;
         const VarietyPresentation& v = ctx.variety("s5_hyperplane");
         const ProlongationResult& g1 = ctx.g1("s5_hyperplane");
         const MatQ samples = sample_points(v, v.ambient + 10, hash_combine(seed, 0x5b));
         MatQ lambdas(static_cast<Index>(g1.basis.size()), v.ambient);
         lambdas.setZero();
         long bad = 0;
         for (size_t i = 0; i < g1.basis.size(); ++i) {
           const LambdaReport rep = lambda_of(g1.basis[i], samples, &v.quadrics, 10, seed);
           if (!rep.ok) {
             ++bad;
             continue;
           }
           lambdas.row(static_cast<Index>(i)) = rep.lambda.transpose();
         }
         // The eigen-covectors span a 7-dimensional space (Q*) whose common
         // kernel is the 8-dimensional W factor.
         if (bad == 0) {
           if (rank(lambdas) != 7) ++bad;
           if (kernel(lambdas).rows() != 8) ++bad;
         }
         out.computed = bad;
         return out;
       }});

  cases.push_back(
      {"property-suite/aut-g1-never-1", "property-suite",
       "no nonsingular non-degenerate cone has a 1-dimensional first prolongation",
       [](BatteryContext& ctx, Field field, std::uint64_t seed) {
         CaseOutcome out;
         out.expected = 0;
         long ones = 0;
         for (const std::string& id : zoo_ids()) {
           if (id == "cayley_op2") continue;  // stretch group
           const Subspace& g = ctx.aut(id);
           const ProlongationResult r = prolong(g, 1, opts_for(field, seed));
           if (r.dim == 1) ++ones;
         }
         out.computed = ones;
         return out;
       }});

  cases.push_back({"property-suite/identity-in-aut", "property-suite",
                   "the Euler field lies in every cone symmetry algebra",
                   [](BatteryContext& ctx, Field, std::uint64_t) {
                     CaseOutcome out;
                     out.expected = 0;
                     long bad = 0;
                     for (const std::string& id : zoo_ids()) {
                       if (id == "cayley_op2") continue;
                       const VarietyPresentation& v = ctx.variety(id);
                       const Subspace& g = ctx.aut(id);
                       if (!g.contains(vec_endo(identity_q(v.ambient)))) ++bad;
                     }
                     out.computed = bad;
                     return out;
                   }});

  cases.push_back(
      {"property-suite/modp-vs-exact", "property-suite",
       "modular and exact prolongation dimensions agree",
       [](BatteryContext& ctx, Field, std::uint64_t seed) {
         CaseOutcome out;
         out.expected = 0;
         long bad = 0;
         const std::vector<std::pair<std::string, int>> checks = {
             {"quadric(3)", 1}, {"quadric(3)", 2}, {"quadric(4)", 1},
             {"quadric(5)", 1}, {"segre(2,2)", 1}, {"segre(2,2)", 2},
             {"veronese(1)", 1}, {"veronese(2)", 1}};
         for (const auto& [id, k] : checks) {
           const Subspace& g = ctx.aut(id);
           const Index exact_dim = prolong(g, k, opts_for(Field::exact, seed)).dim;
           const Index p1 = prolong(g, k, opts_for(Field::modp, seed, 0)).dim;
           const Index p2 = prolong(g, k, opts_for(Field::modp, seed, 1)).dim;
           if (p1 != exact_dim || p2 != exact_dim) ++bad;
         }
         out.computed = bad;
         return out;
       }});

  cases.push_back(
      {"stretch-op2/g1-modp", "stretch-op2",
       "Cayley-plane first prolongation has dimension 27 (two primes)",
       [](BatteryContext& ctx, Field, std::uint64_t seed) {
         const Subspace& g = ctx.aut("cayley_op2");
         const ProlongationResult r1 = prolong(g, 1, opts_for(Field::modp, seed, 0));
         const ProlongationResult r2 = prolong(g, 1, opts_for(Field::modp, seed, 1));
         // The contracted system is small enough to also verify exactly.
         const ProlongationResult exact = prolong(g, 1, opts_for(Field::exact, seed));
         CaseOutcome out;
         out.expected = 27;
         out.computed = (r1.dim == r2.dim && r2.dim == exact.dim) ? r1.dim : -1;
         out.rows = r1.constraint_shape.first;
         out.cols = r1.constraint_shape.second;
         if (r1.dim != exact.dim)
           out.note = "modular " + std::to_string(r1.dim) + " vs exact " +
                      std::to_string(exact.dim);
         return out;
       }});
  cases.push_back({"stretch-op2/identity-in-aut", "stretch-op2",
                   "the Euler field lies in the Cayley cone symmetry algebra",
                   [](BatteryContext& ctx, Field, std::uint64_t) {
                     CaseOutcome out;
                     out.expected = 0;
                     const Subspace& g = ctx.aut("cayley_op2");
                     out.computed = g.contains(vec_endo(identity_q(27))) ? 0 : 1;
                     return out;
                   }});

  return cases;
}

const std::vector<BatteryCase>& all_cases() {
  static const std::vector<BatteryCase> cases = make_cases();
  return cases;
}

}  // namespace

std::vector<std::string> battery_groups() {
  std::vector<std::string> groups;
  for (const auto& c : all_cases())
    if (std::find(groups.begin(), groups.end(), c.group) == groups.end())
      groups.push_back(c.group);
  return groups;
}

std::vector<std::string> battery_case_ids() {
  std::vector<std::string> ids;
  for (const auto& c : all_cases()) ids.push_back(c.id);
  return ids;
}

BatteryReport run_battery(const std::vector<std::string>& selection, Field field,
                          std::uint64_t seed) {
  const auto& cases = all_cases();
  std::vector<const BatteryCase*> selected;
  if (selection.empty()) {
    for (const auto& c : cases)
      if (c.group != "stretch-op2") selected.push_back(&c);
  } else {
    for (const auto& want : selection) {
      if (want == "empty") continue;  // reserved: select nothing
      bool found = false;
      for (const auto& c : cases) {
        if (c.group == want || c.id == want) {
          selected.push_back(&c);
          found = true;
        }
      }
      if (!found) throw std::invalid_argument("unknown battery selection '" + want + "'");
    }
  }
  std::sort(selected.begin(), selected.end(),
            [](const BatteryCase* a, const BatteryCase* b) { return a->id < b->id; });
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  BatteryReport report;
  report.command = "battery";
  report.seed = seed;
  report.field = field == Field::exact
                     ? "exact"
                     : "modp(" + std::to_string(random_prime_62(seed, 0)) + ")";

  BatteryContext ctx;
  // Cases run concurrently but bounded; results are order-independent and
  // sorted by id below.
  static std::counting_semaphore<16> slots(4);
  std::vector<std::future<CaseResult>> futures;
  futures.reserve(selected.size());
  for (const BatteryCase* c : selected) {
    futures.push_back(std::async(std::launch::async, [c, &ctx, field, seed]() {
      slots.acquire();
      struct Release {
        std::counting_semaphore<16>& s;
        ~Release() { s.release(); }
      } release{slots};
      CaseResult res;
      res.id = c->id;
      res.citation = c->citation;
      const auto start = std::chrono::steady_clock::now();
      try {
        const CaseOutcome out = c->run(ctx, field, seed);
        res.computed = out.computed;
        res.expected = out.expected;
        res.constraint_rows = out.rows;
        res.constraint_cols = out.cols;
        res.note = out.note;
        res.pass = out.expected.has_value() ? out.computed == *out.expected : true;
      } catch (const std::exception& e) {
        res.pass = false;
        res.computed = -1;
        res.note = std::string("exception: ") + e.what();
      }
      const auto stop = std::chrono::steady_clock::now();
      res.wall_ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
      return res;
    }));
  }
  for (auto& f : futures) report.cases.push_back(f.get());
  std::sort(report.cases.begin(), report.cases.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
  for (const auto& c : report.cases)
    c.pass ? ++report.passed : ++report.failed;
  return report;
}

// ---------------------------------------------------------------------------
// Emission and parsing

std::string emit_report_json(const BatteryReport& report, bool include_timings) {
  json j;
  j["schema"] = report.schema;
  j["command"] = report.command;
  j["seed"] = report.seed;
  j["field"] = report.field;
  j["cases"] = json::array();
  for (const auto& c : report.cases) {
    json cj;
    cj["id"] = c.id;
    cj["citation"] = c.citation;
    cj["computed"] = c.computed;
    if (c.expected) cj["expected"] = *c.expected;
    cj["pass"] = c.pass;
    if (include_timings) cj["wall_ms"] = c.wall_ms;
    cj["constraint_rows"] = c.constraint_rows;
    cj["constraint_cols"] = c.constraint_cols;
    if (!c.note.empty()) cj["note"] = c.note;
    j["cases"].push_back(cj);
  }
  j["summary"] = {{"total", report.cases.size()},
                  {"passed", report.passed},
                  {"failed", report.failed}};
  return j.dump(2) + "\n";
}

std::string emit_report_csv(const BatteryReport& report, bool include_timings) {
  std::ostringstream os;
  os << "id,citation,computed,expected,pass,constraint_rows,constraint_cols";
  if (include_timings) os << ",wall_ms";
  os << "\n";
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += "\"\"";
      out += ch;
    }
    return out + "\"";
  };
  for (const auto& c : report.cases) {
    os << quote(c.id) << ',' << quote(c.citation) << ',' << c.computed << ',';
    if (c.expected) os << *c.expected;
    os << ',' << (c.pass ? "true" : "false") << ',' << c.constraint_rows << ','
       << c.constraint_cols;
    if (include_timings) os << ',' << c.wall_ms;
    os << "\n";
  }
  return os.str();
}

std::string emit_report_text(const BatteryReport& report) {
  std::ostringstream os;
  os << "battery seed=" << report.seed << " field=" << report.field << "\n";
  for (const auto& c : report.cases) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ": computed " << c.computed;
    if (c.expected) os << ", expected " << *c.expected;
    if (!c.note.empty()) os << " (" << c.note << ")";
    os << "\n";
  }
  os << report.passed << " passed, " << report.failed << " failed\n";
  return os.str();
}

BatteryReport parse_report_json(const std::string& bytes) {
  json j = json::parse(bytes);
  if (!j.contains("schema") || j["schema"] != kReportSchema)
    throw std::invalid_argument("report: bad or missing schema");
  BatteryReport r;
  r.command = j.value("command", "");
  r.seed = j.value("seed", std::uint64_t{0});
  r.field = j.value("field", "exact");
  for (const auto& cj : j.at("cases")) {
    CaseResult c;
    c.id = cj.at("id").get<std::string>();
    c.citation = cj.value("citation", "");
    c.computed = cj.at("computed").get<long>();
    if (cj.contains("expected")) c.expected = cj["expected"].get<long>();
    c.pass = cj.at("pass").get<bool>();
    c.wall_ms = cj.value("wall_ms", 0.0);
    c.constraint_rows = cj.value("constraint_rows", 0);
    c.constraint_cols = cj.value("constraint_cols", 0);
    c.note = cj.value("note", "");
    r.cases.push_back(c);
  }
  for (const auto& c : r.cases) c.pass ? ++r.passed : ++r.failed;
  return r;
}

namespace {

Rational parse_fraction(const json& v, const std::string& path) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return Rational(v.get<std::string>());
    if (v.is_array() && v.size() == 2 && v[0].is_number_integer() &&
        v[1].is_number_integer()) {
      const long den = v[1].get<long>();
      if (den == 0) throw std::domain_error("zero denominator");
      return Rational(v[0].get<long>(), den);
    }
  } catch (const std::exception& e) {
    throw std::invalid_argument("variety file: bad fraction at " + path + ": " + e.what());
  }
  throw std::invalid_argument("variety file: bad fraction at " + path);
}

}  // namespace

VarietyPresentation parse_variety_file(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("variety file: invalid JSON: ") + e.what());
  }
  if (!j.contains("schema") || j["schema"] != kVarietySchema)
    throw std::invalid_argument("variety file: missing or unsupported schema (want " +
                                std::string(kVarietySchema) + ")");
  if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer())
    throw std::invalid_argument("variety file: ambient_dim must be an integer");
  const Index n = j["ambient_dim"].get<Index>();
  if (n < 1) throw std::invalid_argument("variety file: ambient_dim must be >= 1");

  VarietyPresentation v;
  v.name = j.value("name", "custom");
  v.ambient = n;

  std::vector<QuadraticForm> forms;
  if (!j.contains("quadrics") || !j["quadrics"].is_array())
    throw std::invalid_argument("variety file: quadrics must be an array");
  Index qi = 0;
  for (const auto& qj : j["quadrics"]) {
    const std::string qpath = "quadrics[" + std::to_string(qi) + "]";
    if (!qj.is_array())
      throw std::invalid_argument("variety file: " + qpath + " must be an array of triples");
    MatQ q(n, n);
    q.setZero();
    Index ei = 0;
    for (const auto& ej : qj) {
      const std::string epath = qpath + "[" + std::to_string(ei) + "]";
      if (!ej.is_array() || ej.size() < 3)
        throw std::invalid_argument("variety file: " + epath + " must be [i, j, num(, den)]");
      const Index a = ej[0].get<Index>(), b = ej[1].get<Index>();
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw std::invalid_argument("variety file: index out of range at " + epath);
      Rational val;
      if (ej.size() == 4) {
        json frac = json::array({ej[2], ej[3]});
        val = parse_fraction(frac, epath);
      } else {
        val = parse_fraction(ej[2], epath);
      }
      q(a, b) = val;
      q(b, a) = val;
      ++ei;
    }
    forms.emplace_back(std::move(q));
    ++qi;
  }
  v.quadrics = QuadraticIdeal(n, forms);

  if (!j.contains("base_point") || !j["base_point"].is_array() ||
      static_cast<Index>(j["base_point"].size()) != n)
    throw std::invalid_argument("variety file: base_point must be an array of length ambient_dim");
  v.base_point = VecQ(n);
  for (Index i = 0; i < n; ++i)
    v.base_point(i) =
        parse_fraction(j["base_point"][static_cast<size_t>(i)],
                       "base_point[" + std::to_string(i) + "]");
  for (const auto& q : v.quadrics.forms())
    if (!q.eval(v.base_point).is_zero())
      throw std::invalid_argument("variety file: base_point does not satisfy the quadrics");

  if (j.contains("samples")) {
    if (!j["samples"].is_array())
      throw std::invalid_argument("variety file: samples must be an array");
    auto pts = std::make_shared<std::vector<VecQ>>();
    Index si = 0;
    for (const auto& sj : j["samples"]) {
      const std::string spath = "samples[" + std::to_string(si) + "]";
      if (!sj.is_array() || static_cast<Index>(sj.size()) != n)
        throw std::invalid_argument("variety file: " + spath + " must have length ambient_dim");
      VecQ p(n);
      for (Index i = 0; i < n; ++i)
        p(i) = parse_fraction(sj[static_cast<size_t>(i)],
                              spath + "[" + std::to_string(i) + "]");
      for (const auto& q : v.quadrics.forms())
        if (!q.eval(p).is_zero())
          throw std::invalid_argument("variety file: " + spath + " is off the cone");
      pts->push_back(std::move(p));
      ++si;
    }
    if (!pts->empty()) {
      v.fixed_sample_count = static_cast<Index>(pts->size());
      v.sampler = [pts](std::uint64_t, std::uint64_t index) {
        return (*pts)[static_cast<size_t>(index % pts->size())];
      };
    }
  }

  if (j.contains("expected")) {
    const auto& e = j["expected"];
    if (e.contains("dim_s")) v.expected.dim_s = e["dim_s"].get<Index>();
    if (e.contains("dim_sec")) v.expected.dim_sec = e["dim_sec"].get<Index>();
    if (e.contains("dim_aut")) v.expected.dim_aut = e["dim_aut"].get<Index>();
    if (e.contains("dim_g1")) v.expected.dim_g1 = e["dim_g1"].get<Index>();
  }
  return v;
}

std::string emit_variety_json(const VarietyPresentation& v, Index sample_count,
                              std::uint64_t seed) {
  json j;
  j["schema"] = kVarietySchema;
  j["name"] = v.name;
  j["ambient_dim"] = v.ambient;
  j["quadrics"] = json::array();
  auto frac = [](const Rational& r) -> json {
    if (r.is_integer()) {
      try {
        return json(r.num_long());
      } catch (const std::overflow_error&) {
        return json(r.str());
      }
    }
    return json(r.str());
  };
  for (const auto& q : v.quadrics.forms()) {
    json triples = json::array();
    const MatQ& m = q.matrix();
    for (Index a = 0; a < v.ambient; ++a)
      for (Index b = a; b < v.ambient; ++b)
        if (!m(a, b).is_zero()) triples.push_back(json::array({a, b, frac(m(a, b))}));
    j["quadrics"].push_back(triples);
  }
  j["base_point"] = json::array();
  for (Index i = 0; i < v.ambient; ++i) j["base_point"].push_back(frac(v.base_point(i)));
  if (sample_count > 0) {
    const MatQ pts = sample_points(v, sample_count, seed, /*check_spanning=*/false);
    j["samples"] = json::array();
    for (Index r = 0; r < pts.rows(); ++r) {
      json row = json::array();
      for (Index c = 0; c < v.ambient; ++c) row.push_back(frac(pts(r, c)));
      j["samples"].push_back(row);
    }
  }
  json e;
  if (v.expected.dim_s) e["dim_s"] = *v.expected.dim_s;
  if (v.expected.dim_sec) e["dim_sec"] = *v.expected.dim_sec;
  if (v.expected.dim_aut) e["dim_aut"] = *v.expected.dim_aut;
  if (v.expected.dim_g1) e["dim_g1"] = *v.expected.dim_g1;
  if (!e.empty()) j["expected"] = e;
  return j.dump(2) + "\n";
}

}  // namespace prolab
