// Command-line front end: every library module exposed as a subcommand with
// machine-readable JSON on stdout and a human summary on stderr.
//
// Exit codes: 0 all checks passed, 1 an internal invariant failed (the
// failing check is named), 2 domain/usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include "xcc/bounds.hpp"
#include "xcc/graphs.hpp"
#include "xcc/krawtchouk.hpp"
#include "xcc/linopt.hpp"
#include "xcc/orthrep.hpp"
#include "xcc/protocols.hpp"
#include "xcc/qsim.hpp"
#include "xcc/theta.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <thread>

using json = nlohmann::ordered_json;
using namespace xcc;

namespace {

constexpr const char* kSchemaVersion = "1";

// floats are emitted with 12 significant digits
double sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string rat(const Rational& r) { return rational_to_string(r); }

Word parse_hex(const std::string& s) {
  return std::stoull(s, nullptr, 16);
}

void emit_csv(const json& result, std::ostream& os) {
  if (result.contains("rows") && result["rows"].is_array() && !result["rows"].empty()) {
    const auto& rows = result["rows"];
    std::vector<std::string> cols;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) cols.push_back(it.key());
    for (size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
    os << "\n";
    for (const auto& row : rows) {
      for (size_t c = 0; c < cols.size(); ++c) {
        if (c) os << ",";
        const auto& v = row.at(cols[c]);
        if (v.is_string())
          os << v.get<std::string>();
        else
          os << v.dump();
      }
      os << "\n";
    }
    return;
  }
  for (auto it = result.begin(); it != result.end(); ++it) {
    if (it.value().is_primitive()) os << it.key() << "," << it.value().dump() << "\n";
  }
}

// deterministic parallel map over [0, count): results merged in index order
template <typename F>
void parallel_for(int count, int threads, F&& body) {
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  for (auto& th : pool) th.join();
}

json branches_json(const ProtocolRun& run) {
  json arr = json::array();
  for (const auto& b : run.branch_log)
    arr.push_back({{"id", b.id},
                   {"probability", sig12(b.probability)},
                   {"outcome", b.outcome},
                   {"correct", b.correct}});
  return arr;
}

json run_json(const ProtocolRun& run, bool include_branches) {
  json j{{"protocol", run.protocol}, {"n", run.n},         {"d", run.d},
         {"outcome", run.outcome},   {"rounds", run.rounds}, {"qubits_sent", run.qubits_sent},
         {"cbits_sent", run.cbits_sent}, {"pass", run.pass}};
  if (include_branches) j["branches"] = branches_json(run);
  return j;
}

struct SweepStats {
  long runs = 0;
  long failures = 0;
  void absorb(const ProtocolRun& r) {
    ++runs;
    if (!r.pass) ++failures;
  }
};

std::vector<Word> weight_words(int n, int d) {
  std::vector<Word> out;
  for (Word w = 0; w < (Word{1} << n); ++w)
    if (__builtin_popcountll(w) == d) out.push_back(w);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "xcc: exact communication-complexity toolkit over Hamming graphs\n"
      "Spectra via Krawtchouk polynomials, theta certificates, exact-search\n"
      "equality and list protocols simulated to amplitude level, the\n"
      "round-collapse and quantized one-round compilations, and the exact\n"
      "rational distance-distribution LP."};
  app.require_subcommand(1);
  app.fallthrough(true);

  bool csv = false;
  app.add_flag("--csv", csv, "CSV on stdout instead of JSON");
  bool json_flag = true;
  app.add_flag("--json,!--no-json", json_flag, "JSON on stdout (default)");

  std::function<json()> runner;
  std::string command_line;
  for (int i = 1; i < argc; ++i) command_line += std::string(i > 1 ? " " : "") + argv[i];

  // ---- spectrum ----
  {
    auto* cmd = app.add_subcommand(
        "spectrum", "Eigenvalues of the distance-d graph on n-bit strings, exact with "
                    "multiplicities; checks total multiplicity, zero trace and the degree "
                    "eigenvalue");
    auto n = std::make_shared<int>(4);
    auto d = std::make_shared<int>(2);
    cmd->add_option("--n", *n, "string length")->required();
    cmd->add_option("--d", *d, "distance")->required();
    cmd->callback([=, &runner] {
      runner = [=]() -> json {
        const HammingSpectrum sp = spectrum(*n, *d);
        json vals = json::array();
        for (const auto& e : sp.values)
          vals.push_back(
              {{"x", e.x}, {"eigenvalue", rat(e.eigenvalue)}, {"multiplicity", rat(e.multiplicity)}});
        return json{{"lambda_min", rat(sp.lambda_min)},
                    {"lambda_max", rat(sp.lambda_max)},
                    {"values", vals},
                    {"pass", true}};
      };
    });
  }

  // ---- theta ----
  {
    auto* cmd = app.add_subcommand(
        "theta", "Theta of the complement of the distance-d graph by the closed eigenvalue "
                 "formula, cross-checked against the transitive-graph formula");
    auto n = std::make_shared<int>(4);
    auto d = std::make_shared<int>(2);
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--d", *d)->required();
    cmd->callback([=, &runner] {
      runner = [=]() -> json {
        const Rational exact = theta_complement_hamming_exact(*n, *d);
        const HammingSpectrum sp = spectrum(*n, *d);
        const double via_transitive =
            theta_transitive(sp.lambda_max.get_d(), sp.lambda_min.get_d());
        const bool consistent = std::abs(exact.get_d() - via_transitive) <= 1e-8;
        return json{{"theta_complement", rat(exact)},
                    {"theta_complement_float", sig12(exact.get_d())},
                    {"via_transitive_formula", sig12(via_transitive)},
                    {"consistent", consistent},
                    {"pass", consistent}};
      };
    });
  }

  // ---- root ----
  {
    auto* cmd = app.add_subcommand(
        "root", "Smallest root of the degree-d polynomial: tridiagonal eigenvalue value, "
                "the closed interval bound, and the exact integer sign-change bracket");
    auto n = std::make_shared<int>(8);
    auto d = std::make_shared<int>(2);
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--d", *d)->required();
    cmd->callback([=, &runner] {
      runner = [=]() -> json {
        const double root = smallest_root(*n, *d);
        const auto [a, b] = smallest_root_bracket(*n, *d);
        json j{{"smallest_root", sig12(root)}, {"bracket", json::array({a, b})}};
        bool pass = root >= a - 1e-8 && root <= b + 1e-8;
        if (2 * *d < *n) {
          const auto [lo, hi] = root_interval(*n, *d);
          j["interval"] = json::array({sig12(lo), sig12(hi)});
          pass = pass && root >= lo - 1e-8 && root <= hi + 1e-8;
        }
        j["pass"] = pass;
        return j;
      };
    });
  }

  // ---- bound-xi ----
  {
    auto* cmd = app.add_subcommand(
        "bound-xi", "Lower bound on the orthogonal rank of the distance-d graph: the "
                    "binomial-ratio bound in bits plus the asymptotic rate, and the "
                    "smallest-eigenvalue magnitude bound checked exactly");
    auto n = std::make_shared<int>(8);
    auto d = std::make_shared<int>(2);
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--d", *d)->required();
    cmd->callback([=, &runner] {
      runner = [=]() -> json {
        const XiBoundReport r = xi_lower_bound(*n, *d);
        const LambdaMinCheck c = lambda_min_bound_check(*n, *d);
        return json{{"log2_xi_lower", sig12(r.log2_bound)},
                    {"rate", sig12(r.rate)},
                    {"lambda_min", rat(c.lambda_min)},
                    {"lambda_min_bound", sig12(c.bound)},
                    {"lambda_min_bound_holds_exactly", c.holds},
                    {"pass", c.holds && r.log2_bound > 0.0}};
      };
    });
  }

  // ---- lp-theta-prime ----
  {
    auto* cmd = app.add_subcommand(
        "lp-theta-prime", "Exact rational optimum of the distance-distribution LP for the "
                          "far-half graph complement; certified and compared against 2n");
    auto n = std::make_shared<int>(8);
    auto degree_one = std::make_shared<bool>(false);
    auto export_path = std::make_shared<std::string>();
    cmd->add_option("--n", *n)->required();
    cmd->add_flag("--degree-one", *degree_one, "solve the degree-1-only relaxation instead");
    cmd->add_option("--export", *export_path, "write the LP in text form to a file");
    cmd->callback([=, &runner] {
      runner = [=]() -> json {
        if (!export_path->empty()) {
          std::ofstream out(*export_path);
          out << lp_to_text(delsarte_problem(*n));
        }
        if (*degree_one) {
          const auto sol = lp_solve(delsarte_relaxed_problem(*n, {1}));
          const char* status = sol.status == LpStatus::optimal     ? "optimal"
                               : sol.status == LpStatus::unbounded ? "unbounded"
                                                                   : "infeasible";
          return json{{"relaxation", "degree-1"},
                      {"status", status},
                      {"certified", sol.certified},
                      {"dominates_full_lp", sol.status == LpStatus::unbounded},
                      {"pass", sol.certified}};
        }
        const DelsarteResult res = delsarte_theta_prime(*n);
        json assign = json::array();
        for (const auto& a : res.solution.assignment) assign.push_back(rat(a));
        return json{{"optimum", rat(res.solution.value)},
                    {"optimum_float", sig12(res.solution.value.get_d())},
                    {"two_n", 2 * *n},
                    {"within_2n", res.within_bound},
                    {"certified", res.solution.certified},
                    {"pivots", res.solution.pivots},
                    {"assignment", assign},
                    {"pass", res.within_bound && res.solution.certified}};
      };
    });
  }

  // ---- rep ----
  {
    auto* cmd = app.add_subcommand(
        "rep", "Orthonormal representation constructors and the orthogonality checker");
    cmd->require_subcommand(1);
    auto n = std::make_shared<int>(4);
    auto ell = std::make_shared<int>(0);
    auto tol = std::make_shared<double>(1e-9);
    auto out_path = std::make_shared<std::string>();

    auto* fourier = cmd->add_subcommand(
        "fourier", "sign-vector map, dimension n, valid at distance n/2");
    fourier->add_option("--n", *n)->required();
    fourier->add_option("--tol", *tol);
    fourier->add_option("--out", *out_path, "export the vectors as JSON");
    fourier->callback([=, &runner] {
      runner = [=]() -> json {
        const OrthRep rep = fourier_rep(*n);
        const auto rc = check(rep, hamming_graph(*n, *n / 2), *tol);
        if (!out_path->empty()) std::ofstream(*out_path) << rep_to_json(rep);
        return json{{"kind", "fourier"},
                    {"dimension", rep.dimension},
                    {"max_norm_defect", sig12(rc.max_norm_defect)},
                    {"max_edge_inner_product", sig12(rc.max_edge_inner_product)},
                    {"pass", rc.pass}};
      };
    });

    auto* padded = cmd->add_subcommand(
        "padded", "basis prefix tensor sign-vector suffix, valid at distance n/2 - ell");
    padded->add_option("--n", *n)->required();
    padded->add_option("--ell", *ell)->required();
    padded->add_option("--tol", *tol);
    padded->add_option("--out", *out_path);
    padded->callback([=, &runner] {
      runner = [=]() -> json {
        const OrthRep rep = padded_rep(*n, *ell);
        const auto rc = check(rep, hamming_graph(*n, *n / 2 - *ell), *tol);
        if (!out_path->empty()) std::ofstream(*out_path) << rep_to_json(rep);
        return json{{"kind", "padded"},
                    {"dimension", rep.dimension},
                    {"max_norm_defect", sig12(rc.max_norm_defect)},
                    {"max_edge_inner_product", sig12(rc.max_edge_inner_product)},
                    {"pass", rc.pass}};
      };
    });

    auto* gk = cmd->add_subcommand(
        "gk-poly", "multilinear product polynomial for the far-half graph; exact "
                   "orthogonality and the monomial-count bounds");
    gk->add_option("--n", *n)->required();
    gk->add_option("--tol", *tol);
    gk->callback([=, &runner] {
      runner = [=]() -> json {
        const GkPolyRep rep = gk_poly_rep(*n);
        const Rational defect = rep.max_edge_defect_exact();
        json j{{"kind", "gk-poly"},
               {"dimension", rep.mon_count},
               {"mon_count", rep.mon_count},
               {"exact_defect", rat(defect)},
               {"entropy_dim_bound", sig12(rep.entropy_dim_bound)},
               {"binomial_dim_bound", rat(rep.binomial_dim_bound)},
               {"within_entropy_bound", rep.within_entropy_bound},
               {"within_binomial_bound", rep.within_binomial_bound}};
        bool pass = defect == 0;
        if (*n <= 8) {
          const auto rc = check(rep.to_orthrep(), gk_graph(*n), *tol);
          j["max_norm_defect"] = sig12(rc.max_norm_defect);
          j["max_edge_inner_product"] = sig12(rc.max_edge_inner_product);
          pass = pass && rc.pass;
        }
        j["pass"] = pass;
        return j;
      };
    });

    auto* chk = cmd->add_subcommand("check", "re-run the checker for a named constructor");
    auto kind = std::make_shared<std::string>("fourier");
    chk->add_option("--kind", *kind, "fourier | padded | gk-poly")->required();
    chk->add_option("--n", *n)->required();
    chk->add_option("--ell", *ell);
    chk->add_option("--tol", *tol);
    chk->callback([=, &runner] {
      runner = [=]() -> json {
        OrthRep rep;
        Graph g;
        if (*kind == "fourier") {
          rep = fourier_rep(*n);
          g = hamming_graph(*n, *n / 2);
        } else if (*kind == "padded") {
          rep = padded_rep(*n, *ell);
          g = hamming_graph(*n, *n / 2 - *ell);
        } else if (*kind == "gk-poly") {
          rep = gk_poly_rep(*n).to_orthrep();
          g = gk_graph(*n);
        } else {
          throw std::domain_error("rep check: unknown kind " + *kind);
        }
        const auto rc = check(rep, g, *tol);
        return json{{"kind", *kind},
                    {"dimension", rep.dimension},
                    {"max_norm_defect", sig12(rc.max_norm_defect)},
                    {"max_edge_inner_product", sig12(rc.max_edge_inner_product)},
                    {"pass", rc.pass}};
      };
    });
  }

  // ---- protocol ----
  {
    auto* cmd = app.add_subcommand("protocol", "Run a protocol or an input sweep");
    cmd->require_subcommand(1);
    auto n = std::make_shared<int>(8);
    auto d = std::make_shared<int>(0);
    auto alpha = std::make_shared<double>(0.0);
    auto xs = std::make_shared<std::string>();
    auto ys = std::make_shared<std::string>();
    auto sweep = std::make_shared<std::string>();
    auto seed = std::make_shared<Word>(12345);
    auto count = std::make_shared<int>(200);
    auto full = std::make_shared<bool>(false);
    auto with_branches = std::make_shared<bool>(false);

    auto add_common = [&](CLI::App* sub, bool needs_d) {
      sub->add_option("--n", *n)->required();
      if (needs_d) sub->add_option("--d", *d);
      sub->add_option("--alpha", *alpha, "distance fraction; alternative to --d");
      sub->add_option("--x", *xs, "Alice input, hex");
      sub->add_option("--y", *ys, "Bob input, hex");
      sub->add_option("--sweep", *sweep, "classes | all | random");
      sub->add_option("--seed", *seed, "seed for randomized sweeps");
      sub->add_option("--count", *count, "random sweep size");
      sub->add_flag("--full", *full, "force full enumeration instead of class reduction");
      sub->add_flag("--branches", *with_branches, "include the per-branch log");
    };

    auto eq_sweep = [=](const std::function<ProtocolRun(Word, Word)>& runproto, int nn,
                        int dd) -> json {
      SweepStats stats;
      json sample;
      if (!sweep->empty()) {
        if (*sweep == "classes" && !*full) {
          // shift-invariance: fix Alice's input at zero
          auto r0 = runproto(0, 0);
          stats.absorb(r0);
          sample = run_json(r0, false);
          for (Word w : weight_words(nn, dd)) stats.absorb(runproto(0, w));
        } else if (*sweep == "all" || *full) {
          if (nn > 12) throw std::domain_error("protocol sweep all: capped at n = 12");
          for (Word x = 0; x < (Word{1} << nn); ++x) {
            auto r = runproto(x, x);
            stats.absorb(r);
            if (x == 0) sample = run_json(r, false);
            for (Word w : weight_words(nn, dd)) stats.absorb(runproto(x, x ^ w));
          }
        } else if (*sweep == "random") {
          std::mt19937_64 rng(*seed);
          const Word mask = (nn >= 64) ? ~Word{0} : ((Word{1} << nn) - 1);
          for (int t = 0; t < *count; ++t) {
            const Word x = rng() & mask;
            const Word w = random_weight_word(nn, dd, rng);
            auto r = runproto(x, x ^ w);
            stats.absorb(r);
            if (t == 0) sample = run_json(r, false);
          }
          for (int t = 0; t < std::max(1, *count / 10); ++t)
            stats.absorb(runproto(rng() & mask, 0));  // equal pairs: x ^ 0
        } else {
          throw std::domain_error("protocol: unknown sweep mode " + *sweep);
        }
        json j = sample;
        j["sweep"] = *sweep;
        j["runs"] = stats.runs;
        j["failures"] = stats.failures;
        j["pass"] = stats.failures == 0;
        j.erase("outcome");
        return j;
      }
      const Word x = xs->empty() ? 0 : parse_hex(*xs);
      const Word y = ys->empty() ? x : parse_hex(*ys);
      return run_json(runproto(x, y), *with_branches);
    };

    auto* eq2 = cmd->add_subcommand(
        "eq2", "two-round equality at distance n/4: search state from Bob, query and "
               "diffusion at Alice, index-and-bit reply");
    add_common(eq2, false);
    eq2->callback([=, &runner] {
      runner = [=]() -> json {
        return eq_sweep([&](Word x, Word y) { return eq_two_round(x, y, *n); }, *n, *n / 4);
      };
    });

    auto* eqpad = cmd->add_subcommand(
        "eq-pad", "padded equality for n/4 <= d < n/2: zero-pad to length 4d and run eq2");
    add_common(eqpad, true);
    eqpad->callback([=, &runner] {
      runner = [=]() -> json {
        const int dd = (*d > 0) ? *d : static_cast<int>(*alpha * *n + 0.5);
        return eq_sweep([&](Word x, Word y) { return eq_padded(x, y, *n, dd); }, *n, dd);
      };
    });

    auto* eqmulti = cmd->add_subcommand(
        "eq-multi", "multi-round equality for d < n/4 via the exact search iteration");
    add_common(eqmulti, true);
    eqmulti->callback([=, &runner] {
      runner = [=]() -> json {
        const int dd = (*d > 0) ? *d : static_cast<int>(*alpha * *n + 0.5);
        return eq_sweep([&](Word x, Word y) { return eq_multiround(x, y, *n, dd); }, *n, dd);
      };
    });

    auto list_cmd = [&](const char* name, const char* help,
                        std::function<ProtocolRun(Word, const std::vector<Word>&, int)> fn) {
      auto* sub = cmd->add_subcommand(name, help);
      add_common(sub, true);
      sub->callback([=, &runner] {
        runner = [=]() -> json {
          const int dd = (*d > 0) ? *d : *n;
          const Word seed_vertex = *seed % (Word{1} << *n);
          const std::vector<Word> L = find_equidistant_list(*n, dd, seed_vertex);
          SweepStats stats;
          json sample;
          for (Word x : L) {
            auto r = fn(x, L, *n);
            stats.absorb(r);
            if (x == L.front()) sample = run_json(r, *with_branches);
          }
          json j = sample;
          j["list_size"] = L.size();
          j["runs"] = stats.runs;
          j["failures"] = stats.failures;
          j["pass"] = stats.failures == 0;
          return j;
        };
      });
    };
    list_cmd("list2",
             "two-round list protocol: one qubit from Bob, expanded signed state back",
             [](Word x, const std::vector<Word>& L, int nn) { return list_two_round(x, L, nn); });
    list_cmd("list-ent",
             "entanglement-assisted list protocol: classical bits plus shared correlations",
             [](Word x, const std::vector<Word>& L, int nn) { return list_entangled(x, L, nn); });
    list_cmd("list-ns",
             "non-signaling-box list protocol: one message of log |L| bits",
             [](Word x, const std::vector<Word>& L, int nn) {
               return list_nonsignaling(x, L, nn);
             });
  }

  // ---- collapse ----
  {
    auto* cmd = app.add_subcommand(
        "collapse", "Collapse a multi-round equality protocol to one round by having Alice "
                    "send the transcript she would produce on equal inputs");
    auto fixture = std::make_shared<std::string>("parity-exchange");
    cmd->add_option("--fixture", *fixture,
                    "parity-exchange | bisection | bob-first | coloring | all");
    cmd->callback([=, &runner] {
      runner = [=]() -> json {
        std::vector<ClassicalFixture> fixtures;
        if (*fixture == "all") {
          fixtures = {parity_exchange_fixture(), bisection_fixture(), bob_first_fixture(),
                      coloring_fixture()};
        } else if (*fixture == "parity-exchange") {
          fixtures = {parity_exchange_fixture()};
        } else if (*fixture == "bisection") {
          fixtures = {bisection_fixture()};
        } else if (*fixture == "bob-first") {
          fixtures = {bob_first_fixture()};
        } else if (*fixture == "coloring") {
          fixtures = {coloring_fixture()};
        } else {
          throw std::domain_error("collapse: unknown fixture " + *fixture);
        }
        json rows = json::array();
        bool all_ok = true;
        for (const auto& f : fixtures) {
          const auto collapsed = round_collapse(f.protocol, f.promise);
          const bool ok = classical_correct_on_promise(collapsed, f.promise) &&
                          collapsed.total_length() <= f.protocol.total_length();
          all_ok = all_ok && ok;
          rows.push_back({{"fixture", f.name},
                          {"original_rounds", f.protocol.rounds.size()},
                          {"original_length", f.protocol.total_length()},
                          {"collapsed_length", collapsed.total_length()},
                          {"correct", ok}});
        }
        return json{{"rows", rows}, {"pass", all_ok}};
      };
    });
  }

  // ---- kremer ----
  {
    auto* cmd = app.add_subcommand(
        "kremer", "Compile a small quantum protocol into a one-round classical protocol by "
                  "quantizing Alice's Gram coefficients; verifies the 1/8 deviation bound "
                  "and the majority decision rule");
    auto fixture = std::make_shared<std::string>("eq2n4");
    auto precision = std::make_shared<int>(-1);
    cmd->add_option("--fixture", *fixture, "eq2n4 | coloring | fourier");
    cmd->add_option("--precision", *precision, "bits per coefficient component");
    cmd->callback([=, &runner] {
      runner = [=]() -> json {
        QuantumProtocolSpec spec;
        if (*fixture == "eq2n4")
          spec = eq2_quantum_spec(4);
        else if (*fixture == "coloring")
          spec = coloring_quantum_spec();
        else if (*fixture == "fourier")
          spec = fourier_quantum_spec();
        else
          throw std::domain_error("kremer: unknown fixture " + *fixture);
        const KremerReport rep = kremer_compile(spec, *precision);
        return json{{"fixture", *fixture},
                    {"total_qubits", rep.total_qubits},
                    {"bits_per_component", rep.bits_per_component},
                    {"message_bits", rep.message_bits},
                    {"max_deviation", sig12(rep.max_deviation)},
                    {"deviation_within_eighth", rep.deviation_within_eighth},
                    {"decisions_match", rep.decisions_match},
                    {"exact_protocol_verified", rep.exact_protocol_verified},
                    {"pass", rep.pass}};
      };
    });
  }

  // ---- bounds ----
  {
    auto* cmd = app.add_subcommand(
        "bounds", "Closed-form bound calculators, the bounded-diameter set check, and the "
                  "entropy gap");
    auto which = std::make_shared<std::string>("formulas");
    auto N = std::make_shared<double>(65536.0);
    auto k = std::make_shared<double>(16.0);
    auto cc = std::make_shared<double>(1.0);
    auto co1 = std::make_shared<double>(1.0);
    auto clow = std::make_shared<double>(1.0);
    auto n = std::make_shared<int>(6);
    auto r = std::make_shared<int>(2);
    auto seed = std::make_shared<Word>(12345);
    auto pval = std::make_shared<double>(0.25);
    cmd->add_option("which", *which, "formulas | kleitman | entropy-gap")->required();
    cmd->add_option("--N", *N);
    cmd->add_option("--k", *k);
    cmd->add_option("--constant-c", *cc, "set-size bound constant");
    cmd->add_option("--constant-o1", *co1, "additive slack constant");
    cmd->add_option("--constant-lower", *clow, "quantum lower-bound constant");
    cmd->add_option("--n", *n);
    cmd->add_option("--r", *r);
    cmd->add_option("--seed", *seed);
    cmd->add_option("--p", *pval);
    cmd->callback([=, &runner] {
      runner = [=]() -> json {
        if (*which == "formulas") {
          const BoundReport rep = bound_formulas(*N, *k, *cc, *co1, *clow);
          json rows = json::array();
          for (const auto& t : rep.terms)
            rows.push_back({{"bound", t.name},
                            {"value", std::isnan(t.value) ? json() : json(sig12(t.value))},
                            {"configurable_constant", t.uses_configurable_constant}});
          return json{{"N", rep.N},       {"k", rep.k},
                      {"chi", rep.chi},   {"omega", rep.omega},
                      {"rows", rows},     {"ordering_ok", rep.ordering_ok},
                      {"pass", rep.ordering_ok}};
        }
        if (*which == "kleitman") {
          const KleitmanResult res = kleitman_check(*n, *r, *seed);
          return json{{"n", res.n},
                      {"r", res.r},
                      {"bound", rat(res.bound)},
                      {"largest_found", res.largest_found},
                      {"sets_checked", res.sets_checked},
                      {"exhaustive", res.exhaustive},
                      {"ball_meets_bound", res.ball_meets_bound},
                      {"pass", res.holds}};
        }
        if (*which == "entropy-gap") {
          const double gap = entropy_gap(*pval);
          bool all_positive = true;
          for (int i = 1; i <= 10000; ++i) {
            const double p = 0.001 + (0.499 - 0.001) * i / 10000.0;
            all_positive = all_positive && entropy_gap(p) > 0.0;
          }
          return json{{"p", *pval},
                      {"gap", sig12(gap)},
                      {"grid_all_positive", all_positive},
                      {"pass", all_positive && gap > 0.0}};
        }
        throw std::domain_error("bounds: unknown mode " + *which);
      };
    });
  }

  // ---- sweep ----
  {
    auto* cmd = app.add_subcommand(
        "sweep", "Parameter sweeps with deterministic aggregation: orthogonality defects, "
                 "root locations, exact-search success, theta sandwich");
    auto what = std::make_shared<std::string>("roots");
    auto n_max = std::make_shared<int>(16);
    auto threads = std::make_shared<int>(1);
    auto seed = std::make_shared<Word>(12345);
    cmd->add_option("what", *what, "orthogonality | roots | grover | theta")->required();
    cmd->add_option("--n-max", *n_max);
    cmd->add_option("--threads", *threads);
    cmd->add_option("--seed", *seed);
    cmd->callback([=, &runner] {
      runner = [=]() -> json {
        json rows = json::array();
        bool pass = true;
        if (*what == "orthogonality") {
          const int cap = std::min(*n_max, 20);
          std::vector<json> results(cap);
          parallel_for(cap, *threads, [&](int i) {
            const int nn = i + 1;
            const Rational defect = orthogonality_defect(nn);
            results[i] = json{{"n", nn}, {"defect", rat(defect)}, {"zero", defect == 0}};
          });
          for (auto& r : results) {
            pass = pass && r["zero"].get<bool>();
            rows.push_back(std::move(r));
          }
        } else if (*what == "roots") {
          std::vector<std::pair<int, int>> cases;
          for (int nn = 4; nn <= std::min(*n_max, 32); nn += 2)
            for (int dd = 2; 2 * dd < nn; dd += 2) cases.emplace_back(nn, dd);
          std::vector<json> results(cases.size());
          parallel_for(static_cast<int>(cases.size()), *threads, [&](int i) {
            const auto [nn, dd] = cases[i];
            const double root = smallest_root(nn, dd);
            const auto [lo, hi] = root_interval(nn, dd);
            const auto [a, b] = smallest_root_bracket(nn, dd);
            const bool ok = root >= lo - 1e-8 && root <= hi + 1e-8 && root >= a - 1e-8 &&
                            root <= b + 1e-8;
            results[i] = json{{"n", nn},
                              {"d", dd},
                              {"root", sig12(root)},
                              {"interval_lo", sig12(lo)},
                              {"bracket", json::array({a, b})},
                              {"ok", ok}};
          });
          for (auto& r : results) {
            pass = pass && r["ok"].get<bool>();
            rows.push_back(std::move(r));
          }
        } else if (*what == "grover") {
          std::vector<std::pair<int, int>> cases;
          for (int nn = 2; nn <= std::min(*n_max, 32); ++nn)
            for (int dd = 1; dd <= nn; ++dd) cases.emplace_back(nn, dd);
          std::vector<json> results(cases.size());
          parallel_for(static_cast<int>(cases.size()), *threads, [&](int i) {
            const auto [nn, dd] = cases[i];
            const GroverParams params = exact_grover_params(nn, dd);
            double worst = grover_unmarked_residual(
                nn, dd, (dd >= 64) ? ~Word{0} : ((Word{1} << dd) - 1), params);
            std::mt19937_64 rng(*seed + 1000 * nn + dd);
            for (int t = 0; t < 10; ++t)
              worst = std::max(worst, grover_unmarked_residual(
                                          nn, dd, random_weight_word(nn, dd, rng), params));
            results[i] = json{{"n", nn},
                              {"d", dd},
                              {"ell", params.ell},
                              {"worst_residual", sig12(worst)},
                              {"ok", worst <= 1e-9}};
          });
          for (auto& r : results) {
            pass = pass && r["ok"].get<bool>();
            rows.push_back(std::move(r));
          }
        } else if (*what == "theta") {
          std::vector<std::pair<int, int>> cases;
          for (int nn = 4; nn <= std::min(*n_max, 16); nn += 2)
            for (int dd = 2; 2 * dd < nn; dd += 2) cases.emplace_back(nn, dd);
          std::vector<json> results(cases.size());
          parallel_for(static_cast<int>(cases.size()), *threads, [&](int i) {
            const auto [nn, dd] = cases[i];
            const double theta = theta_complement_hamming(nn, dd);
            const long dim = padded_rep_dimension(nn, nn / 2 - dd);
            const bool ok = theta >= 1.0 - 1e-8 && theta <= dim + 1e-8;
            results[i] = json{
                {"n", nn}, {"d", dd}, {"theta", sig12(theta)}, {"rep_dim", dim}, {"ok", ok}};
          });
          for (auto& r : results) {
            pass = pass && r["ok"].get<bool>();
            rows.push_back(std::move(r));
          }
        } else {
          throw std::domain_error("sweep: unknown mode " + *what);
        }
        return json{{"what", *what}, {"rows", rows}, {"pass", pass}};
      };
    });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    json result = runner();
    json envelope{{"schema_version", kSchemaVersion}, {"command", command_line}};
    for (auto it = result.begin(); it != result.end(); ++it) envelope[it.key()] = it.value();
    const bool pass = envelope.value("pass", true);
    if (csv)
      emit_csv(envelope, std::cout);
    else
      std::cout << envelope.dump(2) << "\n";
    std::cerr << (pass ? "PASS" : "FAIL") << " " << command_line << "\n";
    return pass ? 0 : 1;
  } catch (const promise_error& e) {
    std::cerr << "promise violation: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "invariant failed: " << e.what() << "\n";
    return 1;
  }
}
