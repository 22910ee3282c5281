#include "springer/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "springer/correspondence.hpp"
#include "springer/errors.hpp"
#include "springer/extremal.hpp"
#include "springer/io.hpp"
#include "springer/verify.hpp"

namespace springer {

namespace {

struct Flags {
  std::string lambda, epsilon, target_lambda, target_epsilon;
  std::string alpha, beta, order, A, B, s;
  std::optional<std::size_t> N, M, r;
  bool all = false;
  bool timings = false;
  std::string format = "json";
  std::string verify_format = "text";
  std::string out_file;
  int max_two_n = 8;
  std::string theorem = "all";
  unsigned jobs = 0;
};

Json report(const std::string& command, Json inputs, Json outputs) {
  Json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["outputs"] = std::move(outputs);
  return j;
}

Json marked_inputs(const Flags& f) {
  Json in;
  in["lambda"] = f.lambda;
  in["epsilon"] = f.epsilon;
  if (f.r) in["r"] = *f.r;
  return in;
}

Json cmd_springer(const Flags& f) {
  MarkedSymplectic ms = parse_marked(f.lambda, f.epsilon);
  return report("springer", marked_inputs(f), to_json(springer_to_pair(ms, f.r)));
}

Json chain_json(const MarkedSymplectic& ms) {
  Json chain = Json::array();
  for (const auto& tr : bar_chain(ms)) chain.push_back(to_json(tr));
  return chain;
}

Json cmd_max(const Flags& f) {
  MarkedSymplectic ms = parse_marked(f.lambda, f.epsilon);
  MarkedSymplectic mx = lambda_max(ms);
  Json out;
  out["lambda_max"] = to_json(mx.lambda());
  out["epsilon_max"] = to_json(mx.epsilon());
  out["bar_trace"] = chain_json(ms);
  return report("max", marked_inputs(f), out);
}

Json cmd_min(const Flags& f) {
  MarkedSymplectic ms = parse_marked(f.lambda, f.epsilon);
  MarkedSymplectic mn = lambda_min(ms);
  Json out;
  out["lambda_min"] = to_json(mn.lambda());
  out["epsilon_min"] = to_json(mn.epsilon());
  out["lambda_max"] = to_json(sign_twist(mn).lambda());
  out["epsilon_max"] = to_json(sign_twist(mn).epsilon());
  out["bar_trace"] = chain_json(ms);
  return report("min", marked_inputs(f), out);
}

struct TableRow {
  MarkedSymplectic target;
  long mult;
  std::size_t rank;
};

std::vector<TableRow> table_rows(const MultTable& t) {
  std::vector<TableRow> rows;
  for (const auto& [x, v] : t.entries) {
    std::size_t above = 0;
    for (const auto& [y, w] : t.entries)
      if (shape_dominance_less(x.lambda(), y.lambda())) ++above;
    rows.push_back({x, v, above});
  }
  // Reverse lexicographic order extends dominance.
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    if (!(a.target.lambda() == b.target.lambda())) return b.target.lambda() < a.target.lambda();
    return b.target.epsilon() < a.target.epsilon();
  });
  return rows;
}

std::string cmd_mult(const Flags& f) {
  MarkedSymplectic ms = parse_marked(f.lambda, f.epsilon);
  if (!f.all) {
    require(!f.target_lambda.empty() || f.target_epsilon.empty(), "mult needs --all or --target-lambda");
    MarkedSymplectic target = parse_marked(f.target_lambda, f.target_epsilon);
    Json in = marked_inputs(f);
    in["target"] = to_json(target);
    Json out;
    out["mult"] = mult_pair(ms, target);
    return report("mult", in, out).dump();
  }
  auto rows = table_rows(mult_table(ms));
  if (f.format == "tsv") {
    std::ostringstream os;
    os << "lambda\tepsilon\tmult\tdominance-rank\n";
    for (const auto& row : rows)
      os << render_partition(row.target.lambda()) << '\t' << render_epsilon(row.target.epsilon()) << '\t' << row.mult
         << '\t' << row.rank << '\n';
    std::string s = os.str();
    s.pop_back();
    return s;
  }
  Json entries = Json::array();
  for (const auto& row : rows) {
    Json e = to_json(row.target);
    e["mult"] = row.mult;
    e["dominance_rank"] = row.rank;
    entries.push_back(e);
  }
  Json out;
  out["entries"] = entries;
  return report("mult", marked_inputs(f), out).dump();
}

Json cmd_pset(const Flags& f) {
  IndexedPair pair(parse_partition(f.alpha), parse_partition(f.beta), parse_order(f.order));
  Json in;
  in["alpha"] = to_json(pair.alpha);
  in["beta"] = to_json(pair.beta);
  in["order"] = pair.order.word();
  bool constrained = !f.A.empty() || !f.B.empty() || !f.s.empty();
  Json out;
  Json elems = Json::array();
  if (!constrained) {
    for (const auto& e : p_set(pair)) elems.push_back(to_json(e));
    out["p_set"] = elems;
    return report("pset", in, out);
  }
  require(!f.A.empty() && !f.B.empty() && !f.s.empty(), "--A, --B and --s go together");
  Params p{f.N.value_or(pair.n()), f.M.value_or(pair.m()), parse_rational(f.A), parse_rational(f.B),
           parse_rational(f.s)};
  in["N"] = p.N;
  in["M"] = p.M;
  in["A"] = render_rational(p.A);
  in["B"] = render_rational(p.B);
  in["s"] = render_rational(p.s);
  for (const auto& e : p_constrained_set(pair, p)) elems.push_back(to_json(e));
  out["p_constrained_set"] = elems;
  out["p_bracket"] = to_json(p_bracket(pair, p));
  return report("pset", in, out);
}

int cmd_verify(const Flags& f, std::string& payload) {
  std::vector<std::string> names;
  if (f.theorem == "all")
    names = sweep_names();
  else
    names.push_back(f.theorem);
  bool ok = true;
  Json results = Json::array();
  std::ostringstream text;
  for (const auto& name : names) {
    SweepOutcome o = run_sweep(name, f.max_two_n, f.jobs);
    ok = ok && o.ok();
    Json r;
    r["sweep"] = o.name;
    r["checked"] = o.checked;
    r["pass"] = o.ok();
    r["failures"] = o.failures;
    results.push_back(r);
    text << (o.ok() ? "PASS " : "FAIL ") << o.name << " checked=" << o.checked << '\n';
    for (const auto& msg : o.failures) text << "  " << msg << '\n';
  }
  if (f.verify_format == "json") {
    Json in;
    in["max_2n"] = f.max_two_n;
    in["theorem"] = f.theorem;
    Json out;
    out["sweeps"] = results;
    out["pass"] = ok;
    payload = report("verify", in, out).dump();
  } else {
    payload = text.str();
    payload.pop_back();
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

void add_marked(CLI::App* sub, Flags& f) {
  sub->add_option("--lambda", f.lambda, "symplectic partition, e.g. 4,2,2")->required();
  sub->add_option("--epsilon", f.epsilon, "signs on even parts, e.g. 4:+,2:-");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Springer correspondence and extremal couples for symplectic partitions"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--out", f.out_file, "write the payload to FILE instead of stdout");
  app.add_flag("--timings", f.timings, "include wall-clock timings in JSON output");

  auto* springer = app.add_subcommand("springer", "(lambda, epsilon) -> (k, alpha, beta)");
  add_marked(springer, f);
  springer->add_option("--r", f.r, "rank used for the symbols (default N)");
  auto* mx = app.add_subcommand("max", "extremal maximum and its bar recursion");
  add_marked(mx, f);
  auto* mn = app.add_subcommand("min", "extremal minimum");
  add_marked(mn, f);
  auto* mult = app.add_subcommand("mult", "multiplicities from an even source");
  add_marked(mult, f);
  mult->add_flag("--all", f.all, "full table over the source's k-block");
  mult->add_option("--target-lambda", f.target_lambda);
  mult->add_option("--target-epsilon", f.target_epsilon);
  mult->add_option("--format", f.format)->check(CLI::IsMember({"json", "tsv"}));
  auto* pset = app.add_subcommand("pset", "P(alpha,beta) or P_{A,B;s}(alpha,beta)");
  pset->add_option("--alpha", f.alpha)->required();
  pset->add_option("--beta", f.beta)->required();
  pset->add_option("--order", f.order)->required();
  pset->add_option("--A", f.A);
  pset->add_option("--B", f.B);
  pset->add_option("--s", f.s);
  pset->add_option("--N", f.N);
  pset->add_option("--M", f.M);
  auto* verify = app.add_subcommand("verify", "exhaustive sweeps up to a size");
  verify->add_option("--max-2n", f.max_two_n)->required();
  std::vector<std::string> theorem_names = sweep_names();
  theorem_names.push_back("all");
  verify->add_option("--theorem", f.theorem)->check(CLI::IsMember(theorem_names));
  verify->add_option("--jobs", f.jobs, "worker threads (0 = all cores)");
  verify->add_option("--format", f.verify_format)->check(CLI::IsMember({"json", "text"}));
  for (auto* sub : {springer, mx, mn, pset}) sub->add_option("--format", f.format)->check(CLI::IsMember({"json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  auto start = std::chrono::steady_clock::now();
  std::string payload;
  int code = kExitOk;
  try {
    auto finish = [&](Json j) {
      if (f.timings) {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        j["timings"] = {{"total_ms", ms}};
      }
      payload = j.dump();
    };
    if (springer->parsed()) finish(cmd_springer(f));
    if (mx->parsed()) finish(cmd_max(f));
    if (mn->parsed()) finish(cmd_min(f));
    if (pset->parsed()) finish(cmd_pset(f));
    if (mult->parsed()) payload = cmd_mult(f);
    if (verify->parsed()) code = cmd_verify(f, payload);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  if (f.out_file.empty()) {
    out << payload << '\n';
  } else {
    std::ofstream file(f.out_file);
    if (!file) {
      err << "error: cannot write " << f.out_file << '\n';
      return kExitUsage;
    }
    file << payload << '\n';
  }
  return code;
}

}  // namespace springer
