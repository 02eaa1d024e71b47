#include "mpg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mpg/census.hpp"
#include "mpg/crossing.hpp"
#include "mpg/error.hpp"
#include "mpg/family.hpp"
#include "mpg/json_io.hpp"
#include "mpg/text_format.hpp"
#include "mpg/witness.hpp"

namespace mpg::cli {

namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::PreconditionViolated:
    case ErrorCode::InternalInvariantViolated:
    case ErrorCode::ExhaustedAttempts:
      return kVerdictFail;
    default:
      return kUsage;
  }
}

class Session {
 public:
  Session(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::vector<Mpg> load(const std::string& file) {
    if (file == "-") return require_some(parse_instances(in_), file);
    std::ifstream f(file);
    if (!f) {
      throw Error(ErrorCode::ParseError, "cannot open " + file, {{"file", file}});
    }
    return require_some(parse_instances(f), file);
  }

  Mpg load_one(const std::string& file) { return load(file).front(); }

  void emit(const json& j) { out_ << j.dump() << '\n'; }

 private:
  static std::vector<Mpg> require_some(std::vector<Mpg> v, const std::string& file) {
    if (v.empty()) throw Error(ErrorCode::ParseError, "no instance in " + file, {{"file", file}});
    return v;
  }

  std::istream& in_;
  std::ostream& out_;
};

struct Options {
  std::string file;
  bool json_out = false;
  int jobs = 1;
  int edge = 0;
  int k = 0;
  bool verify = false;
  int m = 0;
  std::string csv_out;
  std::uint64_t seed = 0;
  bool c4_free = false;
  std::int64_t max_attempts = 100000;
  int anchor = 0;
  std::string format = "svg";
  std::string lemma;
  std::vector<int> lemma_args;
};

void print_census_text(std::ostream& out, const CensusReport& r) {
  out << "instance " << r.instance_id << '\n';
  out << "m " << r.m << '\n';
  out << "c4_count " << r.c4.size() << '\n';
  out << "p10_count " << r.p10.size() << '\n';
  out << "per_edge";
  for (int c : r.per_edge) out << ' ' << c;
  out << '\n';
  out << "zhang_ok " << (r.zhang_ok ? "true" : "false") << '\n';
  out << "lower_bound_applicable " << (r.lower_bound_applicable ? "true" : "false") << '\n';
  out << "lower_bound_ok " << (r.lower_bound_ok ? "true" : "false") << '\n';
}

void need_args(const std::vector<int>& args, std::size_t n, const std::string& lemma) {
  if (args.size() != n) {
    throw Error(ErrorCode::ParseError,
                "lemma " + lemma + " takes " + std::to_string(n) + " --args value(s)",
                {{"lemma", lemma}, {"expected", n}, {"given", args.size()}});
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Marked permutation graphs: M-C4 / M-P10 census, witnesses and checks", "mpg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  Options o;

  auto* validate = app.add_subcommand("validate", "Parse an instance and print its canonical form");
  validate->add_option("file", o.file, "Instance file, '-' for stdin")->required();

  auto* census_cmd = app.add_subcommand("census", "Enumerate all M-C4s and M-P10s");
  census_cmd->add_option("file", o.file, "Instance file, '-' for stdin")->required();
  census_cmd->add_flag("--json", o.json_out, "Emit a JSON report");
  census_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* witness_cmd = app.add_subcommand("witness", "Find an M-P10 through a matching edge");
  witness_cmd->add_option("file", o.file, "Instance file, '-' for stdin")->required();
  witness_cmd->add_option("--edge", o.edge, "A-index of the matching edge")->required();

  auto* gk = app.add_subcommand("gk", "Generate the extremal instance G_k");
  gk->add_option("k", o.k, "Family parameter (>= 1)")->required();
  gk->add_flag("--json", o.json_out, "Emit instance and classification as JSON only");
  gk->add_flag("--verify", o.verify, "Verify the M-C4 / M-P10 counts and witness structure");
  gk->add_option("--jobs", o.jobs, "Worker threads for --verify")->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("scan", "Exhaustive scan of all instances with half-order M");
  scan->add_option("m", o.m, "Half-order (3..8)")->required();
  scan->add_option("--out", o.csv_out, "Write the per-instance CSV summary here");
  scan->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* random = app.add_subcommand("random", "Draw a seeded random instance");
  random->add_option("m", o.m, "Half-order")->required();
  random->add_option("--seed", o.seed, "Generator seed")->required();
  random->add_flag("--c4-free", o.c4_free, "Reject instances containing an M-C4");
  random->add_option("--max-attempts", o.max_attempts, "Rejection sampling budget");

  auto* draw = app.add_subcommand("draw", "Render the standard drawing");
  draw->add_option("file", o.file, "Instance file, '-' for stdin")->required();
  draw->add_option("--anchor", o.anchor, "Anchor A-index (drawn leftmost)");
  draw->add_option("--format", o.format, "svg or dot");

  auto* cyclic = app.add_subcommand("cyclic", "Test cyclic 5-edge-connectivity");
  cyclic->add_option("file", o.file, "Instance file, '-' for stdin")->required();

  auto* check = app.add_subcommand("check", "Run one of the brute-force checkers");
  check->add_option("file", o.file, "Instance file, '-' for stdin")->required();
  check->add_option("--lemma", o.lemma, "redrawing | replace | zhang | lower")
      ->required()
      ->check(CLI::IsMember({"redrawing", "replace", "zhang", "lower"}));
  check->add_option("--args", o.lemma_args, "Matching-edge indices a b (redrawing, replace)")
      ->expected(0, 2);

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Session session(in, out);
  try {
    if (validate->parsed()) {
      for (const auto& g : session.load(o.file)) out << format_instance(g);
      return kOk;
    }
    if (census_cmd->parsed()) {
      for (const auto& g : session.load(o.file)) {
        const auto report = census(g, o.jobs);
        if (o.json_out) {
          session.emit(stamped(to_json(report)));
        } else {
          print_census_text(out, report);
        }
      }
      return kOk;
    }
    if (witness_cmd->parsed()) {
      const auto g = session.load_one(o.file);
      session.emit(stamped(to_json(find_p10_through(g, o.edge))));
      return kOk;
    }
    if (gk->parsed()) {
      const auto inst = generate_gk(o.k);
      if (o.verify) {
        const auto v = verify_gk(inst, o.jobs);
        session.emit(stamped(to_json(v)));
        return v.ok ? kOk : kVerdictFail;
      }
      if (o.json_out) {
        session.emit(stamped(to_json(inst)));
      } else {
        out << format_instance(inst.graph);
        out << "# " << stamped(to_json(inst)).dump() << '\n';
      }
      return kOk;
    }
    if (scan->parsed()) {
      const auto report = exhaustive_scan(o.m, o.jobs);
      if (!o.csv_out.empty()) {
        std::ofstream csv(o.csv_out);
        if (!csv) {
          throw Error(ErrorCode::ParseError, "cannot write " + o.csv_out, {{"file", o.csv_out}});
        }
        write_scan_csv(csv, report);
      }
      session.emit(stamped(to_json(report)));
      return report.violations.empty() ? kOk : kVerdictFail;
    }
    if (random->parsed()) {
      const auto g = random_instance(o.m, o.seed, o.c4_free, o.max_attempts);
      out << "# seed " << o.seed << '\n' << format_instance(g);
      return kOk;
    }
    if (draw->parsed()) {
      const auto g = session.load_one(o.file);
      out << standard_drawing(g, o.anchor, parse_drawing_format(o.format));
      return kOk;
    }
    if (cyclic->parsed()) {
      const auto g = session.load_one(o.file);
      const auto cut = find_small_cyclic_cut(g);
      json report = {{"instance", g.id()}, {"cyclically_5_edge_connected", !cut.has_value()}};
      if (cut) {
        json edges = json::array();
        for (const auto& e : *cut) edges.push_back(to_json(e));
        report["cut"] = edges;
      } else {
        report["cut"] = nullptr;
      }
      session.emit(stamped(report));
      return cut ? kVerdictFail : kOk;
    }
    if (check->parsed()) {
      const auto g = session.load_one(o.file);
      json verdict;
      bool ok = false;
      if (o.lemma == "zhang") {
        const auto v = check_zhang(g);
        verdict = to_json(v);
        ok = v.ok;
      } else if (o.lemma == "lower") {
        const auto v = check_lower_bound(g);
        verdict = to_json(v);
        ok = v.ok;
      } else if (o.lemma == "replace") {
        need_args(o.lemma_args, 2, o.lemma);
        const auto v = check_replace(g, o.lemma_args[0], o.lemma_args[1]);
        verdict = to_json(v);
        ok = v.ok;
      } else {
        need_args(o.lemma_args, 2, o.lemma);
        const auto v = check_redrawing(g, o.lemma_args[0], o.lemma_args[1]);
        verdict = to_json(v);
        ok = v.ok;
      }
      verdict["instance"] = g.id();
      session.emit(stamped(verdict));
      return ok ? kOk : kVerdictFail;
    }
  } catch (const Error& e) {
    session.emit(stamped(e.to_json()));
    err << "mpg: " << code_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace mpg::cli
