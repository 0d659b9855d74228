#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hyfac/design_file.hpp"
#include "hyfac/pipeline.hpp"
#include "hyfac/verifier.hpp"

namespace hyfac::cli {

namespace {

struct InstanceFlags {
  Count lambda = 1;
  Count m = 0;
  Count n = 0;
  std::vector<Count> r;
  std::optional<Count> uniform_r;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f) {
  cmd->add_option("--lambda", f.lambda, "edge multiplicity")->check(CLI::PositiveNumber);
  cmd->add_option("--m", f.m, "part size")->required();
  cmd->add_option("--n", f.n, "number of parts")->required();
  auto* r = cmd->add_option("--r", f.r, "factor degrees r_1,...,r_k")->delimiter(',');
  auto* u = cmd->add_option("--uniform-r", f.uniform_r, "common factor degree; k is derived");
  r->excludes(u);
  u->excludes(r);
}

/// Resolves the flags into Params. Gate failures in uniform mode surface as
/// ConditionError, malformed values as DomainError.
Params resolve(const InstanceFlags& f) {
  if (f.uniform_r) return uniform_params(f.lambda, f.m, f.n, *f.uniform_r);
  if (f.r.empty()) throw DomainError("one of --r or --uniform-r is required");
  return Params(f.lambda, f.m, f.n, f.r);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_construct(const InstanceFlags& flags, const std::string& out_path, bool trace,
                  std::ostream& out, std::ostream& err) {
  try {
    const Params params = resolve(flags);
    DetachOptions opts;
    opts.trace = trace;
    if (trace)
      opts.on_step = [&err](const Design& d, int step) {
        err << "step " << step << ": order " << d.order() << ", C1-C4 ok\n";
      };
    const std::string text = serialize(construct(params, opts));
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!(file << text)) {
        err << "error: cannot write " << out_path << "\n";
        return kBadInput;
      }
    }
    return kOk;
  } catch (const ConditionError& e) {
    err << "conditions fail: " << e.report();
    return kBadInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalDefect;
  }
}

int cmd_check(const InstanceFlags& flags, std::ostream& out, std::ostream& err) {
  try {
    if (flags.uniform_r) {
      auto u = check_uniform(flags.lambda, flags.m, flags.n, *flags.uniform_r);
      out << u.report;
      if (u.k) out << "k = " << *u.k << "\n";
      return u.report.passed() ? kOk : kBadInput;
    }
    auto rep = check_sufficiency(resolve(flags));
    out << rep;
    return rep.passed() ? kOk : kBadInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

std::optional<Design> load(const std::string& path, std::ostream& err) {
  const auto text = read_file(path);
  if (!text) {
    err << "error: cannot read " << path << "\n";
    return std::nullopt;
  }
  try {
    return parse_design(*text);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return std::nullopt;
  }
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto design = load(path, err);
  if (!design) return kBadInput;
  const auto rep = verify_factorization(*design);
  out << rep;
  return rep.passed() ? kOk : kAuditFailed;
}

int cmd_schedule(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto design = load(path, err);
  if (!design) return kBadInput;
  try {
    out << schedule(*design);
    return kOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorizations of complete 3-uniform multipartite hypergraphs", "hyfac"};
  app.require_subcommand(1);

  InstanceFlags construct_flags;
  std::string out_path;
  bool trace = false;
  std::uint64_t seed = 0;
  auto* construct = app.add_subcommand("construct", "build and audit a factorization");
  add_instance_flags(construct, construct_flags);
  construct->add_option("--out", out_path, "write the design file here instead of stdout");
  construct->add_flag("--trace", trace, "audit C1-C4 after every detachment step");
  construct->add_option("--seed", seed, "reserved; the construction is deterministic");

  InstanceFlags check_flags;
  auto* check = app.add_subcommand("check", "evaluate the existence conditions only");
  add_instance_flags(check, check_flags);

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "audit a design file as a factorization");
  verify->add_option("path", verify_path)->required();

  std::string schedule_path;
  auto* sched = app.add_subcommand("schedule", "print a day-by-day meeting schedule");
  sched->add_option("path", schedule_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  if (*construct) return cmd_construct(construct_flags, out_path, trace, out, err);
  if (*check) return cmd_check(check_flags, out, err);
  if (*verify) return cmd_verify(verify_path, out, err);
  return cmd_schedule(schedule_path, out, err);
}

} // namespace hyfac::cli
