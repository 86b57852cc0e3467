#include "baileykit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "baileykit/corpus.hpp"
#include "baileykit/errors.hpp"
#include "baileykit/instance.hpp"
#include "baileykit/report.hpp"

namespace baileykit {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceArgs {
  std::string id;
  std::vector<std::string> params;
  long order = -1;
  long q_order = -1;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& a) {
  cmd->add_option("id", a.id, "identity id, as printed by `list`")->required();
  cmd->add_option("--param", a.params, "parameter binding name=value (repeatable)");
  auto* order = cmd->add_option("--order", a.order, "truncation order in t = q^(1/2) units");
  cmd->add_option("--q-order", a.q_order, "truncation order in q units (twice the t-order)")
      ->excludes(order);
}

IdentityInstance instance_from(const InstanceArgs& a) {
  std::string line = a.id;
  for (const auto& p : a.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got \"" + p + "\"");
    if (p.substr(0, eq) == "order") throw UsageError("use --order or --q-order for the truncation order");
    try {
      (void)parse_value(std::string_view(p).substr(eq + 1));
    } catch (const ParseError& e) {
      throw UsageError("--param " + p + ": column " + std::to_string(e.column() + eq + 1) +
                       ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
    line += " " + p;
  }
  long order = a.order;
  if (a.q_order >= 0) order = 2 * a.q_order;
  if (order >= 0) line += " order=" + std::to_string(order);
  return parse_instance(line, 1);
}

std::vector<VerificationReport> verify_all(const std::vector<IdentityInstance>& insts, long jobs) {
  std::vector<VerificationReport> out(insts.size());
  const long workers = std::max<long>(1, std::min<long>(jobs, static_cast<long>(insts.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < insts.size(); i = next++) out[i] = verify(insts[i]);
  };
  if (workers == 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (long w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return out;
}

int exit_code(const std::vector<VerificationReport>& reports) {
  int code = kExitPass;
  for (const auto& r : reports) {
    if (r.status == Status::Error) return kExitError;
    if (r.status == Status::Fail) code = kExitFail;
  }
  return code;
}

std::string summary(const std::vector<VerificationReport>& reports) {
  long pass = 0, fail = 0, error = 0;
  for (const auto& r : reports) {
    (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : error) += 1;
  }
  return std::to_string(reports.size()) + " instances: " + std::to_string(pass) + " pass, " +
         std::to_string(fail) + " fail, " + std::to_string(error) + " error\n";
}

std::vector<IdentityInstance> read_instances(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<IdentityInstance> out;
  for (auto& l : parse_instances(buf.str()).lines) out.push_back(std::move(l.instance));
  return out;
}

std::vector<IdentityInstance> corpus_defaults() {
  std::vector<IdentityInstance> out;
  for (const auto& def : corpus()) out.push_back(parse_instance(def.id));
  return out;
}

void print_list(std::ostream& out) {
  for (const auto& def : corpus()) {
    out << def.id << "  [" << kind_name(def.kind) << "]  " << def.title << "\n";
    out << "    params:";
    for (const auto& p : def.params) {
      out << " " << p.name << ":" << kind_name(p.kind) << "=" << p.default_value;
    }
    out << "\n    constraints: " << def.constraints << "\n    tag: " << def.tag << "\n";
  }
}

void print_coeffs(std::ostream& out, const Sides& s, bool lhs, long order) {
  if (s.kind == IdentityKind::Bivariate) {
    for (const auto& [x, c] : (lhs ? s.lhs_x : s.rhs_x).terms()) {
      for (long e = c.valuation(); e <= order; ++e) {
        if (c.coeff(e) != 0) out << x << " " << e << " " << to_string(c.coeff(e)) << "\n";
      }
    }
    return;
  }
  const TSeries& f = lhs ? s.lhs : s.rhs;
  const long hi = s.kind == IdentityKind::Polynomial ? f.max_exp() : order;
  for (long e = f.valuation(); e <= hi; ++e) {
    if (f.coeff(e) != 0) out << e << " " << to_string(f.coeff(e)) << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact truncated-series verification of Bailey-pair identities", "baileykit"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "print the identity corpus");

  InstanceArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "verify one identity instance");
  add_instance_options(verify_cmd, verify_args);

  std::string file;
  long jobs = 1;
  auto* verify_all_cmd = app.add_subcommand("verify-all", "verify every instance of a file");
  verify_all_cmd->add_option("--file", file, "instance file")->required();
  verify_all_cmd->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);

  InstanceArgs coeff_args;
  std::string side = "lhs";
  auto* coeffs_cmd = app.add_subcommand("coeffs", "print the coefficients of one side");
  add_instance_options(coeffs_cmd, coeff_args);
  coeffs_cmd->add_option("--side", side, "lhs or rhs")->check(CLI::IsMember({"lhs", "rhs"}));

  std::string format = "text";
  std::string out_path;
  std::string report_file;
  long report_jobs = 1;
  auto* report_cmd = app.add_subcommand(
      "report", "verify a file (or every row at its defaults) and write a report");
  report_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  report_cmd->add_option("--out", out_path, "output path (standard output when omitted)");
  report_cmd->add_option("--file", report_file, "instance file");
  report_cmd->add_option("--jobs", report_jobs, "parallel workers")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (list->parsed()) {
      print_list(out);
      return kExitPass;
    }
    if (verify_cmd->parsed()) {
      const VerificationReport r = verify(instance_from(verify_args));
      out << report_line(r) << "\n";
      return exit_code({r});
    }
    if (verify_all_cmd->parsed()) {
      const auto reports = verify_all(read_instances(file), jobs);
      out << reports_text(reports) << summary(reports);
      return exit_code(reports);
    }
    if (coeffs_cmd->parsed()) {
      const IdentityInstance inst = instance_from(coeff_args);
      Sides s;
      try {
        s = build_sides(inst);
      } catch (const ConstraintViolation&) {
        throw;
      } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
      }
      print_coeffs(out, s, side == "lhs", inst.order);
      return kExitPass;
    }
    if (report_cmd->parsed()) {
      const auto insts = report_file.empty() ? corpus_defaults() : read_instances(report_file);
      const auto reports = verify_all(insts, report_jobs);
      const std::string text = format == "json" ? reports_json(reports) + "\n"
                                                : reports_text(reports) + summary(reports);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write " + out_path);
        f << text;
      }
      return exit_code(reports);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownIdentity& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownParameter& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConstraintViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace baileykit
