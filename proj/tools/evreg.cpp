#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "evreg/driver.hpp"
#include "evreg/sweep.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_file(const std::string& path, const std::string& format, const evreg::RunOptions& opts) {
  evreg::Session session;
  try {
    session = evreg::parse_session(read_file(path));
  } catch (const evreg::Error& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return evreg::kExitParseError;
  }
  const auto reports = evreg::run(session, opts);
  std::cout << (format == "text" ? evreg::format_text(reports) : evreg::format_json(reports));
  return evreg::exit_code(reports);
}

int verify(const std::string& extra, const evreg::RunOptions& opts) {
  auto cases = evreg::builtin_corpus();
  if (!extra.empty()) {
    try {
      const auto more = evreg::corpus_from_session(evreg::parse_session(read_file(extra)));
      cases.insert(cases.end(), more.begin(), more.end());
    } catch (const evreg::Error& e) {
      std::cerr << extra << ": " << e.what() << "\n";
      return evreg::kExitParseError;
    }
  }
  const evreg::VerifyReport rep = evreg::verify_corpus(cases, opts);
  std::cout << rep.to_json().dump(2) << "\n";
  for (const auto& o : rep.outcomes) {
    if (!o.ok) std::cerr << "GoldenMismatch: " << o.name << ": " << o.message << "\n";
  }
  return rep.exit_code();
}

int sweep(int bound, int cap) {
  const evreg::SweepReport r = evreg::run_matrix_sweep(bound, cap);
  evreg::Json j;
  j["bound"] = r.bound;
  j["cap"] = r.cap;
  j["matrices"] = r.matrices;
  evreg::Json diag;
  for (const auto& [k, n] : r.diagonal_powers) diag[std::to_string(k)] = n;
  j["diagonal_powers"] = diag;
  j["diagonal_violations"] = r.diagonal_violations;
  j["expanding"] = r.expanding;
  evreg::Json ext;
  for (const auto& [k, n] : r.extendable_powers) ext[std::to_string(k)] = n;
  j["extendable_powers"] = ext;
  j["extendable_violations"] = r.extendable_violations;
  j["violations"] = r.violations;
  std::cout << j.dump(2) << "\n";
  return r.diagonal_violations + r.extendable_violations == 0 ? evreg::kExitOk : evreg::kExitCommandError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular iterates of rational self-maps of the plane"};
  app.require_subcommand(1);

  evreg::RunOptions opts;
  std::string file;
  std::string format = "json";
  auto* run = app.add_subcommand("run", "Run a map session file");
  run->add_option("file", file, "Session file")->required()->check(CLI::ExistingFile);
  run->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  run->add_option("--cap", opts.regular_cap, "Default cap for first-regular")->check(CLI::PositiveNumber);
  run->add_option("--degree-cap", opts.degree_cap, "Degree cap for compositions")->check(CLI::PositiveNumber);

  std::string extra;
  auto* ver = app.add_subcommand("verify-examples", "Check the built-in golden corpus");
  ver->add_option("--extra", extra, "Session file whose first-regular --expect commands are added")
      ->check(CLI::ExistingFile);

  int bound = 3;
  int cap = evreg::kDefaultPowerCap;
  auto* sw = app.add_subcommand("sweep", "Exhaustive 2x2 integer matrix sweep");
  sw->add_option("--matrices-bound", bound, "Entries range over [-B, B]")->check(CLI::Range(1, 10));
  sw->add_option("--cap", cap, "Largest power examined")->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : evreg::kExitParseError;
  }

  try {
    if (*run) return run_file(file, format, opts);
    if (*ver) return verify(extra, opts);
    return sweep(bound, cap);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return evreg::kExitCommandError;
  }
}
