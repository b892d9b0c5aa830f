#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "evreg/error.hpp"
#include "evreg/monomial.hpp"
#include "evreg/projmap.hpp"
#include "evreg/session.hpp"

namespace evreg {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kExitOk = 0, kExitCommandError = 1, kExitParseError = 2, kExitGoldenMismatch = 3 };

struct RunOptions {
  int regular_cap = kDefaultRegularCap;
  std::int64_t degree_cap = kDefaultDegreeCap;
  int power_cap = kDefaultPowerCap;
};

struct Report {
  int line = 0;
  std::string command;
  bool ok = true;
  Json result;  // null when the command failed before producing anything
  std::optional<ErrorCode> error;
  std::string error_message;

  Json to_json() const;
};

// Integers beyond 2^53 become decimal strings.
Json json_integer(const Integer& v);
Json json_integer(std::int64_t v);

Report run_command(const Session& s, const Command& c, const RunOptions& opts = {});
// Each command is isolated; one failure never stops the batch.
std::vector<Report> run(const Session& s, const RunOptions& opts = {});
int exit_code(const std::vector<Report>& reports);

std::string format_json(const std::vector<Report>& reports);
std::string format_text(const std::vector<Report>& reports);

struct GoldenCase {
  std::string name;
  MapData map;
  int expected_first_regular = 0;
  std::optional<Certificate> expected_certificate;
  std::optional<ProjSelfMap> expected_iterate;  // phi^k at the first regular k
  int cap = kDefaultRegularCap;
};

// [X^2 : Y^2 : Z^2], two affine maps, monomial maps needing 3, 4, 6, 8 and 12
// iterations, the order-n birational family for n = 3..6 and the Cremona involution.
std::vector<GoldenCase> builtin_corpus();
// One case per first-regular command carrying --expect.
std::vector<GoldenCase> corpus_from_session(const Session& s);

struct GoldenOutcome {
  std::string name;
  bool ok = false;
  int expected = 0;
  std::optional<int> observed;
  std::string certificate;
  std::string message;
};

struct VerifyReport {
  std::vector<GoldenOutcome> outcomes;
  std::set<int> witnessed;  // first regular indices of non-invertible iterates
  bool all_ok = true;
  bool index_set_witnessed = false;

  Json to_json() const;
  int exit_code() const { return all_ok ? kExitOk : kExitGoldenMismatch; }
};

VerifyReport verify_corpus(const std::vector<GoldenCase>& cases, const RunOptions& opts = {});
// Throws GoldenMismatch naming the first failing case.
void require_all_ok(const VerifyReport& r);

}  // namespace evreg
