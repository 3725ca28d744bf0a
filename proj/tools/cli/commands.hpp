#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starmap/oracle.hpp"
#include "starmap/serialize.hpp"

namespace starmap::cli {

enum ExitCode { kPass = 0, kFail = 1, kRefused = 2 };

enum class Format { Csv, Json };
enum class Source { Formula, Oracle };

struct Options {
  Format format = Format::Csv;
  Source source = Source::Formula;
  std::optional<int> parity;
  Budget budget;
};

// Largest n accepted by the closed-form and solver tables.
inline constexpr int kFormulaLimit = 40;
inline constexpr int kStirlingLimit = 200;
// Transition matrices go up to degree 12; the reduction works at n+1.
inline constexpr int kIdentityLimit = 11;

struct Item {
  std::string check;
  std::string expected;
  std::string actual;
  std::string provenance;
  bool pass() const { return expected == actual; }
};

struct RunReport {
  std::string command;
  std::string status;  // pass | fail | refused
  std::string message;
  std::vector<Item> items;

  void finish();
  Json to_json() const;
};

/// Writes a count table; throws BudgetExceeded or InvalidInput on refusal.
void write_table(const std::string& family, int n, const Options& options, std::ostream& out);

/// Runs a verification suite; throws BudgetExceeded beyond its budget.
RunReport verify(const std::string& suite, int n, const Options& options);

/// psi | invert | classify | contract | expand on canonical JSON text.
Json transform(const std::string& direction, std::string_view input);

/// view: auto | map | labeled | tree | aux
std::string export_dot(std::string_view input, const std::string& view);

/// Full command line: parses, dispatches, maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starmap::cli
