// Acceptance gate: one PASS/FAIL line per criterion. Criteria 1 to 11 run in
// process; criterion 12 runs the command-line self-test end to end.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "hlvir/desk.hpp"

#ifndef HLVIR_CLI_PATH
#error "HLVIR_CLI_PATH must name the command-line binary"
#endif

namespace {

constexpr double kEndToEndBudgetSeconds = 15 * 60;

bool end_to_end() {
  const std::string command = std::string("\"") + HLVIR_CLI_PATH + "\" selftest --suite desk 2>&1";
  const auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    std::cout << "FAIL  criterion 12: could not start " << HLVIR_CLI_PATH << "\n";
    return false;
  }
  std::string output;
  char buffer[4096];
  while (std::fgets(buffer, sizeof buffer, pipe) != nullptr) output += buffer;
  const int status = pclose(pipe);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  const bool ok = code == 0 && seconds <= kEndToEndBudgetSeconds &&
                  output.find("criteria plus embedding check, 0 failures") != std::string::npos;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.1f s", seconds);
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion 12: `hlvir selftest --suite desk` exits " << code << " in "
            << timing << " (budget 900 s)\n";
  if (!ok) std::cout << output;
  return ok;
}

}  // namespace

int main() {
  hlvir::DeskOptions options;
  options.on_result = [](const hlvir::CriterionResult& r) { std::cout << r.to_text() << std::flush; };
  int failures = 0;
  for (const auto& r : hlvir::run_desk_suite(options)) failures += r.passed ? 0 : 1;
  if (!end_to_end()) ++failures;
  std::cout << "acceptance: " << (12 - failures) << "/12 criteria pass\n";
  return failures == 0 ? 0 : 1;
}
