// Acceptance suite: one line per criterion, then the total runtime.

#include <array>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>

#include "fqg/selftest.hpp"

#ifndef FQG_CLI
#error "FQG_CLI must name the fqg executable"
#endif

namespace {

struct Run {
  std::string out;
  int status = -1;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string("\"") + FQG_CLI + "\" " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), n);
  r.status = pclose(pipe.release());
  return r;
}

}  // namespace

int main() {
  using namespace fqg::selftest;
  const auto start = std::chrono::steady_clock::now();
  auto results = run_criteria();

  CriterionResult det{12, "determinism", true, 2, {}};
  const Run first = run_cli("selftest --format json");
  const Run second = run_cli("selftest --format json");
  if (first.status != 0 || second.status != 0) {
    det.pass = false;
    det.failures.push_back("fqg selftest exited with status " + std::to_string(first.status) + " and " +
                           std::to_string(second.status));
  }
  if (first.out.empty() || first.out != second.out) {
    det.pass = false;
    det.failures.push_back("the two JSON outputs differ or are empty");
  }
  results.push_back(det);

  bool all = true;
  for (const auto& r : results) {
    std::cout << criterion_line(r);
    all = all && r.pass;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool fast = seconds < 60.0;
  std::cout << (fast ? "[PASS] " : "[FAIL] ") << "runtime " << std::fixed << std::setprecision(1) << seconds
            << " s (limit 60 s)\n";
  return all && fast ? 0 : 1;
}
