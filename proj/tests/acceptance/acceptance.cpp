// Runs the acceptance criteria. With no argument every criterion runs; with
// a number only that one. One line per criterion; exit 1 if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "polyherm/format.hpp"
#include "polyherm/verify.hpp"

namespace {

void print_detail(const polyherm::CheckResult& c) {
  const char* cmp = c.comparison == polyherm::Comparison::AtMost    ? "<="
                    : c.comparison == polyherm::Comparison::AtLeast ? ">="
                                                                    : "flag";
  std::printf("    %s %s: %s %s %s (%s)\n", c.pass ? "ok  " : "FAIL", c.id.c_str(),
              polyherm::format_double(c.value).c_str(), cmp, polyherm::format_double(c.threshold).c_str(),
              c.detail.c_str());
}

bool run(int number) {
  const auto r = polyherm::run_acceptance(number);
  std::printf("criterion %d %s: %s (%.1f s, budget %.0f s%s)\n", number, r.criterion.id.c_str(),
              r.pass ? "PASS" : "FAIL", r.seconds, r.criterion.budget_seconds,
              r.within_budget ? "" : ", OVER BUDGET");
  for (const auto& c : r.checks) print_detail(c);
  std::fflush(stdout);
  return r.pass;
}

}  // namespace

int main(int argc, char** argv) {
  const int count = static_cast<int>(polyherm::acceptance_criteria().size());
  if (argc > 2) {
    std::fprintf(stderr, "usage: %s [criterion 1..%d]\n", argv[0], count);
    return 2;
  }
  if (argc == 2) {
    char* end = nullptr;
    const long n = std::strtol(argv[1], &end, 10);
    if (*end != '\0' || n < 1 || n > count) {
      std::fprintf(stderr, "criterion must be 1..%d\n", count);
      return 2;
    }
    return run(static_cast<int>(n)) ? 0 : 1;
  }
  bool ok = true;
  for (int i = 1; i <= count; ++i) ok = run(i) && ok;
  return ok ? 0 : 1;
}
