#include <cstdio>
#include <cstdlib>

#include "ffgamma/acceptance.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240601;
  int failed = 0;
  for (const ffgamma::CriterionResult& r : ffgamma::run_acceptance(seed)) {
    std::printf("%s  AC%-2d %-48s %7.3fs / %4.0fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.budget, r.detail.c_str());
    failed += !r.pass;
  }
  std::printf("%d of %d criteria passed\n", ffgamma::kCriteria - failed, ffgamma::kCriteria);
  return failed ? 1 : 0;
}
