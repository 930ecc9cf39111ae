// Verification-suite runner: one pass/fail line per criterion.
#include <cstdio>

#include "ratquad/acceptance.hpp"

int main(int argc, char** argv) {
  uint64_t seed = 12345;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  auto results = ratquad::run_acceptance(seed);
  bool all = true;
  for (const auto& c : results) {
    std::printf("criterion %02d %-28s %s  (%s)\n", c.id, c.name.c_str(),
                c.pass ? "PASS" : "FAIL", c.detail.c_str());
    all = all && c.pass;
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
  return all ? 0 : 1;
}
