#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "hgx/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  bool all = true;
  hgx::run_acceptance(only, [&](const hgx::CriterionResult& r) {
    std::printf("%s\n", hgx::format_criterion(r).c_str());
    std::fflush(stdout);
    all = all && r.pass;
  });
  return all ? 0 : 1;
}
