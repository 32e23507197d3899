#include <cstdio>
#include <cstdlib>
#include <string>

#include "hurwitz/acceptance.hpp"

int main(int argc, char** argv) {
  hurwitz::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) options.only.push_back(std::atoi(argv[i]));
  hurwitz::CutJoinEngine engine;
  bool ok = true;
  hurwitz::run_acceptance(engine, options, [&](const hurwitz::CriterionResult& r) {
    std::printf("%s\n", hurwitz::format_result(r).c_str());
    std::fflush(stdout);
    ok = ok && r.passed;
  });
  return ok ? 0 : 1;
}
