// One line per acceptance criterion; exits nonzero if any fails.

#include <iostream>

#include "hstar/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& c : hstar::verify::criteria()) {
    auto r = hstar::verify::run(c);
    if (!r.passed) ++failed;
    std::cout << hstar::verify::format_line(r) << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << '\n';
  return failed ? 1 : 0;
}
