#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thick::acceptance {

struct Config {
  unsigned seed = 20240611;
  int fuel = 200;
};

struct Outcome {
  int criterion = 0;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Wall-clock budget per criterion.
constexpr double kSecondsPerCriterion = 60.0;

std::vector<Outcome> run_all(const Config& config);

/// One line per criterion; returns true when every criterion passed.
bool report(const std::vector<Outcome>& outcomes, std::ostream& out);

}  // namespace thick::acceptance
