#pragma once

#include <random>
#include <string>
#include <vector>

#include "thick/chart.hpp"

namespace testing_support {

inline thick::Poly P(const std::string& s) { return thick::parse_poly(s); }

inline thick::Boundary boundary(std::vector<std::string> vars) {
  thick::Boundary b;
  for (auto& v : vars) b.append(v.empty() ? std::nullopt : std::optional<std::string>(v));
  return b;
}

inline thick::Poly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_terms,
                               int max_exp) {
  std::uniform_int_distribution<int> nterms(0, max_terms), exp(0, max_exp), coef(-3, 3);
  thick::Poly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::map<std::string, int> e;
    for (const auto& v : vars) e[v] = exp(rng);
    p += thick::Poly(thick::Monomial(e), coef(rng));
  }
  return p;
}

}  // namespace testing_support
