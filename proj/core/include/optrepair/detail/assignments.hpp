#pragma once

#include <string>
#include <vector>

#include "optrepair/model.hpp"

namespace optrepair {

template <class Visit>
void for_each_assignment(const std::vector<std::string>& variables,
                         const std::vector<std::string>& domain, Visit&& visit) {
  Substitution s;
  if (variables.empty()) {
    visit(s);
    return;
  }
  if (domain.empty()) return;
  std::vector<std::size_t> digit(variables.size(), 0);
  for (std::size_t i = 0; i < variables.size(); ++i) s[variables[i]] = domain[0];
  while (true) {
    if (!visit(s)) return;
    std::size_t i = variables.size();
    while (true) {
      if (i == 0) return;
      --i;
      if (++digit[i] < domain.size()) {
        s[variables[i]] = domain[digit[i]];
        break;
      }
      digit[i] = 0;
      s[variables[i]] = domain[0];
    }
  }
}

}  // namespace optrepair
