#pragma once

#include <string>

#include "optrepair/instance.hpp"
#include "optrepair/io.hpp"

namespace bench {

// A key with `values` values per key, `keys` keys, under a functional dependency.
inline optrepair::Instance fd_instance(int keys, int values) {
  std::string db;
  for (int k = 0; k < keys; ++k)
    for (int v = 0; v < values; ++v) db += "R(k" + std::to_string(k) + ",v" + std::to_string(v) + ").\n";
  return optrepair::Instance(optrepair::parse_database(db),
                             optrepair::parse_constraints("R(x,y), R(x,z), y != z -> false."), {});
}

// A path a0 -> a1 -> ... propagating A; conflicts grow with the path length.
inline optrepair::Instance chain_instance(int n) {
  std::string db = "A(a0).\nB(a" + std::to_string(n) + ").\n";
  for (int i = 0; i < n; ++i) db += "R(a" + std::to_string(i) + ",a" + std::to_string(i + 1) + ").\n";
  return optrepair::Instance(optrepair::parse_database(db),
                             optrepair::parse_constraints("R(x,y), A(x) -> A(y).\nA(x), B(x) -> false."), {});
}

}  // namespace bench
