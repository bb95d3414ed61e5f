#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace optrepair::cli {

enum Exit { Ok = 0, False = 1, BadInput = 2, OverBudget = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace optrepair::cli
