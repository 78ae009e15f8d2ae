#pragma once

#include <string>
#include <vector>

namespace plancol {

// Command-line front end.  Exit status: 0 on success, 1 on a domain error
// (bad input data, unsatisfiable instance, failed verification), 2 on a
// usage error.  All output is byte-deterministic for a fixed seed; timing
// goes to stderr only.
int run(const std::vector<std::string>& args);

}  // namespace plancol
