#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcprod::cli {

// Exit codes: 0 success, 1 domain error, 2 usage error. Structured results go
// to `out` as JSON, human-readable summaries to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace pcprod::cli
