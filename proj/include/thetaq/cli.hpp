#pragma once

#include <iosfwd>

namespace thetaq {

/// Command line entry point. Writes one JSON document to `out` (or to the
/// --out file); errors go to `err` as a one-line JSON object. Returns the
/// process exit status: 0 ok, 2 validation, 3 numerical, 4 contract.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thetaq
