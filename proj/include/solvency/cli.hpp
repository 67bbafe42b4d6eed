#ifndef SOLVENCY_CLI_HPP
#define SOLVENCY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace solvency::cli {

// Runs one command line (without the program name) against the given streams.
// Exit codes: 0 success, 1 domain failure (failed axioms, oracle mismatch,
// insolvency under --strict), 2 usage or parse error, 3 budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace solvency::cli

#endif // SOLVENCY_CLI_HPP
