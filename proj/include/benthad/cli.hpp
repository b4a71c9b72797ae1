#ifndef BENTHAD_CLI_HPP
#define BENTHAD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace benthad::cli {

/// Runs one command (argv without the program name) and writes the JSON
/// report. Exit status: 0 success, 1 usage error, 2 domain error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace benthad::cli

#endif
