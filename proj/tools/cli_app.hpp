#pragma once

// The curveforge command-line driver, callable in-process for tests.

#include <ostream>
#include <string>
#include <vector>

namespace curveforge::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_parse = 3,
    exit_cap = 4,
    exit_domain = 5,
    exit_io = 6,
};

struct SubcommandInfo {
    std::string name;
    std::string summary;
    /// Library operations the subcommand calls.
    std::vector<std::string> operations;
};

const std::vector<SubcommandInfo>& subcommand_table();

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curveforge::cli
