#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deltasys::cli {

enum Exit : int {
    ok = 0,          // found / true / verified
    negative = 1,    // not found / false / refuted
    usage = 2,       // usage or format error
    exhausted = 3,   // budget exhausted / inconclusive
};

/// Runs one command; args exclude the program name. The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace deltasys::cli
