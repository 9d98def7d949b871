#ifndef QCALC_CLI_HPP
#define QCALC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qcalc {

/// Command dispatcher behind the qcalc binary. Exit codes: 0 on success,
/// 1 on verification failure or a diverging limit, 2 on usage/parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qcalc

#endif
