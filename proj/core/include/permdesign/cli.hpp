#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permdesign {

/// Command-line front end. Exit codes: 0 on success, 1 when --strict is set
/// and a verification verdict is false (or a strict search found nothing),
/// 2 on usage or input-format errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace permdesign
