#pragma once

namespace nqp::cli {

/// Parses argv and executes one subcommand. Exit codes: 0 success,
/// 2 usage error, 3 data error, 4 numerical failure.
int run(int argc, char** argv);

}  // namespace nqp::cli
