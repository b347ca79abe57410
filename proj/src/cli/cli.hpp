#pragma once

// Command-line driver. Exposed as a function so tests can invoke subcommands
// in-process with synthetic argv vectors.
//
// Exit codes: 0 success, 2 configuration error, 3 requested inputs outside the
// validity of the catalog, 4 I/O failure, 5 verification reported a failure
// (with --strict, as-printed discrepancies count as failures too).

namespace gkmn::cli {

int run(int argc, const char* const* argv);

}  // namespace gkmn::cli
