#pragma once

namespace braceblocks {

// Full command-line interface. Returns the process exit code:
//   0  requested work done, every verification passed
//   1  a mathematical check failed (the first failing identity is named)
//   2  unusable input: parse errors, unknown names, parameters out of range
int run_cli(int argc, const char* const* argv);

}  // namespace braceblocks
