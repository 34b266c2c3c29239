#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rosetree/bench.hpp"

namespace rosetree::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // parse, IO and consistency errors
inline constexpr int kUsage = 2;

// Entry point behind the `rosetree` binary. `args` excludes the program name;
// `in` is read when a subcommand is given no file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

nlohmann::json to_json(const bench::Report& report);

}  // namespace rosetree::cli
