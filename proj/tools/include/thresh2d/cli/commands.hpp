#pragma once

// Subcommands of the thresh2d tool. Each returns the process exit code:
// 0 success, 1 verification failure or mismatch, 2 usage error.

#include "thresh2d/arrangement.hpp"
#include "thresh2d/gridfn.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace thresh2d::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

enum class Format { csv, json };

/// Quantity groups accepted by `count --quantities`, in column order.
const std::vector<std::string>& quantity_names();

/// Fixed CSV columns contributed by a quantity group.
std::vector<std::string> columns_for(const std::string& quantity);

struct CountArgs {
    int m = 0;
    int n = 0;
    std::vector<std::string> quantities;  // empty = all
    Format format = Format::csv;
};

struct TeachArgs {
    int m = 0;
    int n = 0;
    std::int64_t a0 = 0, a1 = 0, a2 = 0;
    Side side = Side::le;
    bool json = false;
};

struct ArrangeArgs {
    int m = 0;
    int n = 0;
    ArrangementMode mode = ArrangementMode::plane;
    std::optional<std::string> svg_path;
    std::optional<Viewport> viewport;
};

int cmd_count(const CountArgs& args, std::ostream& out);
/// Writes one JSON record per threshold function, then a summary record.
int cmd_enumerate(int m, int n, std::ostream& out);
int cmd_teach(const TeachArgs& args, std::ostream& out);
int cmd_arrange(const ArrangeArgs& args, std::ostream& out);

/// Parses "a0,a1,a2".
std::vector<std::int64_t> parse_int_list(const std::string& text);
/// Parses an integer or p/q.
Rat parse_rat(const std::string& text);

/// Full command-line entry point used by main().
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thresh2d::cli
