#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "wtss/activation.hpp"
#include "wtss/error.hpp"
#include "wtss/instance.hpp"

namespace wtss {

/// WTG is a line-oriented text format; '#' starts a comment.
///
///     wtg 1
///     mode undirected|directed
///     n <count>
///     v <id> <tau>          one per vertex
///     e <u> <v> <weight>    one per edge (directed: arc u -> v)
///     p <id> <incentive>    optional; absent entries are 0
///
/// Numbers are `int` or `int/int`. The header lines come first, in this order.
struct WtgDocument {
    Instance instance;
    std::optional<IncentiveVector> incentives;
};

class WtgParseError : public InvalidInput {
public:
    WtgParseError(int line, int column, const std::string& message)
        : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] int column() const { return column_; }

private:
    int line_;
    int column_;
};

WtgDocument parse_wtg(std::string_view text);

/// Reads only `p <id> <value>` lines (comments allowed) for an instance with n vertices.
IncentiveVector parse_incentives(std::string_view text, int n);

/// Canonical form: header, vertices ascending, edges in lexicographic order,
/// then incentives ascending when given. Rationals are printed exactly.
std::string serialize_wtg(const Instance& instance, const IncentiveVector* incentives = nullptr);

}  // namespace wtss
