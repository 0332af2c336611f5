#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dlpbench {

/// A `name(key=value,...)` term as used in canonical method ids.
struct Call {
    std::string name;
    std::vector<std::pair<std::string, std::string>> args;

    std::optional<std::string> get(std::string_view key) const;
    /// Numeric argument or `fallback` when absent; ParseError if malformed.
    double number(std::string_view key, double fallback) const;
    int integer(std::string_view key, int fallback) const;
    /// ParseError naming the first key not in `allowed`.
    void expect_keys(std::initializer_list<std::string_view> allowed) const;

    /// `name` or `name(k=v,...)` with arguments in stored order.
    std::string str() const;
};

/// Parses one term. Names and keys are lower-cased; whitespace is ignored.
Call parse_call(std::string_view text);

}  // namespace dlpbench
