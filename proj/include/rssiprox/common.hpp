#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rssiprox {

/// Malformed or unreadable input data (trace files, feature files, model JSON).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
    InputError(std::size_t line, const std::string& what);

    /// 1-based line number of the offending row, 0 when not line-oriented.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

/// Invalid configuration value or combination.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double value);

/// Strict full-string parsers; throw InputError on trailing garbage or overflow.
double parse_double(std::string_view text);
long long parse_int(std::string_view text);

} // namespace rssiprox
