#include "rssiprox/common.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

namespace rssiprox {

InputError::InputError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string format_double(double value) {
    if (value == 0.0) {
        return "0"; // folds -0 into 0 so outputs stay byte-stable
    }
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return std::string(buf.data(), end);
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw InputError("not a number: '" + std::string(text) + "'");
    }
    if (!std::isfinite(value)) {
        throw InputError("non-finite number: '" + std::string(text) + "'");
    }
    return value;
}

long long parse_int(std::string_view text) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw InputError("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

} // namespace rssiprox
