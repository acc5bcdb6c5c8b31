#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace ggt {

// Bad arguments, malformed words, unknown vertices. CLI maps this to exit 2.
struct input_error : std::runtime_error {
	explicit input_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Size limits hit (ball too large, cap overflow treated as error).
struct resource_error : std::runtime_error {
	explicit resource_error(const std::string &msg) : std::runtime_error(msg) {}
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace ggt
