#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pierce/core.hpp"
#include "pierce/coverage.hpp"
#include "pierce/piercing.hpp"

namespace pierce {

/// Malformed or schema-violating instance text.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads either instance form:
///   {"problem":"coverage","domain":[0,5],"intervals":[[0,2],[1,4]]}
///   {"problem":"piercing","xdomain":[0,3],"ydomain":[0,3],
///    "crosses":[{"h":[0,1],"v":[0,1]}]}
/// Integer coordinates are kept. If any coordinate is a decimal, every axis
/// of the instance is replaced by its dense ranks. Does not validate
/// containment; call validate() for that.
Instance parse_instance(std::string_view text);

/// Compact form, keys in the order shown above, no trailing newline.
std::string to_json(const Instance& instance);
std::string to_json(const CoverageVerdict& verdict);
std::string to_json(const PiercingVerdict& verdict);
std::string to_json(const MinimalityReport& report);

Instance load_instance(const std::filesystem::path& path);
/// Writes to_json(instance) plus a newline.
void save_instance(const std::filesystem::path& path, const Instance& instance);

}  // namespace pierce
