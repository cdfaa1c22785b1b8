#pragma once

// Figure presets: one name expands to the full operating point quoted in the
// corresponding figure caption, expressed as config key-value pairs so the
// CLI treats presets and config files uniformly.

#include <string>
#include <vector>

#include "jc/io.hpp"

namespace jc {

Config preset(const std::string& name);   // throws ConfigError for unknown names
std::vector<std::string> preset_names();

}  // namespace jc
