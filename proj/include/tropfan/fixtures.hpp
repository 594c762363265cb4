#pragma once

#include <string>
#include <vector>

#include "tropfan/fan.hpp"

namespace tropfan {

/// Names of the built-in fixture fans.
std::vector<std::string> fixture_names();

/// Description of a built-in fixture; throws InputError for an unknown name.
FanDescription fixture_description(const std::string& name);
Fan fixture(const std::string& name);
std::string fixture_summary(const std::string& name);

}  // namespace tropfan
