#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

/// Standard fans: P1, P2, P3, P1xP1, F1, F2 (Hirzebruch F_a has rays
/// (1,0), (0,1), (-1,a), (0,-1)). Throws InputError for unknown names.
Fan builtin_fan(std::string_view name);

std::vector<std::string> builtin_fan_names();

}  // namespace toric
