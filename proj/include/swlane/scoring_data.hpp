#pragma once

#include <string_view>

namespace swlane::detail {

// Empty view for an unknown name.
std::string_view builtin_matrix_text(std::string_view lower_name);

}  // namespace swlane::detail
