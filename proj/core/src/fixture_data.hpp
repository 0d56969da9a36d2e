#pragma once

#include <string_view>

namespace projcodes::detail {

/// Contents of a file shipped under core/data, by file stem; empty when unknown.
std::string_view fixture_text(std::string_view name);

}  // namespace projcodes::detail
