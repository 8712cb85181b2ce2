#pragma once

#include <string_view>
#include <vector>

namespace lrsk {

// The worked-example documents shipped in fixtures/, compiled into the binary.
// Throws lrsk::Error for an unknown name.
std::string_view embedded_fixture(std::string_view name);

std::vector<std::string_view> embedded_fixture_names();

} // namespace lrsk
