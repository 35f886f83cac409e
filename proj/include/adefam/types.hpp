#pragma once

#include <cstdint>
#include <vector>

namespace adefam {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

}  // namespace adefam
