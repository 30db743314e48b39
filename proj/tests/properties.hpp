#pragma once

#include "k3gm/report.hpp"

#include <cstdint>
#include <vector>

namespace k3gm::props {

inline constexpr int kInstances = 200;
inline constexpr std::uint32_t kSeed = 20240611;

// One check per law, each evaluated on `instances` random inputs.
std::vector<Check> series_core_laws(int instances = kInstances, std::uint32_t seed = kSeed);

} // namespace k3gm::props
