#pragma once

#include <cstdint>

namespace dijoins {

// Node and arc ids are opaque handles. Fresh graphs mint arc ids densely in
// insertion order; derived graphs (reversal, vertex deletion, condensation
// inputs) keep the ids of surviving arcs unchanged.
using NodeId = std::int32_t;
using ArcId = std::int32_t;

// Arc weights are nonnegative integers. Sums of weights stay well inside
// 64 bits for every supported instance size.
using Weight = std::int64_t;

}  // namespace dijoins
