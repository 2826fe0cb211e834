#pragma once

#include <cstdint>

namespace decentran {

// Simulated time. Microsecond resolution so sub-millisecond link latencies
// stay exact. All components share one virtual clock; wall time never leaks
// into simulation state.
using SimTime = std::int64_t;
using SimDuration = std::int64_t;

constexpr SimDuration sim_us(std::int64_t v) { return v; }
constexpr SimDuration sim_ms(std::int64_t v) { return v * 1000; }
constexpr SimDuration sim_sec(std::int64_t v) { return v * 1000000; }

constexpr SimDuration sim_ms_f(double v) { return static_cast<SimDuration>(v * 1000.0); }

constexpr double to_ms(SimDuration d) { return static_cast<double>(d) / 1000.0; }
constexpr double to_sec(SimDuration d) { return static_cast<double>(d) / 1000000.0; }

} // namespace decentran
