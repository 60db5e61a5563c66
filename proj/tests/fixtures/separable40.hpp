// Generated by tests/oracles/separable_oracle.py; LP-verified separable.
#pragma once

#include <array>

namespace goldnews::testkit {

struct SeparablePoint {
  std::array<double, 4> x;
  int y;
};

inline constexpr std::array<SeparablePoint, 40> kSeparable40 = {{
    {{0.266, 0.112, 0.786, 0.52}, 1},
    {{0.934, 0.646, 0.128, 0.922}, 1},
    {{0.898, 0.346, 0.885, 0.278}, 1},
    {{0.693, 0.055, 0.322, 0.295}, 1},
    {{0.923, 0.147, 0.221, 0.467}, 1},
    {{0.991, 0.546, 0.059, 0.502}, 1},
    {{0.492, 0.072, 0.433, 0.531}, 1},
    {{0.364, 0.316, 0.778, 0.636}, 1},
    {{0.726, 0.556, 0.798, 0.828}, 1},
    {{0.983, 0.185, 0.351, 0.101}, 1},
    {{0.298, 0.024, 0.124, 0.562}, 1},
    {{0.226, 0.245, 0.812, 0.645}, 1},
    {{0.868, 0.515, 0.343, 0.491}, 1},
    {{0.837, 0.058, 0.6, 0.567}, 1},
    {{0.692, 0.343, 0.573, 0.288}, 1},
    {{0.91, 0.263, 0.891, 0.462}, 1},
    {{0.485, 0.129, 0.12, 0.319}, 1},
    {{0.786, 0.018, 0.93, 0.102}, 1},
    {{0.36, 0.138, 0.697, 0.557}, 1},
    {{0.226, 0.179, 0.882, 0.518}, 1},
    {{0.168, 0.421, 0.878, 0.101}, -1},
    {{0.079, 0.872, 0.998, 0.868}, -1},
    {{0.054, 0.782, 0.283, 0.558}, -1},
    {{0.384, 0.496, 0.162, 0.427}, -1},
    {{0.632, 0.983, 0.857, 0.289}, -1},
    {{0.501, 0.587, 0.31, 0.285}, -1},
    {{0.009, 0.517, 0.345, 0.335}, -1},
    {{0.081, 0.845, 0.55, 0.701}, -1},
    {{0.321, 0.598, 0.751, 0.417}, -1},
    {{0.008, 0.764, 0.592, 0.108}, -1},
    {{0.178, 0.972, 0.104, 0.174}, -1},
    {{0.257, 0.754, 0.006, 0.954}, -1},
    {{0.279, 0.826, 0.929, 0.633}, -1},
    {{0.341, 0.81, 0.185, 0.457}, -1},
    {{0.842, 0.702, 0.193, 0.326}, -1},
    {{0.514, 0.862, 0.223, 0.471}, -1},
    {{0.625, 0.871, 0.372, 0.251}, -1},
    {{0.529, 0.905, 0.046, 0.718}, -1},
    {{0.301, 0.975, 0.279, 0.025}, -1},
    {{0.794, 0.962, 0.612, 0.612}, -1},
}};

}  // namespace goldnews::testkit
