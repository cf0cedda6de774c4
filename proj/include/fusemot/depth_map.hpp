// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace fusemot {

/// Dense per-pixel depth in meters, row-major. A value of 0 marks an invalid
/// pixel (no stereo match); valid pixels are strictly positive.
struct DepthMap {
    int width = 0;
    int height = 0;
    std::vector<float> depth_m;

    DepthMap() = default;
    DepthMap(int w, int h, float fill = 0.f)
        : width(w), height(h), depth_m(static_cast<std::size_t>(w) * h, fill) {}

    float at(int u, int v) const {
        return depth_m[static_cast<std::size_t>(v) * width + u];
    }
    float& at(int u, int v) {
        return depth_m[static_cast<std::size_t>(v) * width + u];
    }
    bool valid(int u, int v) const { return at(u, v) > 0.f; }
    bool in_bounds(int u, int v) const {
        return u >= 0 && u < width && v >= 0 && v < height;
    }
};

}  // namespace fusemot
