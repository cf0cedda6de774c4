// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#include "fusemot/boxes.hpp"

#include <algorithm>
#include <stdexcept>

namespace fusemot {

BBox2D BBox2D::clamped(double left, double top, double width, double height,
                       int image_w, int image_h) {
    if (image_w <= 0 || image_h <= 0)
        throw std::invalid_argument("BBox2D::clamped: empty image");
    const double x0 = std::max(left, 0.0);
    const double y0 = std::max(top, 0.0);
    const double x1 = std::min(left + width, static_cast<double>(image_w));
    const double y1 = std::min(top + height, static_cast<double>(image_h));
    if (x1 - x0 < 1.0 || y1 - y0 < 1.0)
        throw InvalidBox("box lies (almost) entirely outside the image");
    BBox2D box;
    box.left = x0;
    box.top = y0;
    box.width = x1 - x0;
    box.height = y1 - y0;
    return box;
}

void BBox3D::validate() const {
    if (!(width > 0.0 && height > 0.0 && depth > 0.0))
        throw std::invalid_argument("BBox3D: extents must be positive");
}

}  // namespace fusemot
