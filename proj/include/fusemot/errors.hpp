// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fusemot {

/// Base class for all recoverable fusemot errors. Contract violations
/// (bad arguments, broken invariants) throw std::invalid_argument /
/// std::out_of_range instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fusemot
