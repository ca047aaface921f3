// Copyright 2026 the nanoloop developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace nanoloop {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nanoloop
