// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace noma::lab {

/// Names of the built-in figure presets, sorted.
std::vector<std::string_view> preset_names();
/// Config text of a preset, as shipped in presets/<name>.cfg.
std::optional<std::string_view> preset_text(std::string_view name);

}  // namespace noma::lab
