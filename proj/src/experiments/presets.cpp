// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "noma/lab/presets.hpp"

#include "preset_data.hpp"

#include <algorithm>

namespace noma::lab {

std::vector<std::string_view> preset_names()
{
    std::vector<std::string_view> names;
    for (const auto& p : detail::kPresets)
        names.push_back(p.name);
    std::sort(names.begin(), names.end());
    return names;
}

std::optional<std::string_view> preset_text(std::string_view name)
{
    for (const auto& p : detail::kPresets)
        if (p.name == name)
            return p.text;
    return std::nullopt;
}

}  // namespace noma::lab
