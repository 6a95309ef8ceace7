// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#pragma once

#include "noma/model.hpp"

#include <array>
#include <cstdint>
#include <span>

/// Counter-based sampling of Rayleigh power gains.
///
/// The uniform stream is Philox4x32-10 keyed by the 64-bit seed. Uniform
/// number `i` of stream `s` comes from the counter block
/// (lo32(i/2), hi32(i/2), lo32(s), hi32(s)); the two 64-bit halves of the
/// output (words 1:0 and 3:2) serve i even and odd respectively, mapped to
/// (0, 1] as ((w >> 11) + 1) * 2^-53. A realization consumes five uniforms,
/// realization r of a stream using uniforms 5r..5r+4 in the order
/// su1, su2, su3, ru2, ru3.
namespace noma::channel {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// One Philox4x32-10 block.
PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

struct SeededStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

/// Pure mapping (seed, stream_id, index) -> uniform in (0, 1].
double uniform(const SeededStream& stream, std::uint64_t index) noexcept;

/// out[k] = uniform(stream, first_index + k)
void fill_uniforms(const SeededStream& stream, std::uint64_t first_index,
                   std::span<double> out) noexcept;

/// Uniforms for realizations [first, first + n) laid out per field
/// (su1, su2, su3, ru2, ru3); each span in `fields` must hold n values.
void fill_realization_uniforms(const SeededStream& stream, std::uint64_t first_realization,
                               const std::array<std::span<double>, 5>& fields) noexcept;

/// Realization `index` of the stream: beta = -alpha * ln(U) per link.
ChannelRealization sample_realization(const SystemParams& params, const SeededStream& stream,
                                      std::uint64_t index) noexcept;

}  // namespace noma::channel
