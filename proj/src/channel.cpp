// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "noma/channel.hpp"

#include "noma/kernels.hpp"

namespace noma::channel {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53;
constexpr std::uint32_t kMul1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept
{
    const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(prod >> 32);
    lo = static_cast<std::uint32_t>(prod);
}

inline double to_unit_interval(std::uint64_t w) noexcept
{
    return static_cast<double>((w >> 11) + 1) * 0x1.0p-53;
}

inline std::array<double, 2> block_uniforms(std::uint64_t seed, std::uint64_t stream,
                                            std::uint64_t block) noexcept
{
    const PhiloxCounter ctr{static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
                            static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    const PhiloxKey key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    const auto out = philox4x32_10(ctr, key);
    const std::uint64_t w0 = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
    const std::uint64_t w1 = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
    return {to_unit_interval(w0), to_unit_interval(w1)};
}

}  // namespace

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) noexcept
{
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

double uniform(const SeededStream& stream, std::uint64_t index) noexcept
{
    return block_uniforms(stream.seed, stream.stream_id, index >> 1)[index & 1];
}

void fill_uniforms(const SeededStream& stream, std::uint64_t first_index,
                   std::span<double> out) noexcept
{
    std::size_t k = 0;
    std::uint64_t index = first_index;
    if ((index & 1) && k < out.size()) {
        out[k++] = uniform(stream, index++);
    }
    for (; k + 1 < out.size(); k += 2, index += 2) {
        const auto pair = block_uniforms(stream.seed, stream.stream_id, index >> 1);
        out[k] = pair[0];
        out[k + 1] = pair[1];
    }
    if (k < out.size())
        out[k] = uniform(stream, index);
}

void fill_realization_uniforms(const SeededStream& stream, std::uint64_t first_realization,
                               const std::array<std::span<double>, 5>& fields) noexcept
{
    const std::size_t n = fields[0].size();
    std::array<double, 10> scratch;
    std::size_t r = 0;
    std::uint64_t index = 5 * first_realization;
    // Two realizations = ten uniforms = five whole blocks when the start is even.
    if ((index & 1) && n > 0) {
        for (std::size_t f = 0; f < 5; ++f)
            fields[f][r] = uniform(stream, index + f);
        ++r;
        index += 5;
    }
    for (; r + 1 < n; r += 2, index += 10) {
        fill_uniforms(stream, index, scratch);
        for (std::size_t f = 0; f < 5; ++f) {
            fields[f][r] = scratch[f];
            fields[f][r + 1] = scratch[5 + f];
        }
    }
    if (r < n) {
        for (std::size_t f = 0; f < 5; ++f)
            fields[f][r] = uniform(stream, index + f);
    }
}

ChannelRealization sample_realization(const SystemParams& params, const SeededStream& stream,
                                      std::uint64_t index) noexcept
{
    std::array<double, 5> u;
    fill_uniforms(stream, 5 * index, u);
    const auto& al = params.alpha();
    return {kernels::exponential_from_uniform(al.su1, u[0]),
            kernels::exponential_from_uniform(al.su2, u[1]),
            kernels::exponential_from_uniform(al.su3, u[2]),
            kernels::exponential_from_uniform(al.ru2, u[3]),
            kernels::exponential_from_uniform(al.ru3, u[4])};
}

}  // namespace noma::channel
