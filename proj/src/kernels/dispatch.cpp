// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "det_log.hpp"
#include "noma/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string_view>

namespace noma::kernels {

std::string_view to_string(Isa isa) noexcept
{
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool supported(Isa isa) noexcept
{
    switch (isa) {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
#if defined(NOMA_HAVE_AVX2_KERNELS)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

Isa active() noexcept
{
    static const Isa chosen = [] {
        if (const char* env = std::getenv("NOMA_LAB_KERNEL")) {
            const std::string_view v(env);
            if (v == "scalar")
                return Isa::Scalar;
            if (v == "avx2" && supported(Isa::Avx2))
                return Isa::Avx2;
        }
        return supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    }();
    return chosen;
}

double det_log(double x) noexcept { return detail::log_positive(x); }

namespace {

Isa resolve(std::optional<Isa> isa)
{
    const Isa chosen = isa.value_or(active());
    if (!supported(chosen))
        throw std::invalid_argument("kernel ISA not supported on this machine");
    return chosen;
}

}  // namespace

void snr_from_uniforms(Scheme scheme, const SystemParams& params, const UniformBlock& uniforms,
                       SnrBlock out, std::optional<Isa> isa)
{
    const std::size_t n = uniforms.size();
    for (const auto& f : uniforms.field)
        if (f.size() != n)
            throw std::invalid_argument("snr_from_uniforms: ragged uniform block");
    if (out.s1.size() != n || out.s2.size() != n || out.s3.size() != n)
        throw std::invalid_argument("snr_from_uniforms: output size mismatch");
#if defined(NOMA_HAVE_AVX2_KERNELS)
    if (resolve(isa) == Isa::Avx2)
        return avx2::snr_from_uniforms(scheme, params, uniforms, out);
#else
    resolve(isa);
#endif
    scalar::snr_from_uniforms(scheme, params, uniforms, out);
}

void half_rates(std::span<const double> snr, std::span<double> out, std::optional<Isa> isa)
{
    if (snr.size() != out.size())
        throw std::invalid_argument("half_rates: output size mismatch");
#if defined(NOMA_HAVE_AVX2_KERNELS)
    if (resolve(isa) == Isa::Avx2)
        return avx2::half_rates(snr, out);
#else
    resolve(isa);
#endif
    scalar::half_rates(snr, out);
}

}  // namespace noma::kernels
