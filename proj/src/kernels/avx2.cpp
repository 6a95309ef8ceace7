// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

// Compiled with -mavx2 (and never -mfma): every lane performs exactly the
// scalar kernel's operation sequence, so results match bit for bit.

#include "det_log.hpp"
#include "noma/kernels.hpp"

#include <immintrin.h>

namespace noma::kernels::avx2 {

namespace {

inline __m256d set1(double v) { return _mm256_set1_pd(v); }

inline __m256d log_positive(__m256d x)
{
    using namespace detail;
    const __m256i bits = _mm256_castpd_si256(x);
    __m256i hx = _mm256_srli_epi64(bits, 32);
    __m256i k = _mm256_sub_epi64(_mm256_srli_epi64(hx, 20), _mm256_set1_epi64x(1023));
    hx = _mm256_and_si256(hx, _mm256_set1_epi64x(0x000fffff));
    const __m256i i = _mm256_and_si256(_mm256_add_epi64(hx, _mm256_set1_epi64x(0x95f64)),
                                       _mm256_set1_epi64x(0x100000));
    const __m256i high = _mm256_or_si256(hx, _mm256_xor_si256(i, _mm256_set1_epi64x(0x3ff00000)));
    const __m256i low = _mm256_and_si256(bits, _mm256_set1_epi64x(0xffffffffLL));
    const __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_slli_epi64(high, 32), low));
    k = _mm256_add_epi64(k, _mm256_srli_epi64(i, 20));

    // int64 -> double for |k| < 2^51, exact: 2^52 + 2^51 keeps negative k
    // inside the same binade.
    const __m256i magic_bits = _mm256_set1_epi64x(0x4338000000000000LL);
    const __m256d dk = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_add_epi64(k, magic_bits)),
                                     set1(6755399441055744.0));

    const __m256d one = set1(1.0);
    const __m256d f = _mm256_sub_pd(m, one);
    const __m256d s = _mm256_div_pd(f, _mm256_add_pd(set1(2.0), f));
    const __m256d z = _mm256_mul_pd(s, s);
    const __m256d w = _mm256_mul_pd(z, z);
    const __m256d t1 = _mm256_mul_pd(
        w, _mm256_add_pd(set1(kLg2),
                         _mm256_mul_pd(w, _mm256_add_pd(set1(kLg4), _mm256_mul_pd(w, set1(kLg6))))));
    const __m256d t2 = _mm256_mul_pd(
        z, _mm256_add_pd(
               set1(kLg1),
               _mm256_mul_pd(w, _mm256_add_pd(set1(kLg3),
                                              _mm256_mul_pd(w, _mm256_add_pd(set1(kLg5),
                                                                             _mm256_mul_pd(w, set1(kLg7))))))));
    const __m256d r = _mm256_add_pd(t2, t1);
    const __m256d hi_part = _mm256_mul_pd(dk, set1(kLn2Hi));
    const __m256d lo_part = _mm256_mul_pd(dk, set1(kLn2Lo));

    // sel > 0 branch
    const __m256d hfsq = _mm256_mul_pd(_mm256_mul_pd(set1(0.5), f), f);
    const __m256d a = _mm256_sub_pd(
        hi_part,
        _mm256_sub_pd(
            _mm256_sub_pd(hfsq, _mm256_add_pd(_mm256_mul_pd(s, _mm256_add_pd(hfsq, r)), lo_part)),
            f));
    // sel <= 0 branch
    const __m256d b = _mm256_sub_pd(
        hi_part,
        _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(s, _mm256_sub_pd(f, r)), lo_part), f));

    const __m256i sel = _mm256_or_si256(_mm256_sub_epi64(hx, _mm256_set1_epi64x(0x6147a)),
                                        _mm256_sub_epi64(_mm256_set1_epi64x(0x6b851), hx));
    const __m256i take_a = _mm256_cmpgt_epi64(sel, _mm256_setzero_si256());
    return _mm256_blendv_pd(b, a, _mm256_castsi256_pd(take_a));
}

inline __m256d neg_log(__m256d u) { return _mm256_sub_pd(_mm256_setzero_pd(), log_positive(u)); }

inline __m256d sic(__m256d hi, __m256d lo, __m256d g)
{
    return _mm256_div_pd(_mm256_mul_pd(hi, g), _mm256_add_pd(_mm256_mul_pd(lo, g), set1(1.0)));
}

}  // namespace

void snr_from_uniforms(Scheme scheme, const SystemParams& p, const UniformBlock& u,
                       SnrBlock out)
{
    const std::size_t n = u.size();
    const std::size_t vec_end = n - n % 4;
    const __m256d rho = set1(p.rho());
    const __m256d a1 = set1(p.a1()), a2 = set1(p.a2()), b1 = set1(p.b1()), b2 = set1(p.b2());
    const auto& al = p.alpha();
    const __m256d al1 = set1(al.su1), al2 = set1(al.su2), al3 = set1(al.su3);
    const __m256d alr2 = set1(al.ru2), alr3 = set1(al.ru3);
    const bool mrc = scheme == Scheme::Mrc;

    for (std::size_t i = 0; i < vec_end; i += 4) {
        const __m256d g1 = _mm256_mul_pd(_mm256_mul_pd(al1, neg_log(_mm256_loadu_pd(&u.field[0][i]))), rho);
        const __m256d g2 = _mm256_mul_pd(_mm256_mul_pd(al2, neg_log(_mm256_loadu_pd(&u.field[1][i]))), rho);
        const __m256d g3 = _mm256_mul_pd(_mm256_mul_pd(al3, neg_log(_mm256_loadu_pd(&u.field[2][i]))), rho);
        const __m256d h2 = _mm256_mul_pd(_mm256_mul_pd(alr2, neg_log(_mm256_loadu_pd(&u.field[3][i]))), rho);
        const __m256d h3 = _mm256_mul_pd(_mm256_mul_pd(alr3, neg_log(_mm256_loadu_pd(&u.field[4][i]))), rho);

        const __m256d s1 = _mm256_min_pd(_mm256_min_pd(sic(a1, a2, g1), sic(a1, a2, g2)), sic(a1, a2, g3));
        __m256d r2 = sic(b1, b2, h2);
        __m256d r3 = sic(b1, b2, h3);
        if (mrc) {
            r2 = _mm256_add_pd(r2, _mm256_mul_pd(a2, g2));
            r3 = _mm256_add_pd(r3, _mm256_mul_pd(a2, g3));
        }
        const __m256d s2 = _mm256_min_pd(_mm256_min_pd(_mm256_mul_pd(a2, g1), r2), r3);
        const __m256d s3 = _mm256_min_pd(_mm256_mul_pd(b2, h2), _mm256_mul_pd(b2, h3));
        _mm256_storeu_pd(&out.s1[i], s1);
        _mm256_storeu_pd(&out.s2[i], s2);
        _mm256_storeu_pd(&out.s3[i], s3);
    }
    if (vec_end < n) {
        UniformBlock tail;
        for (std::size_t f = 0; f < 5; ++f)
            tail.field[f] = u.field[f].subspan(vec_end);
        scalar::snr_from_uniforms(scheme, p, tail,
                                  {out.s1.subspan(vec_end), out.s2.subspan(vec_end),
                                   out.s3.subspan(vec_end)});
    }
}

void half_rates(std::span<const double> snr, std::span<double> out)
{
    const std::size_t n = snr.size();
    const std::size_t vec_end = n - n % 4;
    const __m256d one = set1(1.0);
    const __m256d scale = set1(detail::kHalfInvLn2);
    for (std::size_t i = 0; i < vec_end; i += 4) {
        const __m256d x = _mm256_add_pd(one, _mm256_loadu_pd(&snr[i]));
        _mm256_storeu_pd(&out[i], _mm256_mul_pd(log_positive(x), scale));
    }
    if (vec_end < n)
        scalar::half_rates(snr.subspan(vec_end), out.subspan(vec_end));
}

}  // namespace noma::kernels::avx2
