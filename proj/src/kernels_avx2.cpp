#include "rydgate/kernels.hpp"

#include <immintrin.h>

// AVX2/FMA kernels. Layout is interleaved re/im, two complex doubles per
// 256-bit vector. Complex multiply uses the fmaddsub pattern:
//   p = fmaddsub(re(a), x, im(a)*swap(x))
// which yields (ar*xr - ai*xi, ar*xi + ai*xr) per lane pair.

namespace rydgate::kern {

namespace {

inline __m256d cmul_acc(__m256d acc, __m256d ar, __m256d ai, __m256d x) {
    const __m256d xs = _mm256_permute_pd(x, 0x5);
    const __m256d t = _mm256_mul_pd(ai, xs);
    return _mm256_add_pd(acc, _mm256_fmaddsub_pd(ar, x, t));
}

void axpy_avx2(cplx* y, const cplx* x, cplx a, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    auto* yd = reinterpret_cast<double*>(y);
    const auto* xd = reinterpret_cast<const double*>(x);
    std::size_t i = 0;
    for (; i + 4 <= 2 * n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(xd + i);
        const __m256d yv = _mm256_loadu_pd(yd + i);
        _mm256_storeu_pd(yd + i, cmul_acc(yv, ar, ai, xv));
    }
    if (i < 2 * n) y[i / 2] += a * x[i / 2];
}

void gemm_acc_avx2(cplx* c, const cplx* a, const cplx* b, int m, int k, int n, cplx alpha) {
    for (int i = 0; i < m; ++i) {
        cplx* crow = c + static_cast<std::size_t>(i) * n;
        const cplx* arow = a + static_cast<std::size_t>(i) * k;
        for (int p = 0; p < k; ++p) {
            const cplx w = alpha * arow[p];
            if (w == cplx{}) continue;
            axpy_avx2(crow, b + static_cast<std::size_t>(p) * n, w, static_cast<std::size_t>(n));
        }
    }
}

void hadamard_acc_avx2(cplx* y, const cplx* w, const cplx* x, std::size_t n) {
    auto* yd = reinterpret_cast<double*>(y);
    const auto* wd = reinterpret_cast<const double*>(w);
    const auto* xd = reinterpret_cast<const double*>(x);
    std::size_t i = 0;
    for (; i + 4 <= 2 * n; i += 4) {
        const __m256d wv = _mm256_loadu_pd(wd + i);
        const __m256d xv = _mm256_loadu_pd(xd + i);
        const __m256d wr = _mm256_movedup_pd(wv);
        const __m256d wi = _mm256_permute_pd(wv, 0xF);
        const __m256d yv = _mm256_loadu_pd(yd + i);
        _mm256_storeu_pd(yd + i, cmul_acc(yv, wr, wi, xv));
    }
    if (i < 2 * n) y[i / 2] += w[i / 2] * x[i / 2];
}

void block_right_acc4_avx2(cplx* out, const cplx* s, const cplx* h, int nblk, cplx alpha) {
    const int ld = 4 * nblk;
    for (int i = 0; i < 4; ++i) {
        const cplx* srow = s + static_cast<std::size_t>(i) * ld;
        cplx* orow = out + static_cast<std::size_t>(i) * ld;
        for (int b = 0; b < nblk; ++b) {
            const cplx* sb = srow + 4 * b;
            auto* ob = reinterpret_cast<double*>(orow + 4 * b);
            __m256d acc0 = _mm256_setzero_pd();
            __m256d acc1 = _mm256_setzero_pd();
            for (int p = 0; p < 4; ++p) {
                const cplx w = alpha * sb[p];
                const __m256d wr = _mm256_set1_pd(w.real());
                const __m256d wi = _mm256_set1_pd(w.imag());
                const auto* hrow = reinterpret_cast<const double*>(h + 4 * p);
                acc0 = cmul_acc(acc0, wr, wi, _mm256_loadu_pd(hrow));
                acc1 = cmul_acc(acc1, wr, wi, _mm256_loadu_pd(hrow + 4));
            }
            _mm256_storeu_pd(ob, _mm256_add_pd(_mm256_loadu_pd(ob), acc0));
            _mm256_storeu_pd(ob + 4, _mm256_add_pd(_mm256_loadu_pd(ob + 4), acc1));
        }
    }
}

}  // namespace

const Ops* avx2_ops_impl() {
    static const Ops ops{axpy_avx2, gemm_acc_avx2, hadamard_acc_avx2,
                         block_right_acc4_avx2, "avx2"};
    return &ops;
}

}  // namespace rydgate::kern
