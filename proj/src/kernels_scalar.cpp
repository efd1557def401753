#include "rydgate/kernels.hpp"

// Reference kernels. Kept free of tricks so they double as the correctness
// oracle for the SIMD variants.

namespace rydgate::kern {

namespace {

void axpy_scalar(cplx* y, const cplx* x, cplx a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void gemm_acc_scalar(cplx* c, const cplx* a, const cplx* b, int m, int k, int n, cplx alpha) {
    for (int i = 0; i < m; ++i) {
        cplx* crow = c + static_cast<std::size_t>(i) * n;
        const cplx* arow = a + static_cast<std::size_t>(i) * k;
        for (int p = 0; p < k; ++p) {
            const cplx w = alpha * arow[p];
            if (w == cplx{}) continue;
            const cplx* brow = b + static_cast<std::size_t>(p) * n;
            for (int j = 0; j < n; ++j) crow[j] += w * brow[j];
        }
    }
}

void hadamard_acc_scalar(cplx* y, const cplx* w, const cplx* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += w[i] * x[i];
}

void block_right_acc4_scalar(cplx* out, const cplx* s, const cplx* h, int nblk, cplx alpha) {
    const int ld = 4 * nblk;
    for (int i = 0; i < 4; ++i) {
        const cplx* srow = s + static_cast<std::size_t>(i) * ld;
        cplx* orow = out + static_cast<std::size_t>(i) * ld;
        for (int b = 0; b < nblk; ++b) {
            const cplx* sb = srow + 4 * b;
            cplx* ob = orow + 4 * b;
            for (int j = 0; j < 4; ++j) {
                cplx acc{};
                for (int p = 0; p < 4; ++p) acc += sb[p] * h[4 * p + j];
                ob[j] += alpha * acc;
            }
        }
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{axpy_scalar, gemm_acc_scalar, hadamard_acc_scalar,
                         block_right_acc4_scalar, "scalar"};
    return ops;
}

}  // namespace rydgate::kern
