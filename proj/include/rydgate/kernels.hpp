#pragma once

// Low-level complex double kernels behind the dense linear algebra and the
// propagation inner loops. A scalar reference implementation always exists;
// an AVX2/FMA variant is compiled when the toolchain supports it and selected
// at runtime from CPU capabilities. RYDGATE_SIMD=scalar|avx2|auto overrides
// the selection. The variants are equivalence-tested against each other.

#include <complex>
#include <cstddef>

namespace rydgate::kern {

using cplx = std::complex<double>;

struct Ops {
    // y[i] += a * x[i], contiguous
    void (*axpy)(cplx* y, const cplx* x, cplx a, std::size_t n);
    // C(m x n) += alpha * A(m x k) * B(k x n), row-major, tight leading dims
    void (*gemm_acc)(cplx* c, const cplx* a, const cplx* b, int m, int k, int n, cplx alpha);
    // y[i] += w[i] * x[i], contiguous
    void (*hadamard_acc)(cplx* y, const cplx* w, const cplx* x, std::size_t n);
    // S (4 x 4*nblk row-major) treated as nblk column blocks of 4x4:
    // out_block[b] += alpha * S_block[b] * H  for a single 4x4 H
    void (*block_right_acc4)(cplx* out, const cplx* s, const cplx* h, int nblk, cplx alpha);
    const char* name;
};

// Active kernel table (selected once, thread-safe).
const Ops& active();

const Ops& scalar_ops();

// Null when AVX2 support was not compiled in or the CPU lacks it.
const Ops* avx2_ops();

bool avx2_available();

// Test hook: force "scalar", "avx2" or "auto". Throws on unavailable choice.
void force(const char* name);

}  // namespace rydgate::kern
