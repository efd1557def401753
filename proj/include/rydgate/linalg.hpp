#pragma once

// Dense complex matrices and vectors sized for composite spaces up to a few
// hundred dimensions. Row-major storage; arithmetic routed through the
// kernel layer.

#include <complex>
#include <vector>

#include "rydgate/errors.hpp"

namespace rydgate {

using cplx = std::complex<double>;

// Guard against runaway Kronecker products.
inline constexpr int kDenseDimCap = 16384;

struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<cplx> a;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    static ComplexMatrix zero(int r, int c) { return ComplexMatrix(r, c); }
    static ComplexMatrix identity(int n);

    cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const cplx& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    cplx* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
    const cplx* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }

    bool square() const { return rows == cols; }
    std::size_t size() const { return a.size(); }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);
};

struct ComplexVector {
    int dim = 0;
    std::vector<cplx> v;

    ComplexVector() = default;
    explicit ComplexVector(int n) : dim(n), v(static_cast<std::size_t>(n)) {}

    static ComplexVector basis(int n, int k);

    cplx& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
    const cplx& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
};

ComplexMatrix operator+(ComplexMatrix x, const ComplexMatrix& y);
ComplexMatrix operator-(ComplexMatrix x, const ComplexMatrix& y);
ComplexMatrix operator*(cplx s, ComplexMatrix x);
ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& x);

// C += alpha * A * B
void gemm_acc(ComplexMatrix& c, const ComplexMatrix& a, const ComplexMatrix& b, cplx alpha);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
cplx trace(const ComplexMatrix& a);
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);  // tr(A*B)

double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);
double one_norm(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol);

double norm(const ComplexVector& x);
cplx dot(const ComplexVector& x, const ComplexVector& y);  // <x|y>, conjugates x

// Matrix exponential, scaling-and-squaring Pade(13). Relative accuracy
// comfortably beyond 1e-12 for the sizes used here.
ComplexMatrix expm(const ComplexMatrix& a);

// Solve A X = B in place of X (partial-pivot LU). A must be square.
ComplexMatrix lu_solve(ComplexMatrix a, ComplexMatrix b);

// Eigendecomposition of a Hermitian matrix (cyclic complex Jacobi).
// Returns ascending eigenvalues; columns of vectors are the eigenvectors.
struct HermEig {
    std::vector<double> values;
    ComplexMatrix vectors;
};
HermEig herm_eig(const ComplexMatrix& a);

}  // namespace rydgate
