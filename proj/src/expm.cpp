#include <array>
#include <cmath>

#include "rydgate/linalg.hpp"

// Scaling-and-squaring matrix exponential with the degree-13 Pade
// approximant (Higham 2005 coefficients).

namespace rydgate {

namespace {

constexpr double kTheta13 = 5.371920351148152;

constexpr std::array<double, 14> kB = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

}  // namespace

ComplexMatrix expm(const ComplexMatrix& input) {
    if (!input.square()) throw ShapeError("expm: matrix must be square");
    const int n = input.rows;
    if (n == 0) return input;

    ComplexMatrix a = input;
    const double nrm = one_norm(a);
    int squarings = 0;
    if (nrm > kTheta13) {
        squarings = static_cast<int>(std::ceil(std::log2(nrm / kTheta13)));
        a *= cplx{std::ldexp(1.0, -squarings), 0.0};
    }

    const ComplexMatrix ident = ComplexMatrix::identity(n);
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix a4 = a2 * a2;
    const ComplexMatrix a6 = a2 * a4;

    // U = A [A6 (b13 A6 + b11 A4 + b9 A2) + b7 A6 + b5 A4 + b3 A2 + b1 I]
    ComplexMatrix w1 = cplx{kB[13], 0} * a6 + cplx{kB[11], 0} * a4 + cplx{kB[9], 0} * a2;
    ComplexMatrix w2 = cplx{kB[7], 0} * a6 + cplx{kB[5], 0} * a4 + cplx{kB[3], 0} * a2 +
                       cplx{kB[1], 0} * ident;
    ComplexMatrix w(n, n);
    gemm_acc(w, a6, w1, 1.0);
    w += w2;
    ComplexMatrix u(n, n);
    gemm_acc(u, a, w, 1.0);

    // V = A6 (b12 A6 + b10 A4 + b8 A2) + b6 A6 + b4 A4 + b2 A2 + b0 I
    ComplexMatrix z1 = cplx{kB[12], 0} * a6 + cplx{kB[10], 0} * a4 + cplx{kB[8], 0} * a2;
    ComplexMatrix v = cplx{kB[6], 0} * a6 + cplx{kB[4], 0} * a4 + cplx{kB[2], 0} * a2 +
                      cplx{kB[0], 0} * ident;
    gemm_acc(v, a6, z1, 1.0);

    ComplexMatrix num = v + u;
    ComplexMatrix den = v - u;
    ComplexMatrix r = lu_solve(std::move(den), std::move(num));

    for (int s = 0; s < squarings; ++s) r = r * r;
    return r;
}

}  // namespace rydgate
