#include "rydgate/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "rydgate/kernels.hpp"

namespace rydgate {

namespace {

void require_same_shape(const ComplexMatrix& x, const ComplexMatrix& y, const char* op) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw ShapeError(std::string(op) + ": shape mismatch");
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    require_same_shape(*this, o, "operator+=");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    require_same_shape(*this, o, "operator-=");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& x : a) x *= s;
    return *this;
}

ComplexVector ComplexVector::basis(int n, int k) {
    ComplexVector x(n);
    x[k] = 1.0;
    return x;
}

ComplexMatrix operator+(ComplexMatrix x, const ComplexMatrix& y) { return x += y; }
ComplexMatrix operator-(ComplexMatrix x, const ComplexMatrix& y) { return x -= y; }
ComplexMatrix operator*(cplx s, ComplexMatrix x) { return x *= s; }

void gemm_acc(ComplexMatrix& c, const ComplexMatrix& a, const ComplexMatrix& b, cplx alpha) {
    if (a.cols != b.rows || c.rows != a.rows || c.cols != b.cols)
        throw ShapeError("gemm: incompatible shapes");
    kern::active().gemm_acc(c.a.data(), a.a.data(), b.a.data(), a.rows, a.cols, b.cols, alpha);
}

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
    ComplexMatrix c(x.rows, y.cols);
    gemm_acc(c, x, y, 1.0);
    return c;
}

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& x) {
    if (m.cols != x.dim) throw ShapeError("matvec: shape mismatch");
    ComplexVector y(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        cplx acc{};
        const cplx* r = m.row(i);
        for (int j = 0; j < m.cols; ++j) acc += r[j] * x[j];
        y[i] = acc;
    }
    return y;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const long long rr = static_cast<long long>(a.rows) * b.rows;
    const long long cc = static_cast<long long>(a.cols) * b.cols;
    if (rr > kDenseDimCap || cc > kDenseDimCap)
        throw SizeError("kron: dimension product exceeds dense cap");
    ComplexMatrix k(static_cast<int>(rr), static_cast<int>(cc));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            const cplx w = a(i, j);
            if (w == cplx{}) continue;
            for (int p = 0; p < b.rows; ++p) {
                cplx* dst = k.row(i * b.rows + p) + static_cast<std::size_t>(j) * b.cols;
                const cplx* src = b.row(p);
                for (int q = 0; q < b.cols; ++q) dst[q] += w * src[q];
            }
        }
    return k;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix d(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) d(j, i) = std::conj(a(i, j));
    return d;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.square() || !b.square() || a.rows != b.rows)
        throw ShapeError("commutator: operands must be square and same size");
    ComplexMatrix c(a.rows, a.rows);
    gemm_acc(c, a, b, 1.0);
    gemm_acc(c, b, a, -1.0);
    return c;
}

cplx trace(const ComplexMatrix& a) {
    if (!a.square()) throw ShapeError("trace: matrix must be square");
    cplx t{};
    for (int i = 0; i < a.rows; ++i) t += a(i, i);
    return t;
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows || a.rows != b.cols) throw ShapeError("trace_product: shape mismatch");
    cplx t{};
    for (int i = 0; i < a.rows; ++i) {
        const cplx* ar = a.row(i);
        for (int j = 0; j < a.cols; ++j) t += ar[j] * b(j, i);
    }
    return t;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& x : a.a) m = std::max(m, std::abs(x));
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.a.size(); ++i) m = std::max(m, std::abs(a.a[i] - b.a[i]));
    return m;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& x : a.a) s += std::norm(x);
    return std::sqrt(s);
}

double one_norm(const ComplexMatrix& a) {
    double m = 0.0;
    for (int j = 0; j < a.cols; ++j) {
        double s = 0.0;
        for (int i = 0; i < a.rows; ++i) s += std::abs(a(i, j));
        m = std::max(m, s);
    }
    return m;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (!a.square()) return false;
    for (int i = 0; i < a.rows; ++i)
        for (int j = i; j < a.cols; ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    return true;
}

double norm(const ComplexVector& x) {
    double s = 0.0;
    for (const auto& c : x.v) s += std::norm(c);
    return std::sqrt(s);
}

cplx dot(const ComplexVector& x, const ComplexVector& y) {
    if (x.dim != y.dim) throw ShapeError("dot: dimension mismatch");
    cplx acc{};
    for (int i = 0; i < x.dim; ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

ComplexMatrix lu_solve(ComplexMatrix a, ComplexMatrix b) {
    if (!a.square() || a.rows != b.rows) throw ShapeError("lu_solve: shape mismatch");
    const int n = a.rows;
    const int m = b.cols;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (best == 0.0) throw DomainError("lu_solve: singular matrix");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            for (int j = 0; j < m; ++j) std::swap(b(k, j), b(piv, j));
        }
        const cplx akk = a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cplx f = a(i, k) / akk;
            if (f == cplx{}) continue;
            a(i, k) = f;
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            for (int j = 0; j < m; ++j) b(i, j) -= f * b(k, j);
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        const cplx akk = a(k, k);
        for (int j = 0; j < m; ++j) {
            cplx acc = b(k, j);
            for (int i = k + 1; i < n; ++i) acc -= a(k, i) * b(i, j);
            b(k, j) = acc / akk;
        }
    }
    return b;
}

HermEig herm_eig(const ComplexMatrix& input) {
    if (!input.square()) throw ShapeError("herm_eig: matrix must be square");
    const int n = input.rows;
    ComplexMatrix a = input;
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(max_abs(a), 1e-300);
    const double stop = 1e-15 * scale;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off < stop) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < stop * 1e-2) continue;
                // Unitary 2x2 rotation zeroing the (p,q) element.
                const cplx phase = apq / mag;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = t * c * phase;
                for (int j = 0; j < n; ++j) {
                    const cplx ap = a(p, j), aq = a(q, j);
                    a(p, j) = c * ap - std::conj(s) * aq;
                    a(q, j) = s * ap + c * aq;
                }
                for (int i = 0; i < n; ++i) {
                    const cplx ap = a(i, p), aq = a(i, q);
                    a(i, p) = c * ap - s * aq;
                    a(i, q) = std::conj(s) * ap + c * aq;
                    const cplx vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = std::conj(s) * vp + c * vq;
                }
            }
        }
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });

    HermEig out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

}  // namespace rydgate
