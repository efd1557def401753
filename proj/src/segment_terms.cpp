#include "rydgate/segment_terms.hpp"

#include <cmath>

#include "rydgate/kernels.hpp"

namespace rydgate::detail {

namespace {

bool static_is_diagonal(const ComplexMatrix& m) {
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (i != j && m(i, j) != cplx{}) return false;
    return true;
}

}  // namespace

SegmentSystem build_segment_system(const SegmentHamiltonian& seg,
                                   const std::vector<ComplexMatrix>* jump_ops, Frame frame) {
    const int n = seg.h.dim();
    SegmentSystem s;
    s.dim = n;
    s.duration = seg.duration;
    s.frame = frame;
    if (frame == Frame::Interaction && !static_is_diagonal(seg.h.static_part))
        s.frame = Frame::Rotating;

    s.static_diag.assign(n, 0.0);
    for (int i = 0; i < n; ++i) s.static_diag[i] = seg.h.static_part(i, i).real();

    const bool interaction = s.frame == Frame::Interaction;
    auto carrier = [&](int r, int c, double det) {
        return interaction ? det + s.static_diag[r] - s.static_diag[c] : det;
    };

    // Residual static off-diagonal entries (rotating frame only; both
    // triangles are stored, so no mirror).
    if (!interaction) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const cplx v = seg.h.static_part(i, j);
                if (v != cplx{}) s.ham.push_back({i, j, v, -1, 0.0, false});
            }
    }

    for (const auto& term : seg.h.terms) {
        const int env = static_cast<int>(s.envelopes.size());
        s.envelopes.push_back(term.envelope);
        const cplx phase = std::polar(1.0, term.phase);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const cplx v = term.op(i, j);
                if (v == cplx{}) continue;
                s.ham.push_back({i, j, phase * v, env, carrier(i, j, term.detuning), true});
            }
    }

    if (jump_ops) {
        s.gdiag.assign(n, 0.0);
        ComplexMatrix g(n, n);
        for (const auto& a : *jump_ops) {
            if (a.rows != n || a.cols != n)
                throw ShapeError("lindblad channel dimension mismatch");
            std::vector<JumpEntry> entries;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const cplx v = a(i, j);
                    if (v != cplx{}) entries.push_back({i, j, v, carrier(i, j, 0.0)});
                }
            gemm_acc(g, dagger(a), a, 1.0);
            s.channels.push_back(std::move(entries));
        }
        for (int i = 0; i < n; ++i) s.gdiag[i] = g(i, i).real();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const cplx v = g(i, j);
                if (v != cplx{}) s.gmat.push_back({i, j, v, carrier(i, j, 0.0)});
            }
    }
    return s;
}

namespace {

inline cplx entry_coefficient(const std::vector<cplx>& env_values, const OscEntry& e, double t) {
    const cplx base = e.env < 0 ? e.amp : env_values[e.env] * e.amp;
    return e.freq == 0.0 ? base : base * std::polar(1.0, e.freq * t);
}

void fill_env_values(const SegmentSystem& s, double t, std::vector<cplx>& env_values) {
    env_values.resize(s.envelopes.size());
    for (std::size_t k = 0; k < s.envelopes.size(); ++k) env_values[k] = s.envelopes[k].value(t);
}

}  // namespace

void rhs_matrix(const SegmentSystem& s, double t, const cplx* y, cplx* dy, RhsWorkspace& ws) {
    const int n = s.dim;
    const auto& ops = kern::active();
    std::fill(dy, dy + static_cast<std::size_t>(n) * n, cplx{});

    auto& env_values = ws.env_values;
    fill_env_values(s, t, env_values);

    // Hamiltonian entries: -i (H Y - Y H)
    for (const auto& e : s.ham) {
        const cplx c = entry_coefficient(env_values, e, t);
        const cplx mi_c = cplx{0, -1} * c;
        ops.axpy(dy + static_cast<std::size_t>(e.row) * n, y + static_cast<std::size_t>(e.col) * n,
                 mi_c, n);
        cplx* dcol = dy + e.col;
        const cplx* ycol = y + e.row;
        const cplx pi_c = cplx{0, 1} * c;
        for (int i = 0; i < n; ++i) dcol[static_cast<std::size_t>(i) * n] +=
            pi_c * ycol[static_cast<std::size_t>(i) * n];
        if (e.mirror) {
            const cplx cc = std::conj(c);
            ops.axpy(dy + static_cast<std::size_t>(e.col) * n,
                     y + static_cast<std::size_t>(e.row) * n, cplx{0, -1} * cc, n);
            cplx* dcol2 = dy + e.row;
            const cplx* ycol2 = y + e.col;
            const cplx pi_cc = cplx{0, 1} * cc;
            for (int i = 0; i < n; ++i) dcol2[static_cast<std::size_t>(i) * n] +=
                pi_cc * ycol2[static_cast<std::size_t>(i) * n];
        }
    }

    // Static diagonal commutator (rotating frame) and damping diagonal.
    const bool rot = s.frame == Frame::Rotating;
    const bool decay = s.has_decay();
    if (rot || decay) {
        for (int i = 0; i < n; ++i) {
            cplx* drow = dy + static_cast<std::size_t>(i) * n;
            const cplx* yrow = y + static_cast<std::size_t>(i) * n;
            const double di = rot ? s.static_diag[i] : 0.0;
            const double gi = decay ? s.gdiag[i] : 0.0;
            for (int j = 0; j < n; ++j) {
                const double dj = rot ? s.static_diag[j] : 0.0;
                const double gj = decay ? s.gdiag[j] : 0.0;
                drow[j] += cplx{-0.5 * (gi + gj), -(di - dj)} * yrow[j];
            }
        }
    }

    if (!decay) return;

    // Rare off-diagonal part of sum A'A: -1/2 (G Y + Y G)
    for (const auto& e : s.gmat) {
        const cplx q = cplx{-0.5, 0} *
                       (e.freq == 0.0 ? e.amp : e.amp * std::polar(1.0, e.freq * t));
        ops.axpy(dy + static_cast<std::size_t>(e.row) * n, y + static_cast<std::size_t>(e.col) * n,
                 q, n);
        cplx* dcol = dy + e.col;
        const cplx* ycol = y + e.row;
        for (int i = 0; i < n; ++i) dcol[static_cast<std::size_t>(i) * n] +=
            q * ycol[static_cast<std::size_t>(i) * n];
    }

    // Jump terms A Y A'. Channels here are sparse (a handful of entries), so
    // the pairwise form is cheaper than two matrix products.
    std::vector<cplx> coeff;
    for (const auto& ch : s.channels) {
        coeff.resize(ch.size());
        for (std::size_t k = 0; k < ch.size(); ++k) {
            const auto& e = ch[k];
            coeff[k] = e.freq == 0.0 ? e.amp : e.amp * std::polar(1.0, e.freq * t);
        }
        for (std::size_t p = 0; p < ch.size(); ++p) {
            const auto& ep = ch[p];
            for (std::size_t q = 0; q < ch.size(); ++q) {
                const auto& eq = ch[q];
                dy[static_cast<std::size_t>(ep.row) * n + eq.row] +=
                    coeff[p] * std::conj(coeff[q]) *
                    y[static_cast<std::size_t>(ep.col) * n + eq.col];
            }
        }
    }
}

void rhs_vector(const SegmentSystem& s, double t, const cplx* y, cplx* dy) {
    const int n = s.dim;
    std::fill(dy, dy + n, cplx{});
    std::vector<cplx> env_values(s.envelopes.size());
    for (std::size_t k = 0; k < s.envelopes.size(); ++k) env_values[k] = s.envelopes[k].value(t);

    for (const auto& e : s.ham) {
        const cplx c = entry_coefficient(s, env_values, e, t);
        dy[e.row] += cplx{0, -1} * c * y[e.col];
        if (e.mirror) dy[e.col] += cplx{0, -1} * std::conj(c) * y[e.row];
    }
    if (s.frame == Frame::Rotating)
        for (int i = 0; i < n; ++i) dy[i] += cplx{0, -s.static_diag[i]} * y[i];
}

void apply_frame_vector(const SegmentSystem& s, double t, cplx* y) {
    if (s.frame != Frame::Interaction) return;
    for (int i = 0; i < s.dim; ++i) y[i] *= std::polar(1.0, -s.static_diag[i] * t);
}

void apply_frame_matrix(const SegmentSystem& s, double t, cplx* y) {
    if (s.frame != Frame::Interaction) return;
    const int n = s.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            y[static_cast<std::size_t>(i) * n + j] *=
                std::polar(1.0, -(s.static_diag[i] - s.static_diag[j]) * t);
}

}  // namespace rydgate::detail
