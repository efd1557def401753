#include "rydgate/hamiltonian.hpp"

#include <cmath>

namespace rydgate {

cplx HamiltonianTerm::coefficient(double t) const {
    return envelope.value(t) * std::polar(1.0, detuning * t + phase);
}

ComplexMatrix TimeDepHamiltonian::eval(double t) const {
    ComplexMatrix h = static_part;
    for (const auto& term : terms) {
        const cplx c = term.coefficient(t);
        for (int i = 0; i < h.rows; ++i)
            for (int j = 0; j < h.cols; ++j) {
                const cplx v = term.op(i, j);
                if (v != cplx{}) {
                    h(i, j) += c * v;
                    h(j, i) += std::conj(c * v);
                }
            }
    }
    return h;
}

namespace {

ComplexMatrix static_interactions(const SystemLayout& layout, const ProtocolParams& p) {
    const int tgt = layout.target_index();
    const auto& ts = layout.atoms[tgt];
    const auto& cs = LevelScheme::control();
    ComplexMatrix h(layout.dim(), layout.dim());
    h -= cplx{p.delta_big, 0} * embed(layout, {{tgt, level_projector(ts, ts.level("e"))}});
    const ComplexMatrix n_r = level_projector(cs, cs.level("r"));
    const ComplexMatrix n_R = level_projector(ts, ts.level("R"));
    for (int i = 0; i < layout.n_controls(); ++i)
        h += cplx{p.v, 0} * embed(layout, {{i, n_r}, {tgt, n_R}});
    if (p.v_cc != 0.0)
        for (int i = 0; i < layout.n_controls(); ++i)
            for (int j = i + 1; j < layout.n_controls(); ++j)
                h += cplx{p.v_cc, 0} * embed(layout, {{i, n_r}, {j, n_r}});
    return h;
}

}  // namespace

std::vector<SegmentHamiltonian> assemble_full(const SystemLayout& layout,
                                              const PulseSchedule& schedule,
                                              const ProtocolParams& p) {
    const ComplexMatrix h_static = static_interactions(layout, p);
    std::vector<SegmentHamiltonian> out;
    out.reserve(schedule.segments.size());
    for (const auto& seg : schedule.segments) {
        SegmentHamiltonian sh;
        sh.duration = seg.duration;
        sh.h.static_part = h_static;
        for (const auto& d : seg.drives) {
            if (d.atom_index < 0 || d.atom_index >= layout.n_atoms())
                throw DomainError("assemble_full: drive atom out of range");
            const auto& scheme = layout.atoms[d.atom_index];
            if (d.lower < 0 || d.lower >= scheme.dim() || d.upper < 0 || d.upper >= scheme.dim())
                throw DomainError("assemble_full: drive transition outside level scheme");
            HamiltonianTerm term;
            term.envelope = d.envelope;
            term.detuning = d.detuning;
            term.phase = d.phase_offset;
            term.op = cplx{0.5, 0} *
                      embed(layout, {{d.atom_index, level_ket_bra(scheme, d.lower, d.upper)}});
            sh.h.terms.push_back(std::move(term));
        }
        out.push_back(std::move(sh));
    }
    return out;
}

int branch_excitations(const std::string& branch) {
    int m = 0;
    for (char c : branch) {
        if (c == '1') ++m;
        else if (c != '0') throw DomainError("branch pattern must contain only '0'/'1'");
    }
    return m;
}

TimeDepHamiltonian reduced_branch(GateKind gate, const std::string& branch,
                                  const ProtocolParams& p, int rotation_multiple) {
    if (static_cast<int>(branch.size()) != gate_controls(gate))
        throw DomainError("branch pattern length does not match gate");
    const int m = branch_excitations(branch);
    if (rotation_multiple < 0 || rotation_multiple > m)
        throw DomainError("rotation multiple must lie in [0, excitations]");

    const auto& ts = LevelScheme::target();
    const int a = ts.level("A"), b = ts.level("B"), e = ts.level("e"), big_r = ts.level("R");
    const double t2 = derive_timings(p, gate).t2;
    const double shift = (m - rotation_multiple) * p.v;
    const double rot = rotation_multiple * p.v;

    TimeDepHamiltonian h;
    h.static_part = ComplexMatrix(4, 4);
    h.static_part(e, e) = -p.delta_big;
    h.static_part(big_r, big_r) = shift;

    const Envelope raman = Envelope::raised_cosine(p.omega_e, t2);
    h.terms.push_back({raman, 0.0, 0.0, cplx{0.5, 0} * level_ket_bra(ts, a, e)});
    h.terms.push_back({raman, 0.0, 0.0, cplx{0.5, 0} * level_ket_bra(ts, b, e)});

    std::vector<double> dets = {0.0, p.delta};
    if (gate == GateKind::C3Not) dets.push_back(p.delta_prime);
    for (double det : dets)
        h.terms.push_back({Envelope::constant(p.omega_c), det - rot, 0.0,
                           cplx{0.5, 0} * level_ket_bra(ts, e, big_r)});
    return h;
}

namespace {

// Normalized term view for the secular analysis: amplitude operator with a
// nonnegative carrier frequency.
struct SignedTerm {
    const HamiltonianTerm* term;
    ComplexMatrix op;  // phase folded in, carrier frequency made nonnegative
    double det;
};

SignedTerm normalize_term(const HamiltonianTerm& t) {
    SignedTerm s{&t, {}, t.detuning};
    ComplexMatrix op = std::polar(1.0, t.phase) * t.op;
    if (t.detuning < 0.0) {
        s.det = -t.detuning;
        s.op = dagger(op);
    } else {
        s.op = std::move(op);
    }
    return s;
}

}  // namespace

ComplexMatrix magnus_effective(const TimeDepHamiltonian& h, double window) {
    if (window <= 0.0) throw DomainError("magnus_effective: window must be positive");
    double max_det = 0.0;
    for (const auto& t : h.terms) {
        const double d = std::abs(t.detuning);
        if (d > 0.0 && d * window < 4.0 * M_PI)
            throw DegenerateAverageError(
                "magnus_effective: oscillatory term unresolvable over the window");
        max_det = std::max(max_det, d);
    }

    // Half-step grid: H at 2n+1 points, cumulative integral via per-interval
    // Simpson, outer integral via composite Simpson on the full-step nodes.
    const double cycles = max_det * window / kTwoPi;
    int n = static_cast<int>(std::ceil(std::max(64.0, 40.0 * cycles)));
    if (n % 2) ++n;
    const double dt = window / n;

    const int dim = h.dim();
    std::vector<ComplexMatrix> hs(2 * n + 1);
    for (int j = 0; j <= 2 * n; ++j) hs[j] = h.eval(0.5 * j * dt);

    ComplexMatrix first(dim, dim);   // int H dt (Simpson over half-step grid)
    for (int j = 0; j <= 2 * n; ++j) {
        const double w = (j == 0 || j == 2 * n) ? 1.0 : (j % 2 ? 4.0 : 2.0);
        first += cplx{w * dt / 6.0, 0} * hs[j];
    }

    ComplexMatrix g(dim, dim);        // cumulative integral at full-step nodes
    ComplexMatrix second(dim, dim);   // int [G(t), H(t)] dt
    for (int k = 0; k <= n; ++k) {
        const double w = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
        second += cplx{w * dt / 3.0, 0} * commutator(g, hs[2 * k]);
        if (k < n)
            g += cplx{dt / 6.0, 0} * (hs[2 * k] + cplx{4, 0} * hs[2 * k + 1] + hs[2 * k + 2]);
    }

    // int int [H(t1),H(t2)] dt2 dt1 over the ordered simplex equals
    // -int [G(t),H(t)] dt, so the -i/2T Magnus term becomes +i/2T * second.
    ComplexMatrix out = cplx{1.0 / window, 0} * first;
    out += cplx{0, 0.5 / window} * second;
    return out;
}

ComplexMatrix magnus_effective_asymptotic(const TimeDepHamiltonian& h, double t) {
    ComplexMatrix out = h.static_part;

    std::vector<SignedTerm> terms;
    terms.reserve(h.terms.size());
    for (const auto& term : h.terms) terms.push_back(normalize_term(term));

    for (std::size_t j = 0; j < terms.size(); ++j) {
        const auto& tj = terms[j];
        const double aj = tj.term->envelope.value(t);
        if (tj.det == 0.0) {
            // Resonant: kept in full with its hermitian completion.
            ComplexMatrix add = cplx{aj, 0} * tj.op;
            out += add + dagger(add);
            continue;
        }
        for (std::size_t k = j; k < terms.size(); ++k) {
            const auto& tk = terms[k];
            if (tk.det == 0.0) continue;
            if (std::abs(tj.det - tk.det) > 1e-9 * std::max(tj.det, tk.det)) continue;
            const double ak = tk.term->envelope.value(t);
            if (j == k) {
                out += cplx{aj * aj / tj.det, 0} * commutator(tj.op, dagger(tj.op));
            } else {
                ComplexMatrix cross =
                    cplx{aj * ak / tj.det, 0} * commutator(tj.op, dagger(tk.op));
                out += cross + dagger(cross);
            }
        }
    }
    return out;
}

DarkStatePair dark_states(const ProtocolParams& p, double omega_e_now) {
    if (p.omega_c <= 0.0) throw DomainError("dark_states: omega_c must be positive");
    const auto& ts = LevelScheme::target();
    const int a = ts.level("A"), b = ts.level("B"), big_r = ts.level("R");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    DarkStatePair d;
    d.y = std::sqrt(2.0) * omega_e_now / p.omega_c;
    d.d1 = ComplexVector(4);
    d.d1[a] = inv_sqrt2;
    d.d1[b] = -inv_sqrt2;
    const double nrm = 1.0 / std::sqrt(1.0 + d.y * d.y);
    d.d2 = ComplexVector(4);
    d.d2[a] = nrm * inv_sqrt2;
    d.d2[b] = nrm * inv_sqrt2;
    d.d2[big_r] = -nrm * d.y;
    return d;
}

ComplexMatrix dark_state_drive(const ProtocolParams& p, double omega_e_now) {
    const auto& ts = LevelScheme::target();
    const int a = ts.level("A"), b = ts.level("B"), e = ts.level("e"), big_r = ts.level("R");
    ComplexMatrix h(4, 4);
    h(a, e) = 0.5 * omega_e_now;
    h(e, a) = 0.5 * omega_e_now;
    h(b, e) = 0.5 * omega_e_now;
    h(e, b) = 0.5 * omega_e_now;
    h(e, big_r) = 0.5 * p.omega_c;
    h(big_r, e) = 0.5 * p.omega_c;
    return h;
}

}  // namespace rydgate
