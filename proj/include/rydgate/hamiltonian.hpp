#pragma once

// Time-dependent Hamiltonians: the full composite-system builder driven by a
// pulse schedule, the reduced target-only branch Hamiltonians, second-order
// Magnus averages and the EIT dark states.

#include <string>
#include <vector>

#include "rydgate/linalg.hpp"
#include "rydgate/pulses.hpp"
#include "rydgate/scenario.hpp"

namespace rydgate {

// One drive term. Contributes
//   envelope(t) * exp(i*(detuning*t + phase)) * op   + h.c.
// to H(t); any factor 1/2 is folded into op by the builders.
struct HamiltonianTerm {
    Envelope envelope;
    double detuning = 0;
    double phase = 0;
    ComplexMatrix op;

    cplx coefficient(double t) const;
};

struct TimeDepHamiltonian {
    ComplexMatrix static_part;  // Hermitian
    std::vector<HamiltonianTerm> terms;

    int dim() const { return static_part.rows; }
    // Dense H(t) = static + sum(c_m(t) op_m + h.c.)
    ComplexMatrix eval(double t) const;
};

struct SegmentHamiltonian {
    TimeDepHamiltonian h;
    double duration = 0;
};

// Full composite-space Hamiltonian per schedule segment. The static part
// (Raman detuning on |e>, all interaction shifts) is present in every
// segment; drives contribute oscillating terms with segment-local time.
std::vector<SegmentHamiltonian> assemble_full(const SystemLayout& layout,
                                              const PulseSchedule& schedule,
                                              const ProtocolParams& p);

// Reduced target-only Hamiltonian for a control branch ('0'/'1' pattern,
// e.g. "10" or "110"). `rotation_multiple` rho moves to the frame rotated by
// exp(-i*rho*V*t*|R><R|): the static Rydberg shift becomes (m-rho)*V and all
// e<->R coupling detunings shift by -rho*V, m the number of excited controls.
// rho = 0 is the frame of the full-system target block; rho = m gives the
// fully rotated (primed) forms.
TimeDepHamiltonian reduced_branch(GateKind gate, const std::string& branch,
                                  const ProtocolParams& p, int rotation_multiple = 0);

int branch_excitations(const std::string& branch);

// Second-order Magnus average of H over [0, window]:
//   (1/T) int H dt  - (i/2T) int_0^T dt1 int_0^t1 [H(t1), H(t2)] dt2
// evaluated by high-order quadrature. A constant Hamiltonian is returned
// exactly. Oscillatory terms must be resolvable by the window: any term with
// 0 < |detuning| * window < 4*pi raises DegenerateAverageError.
ComplexMatrix magnus_effective(const TimeDepHamiltonian& h, double window);

// Window -> infinity limit of the above with envelopes frozen at time t:
// resonant terms survive, oscillatory terms drop to their commutator light
// shifts [A,A+]/detuning (pairs with equal detunings cross-contribute).
ComplexMatrix magnus_effective_asymptotic(const TimeDepHamiltonian& h, double t);

struct DarkStatePair {
    ComplexVector d1;  // (|A> - |B>)/sqrt(2)
    ComplexVector d2;  // ((|A> + |B>)/sqrt(2) - y|R>)/sqrt(1+y^2)
    double y = 0;      // sqrt(2) * omega_e(t) / omega_c
};

DarkStatePair dark_states(const ProtocolParams& p, double omega_e_now);

// Drive part of the asymptotic effective target Hamiltonian (Raman legs at
// the given instantaneous amplitude plus the resonant coupling); both dark
// states are annihilated by it.
ComplexMatrix dark_state_drive(const ProtocolParams& p, double omega_e_now);

}  // namespace rydgate
