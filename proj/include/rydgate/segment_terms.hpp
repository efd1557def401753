#pragma once

// Internal structured view of one schedule segment: the Hamiltonian and jump
// operators reduced to sparse oscillating entries in a chosen frame. The
// interaction frame absorbs the static diagonal (Raman detuning and all
// interaction shifts) into per-entry carrier frequencies, which removes the
// large static scale from the integrator's right-hand side. Propagation
// results are transformed back to the rotating frame at segment boundaries.

#include <vector>

#include "rydgate/hamiltonian.hpp"

namespace rydgate::detail {

enum class Frame { Rotating, Interaction };

struct OscEntry {
    int row, col;
    cplx amp;      // term amplitude at this matrix entry (drive phase folded in)
    int env;       // envelope index, -1 for constant 1
    double freq;   // carrier (rad/s), segment-local time
    bool mirror;   // true: the hermitian partner entry is implied
};

struct JumpEntry {
    int row, col;
    cplx amp;
    double freq;
};

struct SegmentSystem {
    int dim = 0;
    double duration = 0;
    Frame frame = Frame::Rotating;
    std::vector<Envelope> envelopes;
    std::vector<OscEntry> ham;        // oscillating/static off-diagonal entries
    std::vector<double> static_diag;  // real diagonal of the static part
    std::vector<JumpEntry> gmat;      // off-diagonal entries of sum A'A (rare)
    std::vector<double> gdiag;        // real diagonal of sum A'A
    std::vector<std::vector<JumpEntry>> channels;

    bool has_decay() const { return !channels.empty(); }
};

// Extracts the sparse structure. In the interaction frame the static part
// must be diagonal (our builders guarantee it); a non-diagonal static part
// falls back to the rotating frame.
SegmentSystem build_segment_system(const SegmentHamiltonian& seg,
                                   const std::vector<ComplexMatrix>* jump_ops, Frame frame);

// Scratch reused across evaluations (no allocation in the hot path).
struct RhsWorkspace {
    std::vector<cplx> env_values;
    std::vector<cplx> jump_coeff;
};

// dY = -i [H(t), Y] + dissipator, Y a dim x dim matrix (row-major flat).
void rhs_matrix(const SegmentSystem& s, double t, const cplx* y, cplx* dy, RhsWorkspace& ws);

// dpsi = -i H(t) psi.
void rhs_vector(const SegmentSystem& s, double t, const cplx* y, cplx* dy, RhsWorkspace& ws);

// Interaction-frame boundary transform at segment-local time t:
// psi -> exp(-i D t) psi, X -> exp(-i D t) X exp(+i D t).
void apply_frame_vector(const SegmentSystem& s, double t, cplx* y);
void apply_frame_matrix(const SegmentSystem& s, double t, cplx* y);

}  // namespace rydgate::detail
