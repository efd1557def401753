#pragma once

// Pulse envelopes and per-gate schedules. Each segment restarts its local
// clock at zero; oscillatory drive phases are defined from the segment start.

#include <string>
#include <vector>

#include "rydgate/params.hpp"

namespace rydgate {

struct Envelope {
    enum class Kind { Constant, RaisedCosine };
    Kind kind = Kind::Constant;
    double amplitude = 0;  // constant value, or raised-cosine peak
    double duration = 0;   // raised-cosine support [0, duration]

    static Envelope constant(double amp) { return {Kind::Constant, amp, 0}; }
    static Envelope raised_cosine(double peak, double duration) {
        return {Kind::RaisedCosine, peak, duration};
    }

    double value(double t) const;
    // Closed-form integral over [0, duration]: amplitude * duration / 2.
    double full_integral() const;
};

// One laser on one atom. The Hamiltonian term contributed is
//   envelope(t)/2 * exp(i*(detuning*t + phase)) * |lower><upper|  + h.c.
// with t the segment-local time.
struct Drive {
    int atom_index = 0;
    int lower = 0;            // local level index receiving the phase factor
    int upper = 0;
    Envelope envelope;
    double detuning = 0;      // rad/s
    double phase_offset = 0;  // rad

    bool operator==(const Drive&) const = default;
};

struct ScheduleSegment {
    double duration = 0;
    std::vector<Drive> drives;

    bool operator==(const ScheduleSegment&) const = default;
};

struct PulseSchedule {
    std::vector<ScheduleSegment> segments;
    std::vector<std::string> warnings;  // advisory regime findings that failed

    double total_duration() const;
    bool operator==(const PulseSchedule& o) const { return segments == o.segments; }
};

PulseSchedule schedule_toffoli_linear(const ProtocolParams& p);
PulseSchedule schedule_toffoli_planar(const ProtocolParams& p);
PulseSchedule schedule_c3not(const ProtocolParams& p);
PulseSchedule make_schedule(GateKind gate, const ProtocolParams& p);

// Plain-text (JSON) serialization of a schedule for inspection.
std::string schedule_to_json(const PulseSchedule& s);

}  // namespace rydgate
