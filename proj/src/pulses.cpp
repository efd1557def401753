#include "rydgate/pulses.hpp"

#include <cmath>

#include <json.hpp>

#include "rydgate/hilbert.hpp"

namespace rydgate {

double Envelope::value(double t) const {
    switch (kind) {
        case Kind::Constant:
            return amplitude;
        case Kind::RaisedCosine:
            if (t < 0.0 || t > duration) return 0.0;
            return 0.5 * amplitude * (1.0 - std::cos(kTwoPi * t / duration));
    }
    return 0.0;
}

double Envelope::full_integral() const {
    if (kind == Kind::Constant) return amplitude * duration;
    return 0.5 * amplitude * duration;
}

double PulseSchedule::total_duration() const {
    double t = 0;
    for (const auto& s : segments) t += s.duration;
    return t;
}

namespace {

// Level indices shared by all schedules.
const int kCtrl1 = LevelScheme::control().level("1");
const int kCtrlR = LevelScheme::control().level("r");
const int kTgtA = LevelScheme::target().level("A");
const int kTgtB = LevelScheme::target().level("B");
const int kTgtE = LevelScheme::target().level("e");
const int kTgtR = LevelScheme::target().level("R");

Drive control_pi(int atom, double omega_r, double detuning) {
    return Drive{atom, kCtrl1, kCtrlR, Envelope::constant(omega_r), detuning, 0.0};
}

// Raman legs plus the coupling lasers; detunings lists the e<->R lasers.
ScheduleSegment raman_segment(int target_atom, const ProtocolParams& p, double t2,
                              const std::vector<double>& coupling_detunings) {
    ScheduleSegment seg;
    seg.duration = t2;
    const Envelope raman = Envelope::raised_cosine(p.omega_e, t2);
    seg.drives.push_back(Drive{target_atom, kTgtA, kTgtE, raman, 0.0, 0.0});
    seg.drives.push_back(Drive{target_atom, kTgtB, kTgtE, raman, 0.0, 0.0});
    for (double det : coupling_detunings)
        seg.drives.push_back(
            Drive{target_atom, kTgtE, kTgtR, Envelope::constant(p.omega_c), det, 0.0});
    return seg;
}

void check_drives_positive(const ProtocolParams& p) {
    if (p.omega_e <= 0 || p.omega_c <= 0 || p.omega_r <= 0 || p.delta_big <= 0)
        throw DomainError("schedule: omega_e, omega_c, omega_r and delta_big must be positive");
}

void attach_warnings(PulseSchedule& s, const ProtocolParams& p, GateKind gate) {
    for (const auto& f : validate_regime(p, gate))
        if (!f.pass) s.warnings.push_back(f.name);
}

}  // namespace

PulseSchedule schedule_toffoli_linear(const ProtocolParams& p) {
    check_drives_positive(p);
    const DerivedTimings t = derive_timings(p, GateKind::ToffoliLinear);
    PulseSchedule s;
    ScheduleSegment open;
    open.duration = t.t1;
    open.drives = {control_pi(0, p.omega_r, 0.0), control_pi(1, p.omega_r, 0.0)};
    s.segments.push_back(open);
    s.segments.push_back(raman_segment(2, p, t.t2, {0.0, p.delta}));
    s.segments.push_back(open);
    attach_warnings(s, p, GateKind::ToffoliLinear);
    return s;
}

PulseSchedule schedule_toffoli_planar(const ProtocolParams& p) {
    check_drives_positive(p);
    PulseSchedule s;
    if (std::abs(p.delta_c - p.v_cc) > 1e-9 * std::max(std::abs(p.v_cc), 1.0))
        s.warnings.push_back("antiblockade_detuning_mismatch");
    const DerivedTimings t = derive_timings(p, GateKind::ToffoliPlanar);
    ScheduleSegment first, second;
    first.duration = t.t1;
    first.drives = {control_pi(0, p.omega_r, 0.0)};
    second.duration = t.t1;
    second.drives = {control_pi(1, p.omega_r, p.delta_c)};
    s.segments.push_back(first);
    s.segments.push_back(second);
    s.segments.push_back(raman_segment(2, p, t.t2, {0.0, p.delta}));
    s.segments.push_back(second);
    s.segments.push_back(first);
    attach_warnings(s, p, GateKind::ToffoliPlanar);
    return s;
}

PulseSchedule schedule_c3not(const ProtocolParams& p) {
    check_drives_positive(p);
    PulseSchedule s;
    if (std::abs(p.delta_c - p.v_cc) > 1e-9 * std::max(std::abs(p.v_cc), 1.0))
        s.warnings.push_back("antiblockade_detuning_mismatch");
    if (std::abs(p.delta_c_prime - 2.0 * p.v_cc) > 1e-9 * std::max(std::abs(p.v_cc), 1.0))
        s.warnings.push_back("antiblockade_second_detuning_mismatch");
    const DerivedTimings t = derive_timings(p, GateKind::C3Not);
    ScheduleSegment first, second, third;
    first.duration = t.t1;
    first.drives = {control_pi(0, p.omega_r, 0.0)};
    second.duration = t.t1;
    second.drives = {control_pi(1, p.omega_r, p.delta_c)};
    third.duration = t.t1;
    third.drives = {control_pi(2, p.omega_r, p.delta_c_prime)};
    s.segments.push_back(first);
    s.segments.push_back(second);
    s.segments.push_back(third);
    s.segments.push_back(raman_segment(3, p, t.t2, {0.0, p.delta, p.delta_prime}));
    s.segments.push_back(third);
    s.segments.push_back(second);
    s.segments.push_back(first);
    attach_warnings(s, p, GateKind::C3Not);
    return s;
}

PulseSchedule make_schedule(GateKind gate, const ProtocolParams& p) {
    switch (gate) {
        case GateKind::ToffoliLinear: return schedule_toffoli_linear(p);
        case GateKind::ToffoliPlanar: return schedule_toffoli_planar(p);
        case GateKind::C3Not: return schedule_c3not(p);
    }
    throw ConfigError("make_schedule: unknown gate");
}

std::string schedule_to_json(const PulseSchedule& s) {
    nlohmann::ordered_json doc;
    doc["segments"] = nlohmann::ordered_json::array();
    for (const auto& seg : s.segments) {
        nlohmann::ordered_json j;
        j["duration_s"] = seg.duration;
        j["drives"] = nlohmann::ordered_json::array();
        for (const auto& d : seg.drives) {
            nlohmann::ordered_json jd;
            jd["atom"] = d.atom_index;
            jd["transition"] = {d.lower, d.upper};
            jd["envelope"] = {
                {"kind", d.envelope.kind == Envelope::Kind::Constant ? "constant" : "raised-cosine"},
                {"peak", d.envelope.amplitude},
                {"duration", d.envelope.duration}};
            jd["detuning_rad_s"] = d.detuning;
            jd["phase"] = d.phase_offset;
            j["drives"].push_back(jd);
        }
        doc["segments"].push_back(j);
    }
    if (!s.warnings.empty()) doc["warnings"] = s.warnings;
    return doc.dump(2);
}

}  // namespace rydgate
