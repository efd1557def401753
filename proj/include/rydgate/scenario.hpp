#pragma once

// A fully assembled gate scenario: layout, resolved parameters, schedule and
// derived timings. Everything downstream (propagation, metrics, fidelity,
// CLI runs) starts from one of these.

#include "rydgate/hilbert.hpp"
#include "rydgate/params.hpp"
#include "rydgate/pulses.hpp"

namespace rydgate {

struct GateScenario {
    GateKind kind = GateKind::ToffoliLinear;
    SystemLayout layout;
    ProtocolParams params;
    PulseSchedule schedule;
    DerivedTimings timings;
};

GateScenario make_scenario(GateKind kind, const ProtocolParams& params);

}  // namespace rydgate
