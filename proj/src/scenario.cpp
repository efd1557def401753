#include "rydgate/scenario.hpp"

namespace rydgate {

GateScenario make_scenario(GateKind kind, const ProtocolParams& params) {
    GateScenario s;
    s.kind = kind;
    s.layout = make_layout(gate_controls(kind));
    s.params = params;
    s.schedule = make_schedule(kind, params);
    s.timings = derive_timings(params, kind);
    return s;
}

}  // namespace rydgate
