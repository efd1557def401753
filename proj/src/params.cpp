#include "rydgate/params.hpp"

#include <cmath>

namespace rydgate {

namespace {

// CODATA values.
constexpr double kHartreeJ = 4.3597447222071e-18;
constexpr double kPlanckJs = 6.62607015e-34;
constexpr double kBohrUm = 0.529177210903e-4;

// 1 atomic unit of C6 expressed in GHz * um^6 (linear frequency).
double c6_au_to_ghz_um6() {
    const double hartree_ghz = kHartreeJ / kPlanckJs / 1e9;
    const double a0_6 = std::pow(kBohrUm, 6);
    return hartree_ghz * a0_6;
}

}  // namespace

const char* gate_name(GateKind g) {
    switch (g) {
        case GateKind::ToffoliLinear: return "toffoli-linear";
        case GateKind::ToffoliPlanar: return "toffoli-planar";
        case GateKind::C3Not: return "c3not";
    }
    return "?";
}

GateKind gate_from_name(const std::string& name) {
    if (name == "toffoli-linear") return GateKind::ToffoliLinear;
    if (name == "toffoli-planar") return GateKind::ToffoliPlanar;
    if (name == "c3not") return GateKind::C3Not;
    throw ConfigError("unknown gate: " + name);
}

int gate_controls(GateKind g) { return g == GateKind::C3Not ? 3 : 2; }

double c6_au(double n) {
    return std::pow(n, 11) * (11.97 - 0.8486 * n + 3.385e-3 * n * n);
}

double c6_ghz_um6(double n) { return std::abs(c6_au(n)) * c6_au_to_ghz_um6(); }

double interaction_from_distance(double c6, double l_um) {
    if (l_um <= 0.0) throw DomainError("interaction_from_distance: distance must be positive");
    const double v_ghz = c6 / std::pow(l_um, 6);
    return kTwoPi * 1e9 * v_ghz;
}

double distance_from_interaction(double c6, double v_rad) {
    if (v_rad <= 0.0) throw DomainError("distance_from_interaction: interaction must be positive");
    const double v_ghz = v_rad / (kTwoPi * 1e9);
    return std::pow(c6 / v_ghz, 1.0 / 6.0);
}

DerivedTimings derive_timings(const ProtocolParams& p, GateKind gate) {
    if (p.omega_r <= 0 || p.omega_e <= 0 || p.delta_big <= 0)
        throw DomainError("derive_timings: omega_r, omega_e and delta_big must be positive");
    DerivedTimings t;
    t.t1 = M_PI / p.omega_r;
    t.t3 = t.t1;
    t.t2 = 16.0 * M_PI * p.delta_big / (3.0 * p.omega_e * p.omega_e);
    const int reps = gate == GateKind::ToffoliLinear ? 1 : gate == GateKind::ToffoliPlanar ? 2 : 3;
    t.total = reps * (t.t1 + t.t3) + t.t2;
    return t;
}

std::vector<RegimeFinding> validate_regime(const ProtocolParams& p, GateKind gate) {
    std::vector<RegimeFinding> out;
    auto add = [&](std::string name, double ratio, double threshold, bool mandatory,
                   std::string note) {
        out.push_back({std::move(name), ratio > threshold, mandatory, ratio, threshold,
                       std::move(note)});
    };

    add("positive_rabi", std::min({p.omega_e, p.omega_c, p.omega_r}), 0.0, true,
        "all drive amplitudes positive");
    add("raman_detuned", p.delta_big / std::max(p.omega_c, 1e-300), 2.0, false,
        "Delta above the coupling Rabi");
    add("omega_hierarchy", p.omega_c / std::max(p.omega_e, 1e-300), 1.0, true,
        "coupling stronger than Raman drive");
    add("dark_state_following", p.omega_c / std::max(p.omega_e, 1e-300), 2.0, true,
        "adiabatic dark-state condition");
    add("l2_adiabatic", p.delta / std::max(p.omega_c, 1e-300), 10.0, false,
        "second coupling laser far detuned");
    if (gate == GateKind::C3Not) {
        add("l3_adiabatic", p.delta_prime / std::max(p.omega_c, 1e-300), 10.0, false,
            "third coupling laser far detuned");
        add("l3_shifted_adiabatic", (p.delta_prime - p.v) / std::max(p.omega_c, 1e-300), 10.0,
            false, "third laser far from the singly-shifted line");
    }
    const double eit_break_unit = p.omega_c * p.omega_c / (4.0 * std::max(p.delta_big, 1e-300));
    add("eit_break", p.v / std::max(eit_break_unit, 1e-300), 1.0, true,
        "interaction exceeds the transparency width");
    if (p.omega_e > 0 && p.delta_big > 0) {
        const double t2 = 16.0 * M_PI * p.delta_big / (3.0 * p.omega_e * p.omega_e);
        const double tau_r = p.gamma_r > 0 ? 1.0 / p.gamma_r : INFINITY;
        add("raman_fast_vs_rydberg_decay", tau_r / t2, 10.0, false,
            "Raman segment short against Rydberg lifetime");
    }
    add("delta_vs_gamma_e", p.delta_big / std::max(p.gamma_e, 1e-300), 10.0, false,
        "Raman detuning above intermediate-state linewidth");
    return out;
}

bool mandatory_pass(const std::vector<RegimeFinding>& findings) {
    for (const auto& f : findings)
        if (f.mandatory && !f.pass) return false;
    return true;
}

ProtocolParams default_params(GateKind gate) {
    ProtocolParams p;
    p.omega_e = mhz_to_rad(44.0);
    p.omega_r = p.omega_e;
    p.omega_c = 2.5 * p.omega_e;
    p.delta_big = 10.0 * p.omega_e;
    p.principal_n = 94.0;
    p.l = 4e-6;
    p.gamma_r = 1e4;      // 100 us Rydberg lifetime
    p.gamma_big_r = 1e4;  // same state, same lifetime
    p.gamma_e = 1.0 / 26e-9;

    const double c6 = c6_ghz_um6(p.principal_n);
    const double l_um = p.l * 1e6;
    p.v = interaction_from_distance(c6, l_um);
    switch (gate) {
        case GateKind::ToffoliLinear:
            // Controls sit at 2l; the protocol analysis neglects their
            // interaction, so the default keeps it off. Override v_cc to the
            // geometric value to include it.
            p.v_cc = 0.0;
            p.delta = p.v;
            break;
        case GateKind::ToffoliPlanar:
            // Equilateral triangle of side l: control spacing equals l.
            p.v_cc = p.v;
            p.delta = p.v;
            p.delta_c = p.v_cc;
            break;
        case GateKind::C3Not:
            // Controls on a triangle of circumradius l, target at the center;
            // side = l*sqrt(3), so the pair interaction is v / 27.
            p.v_cc = interaction_from_distance(c6, l_um * std::sqrt(3.0));
            p.delta = p.v;
            p.delta_prime = 2.0 * p.v;
            p.delta_c = p.v_cc;
            p.delta_c_prime = 2.0 * p.v_cc;
            break;
    }
    return p;
}

}  // namespace rydgate
