#pragma once

// Protocol parameters, units, the C6 fit, geometry conversions, derived
// segment timings and the regime inequality checks.
//
// Unit conventions: every frequency/detuning/interaction is stored as an
// angular frequency in rad/s. Config files and CLI overrides take linear MHz
// (value = omega / 2pi / 1e6) for drive parameters and plain 1/s for decay
// rates; lengths are micrometers.

#include <string>
#include <vector>

#include "rydgate/errors.hpp"

namespace rydgate {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

inline double mhz_to_rad(double mhz) { return kTwoPi * 1e6 * mhz; }
inline double rad_to_mhz(double rad) { return rad / (kTwoPi * 1e6); }

enum class GateKind { ToffoliLinear, ToffoliPlanar, C3Not };

const char* gate_name(GateKind g);
GateKind gate_from_name(const std::string& name);
int gate_controls(GateKind g);

struct ProtocolParams {
    double omega_e = 0;        // peak Raman Rabi amplitude (rad/s)
    double omega_c = 0;        // coupling Rabi (rad/s)
    double omega_r = 0;        // control Rabi (rad/s)
    double delta_big = 0;      // Raman detuning Delta (rad/s)
    double delta = 0;          // second coupling-laser detuning (rad/s)
    double delta_prime = 0;    // third coupling-laser detuning (rad/s), C3NOT
    double delta_c = 0;        // second control-pulse detuning (rad/s)
    double delta_c_prime = 0;  // third control-pulse detuning (rad/s)
    double v = 0;              // control-target interaction (rad/s)
    double v_cc = 0;           // control-control interaction (rad/s)
    double gamma_e = 0;        // intermediate-state decay rate (1/s)
    double gamma_r = 0;        // control Rydberg decay rate (1/s)
    double gamma_big_r = 0;    // target Rydberg decay rate (1/s)
    double principal_n = 0;    // principal quantum number
    double l = 0;              // control-target distance (m)
};

struct DerivedTimings {
    double t1 = 0;     // opening pi-pulse duration (s)
    double t2 = 0;     // Raman segment duration (s)
    double t3 = 0;     // closing pi-pulse duration (s), equals t1
    double total = 0;  // gate duration (s)
};

// C6 polynomial fit in atomic units; advisory validity window n in [30, 100].
// The fit is negative at n = 94; downstream geometry uses the magnitude.
double c6_au(double n);

// |C6| in linear-frequency units, GHz * um^6.
double c6_ghz_um6(double n);

// Magnitude interaction shift as angular frequency. c6 in GHz*um^6, l in um.
double interaction_from_distance(double c6, double l_um);
double distance_from_interaction(double c6, double v_rad);  // inverse, um

DerivedTimings derive_timings(const ProtocolParams& p, GateKind gate);

struct RegimeFinding {
    std::string name;
    bool pass;
    bool mandatory;
    double ratio;       // achieved ratio for the inequality
    double threshold;   // pass requires ratio > threshold
    std::string note;
};

std::vector<RegimeFinding> validate_regime(const ProtocolParams& p, GateKind gate);
bool mandatory_pass(const std::vector<RegimeFinding>& findings);

// Paper-default parameter set for a gate, geometry-derived couplings and the
// protocol detuning conditions filled in.
ProtocolParams default_params(GateKind gate);

}  // namespace rydgate
