#pragma once

#include <vector>

#include "koon/lifetime.hpp"
#include "koon/system.hpp"

namespace koon {

// The three conditionings a residual lifetime can be taken under: the system
// is alive (T > t), every component is alive (X_{1:n} > t), or the k-out-of-n
// core is alive ignoring the standby (X_{n-k+1:n} > t).
enum class MrlKind { Usual, SystemLevel, Working };

struct MrlResult {
    double value = 0.0;
    AccuracyBudget budget;
};

// P(T - t > s | T > t)
double usual_residual_sf(const SystemSpec& sys, long t, long s);
// E(T - t | T > t), certified within d
MrlResult usual_mrl(const SystemSpec& sys, long t, double d);

// P(T - t > s | X_{1:n} > t): the residual system (components conditioned on
// surviving t, standby as new) evaluated at s.
double syslevel_residual_sf(const SystemSpec& sys, long t, long s);
// E(T - t | X_{1:n} > t) = E T of the residual system, certified within d
MrlResult syslevel_mrl(const SystemSpec& sys, long t, double d);

// P(T - t > s | X_{n-k+1:n} > t)
double working_residual_sf(const SystemSpec& sys, long t, long s);
// E(T - t | X_{n-k+1:n} > t), certified within d
MrlResult working_mrl(const SystemSpec& sys, long t, double d);

// The system seen from time t given all components alive: every active
// component is residual-transformed, the standby is untouched (it has not
// been switched on yet, so it cannot have aged).
SystemSpec residual_system(const SystemSpec& sys, long t);

struct CurvePoint {
    long t = 0;
    double value = 0.0;
    double certified_error = 0.0;
    bool gap = false;  // conditioning probability underflowed at this t
};

struct Curve {
    MrlKind kind = MrlKind::Usual;
    std::vector<CurvePoint> points;
};

// Per-point MRL values over t = t_from..t_to. Points whose conditioning event
// has vanishing probability are emitted as gaps rather than aborting the
// curve. Shares survival grids across points where the kind allows it.
Curve mrl_curve(const SystemSpec& sys, MrlKind kind, long t_from, long t_to, double d);

}  // namespace koon
