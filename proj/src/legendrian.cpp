#include "concordium/legendrian.hpp"

#include <cstdlib>
#include <stdexcept>

namespace concordium {

void validate(const PatternInvariants& p) {
    if (p.n_plus && *p.n_plus < 0)
        throw std::invalid_argument("n_plus must be nonnegative");
    if (p.n_minus && *p.n_minus < 0)
        throw std::invalid_argument("n_minus must be nonnegative");
    if (p.n_plus && p.n_minus && *p.n_plus - *p.n_minus != p.winding)
        throw std::invalid_argument("n_plus - n_minus must equal the winding number");
    if (p.pu_unknotted && (!p.tau_pu || *p.tau_pu != 0))
        throw std::invalid_argument("unknotted P(U) forces tau(P(U)) = 0");
}

LegendrianKnotInfo stabilize(LegendrianKnotInfo k, StabSign sign) {
    k.tb -= 1;
    k.rot += sign == StabSign::Positive ? 1 : -1;
    return k;
}

PatternInvariants stabilize(PatternInvariants p, StabSign sign) {
    p.tb -= 1;
    p.rot += sign == StabSign::Positive ? 1 : -1;
    return p;
}

PatternInvariants core_pattern() {
    PatternInvariants core;
    core.tb = 0;
    core.rot = 0;
    core.winding = 1;
    core.n_plus = 1;
    core.n_minus = 0;
    core.tau_pu = 0;
    core.pu_unknotted = true;
    return core;
}

namespace {

PatternInvariants derived_pattern(int rot, bool pu_unknotted) {
    PatternInvariants out;
    out.tb = 0;
    out.rot = rot;
    out.winding = 1;
    out.pu_unknotted = pu_unknotted;
    if (pu_unknotted) out.tau_pu = 0;
    return out;
}

}  // namespace

PatternInvariants iterate_pattern(const PatternInvariants& p, int i) {
    if (i < 0) throw std::invalid_argument("iteration count must be nonnegative");
    if (i == 0) return derived_pattern(0, true);
    if (p.winding != 1)
        throw std::invalid_argument("iteration implemented for winding one only");
    if (p.tb != 0) throw std::invalid_argument("iteration requires tb = 0");
    return derived_pattern(i * p.rot, p.pu_unknotted);
}

LegendrianKnotInfo legendrian_satellite(const PatternInvariants& p, LegendrianKnotInfo k) {
    if (p.winding != 1)
        throw std::invalid_argument("satellite implemented for winding one only");
    if (k.tb != 0)
        throw std::invalid_argument(
            "companion must have tb = 0 for the untwisted Legendrian satellite");
    return LegendrianKnotInfo{p.tb + k.tb, p.rot + k.rot};
}

PatternInvariants compose_patterns(const PatternInvariants& p, const PatternInvariants& q) {
    if (p.winding != 1 || q.winding != 1)
        throw std::invalid_argument("composition implemented for winding one only");
    if (p.tb != 0 || q.tb != 0) throw std::invalid_argument("composition requires tb = 0");
    return derived_pattern(p.rot + q.rot, p.pu_unknotted && q.pu_unknotted);
}

int tau_lower_bound_from_legendrian(LegendrianKnotInfo k) {
    // ceil((tb + |rot| + 1) / 2); the numerator is even for genuine knot
    // fronts (tb + |rot| odd), but round robustly anyway.
    const int num = k.tb + std::abs(k.rot) + 1;
    const int shifted = num + 1;
    return shifted >= 0 ? shifted / 2 : (shifted - 1) / 2;
}

bool ray_criterion(const PatternInvariants& p) {
    return p.pu_unknotted && p.winding == 1 && p.tb > 0 && p.tb + p.rot >= 2;
}

LegendrianKnotInfo front_tb_rot(const FrontDiagram& f) {
    int left = 0, right = 0, up = 0, down = 0, writhe = 0;
    for (FrontEvent e : f.events) {
        switch (e) {
            case FrontEvent::LeftCuspUp: ++left, ++up; break;
            case FrontEvent::LeftCuspDown: ++left, ++down; break;
            case FrontEvent::RightCuspUp: ++right, ++up; break;
            case FrontEvent::RightCuspDown: ++right, ++down; break;
            case FrontEvent::PositiveCrossing: ++writhe; break;
            case FrontEvent::NegativeCrossing: --writhe; break;
        }
    }
    if (left != right)
        throw std::invalid_argument("malformed front: left and right cusp counts differ");
    const int cusps = left + right;
    if (cusps % 2 != 0) throw std::invalid_argument("malformed front: odd cusp count");
    return LegendrianKnotInfo{writhe - cusps / 2, (down - up) / 2};
}

std::string to_string(StabSign s) { return s == StabSign::Positive ? "+" : "-"; }

std::string to_string(FrontEvent e) {
    switch (e) {
        case FrontEvent::LeftCuspUp: return "L_up";
        case FrontEvent::LeftCuspDown: return "L_down";
        case FrontEvent::RightCuspUp: return "R_up";
        case FrontEvent::RightCuspDown: return "R_down";
        case FrontEvent::PositiveCrossing: return "X+";
        case FrontEvent::NegativeCrossing: return "X-";
    }
    throw std::logic_error("unreachable front event");
}

}  // namespace concordium
