#ifndef CONCORDIUM_LEGENDRIAN_HPP
#define CONCORDIUM_LEGENDRIAN_HPP

// The (tb, rot, winding) calculus for Legendrian knots and winding-number-
// one patterns: stabilization, pattern iteration and composition, the
// untwisted Legendrian satellite, the distinct-iterates criterion, and
// combinatorial tb/rot from front encodings.
//
// Sign convention: a positive stabilization lowers tb by 1 and raises rot
// by 1; a negative one lowers both.

#include <optional>
#include <string>
#include <vector>

namespace concordium {

// Classical invariants of a Legendrian knot representative. For a front of
// a genuine knot, tb + |rot| is odd; that parity holds for everything
// front_tb_rot produces but is not enforced on raw aggregates.
struct LegendrianKnotInfo {
    int tb = 0;
    int rot = 0;

    friend bool operator==(const LegendrianKnotInfo&, const LegendrianKnotInfo&) = default;
};

// Invariant bundle for a pattern in a solid torus. n_plus/n_minus are the
// minimal positive/negative meridian-disk intersection counts (absent when
// not supplied or not derivable); tau_pu is tau of the pattern applied to
// the unknot (absent when unknown). pu_unknotted certifies that P(U) is
// the unknot, which forces tau_pu = 0.
struct PatternInvariants {
    int tb = 0;
    int rot = 0;
    int winding = 0;
    std::optional<int> n_plus;
    std::optional<int> n_minus;
    std::optional<int> tau_pu;
    bool pu_unknotted = false;

    friend bool operator==(const PatternInvariants&, const PatternInvariants&) = default;
};

// Throws std::invalid_argument when the stated invariants fail:
// n_plus - n_minus = winding (when both present), n_plus/n_minus >= 0,
// and pu_unknotted => tau_pu = 0.
void validate(const PatternInvariants& p);

enum class StabSign { Positive, Negative };

LegendrianKnotInfo stabilize(LegendrianKnotInfo k, StabSign sign);
PatternInvariants stabilize(PatternInvariants p, StabSign sign);

// The core of the standard solid torus (the Hopf-link pattern): the
// identity satellite operator.
PatternInvariants core_pattern();

// i-fold Legendrian self-satellite of a winding-one pattern with tb = 0:
// tb stays 0 and rot scales by i. i = 0 yields the core pattern for any
// input. n_plus/n_minus are dropped (no composition law for them), and
// tau_pu is kept only when P(U) is unknotted.
PatternInvariants iterate_pattern(const PatternInvariants& p, int i);

// Untwisted Legendrian satellite of a tb = 0 companion by a winding-one
// pattern: tb and rot are additive.
LegendrianKnotInfo legendrian_satellite(const PatternInvariants& p, LegendrianKnotInfo k);

// Monoid composition of winding-one, tb = 0 patterns; rot adds.
// iterate_pattern(p, i) equals the i-fold composition of p with itself.
PatternInvariants compose_patterns(const PatternInvariants& p, const PatternInvariants& q);

// Certified lower bound for tau from a Legendrian representative:
// ceil((tb + |rot| + 1) / 2), via the bound tb + |rot| <= 2*tau - 1.
int tau_lower_bound_from_legendrian(LegendrianKnotInfo k);

// True iff p is winding one with P(U) unknotted and admits tb > 0 and
// tb + rot >= 2; then the iterates of p induce pairwise distinct satellite
// operators on the exotic concordance group.
bool ray_criterion(const PatternInvariants& p);

enum class FrontEvent {
    LeftCuspUp,
    LeftCuspDown,
    RightCuspUp,
    RightCuspDown,
    PositiveCrossing,
    NegativeCrossing,
};

// A front diagram flattened to an event list (single-strand normal form).
// Left and right cusp counts must agree; each cusp carries the orientation
// tag (up/down) of the strand through it.
struct FrontDiagram {
    std::vector<FrontEvent> events;

    friend bool operator==(const FrontDiagram&, const FrontDiagram&) = default;
};

// tb = writhe - (#cusps)/2, rot = (#down cusps - #up cusps)/2. The caller
// is responsible for the event list encoding a single knot component.
// Throws std::invalid_argument on malformed fronts (left/right cusp
// mismatch or odd cusp count).
LegendrianKnotInfo front_tb_rot(const FrontDiagram& f);

std::string to_string(StabSign s);
std::string to_string(FrontEvent e);

}  // namespace concordium

#endif
