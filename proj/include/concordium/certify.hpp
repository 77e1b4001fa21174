#ifndef CONCORDIUM_CERTIFY_HPP
#define CONCORDIUM_CERTIFY_HPP

// Tau-bound intervals, the satellite and slice-Bennequin-type tau bounds,
// and assembly of replayable certificates for the concordance
// distinctness conclusions they support.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "concordium/laurent.hpp"
#include "concordium/legendrian.hpp"

namespace concordium {

// Integer interval certified to contain tau. Absent endpoints are the
// infinite ones; no sentinel values.
struct TauInterval {
    std::optional<int> lo;  // absent = -infinity
    std::optional<int> hi;  // absent = +infinity

    static TauInterval closed(int lo, int hi);
    static TauInterval at_least(int lo) { return {lo, std::nullopt}; }
    static TauInterval at_most(int hi) { return {std::nullopt, hi}; }
    static TauInterval whole() { return {std::nullopt, std::nullopt}; }

    friend bool operator==(const TauInterval&, const TauInterval&) = default;
};

std::string to_string(const TauInterval& iv);

// True iff the intervals cannot share an integer point.
bool disjoint(const TauInterval& a, const TauInterval& b);

// Satellite tau bound: tau(P(K)) lies in
//   [tau(P(U)) + w*tau_K - n_plus - w, tau(P(U)) + w*tau_K + n_plus + w].
// Needs n_plus and tau(P(U)) present and winding >= 1.
TauInterval roberts_interval(const PatternInvariants& p, int tau_companion);

// tau(K) >= ceil((tb + |rot| + 1)/2) from any Legendrian representative.
TauInterval plamenevskaya_interval(LegendrianKnotInfo k);

// Literature citations a certificate step may carry.
enum class CiteTag {
    CDR14_Prop2_3,
    Ray15_criterion,
    Plam04_Thm1,
    Rob12_Thm1_2,
    Ng01_Rem2_4,
    Ray15_Lem2_4,
    Arithmetic,
};

std::string to_string(CiteTag tag);
CiteTag cite_tag_from_string(const std::string& s);

struct CertStep {
    std::string claim;
    CiteTag cite = CiteTag::Arithmetic;
    nlohmann::json data;  // structured values a verifier can recompute

    friend bool operator==(const CertStep&, const CertStep&) = default;
};

struct Certificate {
    std::string conclusion;
    std::vector<CertStep> steps;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Conclusion strings, fixed so downstream exit codes and golden files are
// stable.
inline constexpr const char* kConclusionDistinct = "distinct";
inline constexpr const char* kConclusionInconclusive = "inconclusive";
inline constexpr const char* kConclusionDistinctIterates = "distinct iterates";
inline constexpr const char* kConclusionCriterionNotSatisfied = "criterion not satisfied";
inline constexpr const char* kConclusionNoObstruction = "no obstruction";
inline constexpr const char* kConclusionNotTopologicallyHopf =
    "not topologically concordant to the Hopf link";

// Built-in certified inputs used by the certification pipelines; the JSON
// files under fixtures/ mirror these values.
PatternInvariants pattern_q();       // tb=2, rot=0, winding 1, Q(U) unknotted
LegendrianKnotInfo rht_legendrian(); // right-handed trefoil, tb=0, rot=1
PatternInvariants ckrs_pattern();    // winding 1, n+=2, n-=1, tau(P(U))=0
int tau_rht();                       // tau of the right-handed trefoil

// Certifies that the i-th iterate family member is (or is not provably)
// distinct in smooth concordance from every member of the comparison
// family: stabilize the tb=2 pattern twice, iterate, take the Legendrian
// satellite with the trefoil, and separate the resulting tau intervals.
// Conclusion is "distinct" exactly when the intervals are disjoint, else
// "inconclusive". Throws on i < 1 (i = 0 is the Hopf pattern).
Certificate certify_qi_vs_ckrs(int i);

// Certifies pairwise distinctness of the iterates of p (including the
// Hopf link, i = 0, and all connected-sum companions) when the
// distinct-iterates criterion holds; otherwise concludes "criterion not
// satisfied".
Certificate certify_distinct_iterates(const PatternInvariants& p);

// Obstruction from the multivariable Alexander polynomial of a
// 2-component link: a non-unit polynomial rules out topological
// concordance to the Hopf link.
Certificate certify_not_topologically_hopf(const LaurentPoly& poly);

struct ReplayResult {
    bool ok = false;
    std::string detail;
};

// Re-executes every step of a certificate from its recorded data and
// checks the recomputed values and the conclusion. Certificates are
// self-contained; no fixtures are consulted.
ReplayResult replay(const Certificate& cert);

// Plain-text rendering: numbered steps with citation tags, then the
// conclusion.
std::string render_text(const Certificate& cert);

}  // namespace concordium

#endif
