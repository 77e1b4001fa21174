#include "concordium/certify.hpp"

#include <sstream>
#include <stdexcept>

#include "concordium/json_io.hpp"

namespace concordium {

TauInterval TauInterval::closed(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("interval: lo exceeds hi");
    return {lo, hi};
}

std::string to_string(const TauInterval& iv) {
    std::ostringstream os;
    os << (iv.lo ? "[" + std::to_string(*iv.lo) : "(-inf");
    os << ", ";
    os << (iv.hi ? std::to_string(*iv.hi) + "]" : "+inf)");
    return os.str();
}

bool disjoint(const TauInterval& a, const TauInterval& b) {
    const bool a_below_b = a.hi && b.lo && *a.hi < *b.lo;
    const bool b_below_a = b.hi && a.lo && *b.hi < *a.lo;
    return a_below_b || b_below_a;
}

TauInterval roberts_interval(const PatternInvariants& p, int tau_companion) {
    if (!p.n_plus) throw std::invalid_argument("Roberts bound needs n_plus");
    if (!p.tau_pu) throw std::invalid_argument("Roberts bound needs tau(P(U))");
    if (p.winding < 1)
        throw std::invalid_argument("Roberts bound implemented for winding >= 1");
    const int center = *p.tau_pu + p.winding * tau_companion;
    const int radius = *p.n_plus + p.winding;
    return TauInterval::closed(center - radius, center + radius);
}

TauInterval plamenevskaya_interval(LegendrianKnotInfo k) {
    return TauInterval::at_least(tau_lower_bound_from_legendrian(k));
}

std::string to_string(CiteTag tag) {
    switch (tag) {
        case CiteTag::CDR14_Prop2_3: return "CDR14-Prop2.3";
        case CiteTag::Ray15_criterion: return "Ray15-criterion";
        case CiteTag::Plam04_Thm1: return "Plam04-Thm1";
        case CiteTag::Rob12_Thm1_2: return "Rob12-Thm1.2";
        case CiteTag::Ng01_Rem2_4: return "Ng01-Rem2.4";
        case CiteTag::Ray15_Lem2_4: return "Ray15-Lem2.4";
        case CiteTag::Arithmetic: return "arithmetic";
    }
    throw std::logic_error("unreachable citation tag");
}

CiteTag cite_tag_from_string(const std::string& s) {
    if (s == "CDR14-Prop2.3") return CiteTag::CDR14_Prop2_3;
    if (s == "Ray15-criterion") return CiteTag::Ray15_criterion;
    if (s == "Plam04-Thm1") return CiteTag::Plam04_Thm1;
    if (s == "Rob12-Thm1.2") return CiteTag::Rob12_Thm1_2;
    if (s == "Ng01-Rem2.4") return CiteTag::Ng01_Rem2_4;
    if (s == "Ray15-Lem2.4") return CiteTag::Ray15_Lem2_4;
    if (s == "arithmetic") return CiteTag::Arithmetic;
    throw std::invalid_argument("unknown citation tag: " + s);
}

PatternInvariants pattern_q() {
    PatternInvariants q;
    q.tb = 2;
    q.rot = 0;
    q.winding = 1;
    q.tau_pu = 0;
    q.pu_unknotted = true;
    return q;
}

LegendrianKnotInfo rht_legendrian() { return {0, 1}; }

PatternInvariants ckrs_pattern() {
    PatternInvariants p;
    p.tb = 0;
    p.rot = 0;
    p.winding = 1;
    p.n_plus = 2;
    p.n_minus = 1;
    p.tau_pu = 0;
    p.pu_unknotted = true;
    return p;
}

int tau_rht() { return 1; }

namespace {

std::string knot_str(const LegendrianKnotInfo& k) {
    return "tb = " + std::to_string(k.tb) + ", rot = " + std::to_string(k.rot);
}

std::string pattern_str(const PatternInvariants& p) {
    return "tb = " + std::to_string(p.tb) + ", rot = " + std::to_string(p.rot);
}

}  // namespace

Certificate certify_qi_vs_ckrs(int i) {
    if (i < 1)
        throw std::invalid_argument(
            "comparison needs i >= 1 (i = 0 is the Hopf pattern itself)");

    Certificate cert;
    const PatternInvariants q = pattern_q();
    cert.steps.push_back(
        {"pattern fixture: " + pattern_str(q) + ", winding 1, pattern(unknot) unknotted",
         CiteTag::Arithmetic, json{{"pattern", pattern_to_json(q)}}});

    const PatternInvariants stabilized =
        stabilize(stabilize(q, StabSign::Positive), StabSign::Positive);
    cert.steps.push_back({"two positive stabilizations give " + pattern_str(stabilized),
                          CiteTag::Arithmetic,
                          json{{"pattern", pattern_to_json(stabilized)}}});

    const PatternInvariants iterated = iterate_pattern(stabilized, i);
    cert.steps.push_back(
        {"the " + std::to_string(i) + "-fold Legendrian self-satellite has " +
             pattern_str(iterated) + " (tb and rot scale by the iteration count)",
         CiteTag::Ray15_Lem2_4,
         json{{"i", i}, {"pattern", pattern_to_json(iterated)}}});

    const LegendrianKnotInfo companion = rht_legendrian();
    const LegendrianKnotInfo satellite = legendrian_satellite(iterated, companion);
    cert.steps.push_back(
        {"Legendrian satellite with the right-handed trefoil (" + knot_str(companion) +
             ") gives " + knot_str(satellite) + " (tb and rot are additive)",
         CiteTag::Ng01_Rem2_4,
         json{{"companion", knot_to_json(companion)}, {"satellite", knot_to_json(satellite)}}});

    const TauInterval lower = plamenevskaya_interval(satellite);
    cert.steps.push_back(
        {"tb + |rot| <= 2*tau - 1 places tau of the iterated satellite in " + to_string(lower),
         CiteTag::Plam04_Thm1, json{{"interval", interval_to_json(lower)}}});

    const PatternInvariants ckrs = ckrs_pattern();
    const TauInterval upper = roberts_interval(ckrs, tau_rht());
    cert.steps.push_back(
        {"the satellite tau bound with n_plus = 2, winding 1, tau(pattern(unknot)) = 0 and "
         "tau(trefoil companion) = 1 places tau of every comparison satellite in " +
             to_string(upper) + ", independent of the tied knot",
         CiteTag::Rob12_Thm1_2,
         json{{"pattern", pattern_to_json(ckrs)},
              {"tau_companion", tau_rht()},
              {"interval", interval_to_json(upper)}}});

    const bool separated = disjoint(lower, upper);
    cert.steps.push_back(
        {separated
             ? std::string("the tau intervals are disjoint: the two links induce different "
                           "satellite operators on the trefoil, so they are not smoothly "
                           "concordant")
             : std::string("the tau intervals overlap: the satellite invariants do not "
                           "separate these links"),
         CiteTag::CDR14_Prop2_3, json{{"disjoint", separated}}});

    cert.conclusion = separated ? kConclusionDistinct : kConclusionInconclusive;
    return cert;
}

Certificate certify_distinct_iterates(const PatternInvariants& p) {
    Certificate cert;
    const bool ok = ray_criterion(p);
    std::ostringstream claim;
    if (ok) {
        claim << "the pattern is winding one, pattern(unknot) is unknotted, and a Legendrian "
                 "diagram has tb = "
              << p.tb << " > 0 with tb + rot = " << p.tb + p.rot << " >= 2";
    } else {
        claim << "criterion fails (needs winding 1, pattern(unknot) unknotted, tb > 0 and "
                 "tb + rot >= 2; got winding = "
              << p.winding << ", unknotted = " << (p.pu_unknotted ? "yes" : "no")
              << ", tb = " << p.tb << ", tb + rot = " << p.tb + p.rot << ")";
    }
    cert.steps.push_back({claim.str(), CiteTag::Ray15_criterion,
                          json{{"pattern", pattern_to_json(p)}, {"criterion", ok}}});
    if (!ok) {
        cert.conclusion = kConclusionCriterionNotSatisfied;
        return cert;
    }
    cert.steps.push_back(
        {"the iterated patterns induce pairwise distinct satellite operators on the exotic "
         "concordance group, so the links (P^i, eta(P^i)) are pairwise distinct in smooth "
         "concordance for all i != j >= 0, including the Hopf link (i = 0)",
         CiteTag::CDR14_Prop2_3, json::object()});
    cert.steps.push_back(
        {"no iterate with i >= 1 is smoothly concordant to the Hopf link with a knot tied in "
         "the first component: applied to the unknot, such a concordance forces the tied knot "
         "to be exotically concordant to the unknot and the iterate to act as the identity",
         CiteTag::CDR14_Prop2_3, json::object()});
    cert.conclusion = kConclusionDistinctIterates;
    return cert;
}

Certificate certify_not_topologically_hopf(const LaurentPoly& poly) {
    Certificate cert;
    const LaurentPoly normalized = normalize_up_to_units(poly);
    const bool unit = is_unit(poly);
    cert.steps.push_back(
        {"multivariable Alexander polynomial, normalized up to units +-t1^a*t2^b: " +
             to_string(normalized) + (unit ? " (a unit)" : " (not a unit)"),
         CiteTag::Arithmetic,
         json{{"polynomial", poly_to_json(poly)},
              {"normalized", poly_to_json(normalized)},
              {"is_unit", unit}}});
    if (unit) {
        cert.steps.push_back(
            {"the Alexander obstruction vanishes; a 2-component link with linking number one, "
             "unknotted components and Alexander polynomial one is topologically concordant to "
             "the Hopf link (Davis)",
             CiteTag::Arithmetic, json::object()});
        cert.conclusion = kConclusionNoObstruction;
    } else {
        cert.steps.push_back(
            {"the polynomial is not one up to units, while concordant links share their "
             "Alexander polynomial up to norms (Kawauchi); the Hopf link has polynomial one",
             CiteTag::Arithmetic, json::object()});
        cert.conclusion = kConclusionNotTopologicallyHopf;
    }
    return cert;
}

namespace {

ReplayResult replay_fail(const std::string& detail) { return {false, detail}; }

ReplayResult check_cites(const Certificate& cert, const std::vector<CiteTag>& expected) {
    if (cert.steps.size() != expected.size())
        return replay_fail("expected " + std::to_string(expected.size()) + " steps, found " +
                           std::to_string(cert.steps.size()));
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (cert.steps[i].cite != expected[i])
            return replay_fail("step " + std::to_string(i + 1) + " cites " +
                               to_string(cert.steps[i].cite) + ", expected " +
                               to_string(expected[i]));
    return {true, ""};
}

ReplayResult replay_qi_vs_ckrs(const Certificate& cert) {
    ReplayResult structure = check_cites(
        cert, {CiteTag::Arithmetic, CiteTag::Arithmetic, CiteTag::Ray15_Lem2_4,
               CiteTag::Ng01_Rem2_4, CiteTag::Plam04_Thm1, CiteTag::Rob12_Thm1_2,
               CiteTag::CDR14_Prop2_3});
    if (!structure.ok) return structure;

    const PatternInvariants start = pattern_from_json(cert.steps[0].data.at("pattern"));
    const PatternInvariants stabilized =
        stabilize(stabilize(start, StabSign::Positive), StabSign::Positive);
    if (stabilized != pattern_from_json(cert.steps[1].data.at("pattern")))
        return replay_fail("step 2: recomputed stabilization disagrees");

    const int i = cert.steps[2].data.at("i").get<int>();
    const PatternInvariants iterated = iterate_pattern(stabilized, i);
    if (iterated != pattern_from_json(cert.steps[2].data.at("pattern")))
        return replay_fail("step 3: recomputed iteration disagrees");

    const LegendrianKnotInfo companion = knot_from_json(cert.steps[3].data.at("companion"));
    const LegendrianKnotInfo satellite = legendrian_satellite(iterated, companion);
    if (satellite != knot_from_json(cert.steps[3].data.at("satellite")))
        return replay_fail("step 4: recomputed satellite disagrees");

    if (plamenevskaya_interval(satellite) !=
        interval_from_json(cert.steps[4].data.at("interval")))
        return replay_fail("step 5: recomputed tau lower bound disagrees");

    const PatternInvariants comparison = pattern_from_json(cert.steps[5].data.at("pattern"));
    const int tau_companion = cert.steps[5].data.at("tau_companion").get<int>();
    const TauInterval upper = roberts_interval(comparison, tau_companion);
    if (upper != interval_from_json(cert.steps[5].data.at("interval")))
        return replay_fail("step 6: recomputed satellite tau bound disagrees");

    const bool separated =
        disjoint(interval_from_json(cert.steps[4].data.at("interval")), upper);
    if (separated != cert.steps[6].data.at("disjoint").get<bool>())
        return replay_fail("step 7: recomputed disjointness disagrees");

    const std::string expected =
        separated ? kConclusionDistinct : kConclusionInconclusive;
    if (cert.conclusion != expected)
        return replay_fail("conclusion \"" + cert.conclusion + "\" does not follow; expected \"" +
                           expected + "\"");
    return {true, ""};
}

ReplayResult replay_distinct_iterates(const Certificate& cert) {
    if (cert.steps.empty() || cert.steps[0].cite != CiteTag::Ray15_criterion)
        return replay_fail("step 1 must cite the distinct-iterates criterion");
    const PatternInvariants p = pattern_from_json(cert.steps[0].data.at("pattern"));
    const bool ok = ray_criterion(p);
    if (ok != cert.steps[0].data.at("criterion").get<bool>())
        return replay_fail("step 1: recomputed criterion disagrees");
    if (ok) {
        ReplayResult structure = check_cites(
            cert, {CiteTag::Ray15_criterion, CiteTag::CDR14_Prop2_3, CiteTag::CDR14_Prop2_3});
        if (!structure.ok) return structure;
        if (cert.conclusion != kConclusionDistinctIterates)
            return replay_fail("conclusion does not follow from a satisfied criterion");
    } else {
        if (cert.steps.size() != 1)
            return replay_fail("a failed criterion admits no further steps");
        if (cert.conclusion != kConclusionCriterionNotSatisfied)
            return replay_fail("conclusion does not follow from a failed criterion");
    }
    return {true, ""};
}

ReplayResult replay_not_topologically_hopf(const Certificate& cert) {
    ReplayResult structure = check_cites(cert, {CiteTag::Arithmetic, CiteTag::Arithmetic});
    if (!structure.ok) return structure;
    const LaurentPoly poly = poly_from_json(cert.steps[0].data.at("polynomial"));
    const LaurentPoly normalized = normalize_up_to_units(poly);
    if (normalized != poly_from_json(cert.steps[0].data.at("normalized")))
        return replay_fail("step 1: recomputed normalization disagrees");
    const bool unit = is_unit(poly);
    if (unit != cert.steps[0].data.at("is_unit").get<bool>())
        return replay_fail("step 1: recomputed unit test disagrees");
    const std::string expected =
        unit ? kConclusionNoObstruction : kConclusionNotTopologicallyHopf;
    if (cert.conclusion != expected)
        return replay_fail("conclusion \"" + cert.conclusion + "\" does not follow; expected \"" +
                           expected + "\"");
    return {true, ""};
}

}  // namespace

ReplayResult replay(const Certificate& cert) {
    try {
        if (cert.conclusion == kConclusionDistinct || cert.conclusion == kConclusionInconclusive)
            return replay_qi_vs_ckrs(cert);
        if (cert.conclusion == kConclusionDistinctIterates ||
            cert.conclusion == kConclusionCriterionNotSatisfied)
            return replay_distinct_iterates(cert);
        if (cert.conclusion == kConclusionNoObstruction ||
            cert.conclusion == kConclusionNotTopologicallyHopf)
            return replay_not_topologically_hopf(cert);
        return replay_fail("unknown conclusion: " + cert.conclusion);
    } catch (const std::exception& e) {
        return replay_fail(std::string("replay error: ") + e.what());
    }
}

std::string render_text(const Certificate& cert) {
    std::ostringstream os;
    os << "Certificate\n";
    for (std::size_t i = 0; i < cert.steps.size(); ++i)
        os << "  " << i + 1 << ". [" << to_string(cert.steps[i].cite) << "] "
           << cert.steps[i].claim << "\n";
    os << "Conclusion: " << cert.conclusion << "\n";
    return os.str();
}

}  // namespace concordium
