#include "concordium/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace concordium {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const json& require(const json& j, const char* key, const char* ctx) {
    auto it = j.find(key);
    if (it == j.end()) fail(std::string(ctx) + ": missing key \"" + key + "\"");
    return *it;
}

int int_from(const json& j, const char* ctx) {
    if (!j.is_number_integer()) fail(std::string(ctx) + ": expected an integer");
    return j.get<int>();
}

std::optional<int> opt_int_from(const json& j, const char* ctx) {
    if (j.is_null()) return std::nullopt;
    return int_from(j, ctx);
}

json opt_int_to(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json bigint_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
        return BigInt(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
            fail("coefficient string is not a decimal integer: " + j.get<std::string>());
        }
    }
    if (j.is_number_float())
        fail("coefficient exceeds the JSON integer range; encode it as a decimal string");
    fail("coefficient must be an integer or a decimal string");
}

json poly_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["c"] = bigint_to_json(c);
        term["e"] = json::array({e.first, e.second});
        terms.push_back(std::move(term));
    }
    return json{{"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const json& j) {
    if (!j.is_object()) fail("polynomial: expected an object with a \"terms\" array");
    const json& terms = require(j, "terms", "polynomial");
    if (!terms.is_array()) fail("polynomial: \"terms\" must be an array");
    std::vector<Term> collected;
    collected.reserve(terms.size());
    for (const json& t : terms) {
        const json& e = require(t, "e", "polynomial term");
        if (!e.is_array() || e.size() != 2)
            fail("polynomial term: \"e\" must be a pair of exponents");
        Term term;
        term.coeff = bigint_from_json(require(t, "c", "polynomial term"));
        term.exp1 = int_from(e[0], "polynomial exponent");
        term.exp2 = int_from(e[1], "polynomial exponent");
        collected.push_back(std::move(term));
    }
    return LaurentPoly::from_terms(collected);
}

json matrix_to_json(const PolyMatrix& m) {
    const std::size_t n = m.dim();
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(poly_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", n}, {"entries", std::move(rows)}};
}

PolyMatrix matrix_from_json(const json& j) {
    const int n = int_from(require(j, "n", "matrix"), "matrix dimension");
    if (n <= 0) fail("matrix: dimension must be positive");
    const json& rows = require(j, "entries", "matrix");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
        fail("matrix: expected " + std::to_string(n) + " rows");
    std::vector<LaurentPoly> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            fail("matrix: every row must have " + std::to_string(n) + " entries");
        for (const json& cell : row) entries.push_back(poly_from_json(cell));
    }
    return PolyMatrix(static_cast<std::size_t>(n), std::move(entries));
}

json knot_to_json(const LegendrianKnotInfo& k) { return json{{"tb", k.tb}, {"rot", k.rot}}; }

LegendrianKnotInfo knot_from_json(const json& j) {
    LegendrianKnotInfo k;
    k.tb = int_from(require(j, "tb", "Legendrian knot"), "tb");
    k.rot = int_from(require(j, "rot", "Legendrian knot"), "rot");
    return k;
}

json pattern_to_json(const PatternInvariants& p) {
    return json{{"tb", p.tb},
                {"rot", p.rot},
                {"winding", p.winding},
                {"n_plus", opt_int_to(p.n_plus)},
                {"n_minus", opt_int_to(p.n_minus)},
                {"tau_pu", opt_int_to(p.tau_pu)},
                {"pu_unknotted", p.pu_unknotted}};
}

PatternInvariants pattern_from_json(const json& j) {
    PatternInvariants p;
    p.tb = int_from(require(j, "tb", "pattern"), "tb");
    p.rot = int_from(require(j, "rot", "pattern"), "rot");
    p.winding = int_from(require(j, "winding", "pattern"), "winding");
    p.n_plus = opt_int_from(require(j, "n_plus", "pattern"), "n_plus");
    p.n_minus = opt_int_from(require(j, "n_minus", "pattern"), "n_minus");
    p.tau_pu = opt_int_from(require(j, "tau_pu", "pattern"), "tau_pu");
    const json& pu = require(j, "pu_unknotted", "pattern");
    if (!pu.is_boolean()) fail("pattern: \"pu_unknotted\" must be a boolean");
    p.pu_unknotted = pu.get<bool>();
    validate(p);
    return p;
}

namespace {

FrontEvent front_event_from_token(const std::string& s) {
    if (s == "L_up") return FrontEvent::LeftCuspUp;
    if (s == "L_down") return FrontEvent::LeftCuspDown;
    if (s == "R_up") return FrontEvent::RightCuspUp;
    if (s == "R_down") return FrontEvent::RightCuspDown;
    if (s == "X+") return FrontEvent::PositiveCrossing;
    if (s == "X-") return FrontEvent::NegativeCrossing;
    fail("unknown front event token: " + s);
}

}  // namespace

json front_to_json(const FrontDiagram& f) {
    json events = json::array();
    for (FrontEvent e : f.events) events.push_back(to_string(e));
    return json{{"events", std::move(events)}};
}

FrontDiagram front_from_json(const json& j) {
    const json& events = require(j, "events", "front");
    if (!events.is_array()) fail("front: \"events\" must be an array");
    FrontDiagram f;
    f.events.reserve(events.size());
    for (const json& e : events) {
        if (!e.is_string()) fail("front: events must be strings");
        f.events.push_back(front_event_from_token(e.get<std::string>()));
    }
    return f;
}

json diagram_to_json(const CrossingList& d) {
    json crossings = json::array();
    for (const Crossing& c : d.crossings())
        crossings.push_back(json{{"s", c.sign}, {"over", c.over}, {"under", c.under}});
    return json{{"components", d.components()}, {"crossings", std::move(crossings)}};
}

CrossingList diagram_from_json(const json& j) {
    const json& comps = require(j, "components", "diagram");
    if (!comps.is_array()) fail("diagram: \"components\" must be an array");
    std::vector<std::string> components;
    for (const json& c : comps) {
        if (!c.is_string()) fail("diagram: component labels must be strings");
        components.push_back(c.get<std::string>());
    }
    const json& cross = require(j, "crossings", "diagram");
    if (!cross.is_array()) fail("diagram: \"crossings\" must be an array");
    std::vector<Crossing> crossings;
    for (const json& c : cross) {
        Crossing x;
        x.sign = int_from(require(c, "s", "crossing"), "crossing sign");
        const json& over = require(c, "over", "crossing");
        const json& under = require(c, "under", "crossing");
        if (!over.is_string() || !under.is_string())
            fail("crossing: \"over\" and \"under\" must be component labels");
        x.over = over.get<std::string>();
        x.under = under.get<std::string>();
        crossings.push_back(std::move(x));
    }
    return CrossingList(std::move(components), std::move(crossings));
}

json interval_to_json(const TauInterval& iv) {
    return json{{"lo", opt_int_to(iv.lo)}, {"hi", opt_int_to(iv.hi)}};
}

TauInterval interval_from_json(const json& j) {
    TauInterval iv;
    iv.lo = opt_int_from(require(j, "lo", "interval"), "lo");
    iv.hi = opt_int_from(require(j, "hi", "interval"), "hi");
    if (iv.lo && iv.hi && *iv.lo > *iv.hi) fail("interval: lo exceeds hi");
    return iv;
}

json certificate_to_json(const Certificate& c) {
    json steps = json::array();
    for (const CertStep& s : c.steps)
        steps.push_back(json{{"claim", s.claim}, {"cite", to_string(s.cite)}, {"data", s.data}});
    return json{{"conclusion", c.conclusion}, {"steps", std::move(steps)}};
}

Certificate certificate_from_json(const json& j) {
    Certificate c;
    const json& conclusion = require(j, "conclusion", "certificate");
    if (!conclusion.is_string()) fail("certificate: \"conclusion\" must be a string");
    c.conclusion = conclusion.get<std::string>();
    const json& steps = require(j, "steps", "certificate");
    if (!steps.is_array()) fail("certificate: \"steps\" must be an array");
    for (const json& s : steps) {
        CertStep step;
        const json& claim = require(s, "claim", "certificate step");
        if (!claim.is_string()) fail("certificate step: \"claim\" must be a string");
        step.claim = claim.get<std::string>();
        const json& cite = require(s, "cite", "certificate step");
        if (!cite.is_string()) fail("certificate step: \"cite\" must be a string");
        step.cite = cite_tag_from_string(cite.get<std::string>());
        step.data = require(s, "data", "certificate step");
        c.steps.push_back(std::move(step));
    }
    return c;
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    return json::parse(in);  // parse errors report line and column
}

}  // namespace concordium
