// Command-line front end: Alexander-triviality reports from presentation
// matrices, tb/rot calculus on Legendrian data, crossing-list diagram
// queries, and concordance-distinctness certificates.
//
// Exit codes: 0 for success and for conclusive certificates, 2 for
// mathematically inconclusive certificates, 1 for operational errors.

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "concordium/certify.hpp"
#include "concordium/diagram.hpp"
#include "concordium/json_io.hpp"
#include "concordium/laurent.hpp"
#include "concordium/legendrian.hpp"
#include "concordium/polymatrix.hpp"

namespace {

using concordium::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

bool looks_like_inline_json(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return c == '{' || c == '[';
    return false;
}

// Inline JSON is parsed directly; anything else is a path, looked up as
// given and then under $CONCORDIUM_FIXTURES.
json resolve_input(const std::string& arg) {
    if (looks_like_inline_json(arg)) return json::parse(arg);
    namespace fs = std::filesystem;
    if (fs::exists(arg)) return concordium::load_json_file(arg);
    if (const char* dir = std::getenv("CONCORDIUM_FIXTURES")) {
        const fs::path candidate = fs::path(dir) / arg;
        if (fs::exists(candidate)) return concordium::load_json_file(candidate);
    }
    throw std::runtime_error("cannot open input: " + arg);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int emit_certificate(const concordium::Certificate& cert, const std::string& output) {
    if (output == "json")
        emit(concordium::certificate_to_json(cert));
    else
        std::cout << concordium::render_text(cert);
    const bool inconclusive = cert.conclusion == concordium::kConclusionInconclusive ||
                              cert.conclusion == concordium::kConclusionCriterionNotSatisfied;
    return inconclusive ? kExitInconclusive : kExitOk;
}

concordium::StabSign stab_sign_from_char(char c) {
    if (c == '+') return concordium::StabSign::Positive;
    if (c == '-') return concordium::StabSign::Negative;
    throw std::runtime_error(std::string("invalid stabilization sign: ") + c);
}

int run_alex(const std::string& input, const std::string& output) {
    const concordium::PolyMatrix m = concordium::matrix_from_json(resolve_input(input));
    const concordium::LaurentPoly d = concordium::det(m);
    const concordium::LaurentPoly alex = concordium::normalize_up_to_units(d);
    const bool trivial = concordium::is_unit(d);
    if (output == "json") {
        emit(json{{"det", concordium::poly_to_json(d)},
                  {"alexander_polynomial", concordium::poly_to_json(alex)},
                  {"is_trivial", trivial}});
    } else {
        std::cout << "det                 = " << d << "\n"
                  << "alexander (normal.) = " << alex << "\n"
                  << "alexander-trivial   = " << (trivial ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int run_legendrian_result(const json& value, const std::string& output,
                          const std::string& text) {
    if (output == "json")
        emit(value);
    else
        std::cout << text << "\n";
    return kExitOk;
}

std::string knot_text(const concordium::LegendrianKnotInfo& k) {
    return "tb = " + std::to_string(k.tb) + ", rot = " + std::to_string(k.rot);
}

std::string pattern_text(const concordium::PatternInvariants& p) {
    return "tb = " + std::to_string(p.tb) + ", rot = " + std::to_string(p.rot) +
           ", winding = " + std::to_string(p.winding);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"concordium: exact link-concordance obstruction calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output = "text";
    app.add_option("--output", output, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    // alex
    std::string alex_input;
    CLI::App* alex = app.add_subcommand(
        "alex", "determinant and Alexander polynomial of a presentation matrix");
    alex->add_option("input", alex_input, "matrix JSON (path or inline)")->required();

    // certify
    CLI::App* certify = app.add_subcommand("certify", "emit a concordance certificate");
    certify->require_subcommand(1);

    std::string iterates_input;
    CLI::App* iterates = certify->add_subcommand(
        "iterates", "pairwise distinctness of the iterates of a pattern");
    iterates->add_option("input", iterates_input,
                         "pattern JSON (path or inline; default: the built-in tb=2 pattern)");

    int ckrs_i = 0;
    CLI::App* ckrs = certify->add_subcommand(
        "ckrs", "separation of an iterate from the comparison family");
    ckrs->add_option("--i", ckrs_i, "iteration count (>= 1)")->required();

    std::string hopf_input;
    CLI::App* hopf = certify->add_subcommand(
        "hopf-top", "topological obstruction from an Alexander polynomial");
    hopf->add_option("input", hopf_input, "polynomial JSON (path or inline)")->required();

    // legendrian
    CLI::App* legendrian = app.add_subcommand("legendrian", "tb/rot calculus");
    legendrian->require_subcommand(1);

    std::string stab_input, stab_signs;
    CLI::App* stab = legendrian->add_subcommand("stabilize", "apply stabilizations");
    stab->add_option("input", stab_input, "knot or pattern JSON (path or inline)")->required();
    stab->add_option("--stab", stab_signs, "stabilization signs, e.g. ++ or +-")->required();

    std::string iter_input, iter_signs;
    int iter_i = 0;
    CLI::App* iter = legendrian->add_subcommand("iterate", "iterate a pattern");
    iter->add_option("input", iter_input, "pattern JSON (path or inline)")->required();
    iter->add_option("--i", iter_i, "iteration count (>= 0)")->required();
    iter->add_option("--stab", iter_signs, "stabilizations applied before iterating");

    std::string sat_pattern, sat_companion;
    CLI::App* sat = legendrian->add_subcommand("satellite", "untwisted Legendrian satellite");
    sat->add_option("--pattern", sat_pattern, "pattern JSON (path or inline)")->required();
    sat->add_option("--companion", sat_companion, "companion knot JSON (path or inline)")
        ->required();

    std::string front_input;
    CLI::App* front = legendrian->add_subcommand("front", "tb/rot of a front encoding");
    front->add_option("input", front_input, "front JSON (path or inline)")->required();

    // diagram
    CLI::App* diagram = app.add_subcommand("diagram", "crossing-list diagram queries");
    diagram->require_subcommand(1);

    std::string lk_input, lk_a, lk_b;
    CLI::App* lk = diagram->add_subcommand("lk", "linking number of two components");
    lk->add_option("input", lk_input, "diagram JSON (path or inline)")->required();
    lk->add_option("--a", lk_a, "first component (default: first declared)");
    lk->add_option("--b", lk_b, "second component (default: second declared)");

    std::string wr_input, wr_a;
    CLI::App* wr = diagram->add_subcommand("writhe", "writhe of one component");
    wr->add_option("input", wr_input, "diagram JSON (path or inline)")->required();
    wr->add_option("--a", wr_a, "component (default: first declared)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*alex) return run_alex(alex_input, output);

        if (*iterates) {
            const concordium::PatternInvariants p =
                iterates->count("input") != 0
                    ? concordium::pattern_from_json(resolve_input(iterates_input))
                    : concordium::pattern_q();
            return emit_certificate(concordium::certify_distinct_iterates(p), output);
        }
        if (*ckrs)
            return emit_certificate(concordium::certify_qi_vs_ckrs(ckrs_i), output);
        if (*hopf) {
            const concordium::LaurentPoly p = concordium::poly_from_json(resolve_input(hopf_input));
            return emit_certificate(concordium::certify_not_topologically_hopf(p), output);
        }

        if (*stab) {
            const json in = resolve_input(stab_input);
            if (in.contains("winding")) {
                concordium::PatternInvariants p = concordium::pattern_from_json(in);
                for (char c : stab_signs) p = concordium::stabilize(p, stab_sign_from_char(c));
                return run_legendrian_result(concordium::pattern_to_json(p), output,
                                             pattern_text(p));
            }
            concordium::LegendrianKnotInfo k = concordium::knot_from_json(in);
            for (char c : stab_signs) k = concordium::stabilize(k, stab_sign_from_char(c));
            return run_legendrian_result(concordium::knot_to_json(k), output, knot_text(k));
        }
        if (*iter) {
            concordium::PatternInvariants p =
                concordium::pattern_from_json(resolve_input(iter_input));
            for (char c : iter_signs) p = concordium::stabilize(p, stab_sign_from_char(c));
            p = concordium::iterate_pattern(p, iter_i);
            return run_legendrian_result(concordium::pattern_to_json(p), output, pattern_text(p));
        }
        if (*sat) {
            const concordium::PatternInvariants p =
                concordium::pattern_from_json(resolve_input(sat_pattern));
            const concordium::LegendrianKnotInfo k =
                concordium::knot_from_json(resolve_input(sat_companion));
            const concordium::LegendrianKnotInfo s = concordium::legendrian_satellite(p, k);
            return run_legendrian_result(concordium::knot_to_json(s), output, knot_text(s));
        }
        if (*front) {
            const concordium::LegendrianKnotInfo k =
                concordium::front_tb_rot(concordium::front_from_json(resolve_input(front_input)));
            return run_legendrian_result(concordium::knot_to_json(k), output, knot_text(k));
        }

        if (*lk) {
            const concordium::CrossingList d =
                concordium::diagram_from_json(resolve_input(lk_input));
            if (lk_a.empty() || lk_b.empty()) {
                if (d.components().size() < 2)
                    throw std::runtime_error("diagram has fewer than two components");
                if (lk_a.empty()) lk_a = d.components()[0];
                if (lk_b.empty()) lk_b = d.components()[1];
            }
            const int v = concordium::linking_number(d, lk_a, lk_b);
            return run_legendrian_result(json{{"linking_number", v}}, output,
                                         "lk(" + lk_a + ", " + lk_b + ") = " + std::to_string(v));
        }
        if (*wr) {
            const concordium::CrossingList d =
                concordium::diagram_from_json(resolve_input(wr_input));
            if (wr_a.empty()) {
                if (d.components().empty())
                    throw std::runtime_error("diagram has no components");
                wr_a = d.components()[0];
            }
            const int v = concordium::writhe(d, wr_a);
            return run_legendrian_result(json{{"writhe", v}}, output,
                                         "writhe(" + wr_a + ") = " + std::to_string(v));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;  // unreachable: a subcommand is required
}
