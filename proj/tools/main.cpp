// oddwheel — exact-arithmetic toolkit for integer-edge wheel embeddings.
//
// Exit codes (uniform across subcommands):
//   0  decided / verified (the expected affirmative outcome)
//   1  violation or non-realizable verdict (a decided negative outcome)
//   2  input error (malformed JSON, bad flags, precondition failures)
//   3  internal invariant failure (a library-level fact was falsified)

#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "oddwheel/classalgebra.hpp"
#include "oddwheel/errors.hpp"
#include "oddwheel/json_io.hpp"
#include "oddwheel/numeric.hpp"
#include "oddwheel/pointset.hpp"
#include "oddwheel/search.hpp"
#include "oddwheel/surd.hpp"
#include "oddwheel/sweeps.hpp"
#include "oddwheel/triangle.hpp"
#include "oddwheel/wheel.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace oddwheel;

constexpr int kExitDecided = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

bool g_quiet = false;

void print_doc(const Json& doc) {
    std::cout << (g_quiet ? doc.dump() : doc.dump(2)) << '\n';
}

Json json_int(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(to_string(v));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot read file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Int parse_side(const std::string& text, const std::string& field) {
    Int value;
    try {
        value = parse_int(text);
    } catch (const ValidationError& e) {
        throw ValidationError(field + ": " + e.what());
    }
    if (value <= 0) {
        throw ValidationError(field + " must be positive, got " + to_string(value));
    }
    return value;
}

Json surd_fields(const std::string& name, const MultiSurd& v) {
    Json out;
    out[name] = v.str();
    out[name + "_approx"] = v.approx();
    return out;
}

Json rotation_object(const Rotation& r) {
    Json out;
    out.update(surd_fields("cos", r.cos()));
    out.update(surd_fields("sin", r.sin()));
    return out;
}

Json wheel_echo(const WheelLengths& w, const SignVector* signs = nullptr) {
    return Json::parse(wheel_to_json(w, signs));
}

// --- triangle ---------------------------------------------------------

int run_triangle(const std::string& a_text, const std::string& b_text,
                 const std::string& c_text) {
    IntTriangle t(parse_side(a_text, "a"), parse_side(b_text, "b"),
                  parse_side(c_text, "c"));
    Json doc;
    doc["a"] = json_int(t.a);
    doc["b"] = json_int(t.b);
    doc["c"] = json_int(t.c);
    doc["degenerate"] = t.is_degenerate();
    Rat cosine = triangle_cos(t);
    doc["cos"] = to_string(cosine);
    doc["cos_approx"] = to_double(cosine);
    doc.update(surd_fields("sin", triangle_sin(t)));
    doc.update(surd_fields("area", triangle_area(t)));
    doc["discriminant"] = json_int(triangle_discriminant(t));
    std::optional<Int> ch = characteristic(t);
    // The characteristic doubles as the residual of the apex angle: the
    // sine is a rational multiple of sqrt(characteristic).
    doc["characteristic"] = ch ? json_int(*ch) : Json(nullptr);
    doc["residual"] = doc["characteristic"];
    try {
        doc["class"] = angle_class(cosine).value();
    } catch (const NoClassError& e) {
        doc["class"] = nullptr;
        doc["class_note"] = e.what();
    }
    print_doc(doc);
    return kExitDecided;
}

// --- closure ----------------------------------------------------------

int run_closure(const std::string& path, bool emit_coords) {
    WheelDocument input = parse_wheel_document(read_file(path));
    if (input.signs) {
        const SignVector& signs = *input.signs;
        bool closes = closure_decide(input.wheel, signs);
        Json doc = wheel_echo(input.wheel, &signs);
        doc["closes"] = closes;
        if (closes) {
            Json groups = Json::array();
            for (const ResidualGroupReport& g :
                 residual_group_check(input.wheel, signs)) {
                Json gj;
                gj["residual"] = json_int(g.residual);
                gj["triangles"] = g.indices;
                gj["composition"] = rotation_object(g.composition);
                gj["multiple_of_pi"] =
                    g.kind == RotationKind::identity ? "even" : "odd";
                gj["fine_multiple"] = g.fine_multiple;
                groups.push_back(std::move(gj));
            }
            doc["residual_groups"] = std::move(groups);
            if (emit_coords) {
                Json coords = Json::array();
                for (const SurdPoint& p :
                     reconstruct_coordinates(input.wheel, signs)) {
                    Json pj;
                    pj.update(surd_fields("x", p.x));
                    pj.update(surd_fields("y", p.y));
                    coords.push_back(std::move(pj));
                }
                doc["coordinates"] = std::move(coords);
            }
        }
        print_doc(doc);
        return closes ? kExitDecided : kExitViolation;
    }

    Certificate cert = realizable(input.wheel);
    print_doc(Json::parse(certificate_to_json(cert)));
    return cert.kind == CertificateKind::realizable ? kExitDecided : kExitViolation;
}

// --- certify ----------------------------------------------------------

int run_certify(const std::string& path) {
    WheelDocument input = parse_wheel_document(read_file(path));
    // The certificate is self-contained; for small wheels the exhaustive
    // sign search is cheap, so corroborate it as well.
    bool cross_check = input.wheel.size() <= 9;
    Certificate cert = certify_odd_wheel(input.wheel, cross_check);
    Json doc = Json::parse(certificate_to_json(cert));
    doc["cross_checked"] = cross_check;
    print_doc(doc);
    return cert.kind == CertificateKind::parity_contradiction ? kExitDecided
                                                              : kExitViolation;
}

// --- trail ------------------------------------------------------------

int run_trail(const std::string& path) {
    WheelDocument input = parse_wheel_document(read_file(path));
    Json doc = wheel_echo(input.wheel);
    try {
        std::vector<AngleClass> trail = class_trail(input.wheel);
        Json tj = Json::array();
        for (const AngleClass& c : trail) tj.push_back(c.value());
        doc["trail"] = std::move(tj);
        doc["final_class"] = trail.back().value();
        doc["returns_to_start"] = trail.back() == AngleClass(2);
        print_doc(doc);
        return kExitDecided;
    } catch (const TrailError& e) {
        doc["trail"] = nullptr;
        doc["obstruction"] = e.what();
        print_doc(doc);
        return kExitViolation;
    }
}

// --- lemmas -----------------------------------------------------------

Json sweep_object(int bound, const SweepResult& result) {
    Json out;
    out["bound"] = bound;
    out["cases_checked"] = result.cases_checked;
    out["violations"] = result.violations;
    out["pass"] = result.ok();
    return out;
}

int run_lemmas(int bound) {
    if (bound < 1) {
        throw ValidationError("--bound must be positive, got " + std::to_string(bound));
    }
    Json doc;

    Json triples = Json::array();
    for (const ClassTriple& t : enumerate_class_triples()) {
        triples.push_back(Json::array({t.values[0], t.values[1], t.values[2]}));
    }
    doc["class_triples"] = std::move(triples);
    doc["class_triple_count"] = doc["class_triples"].size();

    TransitionGraph graph = build_transition_graph();
    Json gj;
    gj["vertices"] = graph.vertices;
    Json crossing = Json::array();
    for (const ClassEdge& e : graph.crossing_edges()) {
        crossing.push_back(Json::array({e.u, e.v}));
    }
    Json internal = Json::array();
    for (const ClassEdge& e : graph.internal_edges()) {
        internal.push_back(Json::array({e.u, e.v}));
    }
    gj["crossing_edges"] = std::move(crossing);
    gj["internal_edges"] = std::move(internal);
    doc["transition_graph"] = std::move(gj);

    Bipartition parts = bipartition(graph);
    doc["bipartition"] = Json{{"side_a", parts.side_a}, {"side_b", parts.side_b}};

    SweepResult chars = odd_characteristic_sweep(bound, ExecutionPolicy::parallel);
    doc["odd_characteristic_sweep"] = sweep_object(bound, chars);
    SweepResult classes = class_shortcut_sweep(bound, ExecutionPolicy::parallel);
    doc["class_shortcut_sweep"] = sweep_object(bound, classes);

    print_doc(doc);
    return chars.ok() && classes.ok() ? kExitDecided : kExitViolation;
}

// --- pointset ---------------------------------------------------------

int run_pointset(const std::string& path) {
    std::vector<RationalPoint> points = parse_points_document(read_file(path));
    if (points.size() < 2) {
        throw ValidationError("\"points\" must contain at least 2 entries, got " +
                              std::to_string(points.size()));
    }
    Json doc;
    doc["count"] = points.size();
    std::optional<IntegralPointSet> ps;
    try {
        ps = validate_integral(std::move(points));
    } catch (const ValidationError& e) {
        // A well-formed set that fails integrality is a decided negative
        // verdict, not an input error.
        doc["integral"] = false;
        doc["reason"] = e.what();
        print_doc(doc);
        return kExitViolation;
    }
    doc["integral"] = true;
    Json distances = Json::array();
    for (const Int& d : ps->distance_list()) distances.push_back(json_int(d));
    doc["pairwise_distances"] = std::move(distances);
    std::optional<Int> ch = characteristic_invariance(*ps);
    doc["common_characteristic"] = ch ? json_int(*ch) : Json(nullptr);
    doc["all_collinear"] = !ch.has_value();
    print_doc(doc);
    return kExitDecided;
}

// --- search -----------------------------------------------------------

int run_search(std::size_t n, int max_len, bool odd_only) {
    SearchParams params;
    params.n = n;
    params.max_len = max_len;
    params.parity = odd_only ? SearchParity::all_odd : SearchParity::any;
    params.policy = ExecutionPolicy::parallel;
    params.checkpoint_every = g_quiet ? 0 : 1024;

    SearchStats stats = search_wheels(params, [](const SearchEvent& event) {
        std::cout << search_event_to_json(event) << '\n';
    });

    if (!g_quiet) {
        Json summary;
        summary["units_processed"] = stats.units_processed;
        summary["nodes_examined"] = stats.nodes_examined;
        summary["results_emitted"] = stats.results_emitted;
        summary["certificates_emitted"] = stats.certificates_emitted;
        summary["final_cursor"] = stats.final_cursor;
        std::cout << summary.dump() << '\n';
    }
    return kExitDecided;
}

void emit_error(const char* kind, const std::string& message) {
    Json doc;
    doc["error"] = kind;
    doc["message"] = message;
    std::cerr << doc.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact-arithmetic toolkit for integer-edge wheel embeddings.\n"
        "Exit codes: 0 decided/verified, 1 violation or non-realizable,\n"
        "2 input error, 3 internal invariant failure."};
    app.require_subcommand(1);

    bool json_flag = true;
    app.add_flag("--json", json_flag,
                 "emit JSON output (default; the only supported format)");
    app.add_flag("--quiet", g_quiet,
                 "compact one-line JSON; omit search checkpoints and summary");

    std::function<int()> action;

    std::string tri_a, tri_b, tri_c;
    CLI::App* triangle = app.add_subcommand(
        "triangle",
        "Exact angle data for integer sides a b c (angle opposite a):\n"
        "cos, sin, area, discriminant, characteristic/residual, class.\n"
        "Exits 0 once computed, 2 on an invalid side triple.");
    triangle->add_option("a", tri_a, "side opposite the measured angle")->required();
    triangle->add_option("b", tri_b, "first enclosing side")->required();
    triangle->add_option("c", tri_c, "second enclosing side")->required();
    triangle->callback([&] { action = [&] { return run_triangle(tri_a, tri_b, tri_c); }; });

    std::string closure_path;
    bool emit_coords = false;
    CLI::App* closure = app.add_subcommand(
        "closure",
        "Decide exact angle closure for a wheel document.  With \"signs\" in\n"
        "the document, checks that sign vector and audits residual groups;\n"
        "without, searches all sign vectors and prints a certificate.\n"
        "Exits 0 when the wheel closes, 1 when it does not.");
    closure->add_option("wheel", closure_path, "path to a wheel JSON document")
        ->required();
    closure->add_flag("--emit-coords", emit_coords,
                      "include reconstructed vertex coordinates for plotting");
    closure->callback([&] { action = [&] { return run_closure(closure_path, emit_coords); }; });

    std::string certify_path;
    CLI::App* certify = app.add_subcommand(
        "certify",
        "Produce the parity certificate that an odd wheel with all-odd\n"
        "lengths admits no closing sign vector; small wheels are also\n"
        "cross-checked by exhaustive search.  Exits 0 when the expected\n"
        "contradiction is certified, 2 when the wheel is not all-odd.");
    certify->add_option("wheel", certify_path, "path to a wheel JSON document")
        ->required();
    certify->callback([&] { action = [&] { return run_certify(certify_path); }; });

    std::string trail_path;
    CLI::App* trail = app.add_subcommand(
        "trail",
        "Class trail of an all-odd wheel: partial angle sums grouped by\n"
        "residual, one class per step, starting at class 2.  Exits 0 when\n"
        "the trail is defined, 1 on a trail obstruction.");
    trail->add_option("wheel", trail_path, "path to a wheel JSON document")
        ->required();
    trail->callback([&] { action = [&] { return run_trail(trail_path); }; });

    int bound = 99;
    CLI::App* lemmas = app.add_subcommand(
        "lemmas",
        "Verify the class algebra: admissible class triples, the crossing /\n"
        "internal transition graph and its bipartition, and bounded sweeps\n"
        "(odd characteristics mod 8, class shortcut).  Exits 0 when every\n"
        "check passes, 1 if any sweep reports a violation.");
    lemmas->add_option("--bound", bound,
                       "side-length bound for the verification sweeps");
    lemmas->callback([&] { action = [&] { return run_lemmas(bound); }; });

    std::string pointset_path;
    CLI::App* pointset = app.add_subcommand(
        "pointset",
        "Validate that all pairwise distances of a rational point set are\n"
        "integers and report the characteristic shared by its non-collinear\n"
        "triples.  Exits 0 when integral, 1 when a distance fails.");
    pointset->add_option("points", pointset_path, "path to a points JSON document")
        ->required();
    pointset->callback([&] { action = [&] { return run_pointset(pointset_path); }; });

    std::size_t search_n = 0;
    int search_max = 0;
    bool search_odd = false;
    CLI::App* search = app.add_subcommand(
        "search",
        "Enumerate wheels with spoke/rim lengths up to --max, one JSON line\n"
        "per realizable wheel (canonical forms only).  With --odd, restrict\n"
        "to all-odd lengths; for odd --n that emits parity certificates\n"
        "instead of candidates.  Exits 0 when the enumeration completes.");
    search->add_option("--n", search_n, "number of cycle vertices (>= 3)")->required();
    search->add_option("--max", search_max, "largest spoke/rim length")->required();
    search->add_flag("--odd", search_odd, "restrict to all-odd lengths");
    search->callback([&] { action = [&] { return run_search(search_n, search_max, search_odd); }; });

    // Let --json / --quiet appear after the subcommand name as well.
    for (CLI::App* sub : {triangle, closure, certify, trail, lemmas, pointset, search}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        return action();
    } catch (const ResidualSumViolation& e) {
        emit_error("residual_sum_violation", e.what());
        return kExitInternalError;
    } catch (const InvariantViolation& e) {
        emit_error("invariant_violation", e.what());
        return kExitInternalError;
    } catch (const NotBipartiteError& e) {
        emit_error("not_bipartite", e.what());
        return kExitInternalError;
    } catch (const ValidationError& e) {
        emit_error("input", e.what());
        return kExitInputError;
    } catch (const Error& e) {
        emit_error("input", e.what());
        return kExitInputError;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return kExitInternalError;
    }
}
