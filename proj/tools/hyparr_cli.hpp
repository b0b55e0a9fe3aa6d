#pragma once

#include "hyparr/connectivity.hpp"
#include "hyparr/fitting.hpp"
#include "hyparr/graph.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace hyparr::cli {

using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_budget = 3;
constexpr int exit_internal = 1;

inline json big(const BigInt& x)
{
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

inline json poly_json(const IntPolynomial& p)
{
    json a = json::array();
    for (const auto& c : p.coefficients()) a.push_back(big(c));
    return a;
}

inline json one_based(const IndexSet& s)
{
    json a = json::array();
    for (int i : s) a.push_back(i + 1);
    return a;
}

inline json laurent_json(const LaurentPoly& p)
{
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"coeff", big(c)}});
    return terms;
}

inline json matrix_json(const LaurentMatrix& m, const std::vector<std::string>& symbols)
{
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero())
                entries.push_back({{"row", i}, {"col", j}, {"terms", laurent_json(m.at(i, j))}, {"text", m.at(i, j).str(symbols)}});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline json series_json(const CompositionSeries& s)
{
    json steps = json::array();
    for (const auto& st : s.steps) steps.push_back(one_based(st));
    return {{"length", s.length()}, {"exponents", s.exponents}, {"fibered_flags", s.fibered}, {"steps", steps}};
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// FNV-1a digest of the input text, echoed for provenance.
inline std::string digest(const std::string& text)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

struct LoadedArrangement {
    Arrangement arr;  // central
    bool coned = false;
    json echo;
};

inline LoadedArrangement load_arrangement(const std::string& path)
{
    std::string text = read_file(path);
    Arrangement a = parse_arrangement(text);
    LoadedArrangement out;
    out.coned = !a.central();
    out.arr = out.coned ? cone(a) : a;
    out.echo = {{"file", path},        {"digest", digest(text)},          {"hyperplanes", out.arr.size()},
                {"dim", out.arr.ambient_dim()}, {"rank", rank(out.arr)}, {"coned", out.coned}};
    return out;
}

/// `torus:n` or `wedge:d`; symbols continue x1, x2, ... across factors.
inline MinimalChainComplex build_model(const std::vector<std::string>& specs)
{
    if (specs.empty()) throw input_error("at least one --model torus:n or wedge:d is required");
    std::optional<MinimalChainComplex> acc;
    std::size_t next = 1;
    for (const auto& spec : specs) {
        auto colon = spec.find(':');
        if (colon == std::string::npos) throw input_error("model '" + spec + "' must read torus:n or wedge:d");
        std::string kind = spec.substr(0, colon);
        std::size_t n = 0;
        try {
            std::size_t used = 0;
            long v = std::stol(spec.substr(colon + 1), &used);
            if (used != spec.size() - colon - 1 || v < 1 || v > 12) throw input_error("");
            n = static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            throw input_error("model '" + spec + "' needs a size between 1 and 12");
        }
        auto symbols = detail::default_symbols(n, next);
        next += n;
        MinimalChainComplex f;
        if (kind == "torus")
            f = torus_complex(n, symbols);
        else if (kind == "wedge")
            f = wedge_complex(n, symbols);
        else
            throw input_error("unknown model kind '" + kind + "'");
        acc = acc ? kunneth_product(*acc, f) : f;
    }
    if (acc->nvars() > 63) throw input_error("model has too many generators");
    return *acc;
}

inline std::vector<GaussianRational> parse_point(const std::string& text)
{
    std::vector<GaussianRational> t;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) t.push_back(parse_gaussian(item));
    return t;
}

inline std::string point_str(const std::vector<GaussianRational>& t)
{
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i].str();
    return s;
}

inline std::vector<GaussianRational> random_point(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    std::vector<GaussianRational> t;
    while (t.size() < n) {
        GaussianRational z(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        z.re.canonicalize();
        z.im.canonicalize();
        if (!is_zero(z)) t.push_back(z);
    }
    return t;
}

inline void emit(std::ostream& out, const json& j, bool text)
{
    if (!text) {
        out << j.dump(2) << "\n";
        return;
    }
    std::function<void(const std::string&, const json&)> walk = [&](const std::string& prefix, const json& v) {
        if (v.is_object()) {
            for (auto it = v.begin(); it != v.end(); ++it) walk(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
        } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); })) {
            for (std::size_t i = 0; i < v.size(); ++i) walk(prefix + "[" + std::to_string(i) + "]", v[i]);
        } else {
            out << prefix << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    };
    walk("", j);
}

inline json analyze_json(const LoadedArrangement& la, SearchOptions search)
{
    json j = {{"schema", 1}, {"command", "analyze"}, {"input", la.echo}};
    auto hs = analyze_hypersolvability(la.arr, search);
    j["poincare"] = poly_json(poincare_polynomial(la.arr));
    j["hypersolvable"] = hs.hypersolvable();
    if (!hs.series) {
        json frontier = json::array();
        for (const auto& f : hs.frontier) frontier.push_back(one_based(f));
        j["frontier"] = frontier;
        return j;
    }
    ConnectivityOptions opt;
    opt.search = search;
    auto r = connectivity(la.arr, opt);
    j["series"] = series_json(r.series);
    j["exponents"] = r.series.exponents;
    j["supersolvable"] = r.supersolvable;
    j["pbar"] = poly_json(r.pbar_poly);
    j["p"] = r.p.is_infinite() ? json("infinity") : json(r.p.value());
    j["aspherical"] = r.aspherical;
    j["c_next"] = big(r.c_next);
    return j;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Homotopy invariants of complex hyperplane arrangements"};
    app.require_subcommand(1);
    app.fallthrough();
    bool text = false;
    std::size_t budget = SearchOptions{}.node_budget;
    std::size_t degree = 5;
    std::uint64_t seed = 1;
    app.add_flag("--text", text, "plain key: value output");
    app.add_flag("--json{false}", text, "JSON output (default)");
    app.add_option("--budget", budget, "node budget for composition-series searches");
    app.add_option("--degree", degree, "degree bound for quadratic OS algebra");
    app.add_option("--seed", seed, "seed for sampled torus points");

    std::string file, file2;
    auto* analyze = app.add_subcommand("analyze", "full report for an arrangement file");
    analyze->add_option("file", file)->required();
    auto* osalg = app.add_subcommand("osalg", "OS and quadratic OS algebra dimensions");
    osalg->add_option("file", file)->required();
    auto* hypersolv = app.add_subcommand("hypersolv", "hypersolvable composition series");
    hypersolv->add_option("file", file)->required();
    auto* conn = app.add_subcommand("connectivity", "order of pi_1-connectivity");
    conn->add_option("file", file)->required();

    std::vector<std::string> models;
    std::size_t p = 0, k = 1, hilbert = 0, samples = 0;
    std::vector<std::string> points;
    auto* chain = app.add_subcommand("chain", "minimal chain complex of a product of tori and wedges");
    chain->add_option("--model", models, "torus:n or wedge:d, repeatable")->required();
    chain->add_option("--p", p, "emit the presentation of pi_p of the p-skeleton");
    auto* fitting = app.add_subcommand("fitting", "Fitting ideals and varieties of pi_p of a skeleton");
    fitting->add_option("--model", models, "torus:n or wedge:d, repeatable")->required();
    fitting->add_option("--p", p, "skeleton dimension")->required();
    fitting->add_option("--k", k, "Fitting index");
    fitting->add_option("--point", points, "torus point a/b+c/di,... (repeatable)");
    fitting->add_option("--samples", samples, "random exact points checked against the coker criterion");
    fitting->add_option("--hilbert", hilbert, "Hilbert function up to this degree");

    auto* graph = app.add_subcommand("graph", "graphic arrangements");
    graph->require_subcommand(1);
    graph->fallthrough();
    auto* g_analyze = graph->add_subcommand("analyze", "chordality and hypersolvability");
    g_analyze->add_option("file", file)->required();
    auto* g_chrom = graph->add_subcommand("chromatic", "chromatic and Poincare polynomials");
    g_chrom->add_option("file", file)->required();
    auto* g_pi2 = graph->add_subcommand("pi2", "pi_2 coinvariants for triangle-free graphs");
    g_pi2->add_option("file", file)->required();
    g_pi2->add_option("other", file2, "second graph for a 2-type comparison");

    std::size_t hn = 0, hl = 0;
    auto* hattori = app.add_subcommand("hattori", "generic arrangement model");
    hattori->add_option("--n", hn)->required();
    hattori->add_option("--l", hl)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }

    SearchOptions search;
    search.node_budget = budget;
    try {
        json j;
        if (*analyze) {
            j = analyze_json(load_arrangement(file), search);
        } else if (*osalg) {
            auto la = load_arrangement(file);
            QuadraticOsOptions qo;
            qo.max_degree = degree;
            auto P = poincare_polynomial(la.arr);
            auto q = quadratic_os_dims(la.arr, qo);
            json kr = json::array();
            for (std::size_t d = 0; d < q.size(); ++d) kr.push_back(big(BigInt(static_cast<unsigned long>(q[d])) - P.coeff(d)));
            j = {{"schema", 1}, {"command", "osalg"}, {"input", la.echo}, {"poincare", poly_json(P)},
                 {"quadratic", q}, {"kernel_ranks", kr}};
        } else if (*hypersolv) {
            auto la = load_arrangement(file);
            auto hs = analyze_hypersolvability(la.arr, search);
            j = {{"schema", 1}, {"command", "hypersolv"}, {"input", la.echo}, {"hypersolvable", hs.hypersolvable()}};
            if (hs.series) {
                j["length"] = hs.series->length();
                j["exponents"] = hs.series->exponents;
                j["fibered_flags"] = hs.series->fibered;
                j["series"] = series_json(*hs.series);
            } else {
                json frontier = json::array();
                for (const auto& f : hs.frontier) frontier.push_back(one_based(f));
                j["frontier"] = frontier;
            }
            j["supersolvable"] = is_supersolvable(la.arr, search).supersolvable;
        } else if (*conn) {
            auto la = load_arrangement(file);
            ConnectivityOptions opt;
            opt.search = search;
            auto r = connectivity(la.arr, opt);
            j = {{"schema", 1},
                 {"command", "connectivity"},
                 {"input", la.echo},
                 {"p", r.p.is_infinite() ? json("infinity") : json(r.p.value())},
                 {"aspherical", r.aspherical},
                 {"c_next", big(r.c_next)},
                 {"poincare", poly_json(r.p_poly)},
                 {"pbar", poly_json(r.pbar_poly)}};
        } else if (*chain) {
            auto Y = build_model(models);
            json bds = json::array();
            for (std::size_t q = 1; q <= Y.dim(); ++q) {
                json b = matrix_json(Y.boundary(q), Y.generators);
                b["degree"] = q;
                bds.push_back(b);
            }
            j = {{"schema", 1},
                 {"command", "chain"},
                 {"variables", Y.generators},
                 {"ranks", Y.ranks},
                 {"basis", Y.basis_labels},
                 {"boundaries", bds},
                 {"boundary_squares_zero", boundary_squares_to_zero(Y)},
                 {"epsilon_minimal", is_epsilon_minimal(Y)}};
            if (p > 0) {
                auto P = skeleton_presentation(Y, p);
                auto res = pi_p_resolution(Y, p);
                j["presentation"] = matrix_json(P.matrix, P.symbols);
                j["resolution_length"] = res.length();
                j["resolution_ranks"] = res.module_ranks;
                j["coinvariant_rank"] = coinvariant_rank(P);
            }
        } else if (*fitting) {
            auto Y = build_model(models);
            auto P = skeleton_presentation(Y, p);
            auto F = fitting_ideal(P, k);
            json gens = json::array();
            for (const auto& g : F.generators) gens.push_back({{"terms", laurent_json(g)}, {"text", g.str(P.symbols)}});
            j = {{"schema", 1},
                 {"command", "fitting"},
                 {"variables", P.symbols},
                 {"generators_count", P.n_generators()},
                 {"relations_count", P.n_relations()},
                 {"k", k},
                 {"zero_ideal", F.is_zero_ideal()},
                 {"ideal", gens}};
            json mem = json::array();
            for (const auto& s : points) {
                auto t = parse_point(s);
                mem.push_back({{"point", point_str(t)},
                               {"member", variety_membership(F, t)},
                               {"coker_dim", coker_dim_at(P, t)}});
            }
            j["membership"] = mem;
            if (samples > 0) {
                std::mt19937_64 rng(seed);
                std::size_t members = 0, agree = 0;
                for (std::size_t i = 0; i < samples; ++i) {
                    auto t = random_point(rng, P.matrix.nvars());
                    bool m = variety_membership(F, t);
                    members += m;
                    agree += m == (coker_dim_at(P, t) >= k);
                }
                j["samples"] = {{"seed", seed}, {"count", samples}, {"members", members}, {"coker_agreement", agree == samples}};
            }
            if (hilbert > 0) {
                auto h = hilbert_function(P, hilbert);
                json v = json::array();
                for (const auto& x : h.values) v.push_back(big(x));
                j["hilbert"] = v;
                j["non_nilpotent"] = h.non_nilpotent;
            }
        } else if (*graph) {
            std::string text_in = read_file(file);
            Graph g = parse_graph(text_in);
            json echo = {{"file", file}, {"digest", digest(text_in)}, {"vertices", g.vertices()}, {"edges", g.size()}};
            if (*g_analyze) {
                auto series = hypersolvable_graph_series(g, search);
                auto order = supersolvable_series(g);
                j = {{"schema", 1},        {"command", "graph analyze"}, {"input", echo},
                     {"chordal", order.has_value()}, {"triangle_free", !has_triangle(g)}};
                j["supersolvable_order"] = order ? json(*order) : json(nullptr);
                j["hypersolvable"] = series.has_value();
                if (series) {
                    j["series"] = series_json(*series);
                    j["exponents"] = series->exponents;
                }
                j["poincare"] = poly_json(poincare_from_chromatic(g));
                json cyc = json::array();
                for (const auto& c : four_cycles(g)) cyc.push_back(one_based(c));
                j["four_cycles"] = cyc;
            } else if (*g_chrom) {
                j = {{"schema", 1},
                     {"command", "graph chromatic"},
                     {"input", echo},
                     {"chromatic", poly_json(chromatic_polynomial(g))},
                     {"poincare", poly_json(poincare_from_chromatic(g))}};
            } else {
                auto r = triangle_free_report(g, search);
                auto report = [](const TriangleFreeReport& r) {
                    json cyc = json::array();
                    for (const auto& c : r.cycles) cyc.push_back(one_based(c));
                    return json{{"length", r.series.length()},
                                {"exponents", r.series.exponents},
                                {"pi1_rank", r.pi1_rank},
                                {"b1", big(r.poincare.coeff(1))},
                                {"b2", big(r.poincare.coeff(2))},
                                {"four_cycles", cyc},
                                {"pi2_zero", r.pi2_zero},
                                {"coinvariant_rank", r.coinvariant_rank},
                                {"model", r.model},
                                {"presentation_shape", {r.presentation.n_relations(), r.presentation.n_generators()}}};
                };
                j = {{"schema", 1}, {"command", "graph pi2"}, {"input", echo}};
                j.update(report(r));
                if (!file2.empty()) {
                    auto r2 = triangle_free_report(parse_graph(read_file(file2)), search);
                    j["other"] = report(r2);
                    j["distinct_two_types"] = distinct_two_types(r, r2);
                }
            }
        } else if (*hattori) {
            auto h = hattori_model(hn, hl);
            j = {{"schema", 1}, {"command", "hattori"}, {"n", hn}, {"l", hl}, {"vanishing", h.vanishing}, {"aspherical", h.aspherical}};
            if (h.presentation) {
                auto pbar = IntPolynomial::exponent_product(std::vector<int>(hn, 1));
                BigInt c = pbar.coeff(hl + 1);
                j["resolution_length"] = h.resolution->length();
                j["resolution_ranks"] = h.resolution->module_ranks;
                j["presentation_shape"] = {h.presentation->n_relations(), h.presentation->n_generators()};
                j["coinvariant_rank"] = coinvariant_rank(*h.presentation);
                j["coinvariant_rank_from_poincare"] = big(c);
                j["pi_l_free"] = h.presentation->n_relations() == 0;
            }
        }
        emit(out, j, text);
        return exit_ok;
    } catch (const budget_exceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

}  // namespace hyparr::cli
