// Command line front end. Every command writes deterministic output to stdout;
// failures print {"error": ..., "message": ...} on stderr and exit nonzero.

#include "mfb/arrangement.hpp"
#include "mfb/calculus.hpp"
#include "mfb/curve_config.hpp"
#include "mfb/error.hpp"
#include "mfb/generic_algebra.hpp"
#include "mfb/homology.hpp"
#include "mfb/io.hpp"
#include "mfb/pipeline.hpp"
#include "mfb/strings.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

using namespace mfb;

constexpr int kUsageExit = 2;
constexpr int kFailureExit = 1;

struct Loaded {
    PlumbingGraph graph;
    std::optional<IncidenceData> incidence;
};

// Arrangement files go through the pipeline; graph files are taken as is.
Loaded load_input(const std::string& path, bool reduce) {
    const Json j = read_json_file(path);
    if (looks_like_graph(j)) {
        if (reduce) throw Error(ErrorCode::InvalidInput, "--reduce needs an arrangement input");
        return {graph_from_json(j), std::nullopt};
    }
    auto in = arrangement_from_json(j);
    return {boundary_graph(in.incidence, reduce), in.incidence};
}

IncidenceData load_arrangement(const std::string& path) {
    return arrangement_from_json(read_json_file(path)).incidence;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
    out << text;
}

Json graph_stats(const PlumbingGraph& g) {
    long long genus = 0;
    for (const auto& v : g.vertices()) genus += v.genus;
    return Json{{"vertices", g.vertices().size()},
                {"edges", g.edges().size()},
                {"total_genus", genus},
                {"cycle_rank", first_betti_of_graph(g)}};
}

std::size_t thread_count() {
    if (const char* env = std::getenv("MFB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// "Z^66 (+) Z_12^45": repeated invariant factors folded into a power.
std::string compact(const AbelianGroup& g) {
    std::string out = g.free_rank == 0 ? "" : g.free_rank == 1 ? "Z" : "Z^" + std::to_string(g.free_rank);
    for (std::size_t i = 0; i < g.torsion.size();) {
        std::size_t k = i;
        while (k < g.torsion.size() && g.torsion[k] == g.torsion[i]) ++k;
        if (!out.empty()) out += " (+) ";
        out += "Z_" + to_string(g.torsion[i]);
        if (k - i > 1) out += "^" + std::to_string(k - i);
        i = k;
    }
    return out.empty() ? "0" : out;
}

struct GenericRow {
    long long n = 0;
    AbelianGroup pipeline;
    AbelianGroup expected;
    bool snf_ok = false;
    bool lemma_ok = false;
    double seconds = 0;
};

GenericRow check_generic(long long n) {
    const auto start = std::chrono::steady_clock::now();
    GenericRow row;
    row.n = n;
    const auto inc = generate_family(Family::generic, static_cast<std::size_t>(n));
    row.pipeline = homology_of_graph(boundary_graph(inc));
    row.expected = generic_h1_closed_form(n);
    row.snf_ok = smith_normal_form(build_An(n)).factors == generic_snf_closed_form(n);
    row.lemma_ok = check_lemma_identities(n).all_hold();
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

int run_generic_check(long long max_n) {
    if (max_n < 2) throw Error(ErrorCode::InvalidSize, "--max-n must be at least 2");
    std::vector<GenericRow> rows(static_cast<std::size_t>(max_n - 1));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(rows.size());
    const std::size_t workers = std::min(thread_count(), rows.size());
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < rows.size(); i = next++) {
                try {
                    rows[i] = check_generic(static_cast<long long>(i) + 2);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    bool all = true;
    std::cout << "n   pipeline H1                      closed form  A_n snf  lemma  result\n";
    for (const auto& r : rows) {
        const bool ok = r.pipeline == r.expected && r.snf_ok && (r.n < 3 || r.lemma_ok);
        all = all && ok;
        std::string h1 = compact(r.pipeline);
        h1.resize(std::max<std::size_t>(h1.size(), 32), ' ');
        std::cout << r.n << (r.n < 10 ? "   " : "  ") << h1 << ' '
                  << (r.pipeline == r.expected ? "ok         " : "MISMATCH   ") << "  "
                  << (r.snf_ok ? "ok     " : "FAIL   ") << "  "
                  << (r.n < 3 ? "n/a  " : r.lemma_ok ? "ok   " : "FAIL ") << "  "
                  << (ok ? "PASS" : "FAIL") << '\n';
    }
    std::cout << (all ? "all passed" : "FAILURES") << '\n';
    return all ? 0 : kFailureExit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Milnor fiber boundary of line arrangements"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "mfb 0.1.0");

    // generate
    auto* gen = app.add_subcommand("generate", "Write an arrangement file");
    std::string gen_family = "generic";
    long long gen_n = 4;
    std::uint64_t seed = 20240101;
    int bound = 5;
    gen->add_option("family", gen_family, "generic, pencil, near_pencil, random or moment")->required();
    gen->add_option("-n,--n", gen_n, "number of lines")->required();
    gen->add_option("--seed", seed, "seed for random arrangements");
    gen->add_option("--bound", bound, "coefficient bound for random arrangements");

    // gamma-c
    auto* gamma = app.add_subcommand("gamma-c", "Curve-configuration graph of an arrangement");
    std::string input;
    gamma->add_option("input", input, "arrangement JSON")->required();

    // string
    auto* str = app.add_subcommand("string", "String graph Str(a, b; c)");
    long long sa = 1, sb = 1, sc = 1;
    bool str_plus = false;
    bool json_out = false;
    str->add_option("a", sa)->required();
    str->add_option("b", sb)->required();
    str->add_option("c", sc)->required();
    str->add_flag("--plus", str_plus, "use the + sign");
    str->add_flag("--json", json_out);

    // plumbing
    auto* plumb = app.add_subcommand("plumbing", "Closed plumbing graph of the boundary");
    bool reduce = false;
    std::string dot_path;
    plumb->add_option("input", input, "arrangement JSON")->required();
    plumb->add_flag("--reduce", reduce, "apply the standard calculus reduction");
    plumb->add_option("--dot", dot_path, "also write Graphviz output here");

    // calculus
    auto* calc = app.add_subcommand("calculus", "Apply a move script to a graph");
    std::string script_path;
    bool check_h1 = false;
    calc->add_option("input", input, "graph JSON")->required();
    calc->add_option("--script", script_path, "moves JSON")->required();
    calc->add_flag("--check-h1", check_h1, "compare H1 before and after every simple step");

    // homology
    auto* hom = app.add_subcommand("homology", "First homology of the boundary");
    hom->add_option("input", input, "arrangement or graph JSON")->required();
    hom->add_flag("--reduce", reduce, "compute on the reduced graph");
    hom->add_flag("--json", json_out, "JSON only, with betti_formula and graph_stats");

    // betti
    auto* betti = app.add_subcommand("betti", "First Betti number from the incidence formula");
    betti->add_option("input", input, "arrangement JSON")->required();

    // generic-check
    auto* gcheck = app.add_subcommand("generic-check", "Generic arrangements against the closed form");
    long long max_n = 12;
    gcheck->add_option("--max-n", max_n, "largest n to check");

    // probe-conjecture
    auto* probe = app.add_subcommand("probe-conjecture", "Torsion conjecture checks");
    std::vector<std::string> inputs;
    probe->add_option("inputs", inputs, "arrangement JSON files")->required();

    // export-dot
    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a graph or arrangement");
    std::string out_path;
    dot->add_option("input", input, "graph or arrangement JSON")->required();
    dot->add_flag("--reduce", reduce);
    dot->add_option("-o,--output", out_path, "output file (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << Json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
        return kUsageExit;
    }

    try {
        if (gen->parsed()) {
            if (gen_n < 0) throw Error(ErrorCode::InvalidSize, "n must be nonnegative");
            const auto n = static_cast<std::size_t>(gen_n);
            if (gen_family == "random") {
                std::cout << lines_to_json(random_lines(n, bound, seed)).dump() << '\n';
            } else if (gen_family == "moment") {
                std::vector<Rational> params;
                for (std::size_t i = 0; i < n; ++i) params.emplace_back(static_cast<long long>(i));
                std::cout << lines_to_json(moment_curve_lines(params)).dump() << '\n';
            } else {
                std::cout << incidence_to_json(generate_family(parse_family(gen_family), n)).dump() << '\n';
            }
        } else if (gamma->parsed()) {
            std::cout << graph_to_json(build_gamma_c(load_arrangement(input))).dump(1) << '\n';
        } else if (str->parsed()) {
            const auto s = build_string(sa, sb, sc, str_plus ? Sign::plus : Sign::minus);
            if (json_out) {
                std::cout << string_graph_to_json(s).dump() << '\n';
            } else {
                const char sign = sign_char(s.sign);
                std::cout << "lambda " << s.lambda << '\n';
                std::cout << "cf";
                for (long long k : s.cf_terms) std::cout << ' ' << k;
                std::cout << '\n';
                std::cout << "arrow(" << s.end_mults.first << ")";
                for (long long m : s.interior) std::cout << ' ' << sign << " (" << m << ")";
                std::cout << ' ' << sign << " arrow(" << s.end_mults.second << ")\n";
                std::cout << "vertices " << s.interior.size() << '\n';
            }
        } else if (plumb->parsed()) {
            const auto g = boundary_graph(load_arrangement(input), reduce);
            if (!dot_path.empty()) write_text(dot_path, to_dot(g));
            std::cout << graph_to_json(g).dump(1) << '\n';
        } else if (calc->parsed()) {
            const auto g = graph_from_json(read_json_file(input));
            const auto script = script_from_json(read_json_file(script_path));
            PlumbingGraph current = g;
            Json steps = Json::array();
            bool preserved = true;
            for (const auto& move : script) {
                PlumbingGraph next = apply_move(current, move);
                Json step = script_to_json({move})[0];
                step["input_simple"] = current.is_simple();
                step["output_simple"] = next.is_simple();
                if (check_h1 && current.is_simple() && next.is_simple()) {
                    const auto before = homology_of_graph(current);
                    const auto after = homology_of_graph(next);
                    step["h1_before"] = before.to_string();
                    step["h1_after"] = after.to_string();
                    preserved = preserved && before == after;
                }
                steps.push_back(std::move(step));
                current = std::move(next);
            }
            Json out{{"graph", graph_to_json(canonical_layout(current))}, {"steps", steps}};
            if (check_h1) out["h1_preserved"] = preserved;
            std::cout << out.dump(1) << '\n';
            if (!preserved) return kFailureExit;
        } else if (hom->parsed()) {
            const auto in = load_input(input, reduce);
            const auto h = homology_of_graph(in.graph);
            Json j = group_to_json(h);
            if (json_out) {
                j["betti_formula"] = in.incidence ? Json(betti_formula(*in.incidence)) : Json(nullptr);
                j["graph_stats"] = graph_stats(in.graph);
            } else {
                std::cout << h.to_string() << '\n';
            }
            std::cout << j.dump() << '\n';
        } else if (betti->parsed()) {
            std::cout << betti_formula(load_arrangement(input)) << '\n';
        } else if (gcheck->parsed()) {
            return run_generic_check(max_n);
        } else if (probe->parsed()) {
            bool ok = true;
            for (const auto& path : inputs) {
                const auto r = probe_conjecture(load_arrangement(path));
                Json j = conjecture_to_json(r);
                j["input"] = path;
                ok = ok && r.orders_divide_n && r.torsion_is_zn_chi.value_or(true);
                std::cout << j.dump() << '\n';
            }
            if (!ok) return kFailureExit;
        } else if (dot->parsed()) {
            const auto text = to_dot(load_input(input, reduce).graph);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                write_text(out_path, text);
            }
        }
    } catch (const Error& e) {
        std::cerr << Json{{"error", std::string(e.code_name())}, {"message", e.what()}}.dump() << '\n';
        return kFailureExit;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", "InternalError"}, {"message", e.what()}}.dump() << '\n';
        return kFailureExit;
    }
    return 0;
}
