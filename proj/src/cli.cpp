#include <chrono>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ildt/census.hpp"
#include "ildt/digraph.hpp"
#include "ildt/error.hpp"
#include "ildt/generator.hpp"
#include "ildt/hamilton.hpp"
#include "ildt/io.hpp"
#include "ildt/spectral.hpp"

namespace ildt {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

json counts_json(const BasicCounts& c) { return json{{"n", c.n}, {"e", c.e}, {"b", c.b}}; }

json triads_json(const TriadCounts& t) {
    return json{{"directed", t.directed},
                {"transitive", t.transitive},
                {"bidirectional", t.bidirectional}};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write file: " + path);
    f << text;
    f.close();
    if (!f) throw Error("write failed: " + path);
}

// Walk/cycle files: {"nodes": [id, ...]}.
std::vector<NodeId> load_node_sequence(const std::string& path, const char* what) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open file: " + path);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::exception& e) {
        throw Error("JSON parse error in " + path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array())
        throw Error(path + ": a " + std::string(what) +
                    " file must be an object with a \"nodes\" array");
    std::vector<NodeId> seq;
    seq.reserve(j["nodes"].size());
    for (const auto& x : j["nodes"]) {
        if (!x.is_number_integer() || x.get<int64_t>() < 0 ||
            x.get<int64_t>() > int64_t{0xffffffff})
            throw Error(path + ": node ids must be integers in [0, 2^32)");
        seq.push_back(static_cast<NodeId>(x.get<int64_t>()));
    }
    return seq;
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int emit_error(std::ostream& out, bool json_flag, const std::string& command, const json& config,
               const std::string& msg, Clock::time_point start) {
    if (json_flag) {
        json env;
        env["command"] = command;
        env["config"] = config;
        env["error"] = msg;
        env["wall_time_ms"] = elapsed_ms(start);
        out << env.dump() << "\n";
    } else {
        out << "error: " << msg << "\n";
    }
    return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"iterated cloning model toolkit: generation, censuses, spectra, cycles"};
    app.name("ildt");
    app.fallthrough();
    app.require_subcommand(1);

    bool json_flag = false;
    app.add_flag("--json", json_flag, "emit a JSON report envelope instead of plain text");

    std::string gen_seed, gen_out, gen_fmt = "json";
    uint32_t gen_steps = 0;
    auto* cmd_gen = app.add_subcommand("generate", "grow a graph by t cloning steps");
    cmd_gen->add_option("--seed", gen_seed, "builtin:<name> or a graph file path")->required();
    cmd_gen->add_option("--steps", gen_steps, "number of cloning steps")->required();
    cmd_gen->add_option("--out", gen_out, "output path (stdout when omitted)");
    cmd_gen->add_option("--format", gen_fmt, "edgelist, json, or dot (default json)")
        ->check(CLI::IsMember({"edgelist", "json", "dot"}));

    std::string cen_seed, cen_out;
    uint32_t cen_steps = 0;
    bool cen_brute = false;
    auto* cmd_cen =
        app.add_subcommand("census", "closed-form triangle census and densification report");
    cmd_cen->add_option("--seed", cen_seed, "builtin:<name> or a graph file path")->required();
    cmd_cen->add_option("--steps", cen_steps, "number of cloning steps")->required();
    cmd_cen->add_flag("--bruteforce", cen_brute,
                      "also enumerate the generated graph and compare");
    cmd_cen->add_option("--out", cen_out, "report path (stdout when omitted)");

    std::string sp_seed, sp_out;
    uint32_t sp_steps = 0;
    bool sp_norm = false;
    auto* cmd_sp = app.add_subcommand("spectrum", "eigenvalue multiset after t cloning steps");
    cmd_sp->add_option("--seed", sp_seed, "builtin:<name> or a graph file path")->required();
    cmd_sp->add_option("--steps", sp_steps, "number of cloning steps")->required();
    cmd_sp->add_flag("--normalize", sp_norm, "divide values by phi^t");
    cmd_sp->add_option("--out", sp_out, "CSV path (stdout when omitted)");

    uint32_t cv_steps = 0, cv_seeds = 0;
    bool cv_norm = false;
    std::string cv_out;
    auto* cmd_cv =
        app.add_subcommand("curve", "orbit of unit-circle seeds under the eigenvalue map");
    cmd_cv->add_option("--steps", cv_steps, "number of map applications")->required();
    cmd_cv->add_option("--seeds", cv_seeds, "unit-circle seed count (8..2^24)")
        ->required()
        ->check(CLI::Range(8u, 1u << 24));
    cmd_cv->add_flag("--normalize", cv_norm, "divide values by phi^t");
    cmd_cv->add_option("--out", cv_out, "CSV path (stdout when omitted)");

    std::string ham_seed, ham_walk = "auto", ham_out;
    uint32_t ham_steps = 0;
    bool ham_min = false;
    auto* cmd_ham =
        app.add_subcommand("hamilton", "construct a directed Hamiltonian cycle at step t");
    cmd_ham->add_option("--seed", ham_seed, "builtin:<name> or a graph file path")->required();
    cmd_ham->add_option("--walk", ham_walk,
                        "'auto' (depth-first walk of a bidirected seed) or a walk file");
    auto* opt_ham_steps = cmd_ham->add_option("--steps", ham_steps, "time-step t (t >= 1)");
    auto* opt_ham_min =
        cmd_ham->add_flag("--min-steps", ham_min, "use the smallest usable t (default)");
    opt_ham_steps->excludes(opt_ham_min);
    cmd_ham->add_option("--out", ham_out, "cycle path (stdout when omitted)");

    std::string ver_graph, ver_cycle;
    auto* cmd_ver = app.add_subcommand("verify", "check a Hamiltonian cycle against a graph");
    cmd_ver->add_option("--graph", ver_graph, "graph file (or builtin:<name>)")->required();
    cmd_ver->add_option("--cycle", ver_cycle, "cycle file {\"nodes\": [...]}")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::Success&) {
        auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs[0]->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        out << "usage error: " << e.what() << "\n";
        return 2;
    }

    const Clock::time_point start = Clock::now();
    std::string command;
    json config, results, agreement;
    bool has_agreement = false;
    std::string plain;
    int exit_code = 0;

    try {
        const ResourceCaps caps = caps_from_env();
        const json caps_echo{{"max_arcs", caps.max_arcs},
                             {"max_values", caps.max_values},
                             {"census_budget_ms", caps.census_budget_ms}};

        if (cmd_gen->parsed()) {
            command = "generate";
            config = {{"seed", gen_seed}, {"steps", gen_steps},      {"format", gen_fmt},
                      {"out", gen_out},   {"caps", caps_echo}};
            const Digraph d0 = resolve_seed(gen_seed);
            const Generation gen = ildt_iterate(d0, gen_steps, caps.max_arcs);
            const std::string text = format_graph(gen.graph, parse_format(gen_fmt));
            results = {{"t", gen.t}, {"counts", counts_json(count_basic(gen.graph))}};
            if (!gen_out.empty()) {
                write_text(gen_out, text);
                results["out"] = gen_out;
                plain = "wrote " + gen_out + "\n";
            } else if (json_flag) {
                results["graph"] = text;
            } else {
                plain = text;
            }
        } else if (cmd_cen->parsed()) {
            command = "census";
            config = {{"seed", cen_seed},
                      {"steps", cen_steps},
                      {"bruteforce", cen_brute},
                      {"out", cen_out},
                      {"caps", caps_echo}};
            const Digraph d0 = resolve_seed(cen_seed);
            const BasicCounts c0 = count_basic(d0);
            const TriadCounts t0 = triad_census_bruteforce(d0, caps.census_budget_ms);
            const BasicCounts closed_c = closed_form_basic(c0, cen_steps);
            const TriadCounts closed_t = triad_closed_form(c0, t0, cen_steps);
            TriadCounts rec = t0;
            for (uint32_t s = 0; s < cen_steps; ++s)
                rec = triad_recurrence_step(closed_form_basic(c0, s), rec);
            const DensificationReport dens = densification(c0, cen_steps);

            json report;
            report["t"] = cen_steps;
            report["seed_counts"] = counts_json(c0);
            report["seed_triads"] = triads_json(t0);
            report["closed_form"] = {{"counts", counts_json(closed_c)},
                                     {"triads", triads_json(closed_t)}};
            report["recurrence_triads"] = triads_json(rec);
            report["densification"] = {{"ratio", dens.ratio_value},
                                       {"predicted", dens.predicted_value},
                                       {"relative_error", dens.relative_error_value},
                                       {"ratio_exact", dens.ratio.str()},
                                       {"predicted_exact", dens.predicted.str()},
                                       {"relative_error_exact", dens.relative_error.str()}};
            try {
                const Rational lim = triad_ratio_limit(c0, t0);
                report["triad_ratio_limit"] = lim.value();
                report["triad_ratio_limit_exact"] = lim.str();
            } catch (const Error&) {
                // Fully bidirected seeds have no defined limit; omit the field.
            }
            agreement["recurrence"] = (rec == closed_t);
            if (cen_brute) {
                const Generation gen = ildt_iterate(d0, cen_steps, caps.max_arcs);
                const BasicCounts bc = count_basic(gen.graph);
                const TriadCounts bt = triad_census_bruteforce(gen.graph, caps.census_budget_ms);
                report["bruteforce"] = {{"counts", counts_json(bc)}, {"triads", triads_json(bt)}};
                agreement["bruteforce"] = (bc == closed_c && bt == closed_t);
            }
            has_agreement = true;
            bool agrees = true;
            for (const auto& [key, val] : agreement.items()) {
                (void)key;
                agrees = agrees && val.get<bool>();
            }
            report["agrees"] = agrees;
            const std::string text = report.dump() + "\n";
            results = report;
            if (!cen_out.empty()) {
                write_text(cen_out, text);
                results["out"] = cen_out;
                plain = "wrote " + cen_out + "\n";
            } else {
                plain = text;
            }
        } else if (cmd_sp->parsed()) {
            command = "spectrum";
            config = {{"seed", sp_seed},
                      {"steps", sp_steps},
                      {"normalize", sp_norm},
                      {"out", sp_out},
                      {"caps", caps_echo}};
            const Digraph d0 = resolve_seed(sp_seed);
            Spectrum s = spectrum_iterate(initial_spectrum(d0), sp_steps, caps.max_values);
            if (sp_norm) s = normalize_spectrum(s);
            const std::string csv = format_values_csv(s.values, s.t);
            results = {{"t", s.t},
                       {"count", static_cast<int64_t>(s.values.size())},
                       {"normalized", s.normalized}};
            if (!sp_out.empty()) {
                write_text(sp_out, csv);
                results["out"] = sp_out;
                plain = "wrote " + sp_out + "\n";
            } else if (json_flag) {
                results["csv"] = csv;
            } else {
                plain = csv;
            }
        } else if (cmd_cv->parsed()) {
            command = "curve";
            config = {{"steps", cv_steps},
                      {"seeds", cv_seeds},
                      {"normalize", cv_norm},
                      {"out", cv_out},
                      {"caps", caps_echo}};
            const CurveSample cs = curve_sample(cv_steps, cv_seeds, cv_norm, caps.max_values);
            const std::string csv = format_values_csv(cs.points, cs.t);
            results = {{"t", cs.t},
                       {"seeds", cs.seeds},
                       {"points", static_cast<int64_t>(cs.points.size())},
                       {"normalized", cs.normalized},
                       {"thinned", cs.thinned}};
            if (!cv_out.empty()) {
                write_text(cv_out, csv);
                results["out"] = cv_out;
                plain = "wrote " + cv_out + "\n";
            } else if (json_flag) {
                results["csv"] = csv;
            } else {
                plain = csv;
            }
        } else if (cmd_ham->parsed()) {
            command = "hamilton";
            config = {{"seed", ham_seed},
                      {"walk", ham_walk},
                      {"steps", opt_ham_steps->count() ? json(ham_steps) : json(nullptr)},
                      {"out", ham_out},
                      {"caps", caps_echo}};
            const Digraph d0 = resolve_seed(ham_seed);
            NiceWalk walk;
            if (ham_walk != "auto") {
                walk = make_nice_walk(load_node_sequence(ham_walk, "walk"), d0);
            } else {
                bool bidirected = true;
                for (NodeId u = 0; u < d0.node_count() && bidirected; ++u)
                    for (NodeId v : d0.out_neighbors(u))
                        if (!d0.has_arc(v, u)) {
                            bidirected = false;
                            break;
                        }
                std::vector<NodeId> id_order(d0.node_count());
                for (NodeId x = 0; x < d0.node_count(); ++x) id_order[x] = x;
                if (bidirected) {
                    walk = dfs_nice_walk(d0);
                } else if (is_nice(id_order, d0)) {
                    walk = make_nice_walk(id_order, d0);
                } else {
                    throw Error(
                        "cannot derive a walk automatically: the seed is neither fully "
                        "bidirected (depth-first walk) nor a directed cycle in id order; "
                        "provide --walk <file>");
                }
            }
            const uint32_t t =
                opt_ham_steps->count() ? ham_steps : min_time_for(walk);
            const HamCycle cyc = build_ham_cycle(d0, walk, t, nullptr, caps.max_arcs);
            const json cycle_json = {
                {"n", static_cast<int64_t>(cyc.nodes.size())}, {"t", t}, {"nodes", cyc.nodes}};
            const std::string text = cycle_json.dump() + "\n";
            results = {{"t", t},
                       {"length", static_cast<int64_t>(cyc.nodes.size())},
                       {"walk_length", static_cast<int64_t>(walk.nodes.size())},
                       {"max_freq", walk.max_freq}};
            agreement["verified"] = true;  // build_ham_cycle self-verifies
            has_agreement = true;
            if (!ham_out.empty()) {
                write_text(ham_out, text);
                results["out"] = ham_out;
                plain = "wrote " + ham_out + "\n";
            } else if (json_flag) {
                results["cycle"] = cycle_json;
            } else {
                plain = text;
            }
        } else if (cmd_ver->parsed()) {
            command = "verify";
            config = {{"graph", ver_graph}, {"cycle", ver_cycle}, {"caps", caps_echo}};
            const Digraph g = resolve_seed(ver_graph);
            const std::vector<NodeId> seq = load_node_sequence(ver_cycle, "cycle");
            const bool ok = verify_ham_cycle(g, seq);
            results = {{"valid", ok}, {"length", static_cast<int64_t>(seq.size())}};
            plain = ok ? "cycle valid\n" : "cycle invalid\n";
            if (!ok) exit_code = 1;
        }
    } catch (const Error& e) {
        return emit_error(out, json_flag, command, config, e.what(), start);
    } catch (const std::exception& e) {
        return emit_error(out, json_flag, command, config,
                          std::string("internal error: ") + e.what(), start);
    }

    if (json_flag) {
        json env;
        env["command"] = command;
        env["config"] = config;
        env["results"] = results;
        if (has_agreement) env["agreement"] = agreement;
        env["wall_time_ms"] = elapsed_ms(start);
        out << env.dump() << "\n";
    } else {
        out << plain;
    }
    return exit_code;
}

}  // namespace ildt
