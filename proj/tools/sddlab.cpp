// Command-line front end: exact degree-based index computation, line
// graph construction, bound verification sweeps and extremal/inverse
// search over exhaustively enumerated connected graphs.

#include "sddlab/bounds.hpp"
#include "sddlab/enumerate.hpp"
#include "sddlab/graph6.hpp"
#include "sddlab/indices.hpp"
#include "sddlab/line_graph.hpp"
#include "sddlab/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace sddlab;
using nlohmann::json;

namespace {

// Exit codes: 0 ok, 2 parse error, 3 precondition failure, 4 unexpected
// bound violation.
struct CliError {
    int exit_code;
    std::string code;
    std::string message;
};

[[noreturn]] void cli_fail(int exit_code, const std::string& code, const std::string& msg) {
    throw CliError{exit_code, code, msg};
}

int exit_code_for(Errc code) {
    return code == Errc::MalformedGraph6 ? 2 : 3;
}

std::string command_echo(int argc, char** argv) {
    std::string echo;
    for (int i = 0; i < argc; ++i) {
        if (i) echo += ' ';
        echo += argv[i];
    }
    return echo;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            if (!current.empty()) parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) parts.push_back(current);
    return parts;
}

struct LoadedInput {
    std::vector<Graph> graphs;
    std::string digest;
};

LoadedInput load_input(const std::string& graph_name, const std::string& input_path,
                       const std::string& input_format) {
    LoadedInput loaded;
    if (!graph_name.empty()) {
        auto g = graph_from_name(graph_name);
        if (!g) cli_fail(2, "BadGraphName", "unrecognized graph name: " + graph_name);
        loaded.graphs.push_back(*g);
        loaded.digest = fnv1a_digest("name:" + graph_name);
        return loaded;
    }
    if (input_path.empty())
        cli_fail(2, "MissingInput", "provide --graph NAME or --input FILE");
    std::ifstream in(input_path);
    if (!in) cli_fail(3, "Io", "cannot open " + input_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string bytes = buffer.str();
    loaded.digest = fnv1a_digest(bytes);
    std::istringstream replay(bytes);
    // graph6 unless an edge list is requested explicitly
    const std::string format = input_format.empty() ? "g6" : input_format;
    if (format == "edges") {
        loaded.graphs.push_back(read_edge_list(replay));
    } else if (format == "g6") {
        loaded.graphs = read_graph6_stream(replay);
    } else {
        cli_fail(2, "BadFormat", "unknown input format: " + format);
    }
    if (loaded.graphs.empty()) cli_fail(3, "Io", "no graphs in " + input_path);
    return loaded;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) cli_fail(3, "Io", "cannot write " + path);
    out << contents;
}

int thread_count() {
    if (const char* env = std::getenv("SDDLAB_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed >= 1) return parsed;
    }
    return 1;
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
    auto value = rational_from_string(text);
    if (!value) cli_fail(2, "BadRational", "cannot parse " + what + ": " + text);
    return *value;
}

SddInterval parse_interval(const std::string& text) {
    if (text.size() < 5 || text.front() != '(' || text.back() != ']')
        cli_fail(2, "BadInterval", "interval must look like (lo,hi]: " + text);
    const std::string body = text.substr(1, text.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string::npos)
        cli_fail(2, "BadInterval", "interval must look like (lo,hi]: " + text);
    SddInterval interval{parse_rational_arg(body.substr(0, comma), "interval bound"),
                         parse_rational_arg(body.substr(comma + 1), "interval bound")};
    if (!(interval.lo < interval.hi))
        cli_fail(2, "BadInterval", "empty interval: " + text);
    return interval;
}

std::vector<TheoremId> expand_theorems(const std::string& list) {
    std::vector<TheoremId> ids;
    auto push_unique = [&ids](TheoremId id) {
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    };
    for (const std::string& token : split(list, ',')) {
        if (token == "all") {
            for (const auto& info : theorem_registry()) push_unique(info.id);
            continue;
        }
        if (auto id = theorem_from_name(token)) {
            push_unique(*id);
            continue;
        }
        bool matched = false;
        for (const auto& info : theorem_registry()) {
            const std::string name(info.name);
            if (name.rfind(token + "_", 0) == 0) {
                push_unique(info.id);
                matched = true;
            }
        }
        if (!matched) cli_fail(2, "BadTheorem", "unknown bound id: " + token);
    }
    if (ids.empty()) cli_fail(2, "BadTheorem", "empty bound list");
    return ids;
}

// ---------------------------------------------------------------- compute

int run_compute(const std::string& echo, const std::string& graph_name,
                const std::string& input_path, const std::string& input_format,
                const std::string& indices_csv, std::optional<double> alpha,
                const std::string& report_path, const std::string& format) {
    const LoadedInput loaded = load_input(graph_name, input_path, input_format);
    std::vector<IndexId> ids;
    for (const std::string& token : split(indices_csv, ',')) {
        auto id = index_from_name(token);
        if (!id) cli_fail(2, "BadIndex", "unknown index id: " + token);
        ids.push_back(*id);
    }
    if (ids.empty()) cli_fail(2, "BadIndex", "empty index list");

    json items = json::array();
    std::ostringstream csv;
    csv << "graph6,index,value\n";
    const bool single = loaded.graphs.size() == 1;
    for (const Graph& g : loaded.graphs) {
        const std::string g6 = graph6_encode(g);
        json values;
        for (IndexId id : ids) {
            const IndexValue value = compute_index(g, id, alpha);
            values[std::string(index_name(id))] = value.str();
            csv << g6 << ',' << index_name(id) << ',' << value.str() << '\n';
            if (single)
                std::cout << value.str() << '\n';
            else
                std::cout << g6 << '\t' << index_name(id) << '\t' << value.str() << '\n';
        }
        items.push_back(json{{"graph6", g6}, {"values", values}});
    }
    if (!report_path.empty()) {
        if (format == "csv") {
            write_file(report_path, csv.str());
        } else {
            json report{{"command", echo},
                        {"input_digest", loaded.digest},
                        {"items", items}};
            write_file(report_path, report.dump(2) + "\n");
        }
    }
    return 0;
}

// -------------------------------------------------------------- linegraph

int run_linegraph(const std::string& echo, const std::string& graph_name,
                  const std::string& input_path, const std::string& input_format,
                  const std::string& output_path, const std::string& report_path) {
    const LoadedInput loaded = load_input(graph_name, input_path, input_format);
    std::ostringstream lines;
    json items = json::array();
    for (const Graph& g : loaded.graphs) {
        const LineGraphResult result = line_graph(g);
        const std::string lg6 = graph6_encode(result.lg);
        lines << lg6 << '\n';
        const Rational expected = zagreb_m1(g) / 2 - g.size();
        items.push_back(json{
            {"graph6", graph6_encode(g)},
            {"line_graph6", lg6},
            {"line_order", result.lg.order()},
            {"line_size", result.lg.size()},
            {"edge_count_identity_ok", Rational(result.lg.size()) == expected},
        });
    }
    if (output_path.empty())
        std::cout << lines.str();
    else
        write_file(output_path, lines.str());
    if (!report_path.empty()) {
        json report{{"command", echo}, {"input_digest", loaded.digest}, {"items", items}};
        write_file(report_path, report.dump(2) + "\n");
    }
    return 0;
}

// ----------------------------------------------------------------- verify

int run_verify(const std::string& echo, const std::string& theorems_csv, int n_max,
               std::vector<double> alphas, const std::string& input_path,
               const std::string& report_path, const std::string& format,
               bool full_report) {
    const std::vector<TheoremId> ids = expand_theorems(theorems_csv);
    if (alphas.empty()) alphas.push_back(1.0);

    std::vector<Graph> graphs;
    std::string digest;
    if (input_path.empty()) {
        graphs = GraphStream::builtin(2, n_max).drain();
        digest = fnv1a_digest("builtin:2.." + std::to_string(n_max));
    } else {
        std::ifstream in(input_path);
        if (!in) cli_fail(3, "Io", "cannot open " + input_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        digest = fnv1a_digest(buffer.str());
        std::istringstream replay(buffer.str());
        graphs = read_graph6_stream(replay);
    }

    VerifyReport report;
    report.command = echo;
    report.input_digest = digest;
    const int threads = thread_count();
    for (TheoremId id : ids) {
        SweepResult result = sweep(id, graphs, alphas, threads);
        const auto& s = result.summary;
        std::cout << theorem_name(id) << " checked=" << s.checked
                  << " skipped=" << s.skipped << " equalities=" << s.equalities
                  << " violations=" << s.violations << " mismatches=" << s.mismatches
                  << (theorem_info(id).literal ? " [expected-falsification entry]" : "")
                  << '\n';
        report.add(id, std::move(result));
    }
    std::cout << "expected_falsifications=" << report.expected_falsifications
              << " unexpected=" << report.unexpected << '\n';

    if (!report_path.empty()) {
        if (format == "csv")
            write_file(report_path, verify_csv(report));
        else
            write_file(report_path, to_json(report, full_report).dump(2) + "\n");
    }
    return report.unexpected > 0 ? 4 : 0;
}

// ----------------------------------------------------------------- search

int run_search(const std::string& echo, const std::string& mode, const std::string& value,
               int n_max, std::optional<int> n, std::optional<int> m,
               const std::string& direction, const std::string& target,
               const std::string& intervals_csv, const std::string& report_path) {
    TargetObject target_object = TargetObject::graph;
    if (target == "L")
        target_object = TargetObject::line_graph;
    else if (target != "G")
        cli_fail(2, "BadTarget", "target must be G or L");

    json report{{"command", echo}, {"mode", mode}};
    if (mode == "inverse") {
        if (value.empty()) cli_fail(2, "BadValue", "--value required for inverse mode");
        const Rational target_value = parse_rational_arg(value, "--value");
        const auto hits = inverse_solve(target_value, n_max, target_object);
        for (const auto& g6 : hits) std::cout << g6 << '\n';
        std::cout << "count=" << hits.size() << '\n';
        report["value"] = rational_to_string(target_value);
        report["witnesses"] = hits;
    } else if (mode == "extremal") {
        if (!n) cli_fail(2, "BadParameter", "--n required for extremal mode");
        if (direction != "min" && direction != "max")
            cli_fail(2, "BadDirection", "direction must be min or max");
        const ExtremalResult result = extremal_search(*n, m, direction == "max");
        std::cout << "value " << rational_to_string(result.value) << '\n';
        for (const auto& g6 : result.witnesses) std::cout << g6 << '\n';
        report["value"] = rational_to_string(result.value);
        report["witnesses"] = result.witnesses;
    } else if (mode == "classify") {
        if (intervals_csv.empty())
            cli_fail(2, "BadInterval", "--intervals required for classify mode");
        std::vector<SddInterval> intervals;
        for (const std::string& token : split(intervals_csv, ';'))
            intervals.push_back(parse_interval(token));
        const auto results = classify_by_sdd(n_max, intervals, target_object);
        json buckets = json::array();
        for (const auto& result : results) {
            std::cout << '(' << rational_to_string(result.interval.lo) << ','
                      << rational_to_string(result.interval.hi)
                      << "] count=" << result.members.size() << '\n';
            json members = json::array();
            for (const auto& [g6, sdd_value] : result.members) {
                std::cout << g6 << ' ' << rational_to_string(sdd_value) << '\n';
                members.push_back(json{{"graph6", g6}, {"sdd", rational_to_string(sdd_value)}});
            }
            buckets.push_back(json{
                {"lo", rational_to_string(result.interval.lo)},
                {"hi", rational_to_string(result.interval.hi)},
                {"members", std::move(members)},
            });
        }
        report["intervals"] = std::move(buckets);
    } else {
        cli_fail(2, "BadMode", "mode must be inverse, extremal or classify");
    }
    if (!report_path.empty()) write_file(report_path, report.dump(2) + "\n");
    return 0;
}

// --------------------------------------------------------------- generate

int run_generate(int n, const std::string& output_path) {
    std::ostringstream lines;
    for (const Graph& g : connected_graphs(n)) lines << graph6_encode(g) << '\n';
    if (output_path.empty())
        std::cout << lines.str();
    else
        write_file(output_path, lines.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact degree-based topological indices, line graphs and bound sweeps"};
    app.require_subcommand(1);
    const std::string echo = command_echo(argc, argv);

    std::string graph_name, input_path, input_format, output_path, report_path;
    std::string indices_csv = "sdd";
    std::string format = "json";
    std::optional<double> alpha_opt;
    double alpha_raw = 1.0;

    auto* compute = app.add_subcommand("compute", "evaluate indices on graphs");
    compute->add_option("--graph", graph_name, "named graph, e.g. P4, C5, S4, K4, K2_3");
    compute->add_option("--input", input_path, "graph6 lines or edge-list file");
    compute->add_option("--input-format", input_format, "g6 or edges");
    compute->add_option("--indices", indices_csv, "comma list: sdd,m1,m2,m1a,m2a,chi,ga,id,f");
    auto* alpha_flag = compute->add_option("--alpha", alpha_raw, "exponent for m1a/m2a/chi");
    compute->add_option("--report", report_path, "write a JSON report");
    compute->add_option("--format", format, "report format: json or csv");

    auto* linegraph = app.add_subcommand("linegraph", "emit the line graph as graph6");
    linegraph->add_option("--graph", graph_name, "named graph");
    linegraph->add_option("--input", input_path, "graph6 lines or edge-list file");
    linegraph->add_option("--input-format", input_format, "g6 or edges");
    linegraph->add_option("--output", output_path, "write graph6 lines here");
    linegraph->add_option("--report", report_path, "write a JSON report");

    std::string theorems_csv = "all";
    int n_max = 6;
    std::vector<double> alphas;
    bool full_report = false;
    auto* verify = app.add_subcommand("verify", "sweep bounds over enumerated graphs");
    verify->add_option("--theorems", theorems_csv, "comma list of bound ids, or all");
    verify->add_option("--n-max", n_max, "largest order for the builtin generator");
    verify->add_option("--alpha", alphas, "exponents for parameterized bounds");
    verify->add_option("--input", input_path, "sweep a graph6 file instead");
    verify->add_option("--report", report_path, "write the verification report");
    verify->add_option("--format", format, "report format: json or csv");
    verify->add_flag("--full-report", full_report, "embed every check, not just findings");

    std::string mode, value, direction = "min", target = "G", intervals_csv;
    std::optional<int> search_n, search_m;
    auto* search = app.add_subcommand("search", "inverse / extremal / classify");
    search->add_option("--mode", mode, "inverse, extremal or classify")->required();
    search->add_option("--value", value, "target SDD as p/q (inverse mode)");
    search->add_option("--n-max", n_max, "largest order to enumerate");
    search->add_option("--n", search_n, "order (extremal mode)");
    search->add_option("--m", search_m, "size (extremal mode)");
    search->add_option("--direction", direction, "min or max (extremal mode)");
    search->add_option("--target", target, "G or L: measure the graph or its line graph");
    search->add_option("--intervals", intervals_csv, "semicolon list of (lo,hi] intervals");
    search->add_option("--report", report_path, "write a JSON report");

    int gen_n = 0;
    auto* generate = app.add_subcommand("generate", "dump connected graph classes as graph6");
    generate->add_option("--n", gen_n, "order, 1..8")->required();
    generate->add_option("--output", output_path, "write graph6 lines here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"error", {{"code", "CliParse"}, {"message", e.what()}}}}.dump()
                  << '\n';
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (alpha_flag->count() > 0) alpha_opt = alpha_raw;
        if (compute->parsed())
            rc = run_compute(echo, graph_name, input_path, input_format, indices_csv,
                             alpha_opt, report_path, format);
        else if (linegraph->parsed())
            rc = run_linegraph(echo, graph_name, input_path, input_format, output_path,
                               report_path);
        else if (verify->parsed())
            rc = run_verify(echo, theorems_csv, n_max, alphas, input_path, report_path,
                            format, full_report);
        else if (search->parsed())
            rc = run_search(echo, mode, value, n_max, search_n, search_m, direction,
                            target, intervals_csv, report_path);
        else if (generate->parsed())
            rc = run_generate(gen_n, output_path);
    } catch (const CliError& e) {
        std::cerr << json{{"error", {{"code", e.code}, {"message", e.message}}}}.dump()
                  << '\n';
        return e.exit_code;
    } catch (const Error& e) {
        std::cerr << json{{"error",
                           {{"code", std::string(errc_name(e.code()))},
                            {"message", e.what()}}}}
                         .dump()
                  << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump()
                  << '\n';
        return 3;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    // timing goes to stderr so stdout and report files stay byte-stable
    std::cerr << "elapsed_ms=" << elapsed.count() << '\n';
    return rc;
}
