// qzg -- Zagreb-index extremal analysis on p-quasi k-cyclic graphs.
//
// Subcommands: construct, invariants, classify, verify-bound, extremal,
// enumerate. Input graphs are graph6 lines from a file or stdin; output is
// JSON (stable key order), CSV with a header row, or graph6 lines.
//
// Exit codes: 0 success, 2 bad parameters, 3 parse error, 4 precondition
// failure, 5 bound violation, 6 expectation mismatch.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qzg/bounds.hpp"
#include "qzg/canon.hpp"
#include "qzg/enumerate.hpp"
#include "qzg/families.hpp"
#include "qzg/graph6.hpp"
#include "qzg/quasi.hpp"
#include "qzg/reports.hpp"
#include "qzg/zagreb.hpp"

namespace {

constexpr int kExitBadParams = 2;
constexpr int kExitParseError = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitBoundViolation = 5;
constexpr int kExitExpectMismatch = 6;

using json = nlohmann::ordered_json;

struct InputLine {
    std::size_t number = 0;  // 1-based
    std::string text;
};

std::vector<InputLine> read_lines(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!path.empty()) {
        file.open(path);
        if (!file) throw std::runtime_error("cannot open input file: " + path);
        in = &file;
    }
    std::vector<InputLine> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(*in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back({number, line});
    }
    return out;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

const std::map<std::string, std::function<qzg::Graph(int)>>& family_table() {
    static const std::map<std::string, std::function<qzg::Graph(int)>> table = {
        {"path", qzg::path},       {"cycle", qzg::cycle},
        {"star", qzg::star},       {"complete", qzg::complete},
        {"u3", qzg::u3},           {"b33", qzg::b33},
        {"k4", qzg::k4_pendant},   {"q", qzg::book3_pendant},
    };
    return table;
}

qzg::Graph make_family(const std::string& name, int n) {
    const auto& table = family_table();
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown family: " + name);
    return it->second(n);
}

std::string csv_witness(const qzg::VertexSet& s) {
    std::string out;
    for (int v : s.to_vector()) {
        if (!out.empty()) out.push_back(';');
        out += std::to_string(v);
    }
    return out;
}

int run_construct(const std::string& family, int n, int join_p, const std::string& out_path) {
    qzg::Graph g = make_family(family, n);
    g = qzg::join_with_complete(g, join_p);
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << qzg::to_graph6(g) << "\n";
    return 0;
}

int run_invariants(const std::string& in_path, const std::string& out_path,
                   const std::string& format) {
    const std::vector<InputLine> lines = read_lines(in_path);
    std::vector<std::pair<InputLine, qzg::Graph>> graphs;
    for (const InputLine& line : lines) {
        try {
            graphs.emplace_back(line, qzg::parse_graph6(line.text));
        } catch (const std::exception& e) {
            std::cerr << "line " << line.number << ": " << e.what() << "\n";
            return kExitParseError;
        }
    }
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    if (format == "csv") {
        out << "graph6,n,m,m1,m2,cyclomatic,connected\n";
        for (const auto& [line, g] : graphs) {
            const bool conn = g.is_connected();
            out << line.text << ',' << g.order() << ',' << g.edge_count() << ',' << qzg::m1(g)
                << ',' << qzg::m2(g) << ',';
            if (conn) out << g.cyclomatic_number();
            out << ',' << (conn ? "true" : "false") << "\n";
        }
    } else {
        json rows = json::array();
        for (const auto& [line, g] : graphs) {
            const bool conn = g.is_connected();
            json row;
            row["graph6"] = line.text;
            row["n"] = g.order();
            row["m"] = g.edge_count();
            row["m1"] = qzg::m1(g);
            row["m2"] = qzg::m2(g);
            row["cyclomatic"] = conn ? json(g.cyclomatic_number()) : json(nullptr);
            row["connected"] = conn;
            rows.push_back(row);
        }
        out << rows.dump(2) << "\n";
    }
    return 0;
}

int run_classify(int k, const std::string& in_path, const std::string& out_path,
                 const std::string& format) {
    const std::vector<InputLine> lines = read_lines(in_path);
    std::vector<std::pair<InputLine, qzg::Graph>> graphs;
    for (const InputLine& line : lines) {
        try {
            graphs.emplace_back(line, qzg::parse_graph6(line.text));
        } catch (const std::exception& e) {
            std::cerr << "line " << line.number << ": " << e.what() << "\n";
            return kExitParseError;
        }
    }
    std::vector<std::size_t> disconnected;
    for (const auto& [line, g] : graphs)
        if (!g.is_connected()) disconnected.push_back(line.number);
    if (!disconnected.empty()) {
        std::cerr << "disconnected input on line";
        if (disconnected.size() > 1) std::cerr << 's';
        for (std::size_t n : disconnected) std::cerr << ' ' << n;
        std::cerr << "\n";
        return kExitPrecondition;
    }
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    if (format == "csv") {
        out << "graph6,p,witness_count,example_witness\n";
        for (const auto& [line, g] : graphs) {
            const qzg::Classification c = qzg::min_deletion_to_kcyclic(g, k);
            out << line.text << ',' << (c.feasible() ? *c.p : -1) << ',' << c.witnesses.size()
                << ',' << (c.witnesses.empty() ? "" : csv_witness(c.witnesses.front())) << "\n";
        }
    } else {
        json rows = json::array();
        for (const auto& [line, g] : graphs) {
            const qzg::Classification c = qzg::min_deletion_to_kcyclic(g, k);
            json row;
            row["graph6"] = line.text;
            row["p"] = c.feasible() ? json(*c.p) : json(nullptr);
            row["witness_count"] = c.witnesses.size();
            row["example_witness"] =
                c.witnesses.empty() ? json(nullptr) : json(c.witnesses.front().to_vector());
            rows.push_back(row);
        }
        out << rows.dump(2) << "\n";
    }
    return 0;
}

int run_verify_bound(int n, int p, int k, const std::string& in_path,
                     const std::string& out_path, const std::string& variant_name, int workers) {
    const qzg::M2Variant variant = variant_name == "as-printed" ? qzg::M2Variant::as_printed
                                                                : qzg::M2Variant::corrected;
    std::vector<qzg::Graph> graphs;
    if (in_path.empty()) {
        graphs = qzg::enumerate_connected(n);
    } else {
        const std::vector<InputLine> lines = read_lines(in_path);
        for (const InputLine& line : lines) {
            try {
                graphs.push_back(qzg::parse_graph6(line.text));
            } catch (const std::exception& e) {
                std::cerr << "line " << line.number << ": " << e.what() << "\n";
                return kExitParseError;
            }
        }
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            if (graphs[i].order() != n || !graphs[i].is_connected()) {
                std::cerr << "input graph " << lines[i].number
                          << " is not a connected graph on " << n << " vertices\n";
                return kExitPrecondition;
            }
        }
    }
    const qzg::BoundSweepResult result = qzg::bound_sweep(graphs, p, k, variant, workers);
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << qzg::to_json(result).dump(2) << "\n";
    return result.violations.empty() ? 0 : kExitBoundViolation;
}

int run_extremal(int n, int p, int k, const std::string& in_path, const std::string& out_path,
                 const std::string& expect, const std::string& index_name, int workers) {
    qzg::ExtremalReport report;
    if (in_path.empty()) {
        report = qzg::extremal_search(n, p, k, workers);
    } else {
        const std::vector<InputLine> lines = read_lines(in_path);
        std::vector<qzg::Graph> graphs;
        for (const InputLine& line : lines) {
            try {
                graphs.push_back(qzg::parse_graph6(line.text));
            } catch (const std::exception& e) {
                std::cerr << "line " << line.number << ": " << e.what() << "\n";
                return kExitParseError;
            }
        }
        report = qzg::extremal_search_over(graphs, n, p, k, workers);
    }
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << qzg::to_json(report).dump(2) << "\n";
    if (expect.empty()) return 0;

    std::vector<qzg::Graph> expected;
    std::stringstream ss(expect);
    std::string name;
    while (std::getline(ss, name, ','))
        expected.push_back(qzg::join_with_complete(make_family(name, n - p), p));
    const qzg::IndexSelector which = index_name == "m1"   ? qzg::IndexSelector::m1
                                     : index_name == "m2" ? qzg::IndexSelector::m2
                                                          : qzg::IndexSelector::both;
    const qzg::UniquenessVerdict verdict = qzg::verify_uniqueness(report, expected, which);
    if (!verdict.ok) {
        std::cerr << "expectation mismatch: " << verdict.detail << "\n";
        for (const std::string& g6 : verdict.counterexamples)
            std::cerr << "counterexample: " << g6 << "\n";
        return kExitExpectMismatch;
    }
    return 0;
}

int run_enumerate(int n, const std::string& out_path, int workers) {
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    if (workers <= 1 || n <= 2) {
        qzg::for_each_connected(n, [&](const qzg::Graph& g) { out << qzg::to_graph6(g) << "\n"; });
        return 0;
    }
    // Parents are split across workers; per-parent chunks are reassembled
    // in parent order, so the byte stream matches the single-worker run.
    const std::vector<qzg::Graph> parents = qzg::enumerate_connected(n - 1);
    std::vector<std::vector<std::string>> chunks(parents.size());
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (std::size_t i = w; i < parents.size(); i += workers)
                qzg::for_each_child(
                    parents[i], [&](const qzg::Graph& c) { chunks[i].push_back(qzg::to_graph6(c)); });
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& chunk : chunks)
        for (const std::string& g6 : chunk) out << g6 << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zagreb-index extremal analysis on p-quasi k-cyclic graphs"};
    app.require_subcommand(1);

    // construct
    std::string family;
    int c_n = 0, c_join_p = 0;
    std::string c_out;
    CLI::App* construct = app.add_subcommand("construct", "emit a named family as graph6");
    construct->add_option("family", family, "family name: path cycle star complete u3 b33 k4 q")
        ->required();
    construct->add_option("n", c_n, "order of the family graph")->required();
    construct->add_option("--join-p", c_join_p, "join the result with K_p")->default_val(0);
    construct->add_option("--out", c_out, "output file (default stdout)");

    // invariants
    std::string i_in, i_out, i_format = "json";
    CLI::App* invariants = app.add_subcommand("invariants", "index table for graph6 input");
    invariants->add_option("--in", i_in, "graph6 input file (default stdin)");
    invariants->add_option("--out", i_out, "output file (default stdout)");
    invariants->add_option("--format", i_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // classify
    int cl_k = 0;
    std::string cl_in, cl_out, cl_format = "json";
    CLI::App* classify = app.add_subcommand("classify", "minimal deletion classification");
    classify->add_option("--k", cl_k, "target cyclomatic number")->required();
    classify->add_option("--in", cl_in, "graph6 input file (default stdin)");
    classify->add_option("--out", cl_out, "output file (default stdout)");
    classify->add_option("--format", cl_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // verify-bound
    int v_n = 0, v_p = 0, v_k = 0, v_workers = 1;
    std::string v_in, v_out, v_variant = "corrected";
    CLI::App* verify = app.add_subcommand("verify-bound", "sweep the closed-form index bounds");
    verify->add_option("n", v_n, "graph order")->required();
    verify->add_option("p", v_p, "deletion set size")->required();
    verify->add_option("k", v_k, "cyclomatic number of the remainder")->required();
    verify->add_option("--in", v_in, "graph6 source (default: built-in enumeration)");
    verify->add_option("--out", v_out, "output file (default stdout)");
    verify->add_option("--variant", v_variant, "corrected or as-printed")
        ->check(CLI::IsMember({"corrected", "as-printed"}));
    verify->add_option("--workers", v_workers, "worker threads")->default_val(1);

    // extremal
    int e_n = 0, e_p = 0, e_k = 0, e_workers = 1;
    std::string e_in, e_out, e_expect, e_index = "both";
    CLI::App* extremal = app.add_subcommand("extremal", "maxima over the p-quasi k-cyclic class");
    extremal->add_option("n", e_n, "graph order")->required();
    extremal->add_option("p", e_p, "deletion size")->required();
    extremal->add_option("k", e_k, "target cyclomatic number")->required();
    extremal->add_option("--in", e_in, "graph6 source (default: built-in enumeration)");
    extremal->add_option("--out", e_out, "output file (default stdout)");
    extremal->add_option("--expect", e_expect,
                         "comma-separated family names the argmax must equal");
    extremal->add_option("--index", e_index, "which index the expectation applies to")
        ->check(CLI::IsMember({"m1", "m2", "both"}));
    extremal->add_option("--workers", e_workers, "worker threads")->default_val(1);

    // enumerate
    int en_n = 0, en_workers = 1;
    std::string en_out;
    CLI::App* enumerate = app.add_subcommand("enumerate", "connected graphs, one per class");
    enumerate->add_option("n", en_n, "graph order")->required();
    enumerate->add_option("--out", en_out, "output file (default stdout)");
    enumerate->add_option("--workers", en_workers, "worker threads")->default_val(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadParams;
    }

    try {
        if (*construct) return run_construct(family, c_n, c_join_p, c_out);
        if (*invariants) return run_invariants(i_in, i_out, i_format);
        if (*classify) return run_classify(cl_k, cl_in, cl_out, cl_format);
        if (*verify) return run_verify_bound(v_n, v_p, v_k, v_in, v_out, v_variant, v_workers);
        if (*extremal)
            return run_extremal(e_n, e_p, e_k, e_in, e_out, e_expect, e_index, e_workers);
        if (*enumerate) return run_enumerate(en_n, en_out, en_workers);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
    return kExitBadParams;
}
