// oddspec: spectral bipartiteness measures vs odd girth, from the command line.
#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oddspec/analysis.hpp"
#include "oddspec/bounds.hpp"
#include "oddspec/errors.hpp"
#include "oddspec/graph.hpp"
#include "oddspec/graph6.hpp"
#include "oddspec/interlacing.hpp"

namespace {

using namespace oddspec;

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitPrecondition = 4;

int parse_int_strict(const std::string& s, int base = 10) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, base);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw invalid_parameter("not a number: '" + s + "'");
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

bool looks_like_generator(const std::string& s) {
    const auto pos = s.find(':');
    if (pos == std::string::npos) return false;
    const std::string head = s.substr(0, pos);
    return head == "cycle" || head == "complete" || head == "hypercube" ||
           head == "foldedcube" || head == "cayleyf2";
}

// cycle:<k> complete:<n> hypercube:<d> foldedcube:<d> cayleyf2:<m>:<hex,...>
Graph build_from_spec(const std::string& spec) {
    const auto parts = split(spec, ':');
    try {
        if (parts.size() == 2 && parts[0] == "cycle") return generate_cycle(parse_int_strict(parts[1]));
        if (parts.size() == 2 && parts[0] == "complete")
            return generate_complete(parse_int_strict(parts[1]));
        if (parts.size() == 2 && parts[0] == "hypercube")
            return generate_hypercube(parse_int_strict(parts[1]));
        if (parts.size() == 2 && parts[0] == "foldedcube")
            return generate_folded_cube(parse_int_strict(parts[1]));
        if (parts.size() == 3 && parts[0] == "cayleyf2") {
            const int m = parse_int_strict(parts[1]);
            std::vector<std::uint32_t> gens;
            for (const std::string& h : split(parts[2], ','))
                gens.push_back(static_cast<std::uint32_t>(parse_int_strict(h, 16)));
            return generate_cayley_f2(m, gens);
        }
    } catch (const invalid_parameter& e) {
        throw invalid_parameter("bad generator spec '" + spec + "': " + e.what());
    }
    throw invalid_parameter("unknown generator spec '" + spec + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_gen(const std::string& spec, const std::string& out_path) {
    Graph g;
    try {
        g = build_from_spec(spec);
    } catch (const invalid_parameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const std::string line = write_graph6(g) + "\n";
    if (out_path == "-") {
        std::cout << line;
        std::cerr << "n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out || !(out << line) || !out.flush()) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitIo;
        }
        std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    }
    return kExitOk;
}

int cmd_analyze(const std::vector<std::string>& inputs, const std::string& format, int max_n,
                int jobs) {
    const bool csv = format == "csv";
    if (csv) std::cout << record_csv_header() << "\n";
    bool partial = false;
    for (const std::string& input : inputs) {
        if (looks_like_generator(input)) {
            Graph g = build_from_spec(input);  // bad spec escapes as usage error
            try {
                const AnalysisRecord r = analyze_graph(g, input, max_n);
                std::cout << (csv ? record_to_csv(r) : record_to_json(r)) << "\n";
            } catch (const std::exception& e) {
                std::cerr << input << ": " << e.what() << "\n";
                partial = true;
            }
            continue;
        }
        const FileAnalysis fa = analyze_graph6_text(read_file(input), input, max_n, jobs);
        for (const AnalysisRecord& r : fa.records)
            std::cout << (csv ? record_to_csv(r) : record_to_json(r)) << "\n";
        for (const ScanIssue& issue : fa.issues) {
            std::cerr << issue.file << ":" << issue.line << ": " << issue.message << "\n";
            partial = true;
        }
    }
    return partial ? kExitPartial : kExitOk;
}

int cmd_scan(const std::string& dir, ScanOptions opt, const std::string& format,
             const std::string& out_path) {
    if (opt.cache_path.empty())
        if (const char* env = std::getenv("ODDSPEC_CACHE_DIR"))
            opt.cache_path = (std::filesystem::path(env) / "scan-cache.jsonl").string();

    const ScanResult res = scan_corpus(dir, opt);
    bool partial = false;
    for (const ScanIssue& issue : res.issues) {
        std::cerr << "warning: " << issue.file;
        if (issue.line > 0) {
            std::cerr << ":" << issue.line;
            partial = true;
        }
        std::cerr << ": " << issue.message << "\n";
    }
    const std::string body = format == "csv" ? leaderboard_to_csv(res) : leaderboard_to_json(res);
    if (out_path.empty() || out_path == "-")
        std::cout << body;
    else
        write_atomically(out_path, body);
    return partial ? kExitPartial : kExitOk;
}

int cmd_table(int k_max, const std::string& format) {
    const auto rows = gamma_table(k_max);
    if (format == "csv") {
        std::cout << "k,upper,upper_witness,lower,lower_witness\n";
        for (const GammaTableRow& r : rows) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%d,%.4f,", r.odd_girth_k, round_up_4(r.upper));
            std::cout << buf << r.upper_witness;
            std::snprintf(buf, sizeof buf, ",%.4f,", round_down_4(r.lower));
            std::cout << buf << r.lower_witness << "\n";
        }
    } else {
        std::cout << " k   upper   (witness)                 lower   (witness)\n";
        for (const GammaTableRow& r : rows) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%2d   %.4f  %-25s %.4f  %s", r.odd_girth_k,
                          round_up_4(r.upper), ("(" + r.upper_witness + ")").c_str(),
                          round_down_4(r.lower), ("(" + r.lower_witness + ")").c_str());
            std::cout << buf << "\n";
        }
    }
    return kExitOk;
}

Graph load_one_graph(const std::string& input) {
    if (looks_like_generator(input)) return build_from_spec(input);
    const auto lines = read_graph6_lines(read_file(input));
    if (lines.empty()) throw invalid_parameter("no graph6 line found in " + input);
    return parse_graph6(lines.front().second);
}

std::vector<std::vector<int>> parse_partition_arg(const std::string& arg) {
    std::vector<std::vector<int>> classes;
    for (const std::string& cls : split(arg, ';')) {
        std::vector<int> members;
        for (const std::string& v : split(cls, ',')) members.push_back(parse_int_strict(v));
        classes.push_back(std::move(members));
    }
    return classes;
}

int cmd_certify(const std::string& input, const std::string& kind,
                const std::string& partition_arg, const std::string& set_arg, int max_n) {
    try {
        Graph g = load_one_graph(input);
        if (g.vertex_count() > max_n)
            throw capacity_exceeded("graph has " + std::to_string(g.vertex_count()) +
                                    " vertices; cap is " + std::to_string(max_n));
        const int components = static_cast<int>(connected_components(g).size());
        if (components > 1) g = best_ratio_component(g);

        Certificate cert;
        if (kind == "girth7") {
            cert = girth7_certificate(g);
        } else if (kind == "interlacing") {
            if (partition_arg.empty())
                throw invalid_parameter("interlacing certificate needs --partition");
            const auto classes = parse_partition_arg(partition_arg);
            const WeightedPartition p = make_weighted_partition(g, classes);
            cert = check_interlacing(g, build_quotient(g, p));
            for (const auto& cls : p.classes)
                cert.class_sizes.push_back(static_cast<int>(cls.size()));
            cert.class_norms = p.class_norms;
        } else if (kind == "set-weight") {
            if (set_arg.empty())
                throw invalid_parameter("set-weight certificate needs --set");
            std::vector<int> s;
            for (const std::string& v : split(set_arg, ',')) s.push_back(parse_int_strict(v));
            cert = independent_set_weight_check(g, s);
        } else {
            throw invalid_parameter("unknown certificate kind '" + kind + "'");
        }

        nlohmann::ordered_json out = nlohmann::ordered_json::parse(certificate_to_json(cert));
        if (components > 1) {
            out["reduced_to_component"] = true;
            out["components"] = components;
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    } catch (const io_error&) {
        throw;  // input file problems are I/O, not precondition
    } catch (const parse_error& e) {
        nlohmann::ordered_json err;
        err["error"] = {{"kind", "parse"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        nlohmann::ordered_json err;
        err["error"] = {{"kind", "precondition"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return kExitPrecondition;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral bipartiteness ratio (lambda1+lambdan)/n versus odd girth"};
    app.require_subcommand(1);

    std::string format = "json";
    int max_n = kDefaultMaxN;
    int jobs = 0;

    auto* gen = app.add_subcommand("gen", "generate a graph, write one graph6 line");
    std::string gen_spec, gen_out;
    gen->add_option("spec", gen_spec,
                    "cycle:<k> | complete:<n> | hypercube:<d> | foldedcube:<d> | "
                    "cayleyf2:<m>:<hex,...>")
        ->required();
    gen->add_option("output", gen_out, "output path, - for stdout")->required();

    auto* analyze = app.add_subcommand("analyze", "per-graph spectral records");
    std::vector<std::string> analyze_inputs;
    analyze->add_option("inputs", analyze_inputs, "graph6 files and/or generator specs")
        ->required();
    analyze->add_option("--format", format, "json (lines) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    analyze->add_option("--max-n", max_n, "largest admissible vertex count");
    analyze->add_option("--jobs", jobs, "worker threads (0 = hardware)");

    auto* scan = app.add_subcommand("scan", "rank a directory of graph6 files");
    std::string scan_dir, scan_out, scan_cache;
    int min_girth = 3, top = 0;
    scan->add_option("dir", scan_dir, "directory holding *.g6 files")->required();
    scan->add_option("--min-girth", min_girth, "keep odd girth >= this (default 3)");
    scan->add_option("--top", top, "entries kept per odd-girth class (0 = all)");
    scan->add_option("--format", format, "json (lines) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    scan->add_option("--cache", scan_cache,
                     "record cache path (default $ODDSPEC_CACHE_DIR/scan-cache.jsonl)");
    scan->add_option("--output,-o", scan_out, "write here atomically instead of stdout");
    scan->add_option("--max-n", max_n, "largest admissible vertex count");
    scan->add_option("--jobs", jobs, "worker threads (0 = hardware)");

    auto* table = app.add_subcommand("table", "upper/lower bounds per odd girth");
    int k_max = 15;
    std::string table_format = "text";
    table->add_option("k_max", k_max, "largest odd girth row (odd, >= 3; default 15)");
    table->add_option("--format", table_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));

    auto* certify = app.add_subcommand("certify", "emit an audit certificate as JSON");
    std::string certify_input, certify_kind = "girth7", partition_arg, set_arg;
    certify->add_option("input", certify_input, "graph6 file or generator spec")->required();
    certify->add_option("--kind", certify_kind, "girth7 | interlacing | set-weight")
        ->check(CLI::IsMember({"girth7", "interlacing", "set-weight"}));
    certify->add_option("--partition", partition_arg,
                        "classes for --kind interlacing, e.g. 0,1;2,3,4");
    certify->add_option("--set", set_arg, "independent set for --kind set-weight, e.g. 0,2,4");
    certify->add_option("--max-n", max_n, "largest admissible vertex count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_spec, gen_out);
        if (analyze->parsed()) return cmd_analyze(analyze_inputs, format, max_n, jobs);
        if (scan->parsed()) {
            ScanOptions opt;
            opt.min_girth = min_girth;
            opt.top = top;
            opt.max_n = max_n;
            opt.jobs = jobs;
            opt.cache_path = scan_cache;
            return cmd_scan(scan_dir, opt, format, scan_out);
        }
        if (table->parsed()) {
            if (k_max < 3 || k_max % 2 == 0) {
                std::cerr << "error: k_max must be an odd integer >= 3\n";
                return kExitUsage;
            }
            return cmd_table(k_max, table_format);
        }
        if (certify->parsed())
            return cmd_certify(certify_input, certify_kind, partition_arg, set_arg, max_n);
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const invalid_parameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitPartial;
    }
    return kExitUsage;
}
