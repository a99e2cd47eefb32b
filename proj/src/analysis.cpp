#include "oddspec/analysis.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <thread>
#include <utility>

#include "oddspec/bounds.hpp"
#include "oddspec/errors.hpp"
#include "oddspec/graph6.hpp"
#include "oddspec/spectral.hpp"

#ifndef ODDSPEC_VERSION
#define ODDSPEC_VERSION "0.0.0-dev"
#endif

namespace oddspec {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kSoundSlack = 1e-9;

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
        index[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    Graph h(static_cast<int>(verts.size()));
    for (int v : verts)
        for (int w : g.neighbors(v))
            if (v < w && index[static_cast<std::size_t>(w)] != -1)
                h.add_edge(index[static_cast<std::size_t>(v)],
                           index[static_cast<std::size_t>(w)]);
    return h;
}

ordered_json record_to_ordered(const AnalysisRecord& r) {
    ordered_json j;
    j["graph_id"] = r.graph_id;
    j["n"] = r.n;
    j["edge_count"] = r.edge_count;
    if (r.odd_girth.is_infinite())
        j["odd_girth"] = "Infinite";
    else
        j["odd_girth"] = r.odd_girth.value();
    j["lambda1"] = r.lambda1;
    j["lambdan"] = r.lambdan;
    j["ratio"] = r.ratio;
    j["qn"] = r.qn;
    j["bound_for_girth"] = r.bound_for_girth;
    j["sound"] = r.sound;
    j["disconnected"] = r.disconnected;
    j["components"] = r.components;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string number_text(double v) { return nlohmann::json(v).dump(); }

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_key(std::string_view s) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(s)));
    return buf;
}

struct LineJob {
    std::string file;
    int line = 0;
    std::string token;
};

struct LineOutcome {
    bool ok = false;
    AnalysisRecord rec;
    std::string error;
};

LineOutcome analyze_one(const LineJob& job, int max_n) {
    LineOutcome out;
    try {
        const Graph g = parse_graph6(job.token);
        out.rec = analyze_graph(g, job.file + ":" + std::to_string(job.line), max_n);
        out.ok = true;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

// Bounded pool over the job list; slot i always receives job i's outcome,
// so the merge order never depends on scheduling.
void run_jobs(const std::vector<LineJob>& jobs, std::vector<LineOutcome>& out,
              const std::vector<std::size_t>& todo, int max_n, int jobs_opt) {
    if (todo.empty()) return;
    unsigned workers = jobs_opt > 0 ? static_cast<unsigned>(jobs_opt)
                                    : std::thread::hardware_concurrency();
    if (workers < 1) workers = 1;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(todo.size()));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= todo.size()) return;
            out[todo[i]] = analyze_one(jobs[todo[i]], max_n);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
}

int girth_class(const OddGirth& og) {
    return og.is_infinite() ? std::numeric_limits<int>::max() : og.value();
}

void rank_records(std::vector<AnalysisRecord> records, const ScanOptions& opt,
                  std::vector<LeaderboardEntry>& entries) {
    std::erase_if(records, [&](const AnalysisRecord& r) {
        return !r.odd_girth.at_least(opt.min_girth);
    });
    std::sort(records.begin(), records.end(),
              [](const AnalysisRecord& a, const AnalysisRecord& b) {
                  const int ga = girth_class(a.odd_girth), gb = girth_class(b.odd_girth);
                  if (ga != gb) return ga < gb;
                  if (a.ratio != b.ratio) return a.ratio > b.ratio;
                  return a.graph_id < b.graph_id;
              });
    int rank = 0, group = -1;
    for (auto& r : records) {
        const int g = girth_class(r.odd_girth);
        rank = g == group ? rank + 1 : 1;
        group = g;
        if (opt.top == 0 || rank <= opt.top) entries.push_back({rank, std::move(r)});
    }
}

}  // namespace

Graph best_ratio_component(const Graph& g) {
    const auto comps = connected_components(g);
    if (comps.size() <= 1) return g;
    Graph best_graph;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& comp : comps) {
        Graph sub = induced_subgraph(g, comp);
        const Spectrum spec = adjacency_spectrum(sub);
        const double ratio = (spec.lambda1() + spec.lambda_min()) / sub.vertex_count();
        if (ratio > best) {
            best = ratio;
            best_graph = std::move(sub);
        }
    }
    return best_graph;
}

AnalysisRecord analyze_graph(const Graph& g, std::string graph_id, int max_n) {
    const int n = g.vertex_count();
    if (n == 0) throw invalid_parameter("graph has no vertices");
    if (n > max_n)
        throw capacity_exceeded("graph has " + std::to_string(n) +
                                " vertices; dense analysis is capped at " +
                                std::to_string(max_n));

    AnalysisRecord r;
    r.graph_id = std::move(graph_id);

    const auto comps = connected_components(g);
    r.components = static_cast<int>(comps.size());
    r.disconnected = comps.size() > 1;
    const Graph h = r.disconnected ? best_ratio_component(g) : g;

    r.n = h.vertex_count();
    r.edge_count = h.edge_count();
    const Spectrum spec = adjacency_spectrum(h);
    r.lambda1 = spec.lambda1();
    r.lambdan = spec.lambda_min();
    r.ratio = (r.lambda1 + r.lambdan) / r.n;
    r.qn = signless_laplacian_spectrum(h).lambda_min();
    r.odd_girth = odd_girth(h);
    r.bound_for_girth =
        r.odd_girth.is_infinite() ? 0.0 : upper_bound_for_odd_girth(r.odd_girth.value());
    r.sound = r.ratio <= r.bound_for_girth + kSoundSlack;
    return r;
}

std::string record_to_json(const AnalysisRecord& r) { return record_to_ordered(r).dump(); }

AnalysisRecord record_from_json(const std::string& line) {
    try {
        const ordered_json j = ordered_json::parse(line);
        AnalysisRecord r;
        r.graph_id = j.at("graph_id").get<std::string>();
        r.n = j.at("n").get<int>();
        r.edge_count = j.at("edge_count").get<int>();
        const auto& og = j.at("odd_girth");
        r.odd_girth = og.is_string() ? OddGirth::infinite() : OddGirth::finite(og.get<int>());
        r.lambda1 = j.at("lambda1").get<double>();
        r.lambdan = j.at("lambdan").get<double>();
        r.ratio = j.at("ratio").get<double>();
        r.qn = j.at("qn").get<double>();
        r.bound_for_girth = j.at("bound_for_girth").get<double>();
        r.sound = j.at("sound").get<bool>();
        r.disconnected = j.at("disconnected").get<bool>();
        r.components = j.at("components").get<int>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad record: ") + e.what(), 0);
    }
}

std::string record_csv_header() {
    return "graph_id,n,edge_count,odd_girth,lambda1,lambdan,ratio,qn,bound_for_girth,"
           "sound,disconnected,components";
}

std::string record_to_csv(const AnalysisRecord& r) {
    std::string og =
        r.odd_girth.is_infinite() ? "Infinite" : std::to_string(r.odd_girth.value());
    std::string out = csv_escape(r.graph_id);
    out += ',' + std::to_string(r.n);
    out += ',' + std::to_string(r.edge_count);
    out += ',' + og;
    out += ',' + number_text(r.lambda1);
    out += ',' + number_text(r.lambdan);
    out += ',' + number_text(r.ratio);
    out += ',' + number_text(r.qn);
    out += ',' + number_text(r.bound_for_girth);
    out += r.sound ? ",true" : ",false";
    out += r.disconnected ? ",true" : ",false";
    out += ',' + std::to_string(r.components);
    return out;
}

std::string certificate_to_json(const Certificate& c) {
    ordered_json j;
    j["kind"] = c.kind;
    j["valid"] = c.valid;
    j["applicable"] = c.applicable;
    if (!c.reason.empty()) j["reason"] = c.reason;
    if (c.base_vertex >= 0) j["base_vertex"] = c.base_vertex;
    if (c.kind == "independent-set-weight") j["bipartition"] = c.bipartition;
    if (!c.class_sizes.empty()) j["class_sizes"] = c.class_sizes;
    if (!c.class_norms.empty()) j["class_norms"] = c.class_norms;
    if (c.kind == "girth7-distance-partition" && c.class_norms.size() >= 2) {
        j["delta"] = c.class_norms[0];
        j["alpha"] = c.class_norms[1];
    }
    if (!c.quotient.empty()) j["quotient"] = c.quotient;
    if (!c.quotient_spectrum.empty()) j["quotient_spectrum"] = c.quotient_spectrum;
    auto checks = ordered_json::array();
    for (const CheckItem& item : c.checks) {
        ordered_json cj;
        cj["name"] = item.name;
        cj["lhs"] = item.lhs;
        cj["rhs"] = item.rhs;
        cj["slack"] = item.slack;
        cj["ok"] = item.ok;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j.dump(2);
}

FileAnalysis analyze_graph6_text(const std::string& text, const std::string& file_label,
                                 int max_n, int jobs_opt) {
    std::vector<LineJob> jobs;
    for (auto& [line, token] : read_graph6_lines(text))
        jobs.push_back({file_label, line, std::move(token)});

    std::vector<LineOutcome> outcomes(jobs.size());
    std::vector<std::size_t> todo(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) todo[i] = i;
    run_jobs(jobs, outcomes, todo, max_n, jobs_opt);

    FileAnalysis result;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (outcomes[i].ok)
            result.records.push_back(std::move(outcomes[i].rec));
        else
            result.issues.push_back({jobs[i].file, jobs[i].line, outcomes[i].error});
    }
    return result;
}

ScanResult scan_corpus(const std::string& dir, const ScanOptions& opt) {
    std::vector<fs::path> files;
    try {
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".g6")
                files.push_back(entry.path());
    } catch (const fs::filesystem_error& e) {
        throw io_error(std::string("cannot scan directory: ") + e.what());
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    ScanResult result;
    std::vector<LineJob> jobs;
    for (const fs::path& f : files) {
        std::ifstream in(f, std::ios::binary);
        if (!in) {
            result.issues.push_back({f.filename().string(), 0, "unreadable file, skipped"});
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::string label = f.filename().string();
        for (auto& [line, token] : read_graph6_lines(buf.str()))
            jobs.push_back({label, line, std::move(token)});
    }

    // cache: graph6-token hash -> record JSON (graph_id stripped), dropped
    // wholesale when the tool version changes
    std::map<std::string, ordered_json> cache;
    bool cache_dirty = false;
    if (!opt.cache_path.empty()) {
        std::ifstream in(opt.cache_path, std::ios::binary);
        std::string line;
        while (in && std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                const ordered_json j = ordered_json::parse(line);
                if (j.at("version").get<std::string>() == ODDSPEC_VERSION)
                    cache[j.at("key").get<std::string>()] = j.at("record");
            } catch (const nlohmann::json::exception&) {
                // stale or foreign line: recompute rather than trust it
            }
        }
    }

    std::vector<LineOutcome> outcomes(jobs.size());
    std::vector<std::size_t> todo;
    std::vector<std::string> keys(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        keys[i] = hash_key(jobs[i].token);
        bool hit = false;
        if (!opt.cache_path.empty()) {
            const auto it = cache.find(keys[i]);
            if (it != cache.end()) {
                try {
                    AnalysisRecord rec = record_from_json(it->second.dump());
                    if (rec.n <= opt.max_n) {
                        rec.graph_id = jobs[i].file + ":" + std::to_string(jobs[i].line);
                        outcomes[i].ok = true;
                        outcomes[i].rec = std::move(rec);
                        hit = true;
                    }
                } catch (const parse_error&) {
                }
            }
        }
        if (!hit) todo.push_back(i);
    }
    run_jobs(jobs, outcomes, todo, opt.max_n, opt.jobs);

    std::vector<AnalysisRecord> records;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (!outcomes[i].ok) {
            result.issues.push_back({jobs[i].file, jobs[i].line, outcomes[i].error});
            continue;
        }
        if (!opt.cache_path.empty() && !cache.contains(keys[i])) {
            AnalysisRecord stripped = outcomes[i].rec;
            stripped.graph_id.clear();
            cache[keys[i]] = record_to_ordered(stripped);
            cache_dirty = true;
        }
        records.push_back(std::move(outcomes[i].rec));
    }

    if (cache_dirty) {
        std::string blob;
        for (const auto& [key, rec] : cache) {
            ordered_json j;
            j["key"] = key;
            j["version"] = ODDSPEC_VERSION;
            j["record"] = rec;
            blob += j.dump();
            blob += '\n';
        }
        try {
            write_atomically(opt.cache_path, blob);
        } catch (const io_error& e) {
            result.issues.push_back({opt.cache_path, 0, e.what()});
        }
    }

    rank_records(std::move(records), opt, result.entries);
    return result;
}

std::string leaderboard_to_json(const ScanResult& r) {
    std::string out;
    for (const LeaderboardEntry& e : r.entries) {
        ordered_json j;
        j["rank"] = e.rank;
        const ordered_json rec = record_to_ordered(e.record);
        for (const auto& [key, value] : rec.items()) j[key] = value;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string leaderboard_to_csv(const ScanResult& r) {
    std::string out = "rank," + record_csv_header() + "\n";
    for (const LeaderboardEntry& e : r.entries)
        out += std::to_string(e.rank) + "," + record_to_csv(e.record) + "\n";
    return out;
}

void write_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot open " + tmp + " for writing");
        out << content;
        out.flush();
        if (!out) throw io_error("short write to " + tmp);
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw io_error("cannot rename " + tmp + " to " + path + ": " + ec.message());
}

}  // namespace oddspec
