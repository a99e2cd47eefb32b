#pragma once

#include <string>
#include <vector>

#include "oddspec/graph.hpp"
#include "oddspec/interlacing.hpp"

namespace oddspec {

inline constexpr int kDefaultMaxN = 4096;

// Everything the harness records about one graph. For disconnected input the
// numeric fields describe the connected component maximizing the ratio (ties
// to the one containing the smallest vertex) and `disconnected` is raised;
// `components` counts the whole input either way.
struct AnalysisRecord {
    std::string graph_id;
    int n = 0;
    int edge_count = 0;
    OddGirth odd_girth = OddGirth::infinite();
    double lambda1 = 0.0;
    double lambdan = 0.0;
    double ratio = 0.0;            // (lambda1 + lambdan) / n
    double qn = 0.0;               // least signless-Laplacian eigenvalue
    double bound_for_girth = 0.0;  // 0 when the odd girth is infinite
    bool sound = false;            // ratio <= bound_for_girth + 1e-9
    bool disconnected = false;
    int components = 1;

    bool operator==(const AnalysisRecord&) const = default;
};

AnalysisRecord analyze_graph(const Graph& g, std::string graph_id, int max_n = kDefaultMaxN);

// The connected component maximizing (lambda1 + lambdan)/|C|, reindexed as
// its own graph (ties to the component holding the smallest vertex);
// returns g unchanged when it is connected.
Graph best_ratio_component(const Graph& g);

// One line of minified JSON (no trailing newline); parse inverts it exactly.
std::string record_to_json(const AnalysisRecord& r);
AnalysisRecord record_from_json(const std::string& line);

std::string record_csv_header();
std::string record_to_csv(const AnalysisRecord& r);

// Multi-line indented JSON rendering of a certificate.
std::string certificate_to_json(const Certificate& c);

struct LeaderboardEntry {
    int rank = 0;  // 1-based within the record's odd-girth class
    AnalysisRecord record;
};

// A skipped file (line = 0) or a failed line, with the reason.
struct ScanIssue {
    std::string file;
    int line = 0;
    std::string message;
};

struct ScanOptions {
    int min_girth = 3;
    int top = 0;  // per odd-girth class; 0 keeps everything
    int max_n = kDefaultMaxN;
    int jobs = 0;  // worker threads; 0 = hardware concurrency
    std::string cache_path;  // empty disables the cache
};

struct FileAnalysis {
    std::vector<AnalysisRecord> records;  // input order
    std::vector<ScanIssue> issues;
};

// Per-line analysis of graph6 text: lines fail in isolation, successes keep
// their input order, graph_id = "<file_label>:<line>".
FileAnalysis analyze_graph6_text(const std::string& text, const std::string& file_label,
                                 int max_n = kDefaultMaxN, int jobs = 0);

// Scans every *.g6 file directly under dir and ranks the surviving records
// inside each odd-girth class (finite classes ascending, then bipartite):
// ratio descending, graph_id ascending, top-N cut per class. Deterministic
// byte-for-byte for identical input. The optional cache maps a hash of each
// graph6 token to its record and is dropped on tool-version changes.
struct ScanResult {
    std::vector<LeaderboardEntry> entries;
    std::vector<ScanIssue> issues;
};
ScanResult scan_corpus(const std::string& dir, const ScanOptions& opt);

// JSON lines / CSV renderings of the leaderboard (rank column first).
std::string leaderboard_to_json(const ScanResult& r);
std::string leaderboard_to_csv(const ScanResult& r);

// Write-to-temp-then-rename so readers never observe a partial file.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace oddspec
