#include "oddspec/graph6.hpp"

#include <cstdint>
#include <sstream>

#include "oddspec/errors.hpp"

namespace oddspec {

namespace {

constexpr int kBias = 63;           // printable offset
constexpr int kByteMax = 126;       // highest legal byte
constexpr char kHeader[] = ">>graph6<<";

int value_at(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw parse_error("truncated graph6 string", pos);
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > kByteMax)
        throw parse_error("graph6 byte out of range 63..126", pos);
    return c - kBias;
}

// Decodes N(n); advances pos past it.
std::uint64_t decode_order(std::string_view text, std::size_t& pos) {
    int v = value_at(text, pos);
    if (v < 63) {  // single byte, n <= 62
        ++pos;
        return static_cast<std::uint64_t>(v);
    }
    ++pos;
    int groups = 3;
    if (value_at(text, pos) == 63) {  // second 126: 36-bit form
        ++pos;
        groups = 6;
    }
    std::uint64_t n = 0;
    for (int i = 0; i < groups; ++i) {
        n = (n << 6) | static_cast<std::uint64_t>(value_at(text, pos));
        ++pos;
    }
    return n;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, sizeof(kHeader) - 1) == kHeader) pos = sizeof(kHeader) - 1;
    if (pos >= text.size()) throw parse_error("empty graph6 string", pos);

    const std::uint64_t n64 = decode_order(text, pos);
    if (n64 > (1ull << 32)) throw parse_error("vertex count too large", 0);
    const std::uint64_t nbits = n64 * (n64 - (n64 > 0 ? 1 : 0)) / 2;
    const std::size_t needed = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - pos < needed) throw parse_error("truncated graph6 string", text.size());
    if (text.size() - pos > needed) throw parse_error("trailing data after graph6 payload", pos + needed);

    const int n = static_cast<int>(n64);
    Graph g(n);
    std::size_t bit = 0;
    int current = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0) {
                current = value_at(text, pos);
                ++pos;
            }
            if (current & (1 << (5 - static_cast<int>(bit % 6)))) g.add_edge(i, j);
        }
    return g;
}

std::string write_graph6(const Graph& g) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
    int current = 0;
    int filled = 0;
    for (int j = 1; j < static_cast<int>(n); ++j)
        for (int i = 0; i < j; ++i) {
            current = (current << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(current + kBias));
                current = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((current << (6 - filled)) + kBias));
    return out;
}

std::vector<std::pair<int, std::string>> read_graph6_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(kHeader, 0) == 0) line.erase(0, sizeof(kHeader) - 1);
        if (line.empty()) continue;
        out.emplace_back(line_no, line);
    }
    return out;
}

}  // namespace oddspec
