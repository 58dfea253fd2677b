#include "rademacher/graph6.hpp"

#include <cstdint>

namespace rademacher {
namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_order(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else if (n <= 68719476735ULL) {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        throw Graph6Error("graph too large for graph6");
    }
}

int sextet(char c) {
    const int v = static_cast<unsigned char>(c) - kBias;
    if (v < 0 || v > 63) throw Graph6Error(std::string("invalid graph6 character '") + c + "'");
    return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    append_order(out, n);
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("empty graph6 string");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (text[0] != '~') {
        n = static_cast<std::uint64_t>(sextet(text[0]));
        pos = 1;
    } else {
        const bool big = text.size() > 1 && text[1] == '~';
        const std::size_t digits = big ? 6 : 3;
        pos = big ? 2 : 1;
        if (text.size() < pos + digits) throw Graph6Error("truncated graph6 order field");
        for (std::size_t i = 0; i < digits; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[pos + i]));
        pos += digits;
        // Reject non-minimal order encodings so the round trip stays bit-exact.
        if ((!big && n <= 62) || (big && n <= 258047)) throw Graph6Error("non-canonical graph6 order field");
    }

    const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t body = (pairs + 5) / 6;
    if (text.size() - pos != body) {
        throw Graph6Error("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                          std::to_string(body));
    }

    Graph g(static_cast<std::size_t>(n));
    std::uint64_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            const int v = sextet(text[pos + bit / 6]);
            if ((v >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (bit % 6 != 0) {
        const int last = sextet(text[pos + bit / 6]);
        if ((last & ((1 << (6 - bit % 6)) - 1)) != 0) throw Graph6Error("nonzero graph6 padding bits");
    }
    return g;
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (!line.empty()) out.push_back(from_graph6(line));
    }
    return out;
}

}  // namespace rademacher
