#include <fstream>

#include "flagbetti/error.hpp"
#include "flagbetti/graph.hpp"

namespace flagbetti {

namespace {

constexpr int kBias = 63;

int sextet(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw ParseError("unexpected end of graph6 word", pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("byte " + std::to_string(c) + " outside graph6 range 63..126", pos);
    return c - kBias;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 word", 0);
    std::size_t pos = 0;
    long long n = 0;
    if (text[0] == '~') {
        if (text.size() > 1 && text[1] == '~') {
            pos = 2;
            for (int i = 0; i < 6; ++i) n = (n << 6) | sextet(text, pos++);
            if (n <= 258047) throw ParseError("non-minimal 8-byte order header", 0);
        } else {
            pos = 1;
            for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(text, pos++);
            if (n <= 62) throw ParseError("non-minimal 4-byte order header", 0);
        }
    } else {
        n = sextet(text, pos++);
    }
    if (n > Graph::kMaxVertices)
        throw CapacityError("graph6 order " + std::to_string(n) + " exceeds " + std::to_string(Graph::kMaxVertices));

    Graph g(static_cast<int>(n));
    const long long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() < pos + body) throw ParseError("graph6 word too short for order " + std::to_string(n), text.size());

    long long k = 0;
    for (std::size_t b = 0; b < body; ++b) {
        const std::size_t at = pos + b;
        const int x = sextet(text, at);
        for (int bit = 5; bit >= 0; --bit, ++k) {
            const bool set = (x >> bit) & 1;
            if (k >= bits) {
                if (set) throw ParseError("nonzero padding bit", at);
                continue;
            }
            if (!set) continue;
            // column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
            int j = 1;
            long long base = 0;
            while (base + j <= k) base += j++;
            g.add_edge(static_cast<int>(k - base), j);
        }
    }
    if (text.size() != pos + body) throw ParseError("trailing garbage after graph6 word", pos + body);
    return g;
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    const int n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        out.push_back(parse_graph6(line));
    }
    return out;
}

} // namespace flagbetti
