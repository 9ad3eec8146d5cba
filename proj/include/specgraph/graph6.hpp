#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Malformed graph6 input. byte_offset() is the 0-based position of the
/// offending byte within the word.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    size_t byte_offset() const { return byte_offset_; }

private:
    size_t byte_offset_;
};

namespace detail {

inline int g6_value(std::string_view word, size_t pos) {
    unsigned char b = static_cast<unsigned char>(word[pos]);
    if (b < 63 || b > 126) throw Graph6Error("byte outside graph6 range 63..126", pos);
    return b - 63;
}

} // namespace detail

/// Strips an optional ">>graph6<<" header from the front of a line.
inline std::string_view strip_graph6_header(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    return line;
}

/// Decodes one graph6 word. Accepts the 1-byte order form (n <= 62) and the
/// 4-byte '~'-prefixed form; orders beyond 4096 are rejected as a capacity
/// guard. The whole word must be consumed and padding bits must be zero.
inline Graph parse_graph6(std::string_view word) {
    word = strip_graph6_header(word); // offsets below refer to the stripped word
    if (word.empty()) throw Graph6Error("empty graph6 word", 0);

    size_t pos = 0;
    long long n;
    int first = detail::g6_value(word, 0);
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        if (word.size() < 2) throw Graph6Error("truncated order prefix", word.size());
        if (static_cast<unsigned char>(word[1]) == 126)
            throw Graph6Error("graph order exceeds supported bound (4096)", 1);
        if (word.size() < 4) throw Graph6Error("truncated order prefix", word.size());
        n = (static_cast<long long>(detail::g6_value(word, 1)) << 12) |
            (static_cast<long long>(detail::g6_value(word, 2)) << 6) |
            static_cast<long long>(detail::g6_value(word, 3));
        if (n > 4096) throw Graph6Error("graph order exceeds supported bound (4096)", 1);
        pos = 4;
    }

    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (word.size() < pos + nbytes) throw Graph6Error("truncated adjacency bits", word.size());
    if (word.size() > pos + nbytes) throw Graph6Error("unexpected trailing bytes", pos + nbytes);

    std::vector<std::pair<int, int>> es;
    size_t k = 0; // bit cursor over the column-major upper triangle
    int i = 0, j = 1;
    for (size_t byte = 0; byte < nbytes; ++byte) {
        int val = detail::g6_value(word, pos + byte);
        for (int bit = 5; bit >= 0; --bit, ++k) {
            bool set = (val >> bit) & 1;
            if (k < nbits) {
                if (set) es.emplace_back(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (set) {
                throw Graph6Error("nonzero padding bits", pos + byte);
            }
        }
    }
    return Graph::from_edges(static_cast<int>(n), es);
}

/// Encodes to graph6, using the shortest order prefix.
inline std::string encode_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

} // namespace specgraph
