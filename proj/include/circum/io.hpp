#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "circum/errors.hpp"
#include "circum/graph.hpp"

namespace circum {

// graph6: a size header N(n) followed by the upper triangle of the adjacency matrix,
// column by column, packed six bits per byte with 63 added to each byte.

namespace detail {

inline constexpr char kGraph6Header[] = ">>graph6<<";

inline std::size_t graph6_body_bytes(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    return (bits + 5) / 6;
}

} // namespace detail

inline Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, sizeof(detail::kGraph6Header) - 1) == detail::kGraph6Header) {
        base = sizeof(detail::kGraph6Header) - 1;
        text.remove_prefix(base);
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 input", base);

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw ParseError("graph6 input truncated", base + i);
        const int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", base + i);
        return c - 63;
    };

    std::size_t pos = 0;
    long long n = byte_at(0);
    pos = 1;
    if (n == 63) {
        if (byte_at(1) == 63) {
            // 8-byte form: 126 126 then 36 bits.
            n = 0;
            for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte_at(i);
            pos = 8;
        } else {
            n = 0;
            for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | byte_at(i);
            pos = 4;
        }
    }
    if (n > kMaxVertices)
        throw CapacityError("graph6 order " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxVertices));

    const int order = static_cast<int>(n);
    const std::size_t body = detail::graph6_body_bytes(order);
    if (text.size() > pos + body) throw ParseError("trailing bytes after graph6 body", base + pos + body);

    std::vector<VertexSet> rows(order);
    std::size_t bit = 0;
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const int chunk = byte_at(pos + bit / 6);
            if ((chunk >> (5 - bit % 6)) & 1) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    if (bit % 6 != 0) {
        const int last = byte_at(pos + bit / 6);
        if (last & ((1 << (6 - bit % 6)) - 1))
            throw ParseError("nonzero graph6 padding bits", base + pos + bit / 6);
    }
    return Graph::from_adjacency(order, rows);
}

inline std::string serialize_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

// Edge list: one "u v" pair per line, 0-based, '#' starts a comment. The order is
// one more than the largest id unless a "# order: N" comment raises it.

inline Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    int order = 0;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        std::size_t content_end = line.find('#');
        if (content_end != std::string_view::npos) {
            std::string_view comment = line.substr(content_end + 1);
            std::size_t k = comment.find("order:");
            if (k != std::string_view::npos) {
                std::string_view num = comment.substr(k + 6);
                while (!num.empty() && num.front() == ' ') num.remove_prefix(1);
                int declared = 0;
                auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), declared);
                if (ec != std::errc{} || declared < 0)
                    throw ParseError("bad order directive", line_start + content_end);
                order = std::max(order, declared);
            }
            line = line.substr(0, content_end);
        }

        int fields[2];
        int found = 0;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',') {
                ++i;
                continue;
            }
            if (found == 2) throw ParseError("more than two fields on edge line", line_start + i);
            int value = 0;
            auto [p, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
            if (ec != std::errc{} || value < 0)
                throw ParseError("expected a vertex id", line_start + i);
            fields[found++] = value;
            i = static_cast<std::size_t>(p - line.data());
        }
        if (found == 1) throw ParseError("edge line has a single vertex", line_start);
        if (found == 2) {
            if (fields[0] == fields[1]) throw ParseError("self-loop in edge list", line_start);
            if (fields[0] >= kMaxVertices || fields[1] >= kMaxVertices)
                throw CapacityError("vertex id exceeds " + std::to_string(kMaxVertices - 1));
            edges.emplace_back(fields[0], fields[1]);
            order = std::max({order, fields[0] + 1, fields[1] + 1});
        }
        line_start = line_end + 1;
    }
    return Graph(order, edges);
}

inline std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# order: " << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

enum class GraphFormat { graph6, edge_list };

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline GraphFormat guess_format(const std::string& path) {
    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() &&
               path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    return ends_with(".g6") || ends_with(".graph6") ? GraphFormat::graph6 : GraphFormat::edge_list;
}

/// A graph6 file holds one graph per non-empty line; an edge-list file holds one graph.
inline std::vector<Graph> read_graphs(const std::string& path, GraphFormat format) {
    const std::string text = read_text_file(path);
    if (format == GraphFormat::edge_list) return {parse_edge_list(text)};
    std::vector<Graph> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

} // namespace circum
