#include "pxkit/graph6.hpp"
#include "pxkit/errors.hpp"

#include <istream>
#include <string>

namespace pxkit {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

} // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader)
        base = kHeader.size();
    std::string_view body = text.substr(base);
    if (body.empty())
        throw ParseError("empty graph6 record", base);

    std::size_t pos = 0;
    unsigned char c0 = static_cast<unsigned char>(body[pos]);
    if (c0 == 126)
        throw ParseError("long-form graph6 (n > 62) is not supported", base + pos);
    if (c0 < 63 || c0 > 126)
        throw ParseError("invalid graph6 byte", base + pos);
    int n = c0 - 63;
    ++pos;

    int bits_needed = n * (n - 1) / 2;
    int bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<std::size_t>(bytes_needed) != body.size() - pos) {
        if (body.size() - pos < static_cast<std::size_t>(bytes_needed))
            throw ParseError("graph6 record truncated: expected " + std::to_string(bytes_needed) +
                                 " data bytes, got " + std::to_string(body.size() - pos),
                             base + body.size());
        throw ParseError("trailing bytes after graph6 record", base + pos + bytes_needed);
    }

    std::vector<std::pair<int, int>> edges;
    int bit_index = 0;
    // Bits run over the upper triangle column by column: (0,1),(0,2),(1,2),(0,3),...
    int col = 1, row = 0;
    for (int i = 0; i < bytes_needed; ++i) {
        unsigned char c = static_cast<unsigned char>(body[pos + i]);
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 byte", base + pos + i);
        int val = c - 63;
        for (int b = 5; b >= 0; --b) {
            int bit = (val >> b) & 1;
            if (bit_index < bits_needed) {
                if (bit)
                    edges.emplace_back(row, col);
                if (++row == col) {
                    row = 0;
                    ++col;
                }
            } else if (bit) {
                throw ParseError("nonzero padding bits in graph6 record", base + pos + i);
            }
            ++bit_index;
        }
    }
    return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62)
        throw CapError("encode_graph6 supports at most 62 vertices, got " + std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bits_needed = n * (n - 1) / 2;
    int acc = 0, acc_bits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++acc_bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                acc_bits = 0;
            }
        }
    }
    if (bits_needed % 6 != 0) {
        acc <<= 6 - acc_bits;
        out.push_back(static_cast<char>(acc + 63));
    }
    return out;
}

std::vector<Graph6Record> read_graph6_records(std::istream& in) {
    std::vector<Graph6Record> records;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::size_t a = line.find_first_not_of(" \t");
        if (a == std::string::npos)
            continue;
        std::size_t b = line.find_last_not_of(" \t");
        std::string trimmed = line.substr(a, b - a + 1);
        if (trimmed[0] == '#')
            continue;
        records.push_back({lineno, std::move(trimmed)});
    }
    return records;
}

} // namespace pxkit
