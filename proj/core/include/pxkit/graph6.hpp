#pragma once

#include "pxkit/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pxkit {

// Decode one graph6 record (short form, n <= 62). An optional ">>graph6<<"
// header prefix is accepted and skipped. Throws ParseError with the byte
// offset of the first offending character.
Graph parse_graph6(std::string_view text);

// Encode to short-form graph6. Requires n <= 62.
std::string encode_graph6(const Graph& g);

struct Graph6Record {
    int line = 0;        // 1-based line number in the source
    std::string text;    // the raw record, trimmed
};

// Split a stream into graph6 records, one per line. Blank lines and lines
// starting with '#' are skipped. No decoding happens here.
std::vector<Graph6Record> read_graph6_records(std::istream& in);

} // namespace pxkit
