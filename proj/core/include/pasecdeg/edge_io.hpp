// Tab-separated edge-list files.
//
//   # pa-secdeg v1 n=<vertex count>
//   u<TAB>v        one line per edge
//
// A history file is the special case where line t has u == t and v <= t;
// those files round-trip losslessly with AttachmentHistory.
#pragma once

#include "pasecdeg/multigraph.hpp"

#include <iosfwd>
#include <string>

namespace pasecdeg {

inline constexpr const char* kFormatVersion = "pa-secdeg v1";

void write_edge_list(const AttachmentHistory& history, std::ostream& out);
void write_edge_list(const MultiGraph& graph, std::ostream& out);

// Strict history parse: requires u == line number and v <= u.
AttachmentHistory read_history(std::istream& in);

// General multigraph parse (any edges over [1, n]).
MultiGraph read_multigraph(std::istream& in);

void write_edge_list_file(const AttachmentHistory& history, const std::string& path);
void write_edge_list_file(const MultiGraph& graph, const std::string& path);
AttachmentHistory read_history_file(const std::string& path);
MultiGraph read_multigraph_file(const std::string& path);

} // namespace pasecdeg
