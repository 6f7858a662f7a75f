#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "biasham/colouring.hpp"
#include "biasham/graph.hpp"

namespace biasham {

// Graph text format: a header line "n e" followed by e lines "u v".
// Coloured format: header "n e r" followed by e lines "u v c".
// Vertices are 0-based, colours 1-based, fields whitespace-separated and
// lines LF-terminated. Writers emit edges in canonical sorted order with
// u < v. Readers throw ParseError carrying the 1-based line number.

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

EdgeColouring read_coloured_graph(std::istream& in);
void write_coloured_graph(std::ostream& out, const EdgeColouring& chi);

Graph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g);
EdgeColouring load_coloured_graph(const std::filesystem::path& path);
void save_coloured_graph(const std::filesystem::path& path, const EdgeColouring& chi);

std::string to_text(const Graph& g);
std::string to_text(const EdgeColouring& chi);

}  // namespace biasham
