#include "biasham/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "biasham/error.hpp"

namespace biasham {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next non-blank line split into integer fields; empty at end of input.
  std::vector<std::int64_t> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') {
        throw ParseError(line_no_, "CR line endings are not accepted");
      }
      std::vector<std::int64_t> fields;
      std::string_view rest(line);
      while (!rest.empty()) {
        const auto start = rest.find_first_not_of(" \t");
        if (start == std::string_view::npos) break;
        rest.remove_prefix(start);
        const auto stop = std::min(rest.find_first_of(" \t"), rest.size());
        std::string_view token = rest.substr(0, stop);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
          throw ParseError(line_no_, "not an integer: '" + std::string(token) + "'");
        }
        fields.push_back(value);
        rest.remove_prefix(stop);
      }
      if (!fields.empty()) return fields;
    }
    return {};
  }

  std::int64_t line() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  std::int64_t line_no_ = 0;
};

struct Parsed {
  int n = 0;
  int r = 0;
  std::vector<Edge> edges;
  std::vector<Colour> colours;
};

Parsed parse(std::istream& in, bool coloured) {
  LineReader reader(in);
  const std::size_t header_width = coloured ? 3 : 2;
  auto header = reader.next();
  if (header.size() != header_width) {
    throw ParseError(reader.line(), coloured ? "expected header 'n e r'" : "expected header 'n e'");
  }
  Parsed p;
  if (header[0] < 0 || header[0] > (1 << 24)) throw ParseError(reader.line(), "bad vertex count");
  p.n = static_cast<int>(header[0]);
  const std::int64_t max_edges = static_cast<std::int64_t>(p.n) * (p.n - 1) / 2;
  if (header[1] < 0 || header[1] > max_edges) throw ParseError(reader.line(), "bad edge count");
  if (coloured) {
    if (header[2] < 2 || header[2] > 1'000'000) throw ParseError(reader.line(), "bad colour count");
    p.r = static_cast<int>(header[2]);
  }
  GraphBuilder seen(p.n);
  for (std::int64_t i = 0; i < header[1]; ++i) {
    auto fields = reader.next();
    if (fields.empty()) throw ParseError(reader.line() + 1, "missing edge lines");
    if (fields.size() != header_width) {
      throw ParseError(reader.line(), coloured ? "expected 'u v c'" : "expected 'u v'");
    }
    const std::int64_t u = fields[0];
    const std::int64_t v = fields[1];
    if (u < 0 || v < 0 || u >= p.n || v >= p.n) throw ParseError(reader.line(), "vertex out of range");
    if (u == v) throw ParseError(reader.line(), "self-loop");
    if (!seen.add(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw ParseError(reader.line(), "duplicate edge");
    }
    p.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    if (coloured) {
      if (fields[2] < 1 || fields[2] > p.r) throw ParseError(reader.line(), "colour out of range");
      p.colours.push_back(static_cast<Colour>(fields[2]));
    }
  }
  if (!reader.next().empty()) throw ParseError(reader.line(), "trailing data after edge list");
  return p;
}

}  // namespace

Graph read_graph(std::istream& in) {
  Parsed p = parse(in, false);
  return Graph(p.n, p.edges);
}

EdgeColouring read_coloured_graph(std::istream& in) {
  Parsed p = parse(in, true);
  auto g = std::make_shared<const Graph>(p.n, p.edges);
  std::vector<Colour> table(p.edges.size());
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    table[g->require_edge(p.edges[i].u, p.edges[i].v)] = p.colours[i];
  }
  return EdgeColouring(std::move(g), p.r, std::move(table));
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_coloured_graph(std::ostream& out, const EdgeColouring& chi) {
  const Graph& g = chi.graph();
  out << g.n() << ' ' << g.edge_count() << ' ' << chi.r() << '\n';
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << edges[i].u << ' ' << edges[i].v << ' ' << chi.colour_of(i) << '\n';
  }
}

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  return out;
}

}  // namespace

Graph load_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_graph(in);
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  auto out = open_out(path);
  write_graph(out, g);
}

EdgeColouring load_coloured_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_coloured_graph(in);
}

void save_coloured_graph(const std::filesystem::path& path, const EdgeColouring& chi) {
  auto out = open_out(path);
  write_coloured_graph(out, chi);
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

std::string to_text(const EdgeColouring& chi) {
  std::ostringstream out;
  write_coloured_graph(out, chi);
  return out.str();
}

}  // namespace biasham
