#include "earpack/graph_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace earpack {

FormatError::FormatError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr long long kGraph6MaxOrder = 68719476735LL;

class Graph6Reader {
 public:
  explicit Graph6Reader(std::string_view text) : text_(text) {}

  Graph read() {
    if (text_.substr(0, kGraph6Header.size()) == kGraph6Header) {
      pos_ = kGraph6Header.size();
    }
    // A single trailing newline is tolerated.
    std::size_t end = text_.size();
    if (end > pos_ && text_[end - 1] == '\n') --end;
    if (end > pos_ && text_[end - 1] == '\r') --end;
    end_ = end;

    long long n = read_order();
    if (n > 100'000) throw FormatError("graph6 order too large", 0);
    const int order = static_cast<int>(n);
    const long long bits = n * (n - 1) / 2;
    const long long groups = (bits + 5) / 6;
    if (static_cast<long long>(end_ - pos_) != groups) {
      throw FormatError("graph6 body has " + std::to_string(end_ - pos_) +
                            " bytes, expected " + std::to_string(groups),
                        std::min(end_, pos_ + static_cast<std::size_t>(groups)));
    }
    std::vector<Edge> edges;
    long long k = 0;
    for (int j = 1; j < order; ++j) {
      for (int i = 0; i < j; ++i, ++k) {
        if (bit(k)) edges.push_back({i, j});
      }
    }
    for (; k < groups * 6; ++k) {
      if (bit(k)) {
        throw FormatError("nonzero graph6 padding bit",
                          pos_ + static_cast<std::size_t>(k / 6));
      }
    }
    return Graph(order, edges);
  }

 private:
  int sixbits(std::size_t at) const {
    if (at >= end_) throw FormatError("truncated graph6 data", at);
    unsigned char c = static_cast<unsigned char>(text_[at]);
    if (c < 63 || c > 126) {
      throw FormatError("byte outside graph6 range 63..126", at);
    }
    return c - 63;
  }

  long long read_order() {
    int first = sixbits(pos_);
    if (first < 63) {
      pos_ += 1;
      return first;
    }
    int second = sixbits(pos_ + 1);
    if (second < 63) {
      long long n = 0;
      for (int i = 1; i <= 3; ++i) n = (n << 6) | sixbits(pos_ + i);
      if (n < 63) throw FormatError("non-minimal graph6 order header", pos_);
      pos_ += 4;
      return n;
    }
    long long n = 0;
    for (int i = 2; i <= 7; ++i) n = (n << 6) | sixbits(pos_ + i);
    if (n < 258048 || n > kGraph6MaxOrder) {
      throw FormatError("non-minimal graph6 order header", pos_);
    }
    pos_ += 8;
    return n;
  }

  bool bit(long long k) const {
    int group = sixbits(pos_ + static_cast<std::size_t>(k / 6));
    return (group >> (5 - k % 6)) & 1;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
};

std::string write_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Parses a non-negative integer token starting at `pos`, advancing past it.
long long read_index(std::string_view line, std::size_t& pos,
                     std::size_t line_offset) {
  while (pos < line.size() && is_space(line[pos])) ++pos;
  if (pos >= line.size()) {
    throw FormatError("expected a vertex index", line_offset + pos);
  }
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(line.data() + pos, line.data() + line.size(), value);
  if (ec != std::errc() || value < 0) {
    throw FormatError("invalid vertex index", line_offset + pos);
  }
  if (value > 10'000'000) {
    throw FormatError("vertex index out of range", line_offset + pos);
  }
  pos = static_cast<std::size_t>(ptr - line.data());
  if (pos < line.size() && !is_space(line[pos])) {
    throw FormatError("invalid vertex index", line_offset + pos);
  }
  return value;
}

Graph read_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_offsets;
  std::optional<long long> declared;
  std::size_t declared_at = 0;
  long long max_index = -1;

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    std::size_t pos = 0;
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos < line.size() && line[pos] == '#') {
      std::istringstream comment{std::string(line.substr(pos + 1))};
      std::string key;
      long long value = 0;
      if (comment >> key && key == "vertices" && comment >> value) {
        if (value < 0) throw FormatError("negative vertex count", line_start);
        declared = value;
        declared_at = line_start;
      }
    } else if (pos < line.size()) {
      long long a = read_index(line, pos, line_start);
      long long b = read_index(line, pos, line_start);
      while (pos < line.size() && is_space(line[pos])) ++pos;
      if (pos != line.size()) {
        throw FormatError("trailing characters after edge", line_start + pos);
      }
      if (a == b) throw FormatError("loop edge", line_start);
      edges.push_back(make_edge(static_cast<int>(a), static_cast<int>(b)));
      edge_offsets.push_back(line_start);
      max_index = std::max({max_index, a, b});
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }

  long long order = max_index + 1;
  if (declared) {
    if (*declared < order) {
      throw FormatError("vertex index exceeds declared vertex count",
                        declared_at);
    }
    order = *declared;
  }
  // Report the second occurrence of a repeated edge.
  std::vector<std::size_t> idx(edges.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return edges[x] < edges[y]; });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (edges[idx[i]] == edges[idx[i - 1]]) {
      throw FormatError("parallel edge",
                        edge_offsets[std::max(idx[i], idx[i - 1])]);
    }
  }
  return Graph(static_cast<int>(order), edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  EdgeSet edges = g.edges();
  int covered = 0;
  for (const Edge& e : edges) covered = std::max(covered, e.v + 1);
  if (covered != g.order()) {
    out += "# vertices " + std::to_string(g.order());
    if (!edges.empty()) out += "\n";
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) out += "\n";
    out += std::to_string(edges[i].u) + " " + std::to_string(edges[i].v);
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::kGraph6:
      return Graph6Reader(text).read();
    case GraphFormat::kEdgeList:
      return read_edge_list(text);
  }
  throw std::logic_error("unknown graph format");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::kGraph6:
      return write_graph6(g);
    case GraphFormat::kEdgeList:
      return write_edge_list(g);
  }
  throw std::logic_error("unknown graph format");
}

std::optional<GraphFormat> format_from_extension(std::string_view path) {
  auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  std::string_view ext = path.substr(dot + 1);
  if (ext == "g6" || ext == "graph6") return GraphFormat::kGraph6;
  if (ext.empty()) return std::nullopt;
  return GraphFormat::kEdgeList;
}

std::optional<GraphFormat> format_from_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  if (name == "edgelist") return GraphFormat::kEdgeList;
  return std::nullopt;
}

std::string_view format_name(GraphFormat format) {
  return format == GraphFormat::kGraph6 ? "graph6" : "edgelist";
}

Graph read_graph_file(const std::string& path,
                      std::optional<GraphFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  GraphFormat fmt =
      format.value_or(format_from_extension(path).value_or(GraphFormat::kEdgeList));
  return parse_graph(buffer.str(), fmt);
}

void write_graph_file(const std::string& path, const Graph& g,
                      GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_graph(g, format) << "\n";
}

}  // namespace earpack
