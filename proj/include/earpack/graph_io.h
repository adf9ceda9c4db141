#ifndef EARPACK_GRAPH_IO_H_
#define EARPACK_GRAPH_IO_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "earpack/graph.h"

namespace earpack {

enum class GraphFormat { kGraph6, kEdgeList };

// Malformed input. `offset` is the byte position the parser stopped at.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// graph6: the standard 6-bit encoding with N(n) header; an optional
/// ">>graph6<<" prefix and a trailing newline are accepted.
///
/// edgelist: one edge per line as two whitespace-separated 0-based indices,
/// '#' starts a comment line. A comment of the form "# vertices N" fixes the
/// vertex count, otherwise it is one more than the largest index seen.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Canonical encoding. graph6 output carries no header and no newline.
/// Edge lists are sorted lexicographically, newline separated, without a
/// trailing newline; a "# vertices N" line is prepended only when isolated
/// high-index vertices would otherwise be lost.
std::string serialize_graph(const Graph& g, GraphFormat format);

// Picks a format from a file extension (".g6" or ".graph6" vs. anything
// else), nullopt for an empty extension.
std::optional<GraphFormat> format_from_extension(std::string_view path);
std::optional<GraphFormat> format_from_name(std::string_view name);
std::string_view format_name(GraphFormat format);

Graph read_graph_file(const std::string& path,
                      std::optional<GraphFormat> format = std::nullopt);
void write_graph_file(const std::string& path, const Graph& g,
                      GraphFormat format);

}  // namespace earpack

#endif  // EARPACK_GRAPH_IO_H_
