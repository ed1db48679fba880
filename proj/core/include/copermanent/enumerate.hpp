#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "copermanent/graph.hpp"

namespace copermanent {

/// Largest order canonical_form will search.
inline constexpr int kMaxCanonicalOrder = 10;

/// Largest order generate_all accepts. Orders above 8 are supported but not
/// part of the regular test surface.
inline constexpr int kMaxGenerateOrder = 9;

struct CanonicalGraph {
  Graph graph;               // relabelled so that to_graph6(graph) == canonical_g6
  std::string canonical_g6;

  friend bool operator==(const CanonicalGraph&, const CanonicalGraph&) = default;
};

/// Minimal graph6 encoding over all relabelings that list vertices in
/// ascending degree order. Equal for two graphs iff they are isomorphic.
/// Throws Error(OrderTooLarge) above kMaxCanonicalOrder.
CanonicalGraph canonical_form(const Graph& g);

/// The packed upper triangle of the canonical relabeling, column-major and
/// most significant bit first. For a fixed order it orders exactly like
/// canonical_g6.
std::uint64_t canonical_key(const Graph& g);

/// One representative per isomorphism class on n vertices, in canonical form,
/// sorted by ascending canonical graph6. Built level by level: every class on
/// n-1 vertices is extended by a new vertex with each possible neighbourhood.
std::vector<Graph> generate_all(int n);

/// Lazily decodes one graph6 record per line. Blank lines are skipped.
class Graph6Reader {
 public:
  enum class OnError { FailFast, Skip };

  explicit Graph6Reader(std::istream& in, OnError policy = OnError::FailFast)
      : in_(&in), policy_(policy) {}

  /// Next graph, or nullopt at end of input. In FailFast mode a bad record
  /// throws LineError naming the line; in Skip mode it is counted and dropped.
  std::optional<Graph> next();

  /// graph6 text of the record most recently returned by next().
  const std::string& last_record() const noexcept { return record_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t skipped() const noexcept { return skipped_; }

 private:
  std::istream* in_;
  OnError policy_;
  std::string record_;
  std::size_t line_ = 0;
  std::size_t skipped_ = 0;
};

/// Convenience: reads a whole stream.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace copermanent
