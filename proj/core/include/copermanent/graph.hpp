#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace copermanent {

/// Simple undirected graph with one 64-bit adjacency word per vertex.
///
/// Bit j of row i is set iff {i, j} is an edge. Rows are symmetric, the
/// diagonal is zero and bits at positions >= order() are clear. Every
/// constructor validates this, so a Graph value is always well formed.
class Graph {
 public:
  /// graph6 short form caps the order at 62.
  static constexpr int kMaxOrder = 62;

  /// The graph on zero vertices.
  Graph() = default;

  /// Edgeless graph on `order` vertices.
  explicit Graph(int order);

  /// Throws Error(InvalidAdjacency) if the rows break symmetry, carry a
  /// loop or set bits beyond the order; Error(OrderTooLarge) past kMaxOrder.
  static Graph from_rows(std::vector<std::uint64_t> rows);

  static Graph from_edges(int order, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int order, std::initializer_list<std::pair<int, int>> edges);

  static Graph complete(int order);
  static Graph cycle(int order);
  static Graph path(int order);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  std::uint64_t row(int i) const noexcept { return rows_[static_cast<std::size_t>(i)]; }
  std::span<const std::uint64_t> rows() const noexcept { return rows_; }

  bool has_edge(int i, int j) const noexcept { return (row(i) >> j) & 1U; }
  int degree(int i) const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> rows_;
};

/// Mask with the low `order` bits set.
constexpr std::uint64_t vertex_mask(int order) noexcept {
  return order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
}

/// Decodes one graph6 record. Accepts an optional ">>graph6<<" prefix and a
/// trailing "\n" or "\r\n". Long-form headers (order > 62) are rejected.
Graph from_graph6(std::string_view text);

/// Short-form graph6 without header or newline.
std::string to_graph6(const Graph& g);

Graph complement(const Graph& g);

int edge_count(const Graph& g) noexcept;

/// Returns h with h.has_edge(perm[i], perm[j]) == g.has_edge(i, j).
/// `perm` must be a permutation of 0..order-1.
Graph relabel(const Graph& g, std::span<const int> perm);

}  // namespace copermanent
