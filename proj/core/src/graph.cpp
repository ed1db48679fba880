#include "copermanent/graph.hpp"

#include <bit>
#include <numeric>

#include "copermanent/error.hpp"

namespace copermanent {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;

void check_order(int order) {
  if (order < 0 || order > Graph::kMaxOrder) {
    throw Error(ErrorKind::OrderTooLarge,
                "graph order " + std::to_string(order) + " outside 0.." +
                    std::to_string(Graph::kMaxOrder));
  }
}

std::size_t payload_bytes(int order) {
  const auto bits = static_cast<std::size_t>(order) * static_cast<std::size_t>(order - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph::Graph(int order) {
  check_order(order);
  rows_.assign(static_cast<std::size_t>(order), 0);
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const std::uint64_t mask = vertex_mask(n);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t r = rows[static_cast<std::size_t>(i)];
    if ((r & ~mask) != 0) {
      throw Error(ErrorKind::InvalidAdjacency,
                  "row " + std::to_string(i) + " has bits beyond the order");
    }
    if ((r >> i) & 1U) {
      throw Error(ErrorKind::InvalidAdjacency, "loop at vertex " + std::to_string(i));
    }
    for (std::uint64_t rest = r; rest != 0; rest &= rest - 1) {
      const int j = std::countr_zero(rest);
      if (((rows[static_cast<std::size_t>(j)] >> i) & 1U) == 0) {
        throw Error(ErrorKind::InvalidAdjacency,
                    "asymmetric pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  Graph g;
  g.rows_ = std::move(rows);
  return g;
}

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
  check_order(order);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(order), 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order || u == v) {
      throw Error(ErrorKind::InvalidAdjacency,
                  "bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  return from_rows(std::move(rows));
}

Graph Graph::from_edges(int order, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(order, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::complete(int order) { return copermanent::complement(Graph(order)); }

Graph Graph::cycle(int order) {
  std::vector<std::pair<int, int>> edges;
  if (order >= 3) {
    for (int i = 0; i < order; ++i) edges.emplace_back(i, (i + 1) % order);
  } else if (order == 2) {
    edges.emplace_back(0, 1);
  }
  return from_edges(order, edges);
}

Graph Graph::path(int order) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < order; ++i) edges.emplace_back(i, i + 1);
  return from_edges(order, edges);
}

int Graph::degree(int i) const noexcept { return std::popcount(row(i)); }

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) {
    throw Error(ErrorKind::TruncatedPayload, "graph6: empty record");
  }

  const auto header = static_cast<unsigned char>(text[0]);
  if (header == 126) {
    throw Error(ErrorKind::OrderTooLarge, "graph6: long-form header (order > 62) not supported");
  }
  if (header < kBias || header > 126) {
    throw Error(ErrorKind::InvalidByte,
                "graph6: invalid header byte " + std::to_string(header));
  }
  const int n = header - kBias;
  const std::string_view payload = text.substr(1);
  const std::size_t expected = payload_bytes(n);
  if (payload.size() < expected) {
    throw Error(ErrorKind::TruncatedPayload,
                "graph6: expected " + std::to_string(expected) + " payload bytes, got " +
                    std::to_string(payload.size()));
  }
  if (payload.size() > expected) {
    throw Error(ErrorKind::TrailingBytes,
                "graph6: " + std::to_string(payload.size() - expected) +
                    " unexpected bytes after payload");
  }
  for (std::size_t k = 0; k < payload.size(); ++k) {
    const auto b = static_cast<unsigned char>(payload[k]);
    if (b < kBias || b > 126) {
      throw Error(ErrorKind::InvalidByte, "graph6: invalid payload byte " + std::to_string(b) +
                                              " at offset " + std::to_string(k + 1));
    }
  }

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int group = static_cast<unsigned char>(payload[bit / 6]) - kBias;
      if ((group >> (5 - bit % 6)) & 1) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  if (bit % 6 != 0) {
    const int last = static_cast<unsigned char>(payload.back()) - kBias;
    const int pad_bits = static_cast<int>(6 - bit % 6);
    if ((last & ((1 << pad_bits) - 1)) != 0) {
      throw Error(ErrorKind::NonzeroPadding, "graph6: nonzero padding bits");
    }
  }
  return Graph::from_rows(std::move(rows));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.reserve(1 + payload_bytes(n));
  out.push_back(static_cast<char>(n + kBias));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) {
    out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  }
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const std::uint64_t mask = vertex_mask(n);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rows[static_cast<std::size_t>(i)] = ~g.row(i) & mask & ~(std::uint64_t{1} << i);
  }
  return Graph::from_rows(std::move(rows));
}

int edge_count(const Graph& g) noexcept {
  int total = 0;
  for (const std::uint64_t r : g.rows()) total += std::popcount(r);
  return total / 2;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorKind::InvalidAdjacency, "relabel: permutation size mismatch");
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (std::uint64_t rest = g.row(i); rest != 0; rest &= rest - 1) {
      const int j = std::countr_zero(rest);
      rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] |=
          std::uint64_t{1} << perm[static_cast<std::size_t>(j)];
    }
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace copermanent
