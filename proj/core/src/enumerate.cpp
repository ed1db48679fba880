#include "copermanent/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_set>

#include "copermanent/error.hpp"

namespace copermanent {

namespace {

using Rows = std::array<std::uint64_t, kMaxCanonicalOrder>;

// Branch-and-bound over degree-respecting orderings, minimising the
// column-major upper-triangle bit string one column at a time.
//
// Two vertices with the same open or closed neighbourhood can be swapped by
// an automorphism fixing everything else, so within such a twin class only
// orderings that place members by increasing index are explored.
class CanonicalSearch {
 public:
  CanonicalSearch(int n, const Rows& adj) : n_(n), adj_(adj) {
    std::array<int, kMaxCanonicalOrder> sorted{};
    for (int v = 0; v < n_; ++v) {
      degree_[v] = std::popcount(adj_[v]);
      sorted[v] = degree_[v];
    }
    std::sort(sorted.begin(), sorted.begin() + n_);
    slot_degree_ = sorted;

    for (int v = 0; v < n_; ++v) {
      prev_twin_[v] = -1;
      const std::uint64_t self = std::uint64_t{1} << v;
      for (int u = v - 1; u >= 0; --u) {
        const std::uint64_t other = std::uint64_t{1} << u;
        const bool open_twin = adj_[u] == adj_[v];
        const bool closed_twin = (adj_[u] | other) == (adj_[v] | self);
        if (open_twin || closed_twin) {
          prev_twin_[v] = u;
          break;
        }
      }
    }
  }

  void run() { search(0); }

  std::uint64_t key() const {
    std::uint64_t key = 0;
    for (int k = 1; k < n_; ++k) key = (key << k) | best_[k];
    return key;
  }

  // best_order()[k] is the original vertex placed at position k.
  const std::array<int, kMaxCanonicalOrder>& best_order() const { return best_order_; }

 private:
  void search(int k) {
    if (k == n_) {
      best_order_ = order_;
      return;
    }
    for (int v = 0; v < n_; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((placed_ & bit) != 0 || degree_[v] != slot_degree_[k]) continue;
      if (prev_twin_[v] >= 0 && (placed_ & (std::uint64_t{1} << prev_twin_[v])) == 0) continue;

      std::uint32_t column = 0;
      for (int i = 0; i < k; ++i) column = (column << 1) | ((adj_[order_[i]] >> v) & 1U);

      if (k < best_len_) {
        if (column > best_[k]) continue;
        if (column < best_[k]) {
          best_[k] = column;
          best_len_ = k + 1;
        }
      } else {
        best_[k] = column;
        best_len_ = k + 1;
      }

      order_[k] = v;
      placed_ |= bit;
      search(k + 1);
      placed_ &= ~bit;
    }
  }

  int n_;
  Rows adj_;
  std::array<int, kMaxCanonicalOrder> degree_{};
  std::array<int, kMaxCanonicalOrder> slot_degree_{};
  std::array<int, kMaxCanonicalOrder> prev_twin_{};
  std::array<int, kMaxCanonicalOrder> order_{};
  std::array<int, kMaxCanonicalOrder> best_order_{};
  std::array<std::uint32_t, kMaxCanonicalOrder> best_{};
  int best_len_ = 0;
  std::uint64_t placed_ = 0;
};

Rows to_rows(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(ErrorKind::OrderTooLarge, "canonical_form: order " + std::to_string(g.order()) +
                                              " exceeds " + std::to_string(kMaxCanonicalOrder));
  }
  Rows rows{};
  for (int i = 0; i < g.order(); ++i) rows[i] = g.row(i);
  return rows;
}

std::uint64_t search_key(int n, const Rows& rows) {
  CanonicalSearch search(n, rows);
  search.run();
  return search.key();
}

Graph graph_from_key(int n, std::uint64_t key) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  int remaining = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --remaining;
      if ((key >> remaining) & 1U) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace

CanonicalGraph canonical_form(const Graph& g) {
  const Rows rows = to_rows(g);
  const int n = g.order();
  CanonicalSearch search(n, rows);
  search.run();
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) position[static_cast<std::size_t>(search.best_order()[k])] = k;
  CanonicalGraph out{relabel(g, position), {}};
  out.canonical_g6 = to_graph6(out.graph);
  return out;
}

std::uint64_t canonical_key(const Graph& g) { return search_key(g.order(), to_rows(g)); }

std::vector<Graph> generate_all(int n) {
  if (n < 0 || n > kMaxGenerateOrder) {
    throw Error(ErrorKind::OrderTooLarge,
                "generate_all: order " + std::to_string(n) + " outside 0.." +
                    std::to_string(kMaxGenerateOrder));
  }
  std::vector<std::uint64_t> level{0};  // the single graph on zero vertices
  for (int m = 1; m <= n; ++m) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(level.size() * 8);
    const std::uint64_t masks = std::uint64_t{1} << (m - 1);
    for (const std::uint64_t parent_key : level) {
      const Graph parent = graph_from_key(m - 1, parent_key);
      Rows rows{};
      for (int i = 0; i < m - 1; ++i) rows[i] = parent.row(i);
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        Rows child = rows;
        child[m - 1] = mask;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
          child[std::countr_zero(rest)] |= std::uint64_t{1} << (m - 1);
        }
        seen.insert(search_key(m, child));
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }

  std::vector<Graph> out;
  out.reserve(level.size());
  for (const std::uint64_t key : level) out.push_back(graph_from_key(n, key));
  return out;
}

std::optional<Graph> Graph6Reader::next() {
  std::string text;
  while (std::getline(*in_, text)) {
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    try {
      Graph g = from_graph6(text);
      record_ = std::move(text);
      return g;
    } catch (const LineError&) {
      throw;
    } catch (const Error& e) {
      if (policy_ == OnError::Skip) {
        ++skipped_;
        continue;
      }
      throw LineError(e.kind(), line_, e.what());
    }
  }
  return std::nullopt;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  Graph6Reader reader(in);
  std::vector<Graph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace copermanent
