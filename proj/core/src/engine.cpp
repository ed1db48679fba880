#include "copermanent/engine.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "copermanent/error.hpp"

namespace copermanent {

namespace {

constexpr int kStride = kMaxPermanentOrder + 1;

// Per-row Ryser state for the current column subset.
struct RowSums {
  std::array<std::int64_t, kMaxPermanentOrder> lambda{};    // |N(i) ∩ S|
  std::array<std::int64_t, kMaxPermanentOrder> constant{};  // |S \ (N(i) ∪ {i})|
  std::uint64_t subset = 0;
};

// Upper bound on Σ_k C(n,k) k^n, the total absolute mass passing through the
// accumulator. If it fits in 64 bits no intermediate value can overflow.
constexpr bool fits_int64(int n) {
  Int128 total = 0;
  Int128 binom = 1;
  for (int k = 0; k <= n; ++k) {
    Int128 power = 1;
    for (int e = 0; e < n; ++e) power *= k;
    total += binom * power;
    binom = binom * (n - k) / (k + 1);
  }
  return total <= static_cast<Int128>(INT64_MAX);
}

constexpr int largest_int64_order() {
  int n = 0;
  while (n < kMaxPermanentOrder && fits_int64(n + 1)) ++n;
  return n;
}

// Accumulator type T must hold Σ_k C(n,k) k^n for the orders it serves.
template <typename T>
BiPoly ryser_gray(const Graph& g) {
  const int n = g.order();
  std::array<T, kStride * kStride> acc{};
  std::array<T, kStride * kStride> prod{};
  std::array<std::uint64_t, kMaxPermanentOrder> adjacency{};
  for (int i = 0; i < n; ++i) adjacency[static_cast<std::size_t>(i)] = g.row(i);

  RowSums state;
  int subset_size = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < limit; ++step) {
    const int column = std::countr_zero(step);
    const std::uint64_t bit = std::uint64_t{1} << column;
    const bool entering = (state.subset & bit) == 0;
    const std::int64_t delta = entering ? 1 : -1;
    state.subset ^= bit;
    subset_size += static_cast<int>(delta);
    const std::uint64_t neighbours = adjacency[static_cast<std::size_t>(column)];
    for (int i = 0; i < n; ++i) {
      if (i == column) continue;
      if ((neighbours >> i) & 1U) {
        state.lambda[static_cast<std::size_t>(i)] += delta;
      } else {
        state.constant[static_cast<std::size_t>(i)] += delta;
      }
    }

    // Product of the row sums. Rows outside S are univariate in λ, so they
    // go first while the table is still a single row.
    prod[0] = 1;
    int x_deg = 0;
    int l_deg = 0;
    for (int i = 0; i < n; ++i) {
      if ((state.subset >> i) & 1U) continue;
      const T a = state.lambda[static_cast<std::size_t>(i)];
      const T b = state.constant[static_cast<std::size_t>(i)];
      if (a != 0) {
        prod[static_cast<std::size_t>(l_deg + 1)] = a * prod[static_cast<std::size_t>(l_deg)];
        for (int j = l_deg; j > 0; --j) {
          prod[static_cast<std::size_t>(j)] =
              b * prod[static_cast<std::size_t>(j)] + a * prod[static_cast<std::size_t>(j - 1)];
        }
        ++l_deg;
      } else {
        for (int j = l_deg; j > 0; --j) prod[static_cast<std::size_t>(j)] *= b;
      }
      prod[0] *= b;
    }
    for (int i = 0; i < n; ++i) {
      if (((state.subset >> i) & 1U) == 0) continue;
      const T a = state.lambda[static_cast<std::size_t>(i)];
      const T b = state.constant[static_cast<std::size_t>(i)];
      const int new_l = l_deg + (a != 0 ? 1 : 0);
      // New row x_deg+1 is the old row x_deg shifted by x.
      T* top = &prod[static_cast<std::size_t>((x_deg + 1) * kStride)];
      const T* below = &prod[static_cast<std::size_t>(x_deg * kStride)];
      for (int j = 0; j <= new_l; ++j) top[j] = j <= l_deg ? below[j] : T{0};
      for (int r = x_deg; r >= 0; --r) {
        T* row = &prod[static_cast<std::size_t>(r * kStride)];
        const T* lower = r > 0 ? &prod[static_cast<std::size_t>((r - 1) * kStride)] : nullptr;
        if (a != 0) row[new_l] = T{0};
        for (int j = new_l; j >= 0; --j) {
          T v = j <= l_deg ? b * row[j] : T{0};
          if (a != 0 && j > 0) v += a * row[j - 1];
          if (lower != nullptr && j <= l_deg) v += lower[j];
          row[j] = v;
        }
      }
      ++x_deg;
      l_deg = new_l;
    }

    const bool add = ((n - subset_size) & 1) == 0;
    for (int r = 0; r <= x_deg; ++r) {
      T* dst = &acc[static_cast<std::size_t>(r * kStride)];
      const T* src = &prod[static_cast<std::size_t>(r * kStride)];
      if (add) {
        for (int j = 0; j <= l_deg; ++j) dst[j] += src[j];
      } else {
        for (int j = 0; j <= l_deg; ++j) dst[j] -= src[j];
      }
    }
  }

  BiPoly out = BiPoly::zero(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const T c = acc[static_cast<std::size_t>(i * kStride + j)];
      if (c == 0) continue;
      if (i + j > n || c < 0 || c > static_cast<T>(INT64_MAX)) {
        throw Error(ErrorKind::CoefficientOverflow,
                    "permanent coefficient out of range at x^" + std::to_string(i) + " λ^" +
                        std::to_string(j));
      }
      out.set_coeff(i, j, static_cast<std::int64_t>(c));
    }
  }
  return out;
}

void check_engine_order(const Graph& g, int limit, const char* what) {
  if (g.order() > limit) {
    throw Error(ErrorKind::OrderTooLarge, std::string(what) + ": order " +
                                              std::to_string(g.order()) + " exceeds " +
                                              std::to_string(limit));
  }
}

}  // namespace

BiPoly bivariate_permanent(const Graph& g) {
  check_engine_order(g, kMaxPermanentOrder, "bivariate_permanent");
  if (g.order() == 0) return BiPoly::one(0);
  static constexpr int kInt64Order = largest_int64_order();
  if (g.order() <= kInt64Order) return ryser_gray<std::int64_t>(g);
  return ryser_gray<Int128>(g);
}

BiPoly bivariate_permanent_naive(const Graph& g) {
  check_engine_order(g, kMaxNaiveOrder, "bivariate_permanent_naive");
  const int n = g.order();
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  BiPoly out = BiPoly::zero(n);
  std::vector<std::int64_t> counts(BiPoly::storage_size(n), 0);
  do {
    int fixed = 0;
    int edges = 0;
    for (int i = 0; i < n; ++i) {
      const int image = sigma[static_cast<std::size_t>(i)];
      if (image == i) {
        ++fixed;
      } else if (g.has_edge(i, image)) {
        ++edges;
      }
    }
    ++counts[BiPoly::index(n, fixed, edges)];
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) out.set_coeff(i, j, counts[BiPoly::index(n, i, j)]);
  }
  return out;
}

IntMatrix instantiate(const Graph& g, std::int64_t x0, std::int64_t lambda0) {
  const int n = g.order();
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = i == j ? x0 : (g.has_edge(i, j) ? lambda0 : 1);
    }
  }
  return m;
}

Int128 integer_permanent(const IntMatrix& m) {
  const int n = m.size();
  if (n > kMaxPermanentOrder) {
    throw Error(ErrorKind::OrderTooLarge,
                "integer_permanent: size " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxPermanentOrder));
  }
  if (n == 0) return 1;
  const auto overflow = [] { return Error(ErrorKind::Overflow, "integer_permanent overflow"); };

  std::vector<Int128> row_sums(static_cast<std::size_t>(n), 0);
  std::uint64_t subset = 0;
  int subset_size = 0;
  Int128 total = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < limit; ++step) {
    const int column = std::countr_zero(step);
    const std::uint64_t bit = std::uint64_t{1} << column;
    const bool entering = (subset & bit) == 0;
    subset ^= bit;
    subset_size += entering ? 1 : -1;
    for (int i = 0; i < n; ++i) {
      const Int128 entry = m(i, column);
      Int128& s = row_sums[static_cast<std::size_t>(i)];
      if (entering ? __builtin_add_overflow(s, entry, &s) : __builtin_sub_overflow(s, entry, &s)) {
        throw overflow();
      }
    }
    Int128 product = 1;
    for (const Int128 s : row_sums) {
      if (__builtin_mul_overflow(product, s, &product)) throw overflow();
      if (product == 0) break;
    }
    const bool add = ((n - subset_size) & 1) == 0;
    if (add ? __builtin_add_overflow(total, product, &total)
            : __builtin_sub_overflow(total, product, &total)) {
      throw overflow();
    }
  }
  return total;
}

}  // namespace copermanent
