#pragma once

#include <cstdint>
#include <vector>

#include "copermanent/bipoly.hpp"
#include "copermanent/graph.hpp"

namespace copermanent {

/// Largest order accepted by bivariate_permanent; n! must fit in 64 bits.
inline constexpr int kMaxPermanentOrder = BiPoly::kMaxOrder;

/// Largest order accepted by the permutation-expansion oracle.
inline constexpr int kMaxNaiveOrder = 9;

/// P(G; x, λ) = per(x I + λ A + Ā).
///
/// Ryser inclusion-exclusion over column subsets in Gray-code order. Row i
/// restricted to subset S sums to x·[i∈S] + a_i·λ + b_i, with a_i the
/// neighbours of i in S and b_i the non-neighbours of i in S other than i.
/// Each subset contributes the product of its n linear row sums, added or
/// subtracted by the parity of n - |S|.
///
/// Throws Error(OrderTooLarge) for order > 20.
BiPoly bivariate_permanent(const Graph& g);

/// Sum over all permutations σ of x^fix(σ) λ^e(σ), where e counts the moved
/// positions (i, σ(i)) that are edges. Order <= 9.
BiPoly bivariate_permanent_naive(const Graph& g);

class IntMatrix {
 public:
  explicit IntMatrix(int size) : size_(size), entries_(static_cast<std::size_t>(size * size), 0) {}

  int size() const noexcept { return size_; }
  std::int64_t& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i * size_ + j)]; }
  std::int64_t operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i * size_ + j)];
  }

 private:
  int size_;
  std::vector<std::int64_t> entries_;
};

/// x0·I + λ0·A + Ā for graph g.
IntMatrix instantiate(const Graph& g, std::int64_t x0, std::int64_t lambda0);

/// Ryser permanent of a square integer matrix (size <= 20) with checked
/// 128-bit arithmetic. Error(Overflow) when an intermediate leaves the range.
Int128 integer_permanent(const IntMatrix& m);

}  // namespace copermanent
