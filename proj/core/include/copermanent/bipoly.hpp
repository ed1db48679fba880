#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace copermanent {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

std::string to_string(Int128 value);

/// Dense bivariate integer polynomial in x and λ with total degree <= order.
///
/// Coefficients live in a flat triangular table, row-major by x-degree:
/// c[0][0..n], c[1][0..n-1], ..., c[n][0]. Entries with i + j > order do not
/// exist. All arithmetic is overflow-checked.
class BiPoly {
 public:
  /// Coefficients are signed 64-bit; n! must fit, so order <= 20.
  static constexpr int kMaxOrder = 20;

  /// The zero polynomial of order 0.
  BiPoly() : BiPoly(0) {}

  static BiPoly zero(int order);
  static BiPoly one(int order);

  int order() const noexcept { return order_; }

  /// Coefficient of x^i λ^j; zero for any (i, j) outside the triangle.
  std::int64_t coeff(int i, int j) const noexcept;

  /// Throws Error(DegreeOverflow) when i + j > order.
  void set_coeff(int i, int j, std::int64_t value);

  /// Triangular storage in serialization order.
  std::span<const std::int64_t> coefficients() const noexcept { return coeffs_; }

  /// Largest i + j with a nonzero coefficient, or -1 for the zero polynomial.
  int total_degree() const noexcept;

  bool is_zero() const noexcept;

  /// Elementwise checked addition. Throws Error(OrderTooLarge) on order
  /// mismatch and Error(CoefficientOverflow) on overflow.
  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  static constexpr std::size_t storage_size(int order) noexcept {
    const auto n = static_cast<std::size_t>(order);
    return (n + 1) * (n + 2) / 2;
  }

  static constexpr std::size_t index(int order, int i, int j) noexcept {
    const auto n = static_cast<std::size_t>(order);
    const auto x = static_cast<std::size_t>(i);
    return x * (n + 1) - x * (x - 1) / 2 + static_cast<std::size_t>(j);
  }

 private:
  explicit BiPoly(int order);

  int order_ = 0;
  std::vector<std::int64_t> coeffs_;
};

inline BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }

/// Returns p * (x*[has_x] + a*λ + b).
/// Throws Error(DegreeOverflow) if the product leaves the order bound and
/// Error(CoefficientOverflow) on arithmetic overflow.
BiPoly mul_linear_factor(const BiPoly& p, bool has_x, std::int64_t a, std::int64_t b);

/// Σ c[i][j] x0^i λ0^j in 128-bit arithmetic; Error(EvaluationOverflow) on overflow.
Int128 evaluate(const BiPoly& p, std::int64_t x0, std::int64_t lambda0);

/// Canonical serialization of a BiPoly plus an FNV-1a index hash.
///
/// bytes = [order] followed by every c[i][j] (i ascending, then j ascending)
/// as 8-byte little-endian two's complement. Equality of polynomials is
/// equality of bytes; the hash only buckets.
struct Fingerprint {
  std::vector<std::uint8_t> bytes;
  std::uint64_t hash64 = 0;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) { return a.bytes == b.bytes; }
  friend auto operator<=>(const Fingerprint& a, const Fingerprint& b) { return a.bytes <=> b.bytes; }
};

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) noexcept;

Fingerprint fingerprint(const BiPoly& p);

/// Inverse of fingerprint(). Throws Error(MalformedRecord) on a size that
/// does not match the order byte.
BiPoly from_fingerprint_bytes(std::span<const std::uint8_t> bytes);

/// Lowercase hex of the full fingerprint bytes.
std::string to_hex(const Fingerprint& fp);
Fingerprint fingerprint_from_hex(std::string_view hex);

enum class VarStyle {
  Unicode,  // λ
  Ascii,    // y
};

/// Human-readable form ordered by descending x-degree, then descending
/// λ-degree, e.g. "x^8+14x^6λ^2+14x^6+...". Zero terms are dropped and unit
/// coefficients are omitted on non-constant monomials.
std::string format_text(const BiPoly& p, VarStyle style = VarStyle::Unicode);

struct CoefficientTriple {
  int x_degree;
  int lambda_degree;
  std::int64_t value;

  friend bool operator==(const CoefficientTriple&, const CoefficientTriple&) = default;
};

/// Nonzero coefficients in serialization order.
std::vector<CoefficientTriple> nonzero_terms(const BiPoly& p);

BiPoly from_terms(int order, std::span<const CoefficientTriple> terms);

}  // namespace copermanent
