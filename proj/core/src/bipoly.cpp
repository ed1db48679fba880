#include "copermanent/bipoly.hpp"

#include <algorithm>

#include "copermanent/error.hpp"

namespace copermanent {

namespace {

void check_poly_order(int order) {
  if (order < 0 || order > BiPoly::kMaxOrder) {
    throw Error(ErrorKind::OrderTooLarge, "polynomial order " + std::to_string(order) +
                                              " outside 0.." + std::to_string(BiPoly::kMaxOrder));
  }
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::CoefficientOverflow, "coefficient addition overflow");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::CoefficientOverflow, "coefficient multiplication overflow");
  }
  return out;
}

}  // namespace

std::string to_string(Int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work in the negative range so INT128_MIN needs no special case.
  Int128 v = negative ? value : -value;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BiPoly::BiPoly(int order) : order_(order), coeffs_(storage_size(order), 0) {}

BiPoly BiPoly::zero(int order) {
  check_poly_order(order);
  return BiPoly(order);
}

BiPoly BiPoly::one(int order) {
  BiPoly p = zero(order);
  p.coeffs_[0] = 1;
  return p;
}

std::int64_t BiPoly::coeff(int i, int j) const noexcept {
  if (i < 0 || j < 0 || i + j > order_) return 0;
  return coeffs_[index(order_, i, j)];
}

void BiPoly::set_coeff(int i, int j, std::int64_t value) {
  if (i < 0 || j < 0 || i + j > order_) {
    throw Error(ErrorKind::DegreeOverflow, "monomial x^" + std::to_string(i) + " λ^" +
                                               std::to_string(j) + " exceeds order " +
                                               std::to_string(order_));
  }
  coeffs_[index(order_, i, j)] = value;
}

int BiPoly::total_degree() const noexcept {
  int best = -1;
  for (int i = 0; i <= order_; ++i) {
    for (int j = 0; i + j <= order_; ++j) {
      if (coeffs_[index(order_, i, j)] != 0) best = std::max(best, i + j);
    }
  }
  return best;
}

bool BiPoly::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  if (other.order_ != order_) {
    throw Error(ErrorKind::OrderTooLarge, "adding polynomials of orders " +
                                              std::to_string(order_) + " and " +
                                              std::to_string(other.order_));
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    coeffs_[k] = checked_add(coeffs_[k], other.coeffs_[k]);
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  if (other.order_ != order_) {
    throw Error(ErrorKind::OrderTooLarge, "subtracting polynomials of orders " +
                                              std::to_string(order_) + " and " +
                                              std::to_string(other.order_));
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::int64_t out;
    if (__builtin_sub_overflow(coeffs_[k], other.coeffs_[k], &out)) {
      throw Error(ErrorKind::CoefficientOverflow, "coefficient subtraction overflow");
    }
    coeffs_[k] = out;
  }
  return *this;
}

BiPoly mul_linear_factor(const BiPoly& p, bool has_x, std::int64_t a, std::int64_t b) {
  const int n = p.order();
  const bool raises_degree = has_x || a != 0;
  if (raises_degree && p.total_degree() + 1 > n) {
    throw Error(ErrorKind::DegreeOverflow,
                "linear factor would raise the degree past order " + std::to_string(n));
  }
  BiPoly out = BiPoly::zero(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      std::int64_t c = checked_mul(b, p.coeff(i, j));
      if (a != 0 && j > 0) c = checked_add(c, checked_mul(a, p.coeff(i, j - 1)));
      if (has_x && i > 0) c = checked_add(c, p.coeff(i - 1, j));
      out.set_coeff(i, j, c);
    }
  }
  return out;
}

Int128 evaluate(const BiPoly& p, std::int64_t x0, std::int64_t lambda0) {
  const int n = p.order();
  const auto overflow = [] {
    return Error(ErrorKind::EvaluationOverflow, "polynomial evaluation overflow");
  };
  Int128 total = 0;
  Int128 x_pow = 1;
  for (int i = 0; i <= n; ++i) {
    Int128 term_pow = x_pow;
    for (int j = 0; i + j <= n; ++j) {
      Int128 term;
      if (__builtin_mul_overflow(static_cast<Int128>(p.coeff(i, j)), term_pow, &term) ||
          __builtin_add_overflow(total, term, &total)) {
        throw overflow();
      }
      if (i + j < n && __builtin_mul_overflow(term_pow, static_cast<Int128>(lambda0), &term_pow)) {
        throw overflow();
      }
    }
    if (i < n && __builtin_mul_overflow(x_pow, static_cast<Int128>(x0), &x_pow)) {
      throw overflow();
    }
  }
  return total;
}

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (const std::uint8_t b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

Fingerprint fingerprint(const BiPoly& p) {
  Fingerprint fp;
  const auto coeffs = p.coefficients();
  fp.bytes.reserve(1 + 8 * coeffs.size());
  fp.bytes.push_back(static_cast<std::uint8_t>(p.order()));
  for (const std::int64_t c : coeffs) {
    const auto u = static_cast<std::uint64_t>(c);
    for (int k = 0; k < 8; ++k) fp.bytes.push_back(static_cast<std::uint8_t>(u >> (8 * k)));
  }
  fp.hash64 = fnv1a64(fp.bytes);
  return fp;
}

BiPoly from_fingerprint_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw Error(ErrorKind::MalformedRecord, "fingerprint: no order byte");
  const int n = bytes[0];
  if (n > BiPoly::kMaxOrder) {
    throw Error(ErrorKind::MalformedRecord, "fingerprint: order byte " + std::to_string(n));
  }
  const std::size_t count = BiPoly::storage_size(n);
  if (bytes.size() != 1 + 8 * count) {
    throw Error(ErrorKind::MalformedRecord, "fingerprint: " + std::to_string(bytes.size()) +
                                                " bytes does not match order " + std::to_string(n));
  }
  BiPoly p = BiPoly::zero(n);
  std::size_t pos = 1;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      std::uint64_t u = 0;
      for (int k = 0; k < 8; ++k) u |= static_cast<std::uint64_t>(bytes[pos++]) << (8 * k);
      p.set_coeff(i, j, static_cast<std::int64_t>(u));
    }
  }
  return p;
}

std::string to_hex(const Fingerprint& fp) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * fp.bytes.size());
  for (const std::uint8_t b : fp.bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

Fingerprint fingerprint_from_hex(std::string_view hex) {
  const auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) throw Error(ErrorKind::MalformedRecord, "fingerprint: odd hex length");
  Fingerprint fp;
  fp.bytes.reserve(hex.size() / 2);
  for (std::size_t k = 0; k < hex.size(); k += 2) {
    const int hi = nibble(hex[k]);
    const int lo = nibble(hex[k + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorKind::MalformedRecord, "fingerprint: invalid hex digit");
    }
    fp.bytes.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  // Validates the layout.
  (void)from_fingerprint_bytes(fp.bytes);
  fp.hash64 = fnv1a64(fp.bytes);
  return fp;
}

std::string format_text(const BiPoly& p, VarStyle style) {
  const std::string_view lambda = style == VarStyle::Unicode ? "λ" : "y";
  const int n = p.order();
  std::string out;
  for (int i = n; i >= 0; --i) {
    for (int j = n - i; j >= 0; --j) {
      const std::int64_t c = p.coeff(i, j);
      if (c == 0) continue;
      if (c < 0) {
        out.push_back('-');
      } else if (!out.empty()) {
        out.push_back('+');
      }
      // Negating INT64_MIN overflows; print its magnitude through Int128.
      const Int128 magnitude = c < 0 ? -static_cast<Int128>(c) : static_cast<Int128>(c);
      const bool constant = i == 0 && j == 0;
      if (magnitude != 1 || constant) out += to_string(magnitude);
      if (i > 0) {
        out.push_back('x');
        if (i > 1) out += "^" + std::to_string(i);
      }
      if (j > 0) {
        out += lambda;
        if (j > 1) out += "^" + std::to_string(j);
      }
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<CoefficientTriple> nonzero_terms(const BiPoly& p) {
  std::vector<CoefficientTriple> out;
  const int n = p.order();
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      if (const std::int64_t c = p.coeff(i, j); c != 0) out.push_back({i, j, c});
    }
  }
  return out;
}

BiPoly from_terms(int order, std::span<const CoefficientTriple> terms) {
  BiPoly p = BiPoly::zero(order);
  for (const auto& t : terms) p.set_coeff(t.x_degree, t.lambda_degree, t.value);
  return p;
}

}  // namespace copermanent
