#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latinlab {

// Unsigned big integer, base 1e9 limbs. Covers exact counting well past the
// 64-bit range without pulling in a multiprecision dependency.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v) {  // NOLINT: implicit by design
    while (v > 0) {
      limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
      v /= kBase;
    }
  }

  static BigUint factorial(unsigned n) {
    BigUint r{1};
    for (unsigned i = 2; i <= n; ++i) r.mul_small(i);
    return r;
  }

  bool is_zero() const { return limbs_.empty(); }

  void add(const BigUint& o) {
    std::uint64_t carry = 0;
    const std::size_t m = std::max(limbs_.size(), o.limbs_.size());
    limbs_.resize(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
      limbs_[i] = static_cast<std::uint32_t>(s % kBase);
      carry = s / kBase;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  void add_small(std::uint64_t v) { add(BigUint{v}); }

  // Requires *this >= v.
  void sub_small(std::uint64_t v) {
    BigUint o{v};
    if (compare(o) < 0) throw std::underflow_error("BigUint::sub_small underflow");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::int64_t s = static_cast<std::int64_t>(limbs_[i]) - borrow -
                       (i < o.limbs_.size() ? static_cast<std::int64_t>(o.limbs_[i]) : 0);
      if (s < 0) {
        s += kBase;
        borrow = 1;
      } else {
        borrow = 0;
      }
      limbs_[i] = static_cast<std::uint32_t>(s);
    }
    trim();
  }

  void mul_small(std::uint64_t v) {
    if (v == 0 || is_zero()) {
      limbs_.clear();
      return;
    }
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      unsigned __int128 p = static_cast<unsigned __int128>(limbs_[i]) * v + carry;
      limbs_[i] = static_cast<std::uint32_t>(p % kBase);
      carry = p / kBase;
    }
    while (carry > 0) {
      limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
      carry /= kBase;
    }
  }

  // Exact division by a small divisor; throws if a remainder is left.
  void div_small_exact(std::uint32_t v) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      std::uint64_t cur = rem * kBase + limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(cur / v);
      rem = cur % v;
    }
    if (rem != 0) throw std::logic_error("BigUint::div_small_exact inexact");
    trim();
  }

  int compare(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;)
      if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    return 0;
  }

  bool operator==(const BigUint& o) const { return compare(o) == 0; }
  bool operator!=(const BigUint& o) const { return compare(o) != 0; }
  bool operator<(const BigUint& o) const { return compare(o) < 0; }
  bool operator<=(const BigUint& o) const { return compare(o) <= 0; }

  bool fits_u64() const {
    if (limbs_.size() > 3) return false;
    return to_double() < 1.8e19;
  }

  std::uint64_t to_u64() const {
    std::uint64_t r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) r = r * kBase + limbs_[i];
    return r;
  }

  double to_double() const {
    double r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) r = r * kBase + limbs_[i];
    return r;
  }

  std::string to_string() const {
    if (limbs_.empty()) return "0";
    std::string s = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs_[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

 private:
  static constexpr std::uint64_t kBase = 1000000000ull;
  std::vector<std::uint32_t> limbs_;  // little-endian

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }
};

inline BigUint operator+(BigUint a, const BigUint& b) {
  a.add(b);
  return a;
}

inline BigUint operator*(BigUint a, std::uint64_t b) {
  a.mul_small(b);
  return a;
}

// Binomial coefficient, exact.
inline BigUint binomial(unsigned n, unsigned k) {
  if (k > n) return BigUint{0};
  if (k > n - k) k = n - k;
  BigUint r{1};
  for (unsigned i = 1; i <= k; ++i) {
    r.mul_small(n - k + i);
    r.div_small_exact(i);
  }
  return r;
}

// Number of derangements of an m-set: D_m = m*D_{m-1} + (-1)^m.
inline BigUint derangements(unsigned m) {
  BigUint d{1};  // D_0
  for (unsigned i = 1; i <= m; ++i) {
    d.mul_small(i);
    if (i % 2 == 0)
      d.add_small(1);
    else
      d.sub_small(1);
  }
  return d;
}

}  // namespace latinlab
