#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace asqf {

// Element of F_{2^e} in the polynomial basis, stored as an e-bit pattern.
// The all-zero pattern is 0 and the low bit is 1.
struct Fe {
  std::uint16_t v = 0;
  friend bool operator==(Fe a, Fe b) { return a.v == b.v; }
  friend bool operator!=(Fe a, Fe b) { return a.v != b.v; }
  friend bool operator<(Fe a, Fe b) { return a.v < b.v; }
};

// Arithmetic context for F_q, q = 2^e, 1 <= e <= 16.
//
// The modulus is the lexicographically least (as a bitmask) monic irreducible
// polynomial of degree e over F_2 with nonzero constant term, from a fixed
// embedded table, so all bit patterns are reproducible across runs and
// implementations.  Multiplication and inversion go through discrete
// log/antilog tables built once per field.
class Gf2e {
 public:
  explicit Gf2e(int e);

  int e() const { return e_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t modulus() const { return mod_; }

  static std::uint32_t modulus_for(int e);

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  // Element from a bit pattern; throws if bits >= q.
  Fe element(std::uint32_t bits) const;

  Fe add(Fe a, Fe b) const { return Fe{static_cast<std::uint16_t>(a.v ^ b.v)}; }
  Fe mul(Fe a, Fe b) const {
    if (a.v == 0 || b.v == 0) return Fe{0};
    std::uint32_t s = log_[a.v] + log_[b.v];
    if (s >= q_ - 1) s -= q_ - 1;
    return Fe{exp_[s]};
  }
  // Multiplicative inverse; throws std::domain_error on zero.
  Fe inv(Fe a) const;
  Fe pow(Fe a, long long n) const;
  Fe frobenius(Fe a) const { return mul(a, a); }
  // The unique r with r*r == a.
  Fe sqrt(Fe a) const { return Fe{sqrt_[a.v]}; }
  // Absolute trace to F_2: sum of a^(2^i), i = 0..e-1.
  int trace(Fe a) const { return trace_[a.v]; }
  // Least element in bit order with trace 1; the canonical non-wp element.
  Fe xi() const { return xi_; }

  std::string to_string(Fe a) const;  // hex bit pattern

 private:
  int e_;
  std::uint32_t q_;
  std::uint32_t mod_;
  Fe xi_;
  std::vector<std::uint16_t> log_, exp_, sqrt_;
  std::vector<std::uint8_t> trace_;
};

}  // namespace asqf
