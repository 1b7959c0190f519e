#include "asqf/gf2e.hpp"

#include <stdexcept>

namespace asqf {

namespace {

// Least monic irreducible polynomial of degree e over F_2 with nonzero
// constant term, as a bitmask (bit i = coefficient of x^i).
constexpr std::uint32_t kModulusTable[17] = {
    0,       0x3,    0x7,    0xB,    0x13,   0x25,    0x43,   0x83,  0x11B,
    0x203,   0x409,  0x805,  0x1009, 0x201B, 0x4021,  0x8003, 0x1002B};

// Carry-less multiply-and-reduce for table construction.
std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t mod, int e) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> e) a ^= mod;
  }
  return r;
}

}  // namespace

std::uint32_t Gf2e::modulus_for(int e) {
  if (e < 1 || e > 16) throw std::invalid_argument("Gf2e: extension degree must be in [1,16]");
  return kModulusTable[e];
}

Gf2e::Gf2e(int e) : e_(e), q_(0), mod_(modulus_for(e)) {
  q_ = 1u << e_;
  log_.assign(q_, 0);
  exp_.assign(q_, 0);

  // Find a multiplicative generator and fill log/antilog tables.
  std::uint32_t g = 1;
  if (q_ > 2) {
    for (g = 2; g < q_; ++g) {
      std::uint32_t x = 1;
      std::uint32_t order = 0;
      do {
        x = clmul_mod(x, g, mod_, e_);
        ++order;
      } while (x != 1);
      if (order == q_ - 1) break;
    }
  }
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = static_cast<std::uint16_t>(x);
    log_[x] = static_cast<std::uint16_t>(i);
    x = clmul_mod(x, g, mod_, e_);
  }

  trace_.assign(q_, 0);
  sqrt_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Fe t{0}, y{static_cast<std::uint16_t>(a)};
    for (int i = 0; i < e_; ++i) {
      t = add(t, y);
      y = mul(y, y);
    }
    if (t.v > 1) throw std::logic_error("Gf2e: trace left F_2");
    trace_[a] = static_cast<std::uint8_t>(t.v);
    Fe sq = mul(Fe{static_cast<std::uint16_t>(a)}, Fe{static_cast<std::uint16_t>(a)});
    sqrt_[sq.v] = static_cast<std::uint16_t>(a);
  }

  xi_ = Fe{0};
  for (std::uint32_t a = 0; a < q_; ++a) {
    if (trace_[a]) {
      xi_ = Fe{static_cast<std::uint16_t>(a)};
      break;
    }
  }
}

Fe Gf2e::element(std::uint32_t bits) const {
  if (bits >= q_) throw std::invalid_argument("Gf2e::element: bit pattern out of range");
  return Fe{static_cast<std::uint16_t>(bits)};
}

Fe Gf2e::inv(Fe a) const {
  if (a.v == 0) throw std::domain_error("Gf2e::inv: zero has no inverse");
  std::uint32_t k = (q_ - 1 - log_[a.v]) % (q_ - 1);
  return Fe{exp_[k]};
}

Fe Gf2e::pow(Fe a, long long n) const {
  if (a.v == 0) {
    if (n == 0) return one();
    if (n < 0) throw std::domain_error("Gf2e::pow: negative power of zero");
    return zero();
  }
  long long m = static_cast<long long>(q_) - 1;
  long long k = (static_cast<long long>(log_[a.v]) * (n % m)) % m;
  if (k < 0) k += m;
  return Fe{exp_[k]};
}

std::string Gf2e::to_string(Fe a) const {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%x", static_cast<unsigned>(a.v));
  return buf;
}

}  // namespace asqf
