#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asqf/gf2e.hpp"

namespace asqf {

// Element of A = F_q[T]: coefficients low-degree first, no trailing zeros.
// The zero polynomial is the empty vector (degree() == -1).
struct Poly {
  std::vector<Fe> c;

  Poly() = default;
  explicit Poly(std::vector<Fe> coeffs) : c(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && c[0].v == 1; }
  bool is_monic() const { return !c.empty() && c.back().v == 1; }
  Fe leading() const { return c.empty() ? Fe{0} : c.back(); }
  Fe coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Fe{0};
  }
  void trim() {
    while (!c.empty() && c.back().v == 0) c.pop_back();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a.c == b.c); }
};

// Canonical order: by degree, then by coefficients from the top down.
// Coincides with the odometer rank order used by the enumerators.
bool poly_less(const Poly& a, const Poly& b);

struct Factorization {
  Fe unit;                                   // leading coefficient of the input
  std::vector<std::pair<Poly, int>> factors; // monic primes, canonical order
};

struct RadicalParts {
  Poly r;                     // product of distinct primes of M
  Poly t;                     // M * r(M)
  std::optional<Poly> mtilde; // sqrt(t(M)) when t(M) is a square (M in B)
  Poly mstar;                 // M^2 / r(M)
};

class FactorTable;

// Arithmetic, factorization and enumeration in F_q[T].  Polynomials are plain
// data; every operation takes its field context from the ring.
class PolyRing {
 public:
  explicit PolyRing(const Gf2e& field) : F_(&field) {}

  const Gf2e& field() const { return *F_; }
  std::uint32_t q() const { return F_->q(); }

  // --- basic arithmetic ---
  Poly zero() const { return Poly{}; }
  Poly one() const { return constant(F_->one()); }
  Poly constant(Fe a) const;
  Poly T() const;  // the variable

  Poly add(const Poly& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly mul_scalar(const Poly& a, Fe s) const;
  // Quotient and remainder; throws std::domain_error when b is zero.
  std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) const;
  Poly rem(const Poly& a, const Poly& b) const { return divrem(a, b).second; }
  Poly quot(const Poly& a, const Poly& b) const { return divrem(a, b).first; }
  Poly gcd(Poly a, Poly b) const;  // monic (or zero)
  Poly monic(const Poly& a) const;
  Poly pow(const Poly& a, int n) const;
  Poly pow_mod(const Poly& base, unsigned long long n, const Poly& mod) const;
  Fe eval(const Poly& f, Fe x) const;
  Poly derivative(const Poly& f) const;
  // Inverse of a modulo m (gcd(a, m) = 1); throws std::domain_error otherwise.
  Poly mod_inverse(const Poly& a, const Poly& m) const;

  // --- enumeration (odometer order: low-degree coefficient fastest, field
  // elements in bit order) ---
  long long monic_count(int n) const;  // q^n; throws on overflow
  Poly monic_at(int n, long long rank) const;
  long long monic_rank(const Poly& f) const;  // f monic of degree n
  Poly below_at(int n, long long rank) const; // rank-th poly of degree < n
  long long below_rank(const Poly& f, int n) const;
  void for_each_monic(int n, const std::function<void(const Poly&)>& fn) const;

  // --- primes ---
  bool is_irreducible(const Poly& f) const;
  std::vector<Poly> primes_of_degree(int n) const;
  // Number of monic irreducibles of degree n, by the Moebius closed form
  // (1/n) sum_{d|n} mu(d) q^{n/d}.
  long long pi_A(int n) const;

  // --- structure ---
  // Complete factorization over F_q; deterministic (squarefree split,
  // distinct-degree split, then equal-degree split by F_2 trace maps).
  Factorization factor(const Poly& f) const;
  Poly from_factorization(const Factorization& fac) const;
  RadicalParts radical_t(const Poly& m) const;  // m monic
  bool is_perfect_square(const Poly& f) const;
  Poly sqrt(const Poly& f) const;  // throws if f is not a square
  long long phi(const Poly& f) const;  // #(A/f)^x, f monic nonzero
  int mu(const Poly& f) const;         // Moebius function on monics

  // --- residue fields ---
  // Reduce n/d modulo a prime P (P must not divide d).
  Poly rf_reduce(const Poly& n, const Poly& d, const Poly& P) const;
  // Absolute trace A/P -> F_2 of a residue r (deg r < deg P).
  int rf_trace_to_f2(const Poly& r, const Poly& P) const;

  // --- text formats ---
  // Exact form: comma-separated coefficient hex values, low degree first.
  std::string to_coeff_string(const Poly& f) const;
  // Pretty form: e.g. "T^3+2*T+1" with hex coefficient patterns.
  std::string to_pretty_string(const Poly& f) const;
  // Parses either form.
  Poly parse(const std::string& text) const;

 private:
  const Gf2e* F_;

  Poly factor_squarefree_part(const Poly& f, std::vector<Poly>* primes) const;
  void split_distinct_degree(const Poly& f, int d, std::vector<Poly>* out) const;
};

// Least-prime-factor table over all monic polynomials of degree <= max_deg.
// Built once by a deterministic sieve; read-only afterwards.
class FactorTable {
 public:
  FactorTable(const PolyRing& ring, int max_deg);

  int max_degree() const { return max_deg_; }
  const PolyRing& ring() const { return *ring_; }

  bool is_prime(int deg, long long rank) const;
  // primes()[d] lists the monic irreducibles of degree d in canonical order.
  const std::vector<std::vector<Poly>>& primes() const { return primes_; }
  // All primes of degree <= max_degree, canonical order.
  const std::vector<Poly>& prime_list() const { return prime_list_; }

  struct Entry {
    std::uint8_t lpf_deg = 0;   // 0 => irreducible (or degree 0)
    std::uint32_t lpf_rank = 0;
    std::uint32_t quot_rank = 0;
  };
  const Entry& entry(int deg, long long rank) const {
    return table_[deg][static_cast<std::size_t>(rank)];
  }

  Factorization factor(const Poly& f) const;  // deg f <= max_degree
  long long phi(const Poly& f) const;
  int mu(const Poly& f) const;

 private:
  const PolyRing* ring_;
  int max_deg_;
  std::vector<std::vector<Entry>> table_;
  std::vector<std::vector<Poly>> primes_;
  std::vector<Poly> prime_list_;
};

}  // namespace asqf
