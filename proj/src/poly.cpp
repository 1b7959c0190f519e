#include "asqf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace asqf {

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.c[i].v != b.c[i].v) return a.c[i].v < b.c[i].v;
  }
  return false;
}

Poly PolyRing::constant(Fe a) const {
  Poly f;
  if (a.v) f.c.push_back(a);
  return f;
}

Poly PolyRing::T() const {
  Poly f;
  f.c = {Fe{0}, Fe{1}};
  return f;
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
  Poly r;
  const std::size_t n = std::max(a.c.size(), b.c.size());
  r.c.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Fe x = i < a.c.size() ? a.c[i] : Fe{0};
    Fe y = i < b.c.size() ? b.c[i] : Fe{0};
    r.c[i] = F_->add(x, y);
  }
  r.trim();
  return r;
}

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return Poly{};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Fe{0});
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].v == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j].v == 0) continue;
      r.c[i + j] = F_->add(r.c[i + j], F_->mul(a.c[i], b.c[j]));
    }
  }
  r.trim();
  return r;
}

Poly PolyRing::mul_scalar(const Poly& a, Fe s) const {
  if (s.v == 0) return Poly{};
  Poly r = a;
  for (auto& x : r.c) x = F_->mul(x, s);
  r.trim();
  return r;
}

std::pair<Poly, Poly> PolyRing::divrem(const Poly& a, const Poly& b) const {
  if (b.is_zero()) throw std::domain_error("PolyRing::divrem: division by zero polynomial");
  Poly rem = a;
  if (a.degree() < b.degree()) return {Poly{}, rem};
  Poly q;
  q.c.assign(a.degree() - b.degree() + 1, Fe{0});
  const Fe ilc = F_->inv(b.leading());
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int k = rem.degree() - b.degree();
    const Fe c = F_->mul(rem.leading(), ilc);
    q.c[k] = c;
    for (int j = 0; j <= b.degree(); ++j) {
      rem.c[k + j] = F_->add(rem.c[k + j], F_->mul(c, b.c[j]));
    }
    rem.trim();
  }
  q.trim();
  return {q, rem};
}

Poly PolyRing::gcd(Poly a, Poly b) const {
  while (!b.is_zero()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly PolyRing::monic(const Poly& a) const {
  if (a.is_zero() || a.is_monic()) return a;
  return mul_scalar(a, F_->inv(a.leading()));
}

Poly PolyRing::pow(const Poly& a, int n) const {
  if (n < 0) throw std::domain_error("PolyRing::pow: negative exponent");
  Poly r = one(), base = a;
  while (n) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

Poly PolyRing::pow_mod(const Poly& base, unsigned long long n, const Poly& mod) const {
  Poly r = rem(one(), mod), b = rem(base, mod);
  while (n) {
    if (n & 1) r = rem(mul(r, b), mod);
    b = rem(mul(b, b), mod);
    n >>= 1;
  }
  return r;
}

Fe PolyRing::eval(const Poly& f, Fe x) const {
  Fe r{0};
  for (int i = f.degree(); i >= 0; --i) r = F_->add(F_->mul(r, x), f.c[i]);
  return r;
}

Poly PolyRing::derivative(const Poly& f) const {
  Poly r;
  if (f.degree() < 1) return r;
  r.c.assign(f.c.size() - 1, Fe{0});
  for (int i = 1; i <= f.degree(); i += 2) r.c[i - 1] = f.c[i];  // char 2
  r.trim();
  return r;
}

Poly PolyRing::mod_inverse(const Poly& a, const Poly& m) const {
  Poly r0 = m, r1 = rem(a, m);
  Poly s0 = zero(), s1 = one();
  while (!r1.is_zero()) {
    auto [q, r2] = divrem(r0, r1);
    Poly s2 = add(s0, mul(q, s1));  // char 2: subtraction == addition
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw std::domain_error("PolyRing::mod_inverse: arguments not coprime");
  return rem(mul_scalar(s0, F_->inv(r0.c[0])), m);
}

long long PolyRing::monic_count(int n) const {
  if (n < 0) throw std::invalid_argument("PolyRing::monic_count: negative degree");
  long long r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > (1LL << 62) / q()) throw std::overflow_error("PolyRing::monic_count: overflow");
    r *= q();
  }
  return r;
}

Poly PolyRing::monic_at(int n, long long rank) const {
  Poly f;
  f.c.assign(n + 1, Fe{0});
  for (int i = 0; i < n; ++i) {
    f.c[i] = Fe{static_cast<std::uint16_t>(rank % q())};
    rank /= q();
  }
  f.c[n] = Fe{1};
  return f;
}

long long PolyRing::monic_rank(const Poly& f) const {
  long long r = 0;
  for (int i = f.degree() - 1; i >= 0; --i) r = r * q() + f.c[i].v;
  return r;
}

Poly PolyRing::below_at(int n, long long rank) const {
  Poly f;
  f.c.assign(n, Fe{0});
  for (int i = 0; i < n; ++i) {
    f.c[i] = Fe{static_cast<std::uint16_t>(rank % q())};
    rank /= q();
  }
  f.trim();
  return f;
}

long long PolyRing::below_rank(const Poly& f, int n) const {
  long long r = 0;
  for (int i = n - 1; i >= 0; --i) r = r * q() + f.coeff(i).v;
  return r;
}

void PolyRing::for_each_monic(int n, const std::function<void(const Poly&)>& fn) const {
  const long long total = monic_count(n);
  Poly f;
  f.c.assign(n + 1, Fe{0});
  f.c[n] = Fe{1};
  for (long long k = 0; k < total; ++k) {
    fn(f);
    // odometer step on c[0..n-1]
    for (int i = 0; i < n; ++i) {
      if (f.c[i].v + 1u < q()) {
        f.c[i].v++;
        break;
      }
      f.c[i].v = 0;
    }
  }
}

bool PolyRing::is_irreducible(const Poly& f) const {
  const int d = f.degree();
  if (d < 1 || !f.is_monic()) {
    throw std::invalid_argument("PolyRing::is_irreducible: requires a monic of degree >= 1");
  }
  if (d == 1) return true;
  // Rabin's test: x^{q^d} == x mod f and gcd(x^{q^{d/p}} - x, f) = 1
  // for every prime p | d.
  const Poly x = T();
  auto frob_iterate = [&](int k) {
    Poly t = rem(x, f);
    for (int i = 0; i < k; ++i) t = pow_mod(t, q(), f);
    return t;
  };
  if (frob_iterate(d) != rem(x, f)) return false;
  std::vector<int> prime_divs;
  int n = d;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      prime_divs.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) prime_divs.push_back(n);
  for (int p : prime_divs) {
    if (gcd(add(frob_iterate(d / p), x), f).degree() != 0) return false;
  }
  return true;
}

std::vector<Poly> PolyRing::primes_of_degree(int n) const {
  std::vector<Poly> out;
  for_each_monic(n, [&](const Poly& f) {
    if (is_irreducible(f)) out.push_back(f);
  });
  return out;
}

long long PolyRing::pi_A(int n) const {
  if (n < 1) throw std::invalid_argument("PolyRing::pi_A: degree must be >= 1");
  auto int_mu = [](int m) {
    int cnt = 0;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        ++cnt;
      }
    }
    if (m > 1) ++cnt;
    return (cnt % 2) ? -1 : 1;
  };
  long long total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    total += int_mu(d) * monic_count(n / d);
  }
  return total / n;
}

// --- factorization ---

bool PolyRing::is_perfect_square(const Poly& f) const {
  if (f.is_zero()) return true;
  for (int i = 1; i <= f.degree(); i += 2) {
    if (f.c[i].v) return false;
  }
  return true;
}

Poly PolyRing::sqrt(const Poly& f) const {
  if (!is_perfect_square(f)) throw std::domain_error("PolyRing::sqrt: not a perfect square");
  Poly r;
  if (f.is_zero()) return r;
  r.c.assign(f.degree() / 2 + 1, Fe{0});
  for (int i = 0; i <= f.degree(); i += 2) r.c[i / 2] = F_->sqrt(f.c[i]);
  r.trim();
  return r;
}

void PolyRing::split_distinct_degree(const Poly& f, int d, std::vector<Poly>* out) const {
  // f is a product of distinct primes of degree d; split by F_2 trace maps.
  if (f.degree() == d) {
    out->push_back(f);
    return;
  }
  const int ed = F_->e() * d;
  for (int m = 1; m <= f.degree(); ++m) {
    for (int j = 0; j < F_->e(); ++j) {
      Poly c;
      c.c.assign(m + 1, Fe{0});
      c.c[m] = Fe{static_cast<std::uint16_t>(1u << j)};
      c = rem(c, f);
      // w = sum of c^{2^i}, i < e*d: the absolute trace in each component
      Poly w = zero(), t = c;
      for (int i = 0; i < ed; ++i) {
        w = add(w, t);
        t = rem(mul(t, t), f);
      }
      Poly g = gcd(w, f);
      if (g.degree() > 0 && g.degree() < f.degree()) {
        split_distinct_degree(g, d, out);
        split_distinct_degree(quot(f, g), d, out);
        return;
      }
    }
  }
  throw std::logic_error("PolyRing: equal-degree splitting failed");
}

Factorization PolyRing::factor(const Poly& f) const {
  if (f.is_zero()) throw std::domain_error("PolyRing::factor: zero polynomial");
  Factorization out;
  out.unit = f.leading();
  Poly g = monic(f);

  // Peel squarefree parts; the leftover after removing odd-multiplicity
  // primes is a perfect square, handled by recursion on its square root.
  std::vector<std::pair<Poly, int>> acc;
  std::function<void(Poly, int)> run = [&](Poly h, int mult) {
    if (h.degree() < 1) return;
    Poly d = derivative(h);
    if (d.is_zero()) {
      run(sqrt(h), 2 * mult);
      return;
    }
    Poly w = quot(h, gcd(h, d));  // product of odd-multiplicity primes, squarefree
    // distinct-degree filtration of w
    std::vector<Poly> primes;
    Poly v = w;
    Poly x = T();
    Poly xq = rem(x, v);
    int deg = 0;
    while (v.degree() > 0) {
      ++deg;
      if (2 * deg > v.degree()) {
        primes.push_back(v);  // remaining part is a single prime
        break;
      }
      xq = pow_mod(xq, q(), v);  // x^{q^deg} mod v
      Poly g2 = gcd(add(xq, x), v);
      if (g2.degree() > 0) {
        split_distinct_degree(g2, deg, &primes);
        v = quot(v, g2);
        xq = rem(xq, v);
      }
    }
    // extract full multiplicity of each prime from h
    Poly rest = h;
    for (const Poly& p : primes) {
      int e = 0;
      while (true) {
        auto [qq, rr] = divrem(rest, p);
        if (!rr.is_zero()) break;
        rest = qq;
        ++e;
      }
      acc.emplace_back(p, e * mult);
    }
    if (rest.degree() > 0) run(sqrt(rest), 2 * mult);  // rest has all-even multiplicities
  };
  run(g, 1);

  std::sort(acc.begin(), acc.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  out.factors = std::move(acc);
  return out;
}

Poly PolyRing::from_factorization(const Factorization& fac) const {
  Poly r = constant(fac.unit);
  for (const auto& [p, e] : fac.factors) r = mul(r, pow(p, e));
  return r;
}

RadicalParts PolyRing::radical_t(const Poly& m) const {
  if (!m.is_monic()) throw std::invalid_argument("PolyRing::radical_t: requires monic input");
  Factorization fac = factor(m);
  RadicalParts out;
  out.r = one();
  for (const auto& [p, e] : fac.factors) out.r = mul(out.r, p);
  out.t = mul(m, out.r);
  if (is_perfect_square(out.t)) out.mtilde = sqrt(out.t);
  out.mstar = quot(mul(m, m), out.r);
  return out;
}

long long PolyRing::phi(const Poly& f) const {
  if (!f.is_monic()) throw std::invalid_argument("PolyRing::phi: requires monic nonzero input");
  Factorization fac = factor(f);
  long long r = 1;
  for (const auto& [p, e] : fac.factors) {
    long long pd = 1;
    for (int i = 0; i < p.degree(); ++i) pd *= q();
    long long pe = 1;
    for (int i = 0; i < e - 1; ++i) pe *= pd;
    r *= pe * (pd - 1);
  }
  return r;
}

int PolyRing::mu(const Poly& f) const {
  Factorization fac = factor(f);
  for (const auto& [p, e] : fac.factors) {
    if (e > 1) return 0;
  }
  return (fac.factors.size() % 2) ? -1 : 1;
}

Poly PolyRing::rf_reduce(const Poly& n, const Poly& d, const Poly& P) const {
  if (rem(d, P).is_zero()) throw std::domain_error("rf_reduce: P divides the denominator");
  return rem(mul(rem(n, P), mod_inverse(d, P)), P);
}

int PolyRing::rf_trace_to_f2(const Poly& r, const Poly& P) const {
  Poly t = zero(), x = rem(r, P);
  const int steps = F_->e() * P.degree();
  for (int i = 0; i < steps; ++i) {
    t = add(t, x);
    x = rem(mul(x, x), P);
  }
  if (t.is_zero()) return 0;
  if (t.is_one()) return 1;
  throw std::logic_error("rf_trace_to_f2: trace left F_2");
}

// --- text formats ---

std::string PolyRing::to_coeff_string(const Poly& f) const {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i) os << ',';
    os << std::hex << f.c[i].v;
  }
  return os.str();
}

std::string PolyRing::to_pretty_string(const Poly& f) const {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    if (f.c[i].v == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << std::hex << f.c[i].v;
    } else {
      if (f.c[i].v != 1) os << std::hex << f.c[i].v << '*';
      os << 'T';
      if (i > 1) os << '^' << std::dec << i;
    }
  }
  return os.str();
}

Poly PolyRing::parse(const std::string& text) const {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("PolyRing::parse: empty polynomial");
  if (s.find('T') == std::string::npos && s.find(',') != std::string::npos) {
    // comma form
    Poly f;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("PolyRing::parse: bad coefficient list");
      unsigned long v = std::stoul(tok, nullptr, 16);
      if (v >= q()) throw std::invalid_argument("PolyRing::parse: coefficient out of range");
      f.c.push_back(Fe{static_cast<std::uint16_t>(v)});
    }
    f.trim();
    return f;
  }
  // pretty form: terms split on '+'
  Poly f = zero();
  std::istringstream is(s);
  std::string term;
  while (std::getline(is, term, '+')) {
    if (term.empty()) throw std::invalid_argument("PolyRing::parse: empty term");
    Fe coef = F_->one();
    int expn = 0;
    std::size_t tpos = term.find('T');
    if (tpos == std::string::npos) {
      unsigned long v = std::stoul(term, nullptr, 16);
      if (v >= q()) throw std::invalid_argument("PolyRing::parse: coefficient out of range");
      coef = Fe{static_cast<std::uint16_t>(v)};
    } else {
      std::string pre = term.substr(0, tpos);
      if (!pre.empty()) {
        if (pre.back() == '*') pre.pop_back();
        if (!pre.empty()) {
          unsigned long v = std::stoul(pre, nullptr, 16);
          if (v >= q()) throw std::invalid_argument("PolyRing::parse: coefficient out of range");
          coef = Fe{static_cast<std::uint16_t>(v)};
        }
      }
      std::string post = term.substr(tpos + 1);
      if (post.empty()) {
        expn = 1;
      } else if (post[0] == '^') {
        expn = std::stoi(post.substr(1));
      } else {
        throw std::invalid_argument("PolyRing::parse: malformed term");
      }
    }
    Poly t;
    t.c.assign(expn + 1, Fe{0});
    t.c[expn] = coef;
    t.trim();
    f = add(f, t);
  }
  return f;
}

// --- FactorTable ---

FactorTable::FactorTable(const PolyRing& ring, int max_deg)
    : ring_(&ring), max_deg_(max_deg) {
  table_.resize(max_deg + 1);
  primes_.resize(max_deg + 1);
  const long long q = ring.q();
  for (int n = 1; n <= max_deg; ++n) {
    const long long total = ring.monic_count(n);
    table_[n].assign(static_cast<std::size_t>(total), Entry{});
    std::vector<char> marked(static_cast<std::size_t>(total), 0);
    // sieve with primes of degree <= n/2 in canonical order
    for (int p = 1; 2 * p <= n; ++p) {
      for (std::size_t pi = 0; pi < primes_[p].size(); ++pi) {
        const Poly& P = primes_[p][pi];
        const long long cof = ring.monic_count(n - p);
        for (long long gk = 0; gk < cof; ++gk) {
          Poly g = ring.monic_at(n - p, gk);
          Poly f = ring.mul(P, g);
          long long fk = ring.monic_rank(f);
          if (!marked[static_cast<std::size_t>(fk)]) {
            marked[static_cast<std::size_t>(fk)] = 1;
            table_[n][static_cast<std::size_t>(fk)] = Entry{
                static_cast<std::uint8_t>(p), static_cast<std::uint32_t>(pi),
                static_cast<std::uint32_t>(gk)};
          }
        }
      }
    }
    for (long long k = 0; k < total; ++k) {
      if (!marked[static_cast<std::size_t>(k)]) primes_[n].push_back(ring.monic_at(n, k));
    }
  }
  for (int n = 1; n <= max_deg; ++n) {
    for (const Poly& p : primes_[n]) prime_list_.push_back(p);
  }
}

bool FactorTable::is_prime(int deg, long long rank) const {
  if (deg < 1) return false;
  const Entry& e = table_[deg][static_cast<std::size_t>(rank)];
  return e.lpf_deg == 0;
}

Factorization FactorTable::factor(const Poly& f) const {
  if (f.is_zero()) throw std::domain_error("FactorTable::factor: zero polynomial");
  if (f.degree() > max_deg_) throw std::out_of_range("FactorTable::factor: degree beyond table");
  Factorization out;
  out.unit = f.leading();
  Poly g = ring_->monic(f);
  std::vector<std::pair<Poly, int>> acc;
  int deg = g.degree();
  long long rank = ring_->monic_rank(g);
  while (deg > 0) {
    const Entry& e = table_[deg][static_cast<std::size_t>(rank)];
    Poly p;
    if (e.lpf_deg == 0) {
      p = ring_->monic_at(deg, rank);
      deg = 0;
    } else {
      p = primes_[e.lpf_deg][e.lpf_rank];
      deg -= e.lpf_deg;
      rank = e.quot_rank;
    }
    if (!acc.empty() && acc.back().first == p) {
      acc.back().second++;
    } else {
      acc.emplace_back(p, 1);
    }
  }
  std::sort(acc.begin(), acc.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  // merge equal primes that were not adjacent
  std::vector<std::pair<Poly, int>> merged;
  for (auto& pe : acc) {
    if (!merged.empty() && merged.back().first == pe.first) {
      merged.back().second += pe.second;
    } else {
      merged.push_back(pe);
    }
  }
  out.factors = std::move(merged);
  return out;
}

long long FactorTable::phi(const Poly& f) const {
  Factorization fac = factor(f);
  long long r = 1;
  const long long q = ring_->q();
  for (const auto& [p, e] : fac.factors) {
    long long pd = 1;
    for (int i = 0; i < p.degree(); ++i) pd *= q;
    long long pe = 1;
    for (int i = 0; i < e - 1; ++i) pe *= pd;
    r *= pe * (pd - 1);
  }
  return r;
}

int FactorTable::mu(const Poly& f) const {
  Factorization fac = factor(f);
  for (const auto& [p, e] : fac.factors) {
    if (e > 1) return 0;
  }
  return (fac.factors.size() % 2) ? -1 : 1;
}

}  // namespace asqf
