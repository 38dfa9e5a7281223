#include "zpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace chomfly::zpoly {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// primes just below 2^31, generated on demand
u64 nth_prime(std::size_t i) {
  static thread_local std::vector<u64> primes;
  u64 next = primes.empty() ? (u64{1} << 31) - 1 : primes.back() - 2;
  while (primes.size() <= i) {
    while (!is_prime(next)) next -= 2;
    primes.push_back(next);
    next -= 2;
  }
  return primes[i];
}

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const ZPoly& a, u64 p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  mtrim(r);
  return r;
}

void mod_rem(ModPoly& a, const ModPoly& b, u64 p) {
  const u64 ib = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 f = a.back() * ib % p;
    const std::size_t sh = a.size() - b.size();
    if (f) {
      const u64 nf = p - f;
      for (std::size_t i = 0; i + 1 < b.size(); ++i) a[sh + i] = (a[sh + i] + nf * b[i]) % p;
    }
    a.pop_back();
    mtrim(a);
  }
}

ModPoly mod_gcd(ModPoly a, ModPoly b, u64 p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    mod_rem(a, b, p);
    std::swap(a, b);
  }
  const u64 il = invmod(a.back(), p);
  for (auto& c : a) c = c * il % p;
  return a;
}

}  // namespace

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive(const ZPoly& a) {
  mpz_class g = content(a);
  if (g == 0) return {};
  if (a.back() < 0) g = -g;
  if (g == 1) return a;
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  return r;
}

std::optional<ZPoly> divexact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  // cheap rejection on the constant terms
  if (b[0] != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) return std::nullopt;
  ZPoly rem = a;
  const std::size_t n = a.size() - b.size() + 1;
  ZPoly q(n);
  const mpz_class& lb = b.back();
  for (std::size_t k = n; k-- > 0;) {
    mpz_class& top = rem[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
      mpz_submul(rem[k + i].get_mpz_t(), q[k].get_mpz_t(), b[i].get_mpz_t());
    top = 0;
  }
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (rem[i] != 0) return std::nullopt;
  return q;
}

GcdResult gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) throw std::domain_error("gcd of zero polynomial");
  if (a.size() == 1 || b.size() == 1) return {ZPoly{1}, a, b};
  if (a == b) return {a, ZPoly{1}, ZPoly{1}};

  mpz_class lc_g;
  mpz_gcd(lc_g.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  ZPoly h;         // CRT image of lc_g/lc(G) * G, symmetric residues
  mpz_class m = 0; // modulus of h
  int deg = std::min(degree(a), degree(b)) + 1;
  for (std::size_t pi = 0;; ++pi) {
    const u64 p = nth_prime(pi);
    if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0) continue;
    ModPoly gp = mod_gcd(reduce(a, p), reduce(b, p), p);
    const int dp = static_cast<int>(gp.size()) - 1;
    if (dp == 0) return {ZPoly{1}, a, b};
    if (dp > deg) continue;
    const u64 l = mpz_fdiv_ui(lc_g.get_mpz_t(), p);
    for (auto& c : gp) c = c * l % p;
    bool stable = false;
    if (dp < deg) {
      deg = dp;
      h.assign(gp.size(), 0);
      for (std::size_t i = 0; i < gp.size(); ++i) h[i] = static_cast<unsigned long>(gp[i]);
      m = static_cast<unsigned long>(p);
    } else {
      // h + m * ((g - h) / m mod p)
      const u64 minv = invmod(mpz_fdiv_ui(m.get_mpz_t(), p), p);
      stable = true;
      for (std::size_t i = 0; i < gp.size(); ++i) {
        const u64 hi = mpz_fdiv_ui(h[i].get_mpz_t(), p);
        const u64 t = (gp[i] + p - hi) % p * minv % p;
        if (t) {
          stable = false;
          mpz_addmul_ui(h[i].get_mpz_t(), m.get_mpz_t(), t);
        }
      }
      m *= static_cast<unsigned long>(p);
    }
    const mpz_class half = m / 2;
    for (auto& c : h)
      if (c > half) c -= m;
    if (!stable) continue;
    ZPoly cand = primitive(h);
    auto qa = divexact(a, cand);
    if (!qa) continue;
    auto qb = divexact(b, cand);
    if (!qb) continue;
    return {std::move(cand), std::move(*qa), std::move(*qb)};
  }
}

}  // namespace chomfly::zpoly
