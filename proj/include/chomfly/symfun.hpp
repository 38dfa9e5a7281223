#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "chomfly/qpoly.hpp"
#include "chomfly/young.hpp"

namespace chomfly {

// parts in weakly decreasing order; {3,1,1} is p_3 p_1^2
using Partition = std::vector<int>;

inline bool coeff_is_zero(const mpq_class& c) { return c == 0; }
inline bool coeff_is_zero(const LaurentQ& c) { return c.is_zero(); }

// symmetric function in the power sums p_k with coefficients in C
template <class C>
class PowerSumPoly {
 public:
  using Map = std::map<Partition, C>;

  PowerSumPoly() = default;
  static PowerSumPoly monomial(const Partition& mu, const C& c) {
    PowerSumPoly f;
    f.add(mu, c);
    return f;
  }

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  C coeff(const Partition& mu) const {
    auto it = t_.find(mu);
    return it == t_.end() ? C() : it->second;
  }

  void add(const Partition& mu, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(mu, c);
    if (fresh) return;
    it->second += c;
    if (coeff_is_zero(it->second)) t_.erase(it);
  }

  PowerSumPoly& operator+=(const PowerSumPoly& o) {
    for (const auto& [mu, c] : o.t_) add(mu, c);
    return *this;
  }
  friend PowerSumPoly operator+(PowerSumPoly a, const PowerSumPoly& b) { return a += b; }
  friend PowerSumPoly operator-(PowerSumPoly a, const PowerSumPoly& b) {
    for (const auto& [mu, c] : b.t_) a.add(mu, -c);
    return a;
  }
  friend PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b) {
    PowerSumPoly r;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        Partition m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        std::sort(m.begin(), m.end(), std::greater<>());
        r.add(m, ca * cb);
      }
    return r;
  }
  friend bool operator==(const PowerSumPoly& a, const PowerSumPoly& b) { return a.t_ == b.t_; }

  template <class S>
  PowerSumPoly scaled(const S& s) const {
    PowerSumPoly r;
    for (const auto& [mu, c] : t_) r.add(mu, c * s);
    return r;
  }

 private:
  Map t_;
};

using PowerSumQ = PowerSumPoly<mpq_class>;
using PowerSumL = PowerSumPoly<LaurentQ>;

int partition_size(const Partition& mu);
std::vector<Partition> partitions_of(int n);

// centralizer order z_mu = prod k^m_k m_k!
mpz_class z_mu(const Partition& mu);

// symmetric group character chi_Q(mu); throws std::invalid_argument on size mismatch
int murnaghan_nakayama(const YoungDiagram& q, const Partition& mu);

PowerSumQ schur_in_powersums(const YoungDiagram& q);

// p_k -> p_{mk}
template <class C>
PowerSumPoly<C> adams(const PowerSumPoly<C>& f, int m) {
  if (m < 1) throw std::invalid_argument("adams: m must be positive");
  PowerSumPoly<C> r;
  for (const auto& [mu, c] : f.terms()) {
    Partition nu = mu;
    for (int& k : nu) k *= m;
    r.add(nu, c);
  }
  return r;
}

// coefficients c_Q of f = sum c_Q S_Q; throws std::invalid_argument if f is not homogeneous of this degree
std::map<YoungDiagram, mpq_class> expand_in_schur(const PowerSumQ& f, int degree);
std::map<YoungDiagram, LaurentQ> expand_in_schur(const PowerSumL& f, int degree);

// p_k -> {A^k}/{q^k}
RationalQA topological_locus(const PowerSumQ& f);

// W_2 = 1/2 sum_{a,b} ((a+b) p_a p_b d/dp_{a+b} + a b p_{a+b} d^2/dp_a dp_b)
PowerSumQ cut_and_join(const PowerSumQ& f);

}  // namespace chomfly
