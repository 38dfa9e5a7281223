#include "chomfly/symfun.hpp"

#include <mutex>
#include <numeric>

namespace chomfly {

namespace {

Partition normalized(Partition mu) {
  std::sort(mu.begin(), mu.end(), std::greater<>());
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  return mu;
}

// characters by rim-hook removal on beta-sets
int mn_rec(const std::vector<int>& rows, const Partition& mu, std::size_t from,
           std::map<std::pair<std::vector<int>, Partition>, int>& memo) {
  if (from == mu.size()) return rows.empty() ? 1 : 0;
  Partition rest(mu.begin() + static_cast<std::ptrdiff_t>(from), mu.end());
  auto key = std::make_pair(rows, rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int k = mu[from];
  const int len = static_cast<int>(rows.size());
  std::vector<int> beta(rows.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)] + len - 1 - i;
  int total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int to = beta[i] - k;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > to && b < beta[i]) ++between;
    std::vector<int> nb = beta;
    nb[i] = to;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> nrows;
    for (int j = 0; j < len; ++j) {
      const int r = nb[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (r > 0) nrows.push_back(r);
    }
    const int sub = mn_rec(nrows, mu, from + 1, memo);
    total += between % 2 ? -sub : sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::vector<int>, Partition>, int>& mn_memo() {
  static std::map<std::pair<std::vector<int>, Partition>, int> memo;
  return memo;
}

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

template <class C>
std::map<YoungDiagram, C> expand_impl(const PowerSumPoly<C>& f, int degree) {
  for (const auto& [mu, c] : f.terms())
    if (partition_size(mu) != degree) throw std::invalid_argument("expand_in_schur: input is not homogeneous");
  std::map<YoungDiagram, C> out;
  for (const YoungDiagram& q : partitions(degree)) {
    C s{};
    for (const auto& [mu, c] : f.terms()) {
      const int chi = murnaghan_nakayama(q, mu);
      if (chi) s += c * C(chi);
    }
    if (!coeff_is_zero(s)) out.emplace(q, s);
  }
  return out;
}

}  // namespace

int partition_size(const Partition& mu) { return std::accumulate(mu.begin(), mu.end(), 0); }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

mpz_class z_mu(const Partition& mu) {
  std::map<int, unsigned long> mult;
  for (int k : mu) ++mult[k];
  mpz_class z = 1;
  for (const auto& [k, m] : mult) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(k), m);
    z *= f * pk;
  }
  return z;
}

int murnaghan_nakayama(const YoungDiagram& q, const Partition& mu) {
  if (q.size() != partition_size(mu)) throw std::invalid_argument("murnaghan_nakayama: size mismatch");
  const Partition m = normalized(mu);
  std::lock_guard<std::mutex> lock(memo_mutex());
  return mn_rec(q.rows(), m, 0, mn_memo());
}

PowerSumQ schur_in_powersums(const YoungDiagram& q) {
  PowerSumQ f;
  for (const Partition& mu : partitions_of(q.size())) {
    const int chi = murnaghan_nakayama(q, mu);
    if (chi) f.add(mu, mpq_class(chi) / z_mu(mu));
  }
  return f;
}

std::map<YoungDiagram, mpq_class> expand_in_schur(const PowerSumQ& f, int degree) { return expand_impl(f, degree); }

std::map<YoungDiagram, LaurentQ> expand_in_schur(const PowerSumL& f, int degree) { return expand_impl(f, degree); }

RationalQA topological_locus(const PowerSumQ& f) {
  RationalQA sum;
  for (const auto& [mu, c] : f.terms()) {
    LaurentQA num{LaurentQ(c)};
    LaurentQ den(1);
    for (int k : mu) {
      num = num * curly_bracket(LaurentQA::monomial(1, k, 0));
      den *= LaurentQ::q_pow(k) - LaurentQ::q_pow(-k);
    }
    sum = sum + RationalQA(num, den);
  }
  return sum;
}

PowerSumQ cut_and_join(const PowerSumQ& f) {
  PowerSumQ r;
  for (const auto& [mu, c] : f.terms()) {
    std::map<int, int> mult;
    for (int k : mu) ++mult[k];
    auto without = [&](std::initializer_list<int> drop, std::initializer_list<int> add) {
      Partition nu = mu;
      for (int d : drop) nu.erase(std::find(nu.begin(), nu.end(), d));
      nu.insert(nu.end(), add.begin(), add.end());
      return normalized(nu);
    };
    // cut: p_{a+b} -> (a+b)/2 p_a p_b
    for (const auto& [k, m] : mult)
      for (int a = 1; a < k; ++a) r.add(without({k}, {a, k - a}), c * mpq_class(m * k) / 2);
    // join: p_a p_b -> a b / 2 p_{a+b}, ordered pairs
    for (const auto& [a, ma] : mult)
      for (const auto& [b, mb] : mult) {
        const int pairs = a == b ? ma * (ma - 1) : ma * mb;
        if (pairs) r.add(without({a, b}, {a + b}), c * mpq_class(pairs * a * b) / 2);
      }
  }
  return r;
}

}  // namespace chomfly
