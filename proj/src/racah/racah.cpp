#include "chomfly/racah.hpp"

#include <map>
#include <mutex>

namespace chomfly {

namespace {

RationalQ Q(int n) { return RationalQ(quantum_int(n)); }

RadicalScalar entry(const RationalQ& pre, const RationalQ& radicand) {
  return sqrt_of(radicand) * pre;
}

// fill the lower triangle from the upper one by U_ji = (-1)^(i+j) U_ij
RadMatrix from_upper(RadMatrix u) {
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) u[j][i] = (i + j) % 2 ? -u[i][j] : u[i][j];
  return u;
}

RadMatrix blank(int n) {
  return RadMatrix(static_cast<std::size_t>(n), std::vector<RadicalScalar>(static_cast<std::size_t>(n)));
}

RadMatrix su2_2(int p) {
  RadMatrix u = blank(2);
  u[0][0] = Q(p) / Q(2 * p);
  u[0][1] = entry(Q(2 * p).inverse(), Q(p) * Q(3 * p));
  u[1][1] = u[0][0];
  return from_upper(u);
}

RadMatrix su2_3(int p) {
  RadMatrix u = blank(3);
  u[0][0] = Q(p - 1) * Q(p) / (Q(2 * p - 1) * Q(2 * p));
  u[0][1] = entry(-Q(p) / Q(2 * p), Q(2) * Q(p - 1) * Q(3 * p - 1) / (Q(2 * p - 2) * Q(2 * p - 1)));
  u[0][2] = entry(-Q(2 * p - 1).inverse(),
                  Q(p - 1) * Q(p) * Q(3 * p - 2) * Q(3 * p - 1) / (Q(2 * p - 2) * Q(2 * p)));
  u[1][1] = -Q(p - 1) * Q(p) * Q(4 * p - 2) / (Q(2 * p - 2) * Q(2 * p - 1) * Q(2 * p));
  u[1][2] = entry(Q(p - 1) / Q(2 * p - 2), Q(2) * Q(p) * Q(3 * p - 2) / (Q(2 * p - 1) * Q(2 * p)));
  u[2][2] = Q(p - 1) * Q(p) / (Q(2 * p - 2) * Q(2 * p - 1));
  return from_upper(u);
}

RadMatrix su2_4(int p) {
  RadMatrix u = blank(4);
  u[0][0] = -Q(p - 2) * Q(p - 1) * Q(p) / (Q(2 * p - 2) * Q(2 * p - 1) * Q(2 * p));
  u[0][1] = entry(Q(p - 1) * Q(p) / (Q(2 * p - 2) * Q(2 * p)),
                  Q(p - 2) * Q(3) * Q(3 * p - 2) / (Q(2 * p - 1) * Q(2 * p - 3)));
  u[0][2] = entry(-Q(p) / (Q(2 * p - 1) * Q(2 * p - 2)),
                  Q(3) * Q(p - 2) * Q(p - 1) * Q(3 * p - 3) * Q(3 * p - 2) / (Q(2 * p) * Q(2 * p - 4)));
  u[0][3] = entry(Q(2 * p - 2).inverse(), Q(p - 2) * Q(p - 1) * Q(p) * Q(3 * p - 4) * Q(3 * p - 3) * Q(3 * p - 2) /
                                              (Q(2 * p - 4) * Q(2 * p - 3) * Q(2 * p - 1) * Q(2 * p)));
  u[1][1] = Q(p - 1) * Q(p) * (Q(3 * p - 2) + Q(3 * p - 4) - Q(p)) / (Q(2 * p - 3) * Q(2 * p - 2) * Q(2 * p));
  u[1][2] = entry(Q(p - 2) * (Q(2) * Q(p - 1) - Q(3 * p - 2)) / Q(2 * p - 2),
                  Q(p - 1) * Q(3 * p - 3) / (Q(2 * p - 4) * Q(2 * p - 3) * Q(2 * p - 1) * Q(2 * p)));
  u[1][3] = entry(-Q(p - 2) / (Q(2 * p - 2) * Q(2 * p - 3)),
                  Q(p) * Q(3) * Q(p - 1) * Q(3 * p - 3) * Q(3 * p - 4) / (Q(2 * p) * Q(2 * p - 4)));
  u[2][2] = Q(p - 2) * Q(p - 1) * (Q(2) * Q(3 * p - 3) - Q(p - 2)) / (Q(2 * p - 1) * Q(2 * p - 2) * Q(2 * p - 4));
  u[2][3] = entry(Q(p - 2) * Q(p - 1) / (Q(2 * p - 4) * Q(2 * p - 2)),
                  Q(p) * Q(3) * Q(3 * p - 4) / (Q(2 * p - 3) * Q(2 * p - 1)));
  u[3][3] = -Q(p - 2) * Q(p - 1) * Q(p) / (Q(2 * p - 4) * Q(2 * p - 3) * Q(2 * p - 2));
  return from_upper(u);
}

RadMatrix su2_5(int p) {
  RadMatrix u = blank(5);
  u[0][0] = Q(p - 3) * Q(p - 2) * Q(p - 1) * Q(p) / (Q(2 * p - 3) * Q(2 * p - 2) * Q(2 * p - 1) * Q(2 * p));
  u[0][1] = entry(Q(p - 2) * Q(p - 1) * Q(p) / (Q(2 * p - 3) * Q(2 * p - 2) * Q(2 * p)),
                  Q(4) * Q(p - 3) * Q(3 * p - 3) / (Q(2 * p - 4) * Q(2 * p - 1)));
  u[0][2] = entry(Q(p - 1) * Q(p) / (Q(2 * p - 2) * Q(2 * p - 1)),
                  Q(3) * Q(4) * Q(p - 3) * Q(p - 2) * Q(3 * p - 4) * Q(3 * p - 3) /
                      (Q(2) * Q(2 * p - 5) * Q(2 * p - 4) * Q(2 * p - 3) * Q(2 * p)));
  u[0][3] = entry(Q(p) / (Q(2 * p - 3) * Q(2 * p - 2)),
                  Q(4) * Q(p - 3) * Q(p - 2) * Q(p - 1) * Q(3 * p - 5) * Q(3 * p - 4) * Q(3 * p - 3) /
                      (Q(2 * p - 6) * Q(2 * p - 4) * Q(2 * p - 1) * Q(2 * p)));
  u[0][4] = entry(Q(2 * p - 3).inverse(),
                  Q(p - 3) * Q(p - 2) * Q(p - 1) * Q(p) * Q(3 * p - 6) * Q(3 * p - 5) * Q(3 * p - 4) * Q(3 * p - 3) /
                      (Q(2 * p - 6) * Q(2 * p - 5) * Q(2 * p - 4) * Q(2 * p - 2) * Q(2 * p - 1) * Q(2 * p)));
  u[1][1] = Q(p - 2) * Q(p - 1) * (Q(p - 3) * Q(p - 3) - Q(3) * Q(p - 1) * Q(3 * p - 3)) /
            (Q(2 * p - 4) * Q(2 * p - 3) * Q(2 * p - 2) * Q(2 * p));
  // [p-2]^(3/2) = [p-2] sqrt([p-2])
  u[1][2] = entry(-Q(p - 2) * Q(p - 1) * Q(p) * Q(4 * p - 6) / (Q(2 * p - 4) * Q(2 * p - 3) * Q(2 * p - 2)),
                  Q(p - 2) * Q(2) * Q(3) * Q(3 * p - 4) / (Q(2 * p - 5) * Q(2 * p - 3) * Q(2 * p - 1) * Q(2 * p)));
  u[1][3] = entry(Q(p - 3) * (Q(3) * Q(p - 1) - Q(3 * p - 3)) / (Q(2 * p - 4) * Q(2 * p - 3) * Q(2 * p - 2)),
                  Q(p - 2) * Q(p - 1) * Q(3 * p - 5) * Q(3 * p - 4) / (Q(2 * p - 6) * Q(2 * p)));
  u[1][4] = entry(Q(p - 3) / (Q(2 * p - 4) * Q(2 * p - 3)),
                  Q(4) * Q(p - 2) * Q(p - 1) * Q(p) * Q(3 * p - 6) * Q(3 * p - 5) * Q(3 * p - 4) /
                      (Q(2 * p - 6) * Q(2 * p - 5) * Q(2 * p - 2) * Q(2 * p)));
  u[2][2] = Q(p - 2) *
            (Q(p - 3) * Q(p - 3) * Q(p - 2) - Q(2) * Q(2) * Q(p - 2) * Q(p - 2) * Q(3 * p - 4) +
             Q(p - 3) * Q(3 * p - 4) * Q(3 * p - 3)) /
            (Q(2 * p - 5) * Q(2 * p - 4) * Q(2 * p - 2) * Q(2 * p - 1));
  u[2][3] = entry(-Q(p - 3) * Q(p - 2) * Q(p - 1) * Q(4 * p - 6) / (Q(2 * p - 4) * Q(2 * p - 3) * Q(2 * p - 2)),
                  Q(p - 1) * Q(2) * Q(3) * Q(3 * p - 5) / (Q(2 * p - 6) * Q(2 * p - 5) * Q(2 * p - 3) * Q(2 * p - 1)));
  u[2][4] = entry(Q(p - 3) * Q(p - 2) / (Q(2 * p - 5) * Q(2 * p - 4)),
                  Q(3) * Q(4) * Q(p - 1) * Q(p) * Q(3 * p - 6) * Q(3 * p - 5) /
                      (Q(2) * Q(2 * p - 6) * Q(2 * p - 3) * Q(2 * p - 2) * Q(2 * p - 1)));
  u[3][3] = Q(p - 3) * Q(p - 2) * Q(p - 1) * (Q(p - 3) - Q(3) * Q(3 * p - 5)) /
            (Q(2 * p - 6) * Q(2 * p - 4) * Q(2 * p - 3) * Q(2 * p - 2));
  u[3][4] = entry(Q(p - 3) * Q(p - 2) * Q(p - 1) / (Q(2 * p - 6) * Q(2 * p - 4) * Q(2 * p - 3)),
                  Q(4) * Q(p) * Q(3 * p - 6) / (Q(2 * p - 5) * Q(2 * p - 2)));
  u[4][4] = Q(p - 3) * Q(p - 2) * Q(p - 1) * Q(p) / (Q(2 * p - 6) * Q(2 * p - 5) * Q(2 * p - 4) * Q(2 * p - 3));
  return from_upper(u);
}

void certify(const RadMatrix& u, const std::string& what) {
  if (!is_identity(u * transpose(u))) throw NonOrthogonal(what + ": U U^T != 1");
  for (const auto& row : u)
    for (const auto& e : row)
      for (const auto& [rad, c] : e.parts())
        if (rad.sign < 0) throw NonOrthogonal(what + ": imaginary entry " + e.str());
}

int lead_sign(const LaurentQ& p) { return p.is_zero() ? 0 : sgn(p.coeff(p.size() - 1)); }

// asymptotic signs of the upper off-diagonal entries (row-major) of U(N|p)
const std::vector<int>& eigen_signs(int n) {
  static const std::vector<int> s2{1};
  static const std::vector<int> s3{-1, -1, 1};
  static const std::vector<int> s4{1, -1, 1, -1, -1, 1};
  static const std::vector<int> s5{1, 1, 1, 1, -1, -1, 1, -1, 1, 1};
  switch (n) {
    case 2: return s2;
    case 3: return s3;
    case 4: return s4;
    default: return s5;
  }
}

LaurentQ xv(const SignedMonomial& m) { return m.value(); }

}  // namespace

RadMatrix identity_matrix(int n) {
  RadMatrix m = blank(n);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = RadicalScalar(1);
  return m;
}

RadMatrix transpose(const RadMatrix& m) {
  RadMatrix t = blank(static_cast<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t[j][i] = m[i][j];
  return t;
}

RadMatrix operator*(const RadMatrix& a, const RadMatrix& b) {
  const std::size_t n = a.size();
  RadMatrix c = blank(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

bool is_identity(const RadMatrix& m) {
  const RadicalScalar one(1);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i == j ? !(m[i][j] == one) : !m[i][j].is_zero()) return false;
  return true;
}

bool is_sign_symmetric(const RadMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      const RadicalScalar lhs = (i + j) % 2 ? -m[i][j] : m[i][j];
      if (!(lhs == m[j][i])) return false;
    }
  return true;
}

RadMatrix conjugate_by_signs(const RadMatrix& m, const std::vector<int>& signs) {
  RadMatrix r = m;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (signs[i] * signs[j] < 0) r[i][j] = -m[i][j];
  return r;
}

std::string dump(const RadMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      s += "U[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + m[i][j].str() + "\n";
  return s;
}

RadMatrix racah_su2(int N, int p) {
  if (N < 1 || N > kMaxMultiplicity)
    throw UnsupportedMultiplicity("racah_su2: N = " + std::to_string(N) + " is outside 1.." +
                                  std::to_string(kMaxMultiplicity));
  if (p < N - 1 || p < 1) throw DegenerateP("racah_su2: p = " + std::to_string(p) + " too small for N = " + std::to_string(N));
  static std::mutex mu;
  static std::map<std::pair<int, int>, RadMatrix> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({N, p});
    if (it != cache.end()) return it->second;
  }
  RadMatrix u;
  switch (N) {
    case 1: u = identity_matrix(1); break;
    case 2: u = su2_2(p); break;
    case 3: u = su2_3(p); break;
    case 4: u = su2_4(p); break;
    default: u = su2_5(p); break;
  }
  certify(u, "U(" + std::to_string(N) + "|" + std::to_string(p) + ")");
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(N, p), std::move(u)).first->second;
}

std::vector<SignedMonomial> normalized_eigenvalues(int N, int p) {
  const int k = kQDen;
  switch (N) {
    case 2: return {{1, k * p}, {-1, -k * p}};
    case 3: return {{1, k * 2 * p - 4}, {-1, -4}, {1, -(k * 2 * p - 8)}};
    case 4: return {{1, k * (3 * p - 2)}, {-1, k * (p - 2)}, {1, -k * p}, {-1, -k * (3 * p - 4)}};
    case 5:
      return {{1, k * (4 * p - 4)}, {-1, k * (2 * p - 4)}, {1, -2 * k}, {-1, -k * (2 * p - 2)}, {1, -k * (4 * p - 8)}};
    default: throw UnsupportedMultiplicity("normalized_eigenvalues: N = " + std::to_string(N));
  }
}

RationalQ eigen_offdiag_squared(const std::vector<SignedMonomial>& xi, int i, int j) {
  const int n = static_cast<int>(xi.size());
  const LaurentQ a = xv(xi[i]), b = xv(xi[j]);
  const LaurentQ ainv = LaurentQ::monomial(xi[i].sign, -xi[i].exp6);
  const LaurentQ binv = LaurentQ::monomial(xi[j].sign, -xi[j].exp6);
  LaurentQ den = (a - b) * (a - b);
  for (int k = 0; k < n; ++k)
    if (k != i && k != j) den *= (a - xv(xi[k])) * (b - xv(xi[k]));
  RationalQ body;
  switch (n) {
    case 2: body = RationalQ(a * a + LaurentQ(1) + ainv * ainv); break;
    case 3: body = -RationalQ(a.pow(3) - LaurentQ(1)) * RationalQ(b.pow(3) - LaurentQ(1)) / RationalQ(a * b); break;
    case 4: {
      RationalQ t = RationalQ(a * a - LaurentQ(1)) * RationalQ(b * b - LaurentQ(1));
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const LaurentQ x = a * xv(xi[k]);
        t *= RationalQ(x * x - x + LaurentQ(1)) / RationalQ(x);
      }
      body = -t;
      break;
    }
    default: {
      RationalQ t = RationalQ(a * b) * RationalQ(a + LaurentQ(1) + ainv) * RationalQ(b + LaurentQ(1) + binv);
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        t *= RationalQ((a * xv(xi[k]) + LaurentQ(1)) * (b * xv(xi[k]) + LaurentQ(1)));
      }
      body = -t;
      break;
    }
  }
  return body / RationalQ(den);
}

RationalQ eigen_diagonal(const std::vector<SignedMonomial>& xi, int i) {
  const int n = static_cast<int>(xi.size());
  const LaurentQ a = xv(xi[i]);
  LaurentQ den(1);
  std::vector<LaurentQ> oth;
  for (int k = 0; k < n; ++k) {
    if (k == i) continue;
    oth.push_back(xv(xi[k]));
    den *= k < i ? xv(xi[k]) - a : a - xv(xi[k]);
  }
  LaurentQ s1;
  for (const auto& x : oth) s1 += x;
  RationalQ body;
  switch (n) {
    case 2: body = RationalQ(1); break;
    case 3: body = RationalQ(-(a * s1)); break;
    case 4: {
      LaurentQ s2;
      for (std::size_t u = 0; u < oth.size(); ++u)
        for (std::size_t v = u + 1; v < oth.size(); ++v) s2 += oth[u] * oth[v];
      body = RationalQ(a * (a * s2 - s1));
      break;
    }
    default: {
      RationalQ t1(1), t2;
      for (const auto& x : oth) t1 += RationalQ(x) + RationalQ(x).inverse();
      for (std::size_t u = 0; u < oth.size(); ++u)
        for (std::size_t v = u + 1; v < oth.size(); ++v) t2 += RationalQ(oth[u] * oth[v]).inverse();
      body = RationalQ(a) * (RationalQ(a + LaurentQ(1)) * t1 + t2);
      break;
    }
  }
  return body / RationalQ(den);
}

int asymptotic_sign(const RadicalScalar& s) {
  if (s.is_zero()) return 0;
  if (s.parts().size() != 1) throw std::invalid_argument("asymptotic_sign: expected a single part");
  const auto& [key, c] = *s.parts().begin();
  if (key.sign < 0 || lead_sign(key.body) < 0) throw std::invalid_argument("asymptotic_sign: radicand not positive");
  return lead_sign(c.num()) * lead_sign(c.den());
}

RadMatrix racah_from_eigenvalues(const std::vector<SignedMonomial>& xi) {
  const int n = static_cast<int>(xi.size());
  if (n < 2 || n > kMaxMultiplicity) throw UnsupportedMultiplicity("racah_from_eigenvalues: N = " + std::to_string(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (xi[i] == xi[j]) throw RepeatedEigenvalue("racah_from_eigenvalues: repeated eigenvalue");
  const std::vector<int>& signs = eigen_signs(n);
  RadMatrix u = blank(n);
  std::size_t s = 0;
  for (int i = 0; i < n; ++i) {
    u[i][i] = RadicalScalar(eigen_diagonal(xi, i));
    for (int j = i + 1; j < n; ++j) {
      RadicalScalar v = sqrt_of(eigen_offdiag_squared(xi, i, j));
      u[i][j] = asymptotic_sign(v) == signs[s++] ? v : -v;
    }
  }
  u = from_upper(u);
  certify(u, "eigenvalue form");
  return u;
}

MixingBlock build_block(const BlockSpec& spec) {
  MixingBlock b;
  b.spec = spec;
  const int n = spec.multiplicity();
  if (n > kMaxMultiplicity)
    throw UnsupportedMultiplicity("build_block: multiplicity " + std::to_string(n) + " for " + spec.q.str());
  for (int j = spec.j_min; j <= spec.j_max; ++j)
    b.eigenvalues.push_back({j % 2 ? -1 : 1, kQDen * channel_exponent(spec.r, j)});
  b.U = n == 1 ? identity_matrix(1) : racah_su2(n, spec.r - spec.j_min);
  return b;
}

}  // namespace chomfly
