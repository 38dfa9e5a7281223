#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chomfly/qpoly.hpp"
#include "chomfly/radext.hpp"
#include "chomfly/young.hpp"

namespace chomfly {

struct DegenerateP : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct RepeatedEigenvalue : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonOrthogonal : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedMultiplicity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using RadMatrix = std::vector<std::vector<RadicalScalar>>;

RadMatrix identity_matrix(int n);
RadMatrix transpose(const RadMatrix& m);
RadMatrix operator*(const RadMatrix& a, const RadMatrix& b);
bool is_identity(const RadMatrix& m);
// sigma U sigma == U^T with sigma = diag(+1, -1, +1, ...)
bool is_sign_symmetric(const RadMatrix& m);
// D U D for D = diag(signs)
RadMatrix conjugate_by_signs(const RadMatrix& m, const std::vector<int>& signs);
std::string dump(const RadMatrix& m);

// sign * q^(exp6 / 6)
struct SignedMonomial {
  int sign = 1;
  int exp6 = 0;
  LaurentQ value() const { return LaurentQ::monomial(sign, exp6); }
  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

inline constexpr int kMaxMultiplicity = 5;

// SU_q(2) Racah matrix U(N|p) from the closed quantum-integer forms, N in 1..5.
// Throws DegenerateP for p < N - 1 and NonOrthogonal if the certificate fails.
RadMatrix racah_su2(int N, int p);

// normalized eigenvalues attached to U(N|p)
std::vector<SignedMonomial> normalized_eigenvalues(int N, int p);

// squared off-diagonal entry and diagonal entry of the eigenvalue form
RationalQ eigen_offdiag_squared(const std::vector<SignedMonomial>& xi, int i, int j);
RationalQ eigen_diagonal(const std::vector<SignedMonomial>& xi, int i);

// Racah matrix rebuilt from normalized eigenvalues alone, N = xi.size() in 2..5.
RadMatrix racah_from_eigenvalues(const std::vector<SignedMonomial>& xi);

// sign of the leading term as q -> +infinity of a single-part scalar (0 for zero)
int asymptotic_sign(const RadicalScalar& s);

struct MixingBlock {
  BlockSpec spec;
  std::vector<SignedMonomial> eigenvalues;  // j ascending
  RadMatrix U;
  int size() const { return static_cast<int>(eigenvalues.size()); }
};

MixingBlock build_block(const BlockSpec& spec);

}  // namespace chomfly
