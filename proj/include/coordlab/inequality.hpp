#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coordlab/model.hpp"

namespace coordlab {

struct RootToleranceExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The three growth regimes of b(k), by the limit behavior of (k-1)a(k):
// B1 diverges, B2 stays bounded, B3 vanishes.
enum class Regime { B1, B2, B3 };
const char* regime_name(Regime r);

// Explicit per-k constants for y(x+y)^k <= (k/(k+1)) a x^{k+1} + b y^{k+1}:
// z0 solves a z^k = (1+z)^{k-1} and b = (1+z0)^{k-1} (1 + z0/(k+1)).
// b_exact is a rational upper bound of the true b (equal at k = 1, where
// z0 = 1/a and b = 1 + 1/(2a) are closed forms), so exact verifiers can
// assert the inequality with no rounding.
struct SmoothCertificate {
  int k = 1;
  Rat a;
  double z0 = 0.0;
  double b = 0.0;
  Rat b_exact;
  Regime regime = Regime::B2;
};

Regime classify_regime(int k, const Rat& a);
SmoothCertificate smooth_certificate(int k, const Rat& a);
SmoothCertificate smooth_certificate(int k, const Rat& a, Regime regime);

// the a(k) chains the PoA proofs instantiate
Rat mu_k(int k);          // (k+1)/(k+2)
Rat spt_chain_a(int k);   // (k+1)/(k(k+2))
Rat equi_chain_a(int k);  // (k+1)/(k(k+2) 2^{k+1})
// certificate lambdas assembled exactly as the proofs compose them
Rat spt_lambda(int k);   // (k+1) * b_exact(k, spt_chain_a)
Rat equi_lambda(int k);  // 2^{k+1} (k+1) * b_exact(k, equi_chain_a)

// Sequences (n_i), (m_i) with a strictly increasing positive (q_i), the
// shape shared by the smooth-SPT / smooth-EQUI lemmas.
struct SequenceTriple {
  std::vector<long> n;
  std::vector<long> m;
  std::vector<Rat> q;

  int size() const { return static_cast<int>(q.size()); }
  void validate() const;
};

// ---- single-case exact checks ----------------------------------------

// y(x+y)^k <= (k/(k+1)) a x^{k+1} + b_exact y^{k+1}
bool check_smooth_simple(const SmoothCertificate& cert, const Rat& x, const Rat& y,
                         Rat* slack = nullptr);
// (k+1)z >= 1 - (1-z)^{k+1} on [0,1]
bool check_lemma_simple(int k, const Rat& z);
// (k+1) sum_{t<=N} (A+tp)^k >= N (A+Np)^k
bool verify_coor_sum(const Rat& A, const Rat& p, int N, int k);
// sum_i sum_{j<=m_i} (A_{i,n_i} + j q_i)^k <= mu sum A_{i,j}^k + lambda sum B_{i,j}^k
bool verify_smooth_spt(const SequenceTriple& t, int k, const Rat& mu, const Rat& lambda,
                       Rat* slack = nullptr);
// sum_i m_i (A_i + m_i q_i)^k <= mu sum n_i A_i^k + lambda sum m_i B_i^k, prefix form
bool verify_smooth_spt_modif(const SequenceTriple& t, int k, const Rat& mu, const Rat& lambda,
                             Rat* slack = nullptr);
// same shape with the tail-count A_i/B_i of the smooth-EQUI lemma
bool verify_smooth_equi(const SequenceTriple& t, int k, const Rat& mu, const Rat& lambda,
                        Rat* slack = nullptr);
// sum SPT^k <= sum EQUI^k <= (2k+2) sum SPT^k on one assignment
bool verify_equi_spt_ratio(const Instance& inst, const Profile& x, int k);
// b a^k <= a^{k+1}/(2(k+1)) + 2^k k^k b^{k+1}/(k+1)
bool verify_ab_inequality(const Rat& a, const Rat& b, int k);

// ---- transcendental pieces --------------------------------------------

// W(y) e^{W(y)} = y for y >= 0, Newton to 1e-12 relative
double lambert_w(double y);
// strict bracket W((k-1)a) < g(k) < 2 W((k-1)a/2) with g = (k-1)/z0
bool verify_g_bounds(int k, const Rat& a, double tol = 1e-9);

// Bell number via the Bell triangle
Int bell(int k);
// partial Dobinski sum sum_{j<=terms} j^k/j! within tol of e*B_k
bool verify_dobinski(int k, int terms, double tol);

// ---- randomized sweeps --------------------------------------------------
// Exact per-case decisions; samples are index-seeded so any thread count
// gives identical reports. parallel=false is the serial reference.

struct SweepReport {
  std::string lemma;
  int k = 0;  // 0 when the sweep mixes k values
  long long samples = 0;
  long long violations = 0;
  double worst_margin = 0.0;  // min over cases of (rhs-lhs)/max(rhs,1)
  std::string worst_case;     // the tightest (or first violating) input

  bool pass() const { return violations == 0; }
};

SweepReport sweep_smooth_simple(const SmoothCertificate& cert, long long samples,
                                std::uint64_t seed, bool parallel = true);
SweepReport sweep_lemma_simple(int k, int grid, long long samples, std::uint64_t seed,
                               bool parallel = true);
SweepReport sweep_coor_sum(long long samples, std::uint64_t seed, bool parallel = true);
SweepReport sweep_smooth_spt(int k, long long samples, std::uint64_t seed, bool parallel = true);
SweepReport sweep_smooth_spt_modif(int k, long long samples, std::uint64_t seed,
                                   bool parallel = true);
SweepReport sweep_smooth_equi(int k, long long samples, std::uint64_t seed, bool parallel = true);
SweepReport sweep_equi_spt_ratio(int k, long long samples, std::uint64_t seed,
                                 bool parallel = true);
SweepReport sweep_ab_inequality(long long samples, std::uint64_t seed, bool parallel = true);
// the four Psi_k properties plus the recurrence-vs-definition cross-check
SweepReport sweep_psi_properties(long long samples, std::uint64_t seed, bool parallel = true);

}  // namespace coordlab
