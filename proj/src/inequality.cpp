#include "coordlab/inequality.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "coordlab/policies.hpp"

namespace coordlab {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::B1: return "B1";
    case Regime::B2: return "B2";
    case Regime::B3: return "B3";
  }
  return "?";
}

Regime classify_regime(int k, const Rat& a) {
  Rat v = (k - 1) * a;
  if (v > 2) return Regime::B1;
  if (2 * v < 1) return Regime::B3;
  return Regime::B2;
}

SmoothCertificate smooth_certificate(int k, const Rat& a) {
  return smooth_certificate(k, a, classify_regime(k, a));
}

SmoothCertificate smooth_certificate(int k, const Rat& a, Regime regime) {
  if (k < 1) throw std::invalid_argument("smooth_certificate: k must be >= 1");
  if (a <= 0 || a > 1) throw std::invalid_argument("smooth_certificate: a must lie in (0, 1]");

  SmoothCertificate cert;
  cert.k = k;
  cert.a = a;
  cert.regime = regime;

  if (k == 1) {
    // a z = 1 has the closed-form root; keep everything exact
    Rat z0 = 1 / a;
    cert.z0 = z0.get_d();
    cert.b_exact = 1 + z0 / 2;
    cert.b = cert.b_exact.get_d();
    return cert;
  }

  const double ad = a.get_d();
  auto h = [&](double z) { return ad * std::pow(z, k) - std::pow(1.0 + z, k - 1); };

  // h(1) = a - 2^{k-1} <= 0 and h -> +inf, so the root lies in [1, hi]
  double lo = 1.0, hi = 2.0;
  while (h(hi) <= 0.0) {
    hi *= 2.0;
    if (hi > 1e18) throw RootToleranceExceeded("smooth_certificate: no bracket found");
  }
  while (hi - lo > 1e-14 * hi) {
    double mid = 0.5 * (lo + hi);
    (h(mid) < 0.0 ? lo : hi) = mid;
  }
  double z = 0.5 * (lo + hi);
  for (int it = 0; it < 50; ++it) {
    double hv = h(z);
    double hd = ad * k * std::pow(z, k - 1) - (k - 1) * std::pow(1.0 + z, k - 2);
    if (hd == 0.0) break;
    double step = hv / hd;
    z -= step;
    if (std::abs(step) <= 1e-15 * z) break;
  }
  double residual = std::abs(h(z)) / std::pow(1.0 + z, k - 1);
  if (!(residual < 1e-12))
    throw RootToleranceExceeded("smooth_certificate: residual " + std::to_string(residual));

  cert.z0 = z;
  cert.b = std::pow(1.0 + z, k - 1) * (1.0 + z / (k + 1));
  cert.b_exact = rat_upper_bound(cert.b);
  return cert;
}

Rat mu_k(int k) { return make_rat(k + 1, k + 2); }

Rat spt_chain_a(int k) { return Rat(k + 1) / (Rat(k) * (k + 2)); }

Rat equi_chain_a(int k) {
  Rat two_pow(Int(1) << (k + 1));
  return Rat(k + 1) / (Rat(k) * (k + 2) * two_pow);
}

Rat spt_lambda(int k) {
  SmoothCertificate cert = smooth_certificate(k, spt_chain_a(k), Regime::B2);
  return (k + 1) * cert.b_exact;
}

Rat equi_lambda(int k) {
  SmoothCertificate cert = smooth_certificate(k, equi_chain_a(k), Regime::B3);
  return Rat(Int(1) << (k + 1)) * (k + 1) * cert.b_exact;
}

void SequenceTriple::validate() const {
  if (n.size() != q.size() || m.size() != q.size())
    throw std::invalid_argument("SequenceTriple: n, m, q must share one length");
  for (long v : n)
    if (v < 0) throw std::invalid_argument("SequenceTriple: negative n_i");
  for (long v : m)
    if (v < 0) throw std::invalid_argument("SequenceTriple: negative m_i");
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0) throw std::invalid_argument("SequenceTriple: q must be positive");
    if (i > 0 && !(q[i - 1] < q[i]))
      throw std::invalid_argument("SequenceTriple: q must be strictly increasing");
  }
}

bool check_smooth_simple(const SmoothCertificate& cert, const Rat& x, const Rat& y, Rat* slack) {
  const int k = cert.k;
  Rat lhs = y * rat_pow(x + y, k);
  Rat rhs = make_rat(k, k + 1) * cert.a * rat_pow(x, k + 1) + cert.b_exact * rat_pow(y, k + 1);
  if (slack) *slack = rhs - lhs;
  return lhs <= rhs;
}

bool check_lemma_simple(int k, const Rat& z) {
  if (z < 0 || z > 1) throw std::invalid_argument("check_lemma_simple: z must lie in [0, 1]");
  return (k + 1) * z >= 1 - rat_pow(1 - z, k + 1);
}

bool verify_coor_sum(const Rat& A, const Rat& p, int N, int k) {
  if (A < 0 || p <= 0) throw std::invalid_argument("verify_coor_sum: need A >= 0, p > 0");
  Rat lhs = 0;
  for (int t = 1; t <= N; ++t) lhs += rat_pow(A + t * p, k);
  return (k + 1) * lhs >= N * rat_pow(A + N * p, k);
}

bool verify_smooth_spt(const SequenceTriple& t, int k, const Rat& mu, const Rat& lambda,
                       Rat* slack) {
  t.validate();
  const int P = t.size();
  Rat lhs = 0, sum_a = 0, sum_b = 0;
  Rat pref_n = 0, pref_m = 0;
  for (int i = 0; i < P; ++i) {
    Rat top = pref_n + t.n[i] * t.q[i];  // A_{i,n_i}
    for (long j = 1; j <= t.m[i]; ++j) lhs += rat_pow(top + j * t.q[i], k);
    for (long j = 1; j <= t.n[i]; ++j) sum_a += rat_pow(pref_n + j * t.q[i], k);
    for (long j = 1; j <= t.m[i]; ++j) sum_b += rat_pow(pref_m + j * t.q[i], k);
    pref_n += t.n[i] * t.q[i];
    pref_m += t.m[i] * t.q[i];
  }
  Rat rhs = mu * sum_a + lambda * sum_b;
  if (slack) *slack = rhs - lhs;
  return lhs <= rhs;
}

bool verify_smooth_spt_modif(const SequenceTriple& t, int k, const Rat& mu, const Rat& lambda,
                             Rat* slack) {
  t.validate();
  const int P = t.size();
  Rat lhs = 0, sum_a = 0, sum_b = 0;
  Rat pref_n = 0, pref_m = 0;
  for (int i = 0; i < P; ++i) {
    pref_n += t.n[i] * t.q[i];  // A_i
    pref_m += t.m[i] * t.q[i];  // B_i
    lhs += t.m[i] * rat_pow(pref_n + t.m[i] * t.q[i], k);
    sum_a += t.n[i] * rat_pow(pref_n, k);
    sum_b += t.m[i] * rat_pow(pref_m, k);
  }
  Rat rhs = mu * sum_a + lambda * sum_b;
  if (slack) *slack = rhs - lhs;
  return lhs <= rhs;
}

bool verify_smooth_equi(const SequenceTriple& t, int k, const Rat& mu, const Rat& lambda,
                        Rat* slack) {
  t.validate();
  const int P = t.size();
  long tail_n = 0, tail_m = 0;
  for (int i = 0; i < P; ++i) {
    tail_n += t.n[i];
    tail_m += t.m[i];
  }
  Rat lhs = 0, sum_a = 0, sum_b = 0;
  Rat pref_n = 0, pref_m = 0;
  for (int i = 0; i < P; ++i) {
    Rat a_i = pref_n + tail_n * t.q[i];
    Rat b_i = pref_m + tail_m * t.q[i];
    lhs += t.m[i] * rat_pow(a_i + t.m[i] * t.q[i], k);
    sum_a += t.n[i] * rat_pow(a_i, k);
    sum_b += t.m[i] * rat_pow(b_i, k);
    pref_n += t.n[i] * t.q[i];
    pref_m += t.m[i] * t.q[i];
    tail_n -= t.n[i];
    tail_m -= t.m[i];
  }
  Rat rhs = mu * sum_a + lambda * sum_b;
  if (slack) *slack = rhs - lhs;
  return lhs <= rhs;
}

bool verify_equi_spt_ratio(const Instance& inst, const Profile& x, int k) {
  Rat spt_sum = 0, equi_sum = 0;
  for (const auto& c : spt_costs(inst, x, k).pow_costs) spt_sum += c.value();
  for (const auto& c : equi_costs(inst, x, k).pow_costs) equi_sum += c.value();
  return spt_sum <= equi_sum && equi_sum <= (2 * k + 2) * spt_sum;
}

bool verify_ab_inequality(const Rat& a, const Rat& b, int k) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("verify_ab_inequality: need a, b > 0");
  Int kk;
  mpz_ui_pow_ui(kk.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(k));
  Rat factor = Rat((Int(1) << k) * kk) / (k + 1);
  Rat lhs = b * rat_pow(a, k);
  Rat rhs = rat_pow(a, k + 1) / (2 * (k + 1)) + factor * rat_pow(b, k + 1);
  return lhs <= rhs;
}

double lambert_w(double y) {
  if (y < 0) throw std::invalid_argument("lambert_w: negative argument");
  if (y == 0.0) return 0.0;
  double w = y > std::exp(1.0) ? std::log(y) - std::log(std::log(y)) : std::log1p(y);
  for (int it = 0; it < 200; ++it) {
    double ew = std::exp(w);
    double f = w * ew - y;
    if (std::abs(f) <= 1e-12 * y) return w;
    w -= f / (ew * (w + 1.0));
  }
  throw NonConvergence("lambert_w: no convergence for y = " + std::to_string(y));
}

bool verify_g_bounds(int k, const Rat& a, double tol) {
  if (k < 2) throw std::invalid_argument("verify_g_bounds: needs k >= 2");
  SmoothCertificate cert = smooth_certificate(k, a);
  double g = (k - 1) / cert.z0;
  double arg = ((k - 1) * a).get_d();
  double lo = lambert_w(arg);
  double hi = 2.0 * lambert_w(arg / 2.0);
  return lo + tol < g && g < hi - tol;
}

Int bell(int k) {
  if (k < 0) throw std::invalid_argument("bell: negative index");
  std::vector<Int> row{1};
  for (int r = 1; r <= k; ++r) {
    std::vector<Int> next(r + 1);
    next[0] = row.back();
    for (int j = 1; j <= r; ++j) next[j] = next[j - 1] + row[j - 1];
    row = std::move(next);
  }
  return row[0];
}

bool verify_dobinski(int k, int terms, double tol) {
  if (terms < 0 || terms > 170) throw std::invalid_argument("verify_dobinski: terms out of range");
  long double sum = (k == 0) ? 1.0L : 0.0L;  // j = 0 contributes 0^k/0!
  long double fact = 1.0L;
  for (int j = 1; j <= terms; ++j) {
    fact *= j;
    sum += std::pow(static_cast<long double>(j), k) / fact;
  }
  double target = std::exp(1.0) * bell(k).get_d();
  return std::abs(static_cast<double>(sum) - target) <= tol * std::max(1.0, target);
}

// ---- randomized sweep machinery -----------------------------------------

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t idx) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (idx + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

long rand_long(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Rat rand_rat(std::mt19937_64& rng, long num_lo, long num_hi, long den_hi) {
  return make_rat(rand_long(rng, num_lo, num_hi), rand_long(rng, 1, den_hi));
}

// mantissa in [1, 10) times 10^e for e in [-3, 2]: six decades, exact
Rat rand_log_uniform(std::mt19937_64& rng) {
  long mant = rand_long(rng, 1000, 9999);
  long e = rand_long(rng, -3, 2);
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(3 - e));
  Rat r(Int(mant), scale);
  r.canonicalize();
  return r;
}

SequenceTriple rand_triple(std::mt19937_64& rng, int max_p, long max_count, long max_inc) {
  SequenceTriple t;
  int P = static_cast<int>(rand_long(rng, 1, max_p));
  Rat acc = 0;
  for (int i = 0; i < P; ++i) {
    t.n.push_back(rand_long(rng, 0, max_count));
    t.m.push_back(rand_long(rng, 0, max_count));
    acc += rand_rat(rng, 1, max_inc, max_inc);
    t.q.push_back(acc);
  }
  return t;
}

std::string triple_str(const SequenceTriple& t) {
  std::ostringstream out;
  out << "n=[";
  for (std::size_t i = 0; i < t.n.size(); ++i) out << (i ? "," : "") << t.n[i];
  out << "] m=[";
  for (std::size_t i = 0; i < t.m.size(); ++i) out << (i ? "," : "") << t.m[i];
  out << "] q=[";
  for (std::size_t i = 0; i < t.q.size(); ++i) out << (i ? "," : "") << rat_str(t.q[i]);
  out << "]";
  return out.str();
}

using CaseFn = std::function<bool(std::uint64_t idx, double* margin, std::string* note)>;

SweepReport run_sweep(std::string lemma, int k, long long samples, std::uint64_t seed,
                      bool parallel, const CaseFn& fn) {
  SweepReport report;
  report.lemma = std::move(lemma);
  report.k = k;
  report.samples = samples;

  long long violations = 0;
  double worst = std::numeric_limits<double>::infinity();
  long long worst_idx = std::numeric_limits<long long>::max();
  long long first_violation = std::numeric_limits<long long>::max();

#pragma omp parallel if (parallel)
  {
    long long local_viol = 0;
    double local_worst = std::numeric_limits<double>::infinity();
    long long local_worst_idx = std::numeric_limits<long long>::max();
    long long local_first = std::numeric_limits<long long>::max();

#pragma omp for schedule(static) nowait
    for (long long i = 0; i < samples; ++i) {
      double margin = std::numeric_limits<double>::infinity();
      if (!fn(static_cast<std::uint64_t>(i), &margin, nullptr)) {
        ++local_viol;
        local_first = std::min(local_first, i);
      }
      if (margin < local_worst || (margin == local_worst && i < local_worst_idx)) {
        local_worst = margin;
        local_worst_idx = i;
      }
    }

#pragma omp critical
    {
      violations += local_viol;
      first_violation = std::min(first_violation, local_first);
      if (local_worst < worst || (local_worst == worst && local_worst_idx < worst_idx)) {
        worst = local_worst;
        worst_idx = local_worst_idx;
      }
    }
  }

  report.violations = violations;
  report.worst_margin = worst;
  long long describe = first_violation != std::numeric_limits<long long>::max()
                           ? first_violation
                           : (worst_idx != std::numeric_limits<long long>::max() ? worst_idx : -1);
  if (describe >= 0) {
    double m = 0;
    std::string note;
    fn(static_cast<std::uint64_t>(describe), &m, &note);
    report.worst_case = note;
  }
  return report;
}

}  // namespace

SweepReport sweep_smooth_simple(const SmoothCertificate& cert, long long samples,
                                std::uint64_t seed, bool parallel) {
  CaseFn fn = [&cert, seed](std::uint64_t idx, double* margin, std::string* note) {
    std::mt19937_64 rng(mix_seed(seed, idx));
    Rat x = rand_log_uniform(rng);
    Rat y = rand_log_uniform(rng);
    Rat slack;
    bool ok = check_smooth_simple(cert, x, y, &slack);
    *margin = slack.get_d();
    if (note) *note = "x=" + rat_str(x) + " y=" + rat_str(y);
    return ok;
  };
  return run_sweep("smooth-simple", cert.k, samples, seed, parallel, fn);
}

SweepReport sweep_lemma_simple(int k, int grid, long long samples, std::uint64_t seed,
                               bool parallel) {
  // deterministic grid first, then the randomized sweep
  long long grid_violations = 0;
  for (int i = 0; i <= grid; ++i)
    if (!check_lemma_simple(k, make_rat(i, grid))) ++grid_violations;

  CaseFn fn = [k, seed](std::uint64_t idx, double* margin, std::string* note) {
    std::mt19937_64 rng(mix_seed(seed, idx));
    long den = rand_long(rng, 1, 1000000);
    Rat z = make_rat(rand_long(rng, 0, den), den);
    Rat slack = (k + 1) * z - (1 - rat_pow(1 - z, k + 1));
    *margin = slack.get_d();
    if (note) *note = "z=" + rat_str(z);
    return slack >= 0;
  };
  SweepReport report = run_sweep("lemma-simple", k, samples, seed, parallel, fn);
  report.samples += grid + 1;
  report.violations += grid_violations;
  return report;
}

SweepReport sweep_coor_sum(long long samples, std::uint64_t seed, bool parallel) {
  CaseFn fn = [seed](std::uint64_t idx, double* margin, std::string* note) {
    std::mt19937_64 rng(mix_seed(seed, idx));
    Rat A = rand_rat(rng, 0, 100, 10);
    Rat p = rand_rat(rng, 1, 100, 10);
    int N = static_cast<int>(rand_long(rng, 1, 50));
    int k = static_cast<int>(rand_long(rng, 0, 8));
    Rat lhs = 0;
    for (int t = 1; t <= N; ++t) lhs += rat_pow(A + t * p, k);
    Rat slack = (k + 1) * lhs - N * rat_pow(A + N * p, k);
    *margin = slack.get_d();
    if (note)
      *note = "A=" + rat_str(A) + " p=" + rat_str(p) + " N=" + std::to_string(N) +
              " k=" + std::to_string(k);
    return slack >= 0;
  };
  return run_sweep("coor-sum", 0, samples, seed, parallel, fn);
}

namespace {

SweepReport sweep_triple_lemma(const char* lemma, int k, const Rat& lambda, long long samples,
                               std::uint64_t seed, bool parallel,
                               bool (*check)(const SequenceTriple&, int, const Rat&, const Rat&,
                                             Rat*)) {
  Rat mu = mu_k(k);
  CaseFn fn = [k, mu, lambda, seed, check](std::uint64_t idx, double* margin, std::string* note) {
    std::mt19937_64 rng(mix_seed(seed, idx));
    SequenceTriple t = rand_triple(rng, 6, 5, 5);
    Rat slack;
    bool ok = check(t, k, mu, lambda, &slack);
    *margin = slack.get_d();
    if (note) *note = triple_str(t);
    return ok;
  };
  return run_sweep(lemma, k, samples, seed, parallel, fn);
}

}  // namespace

SweepReport sweep_smooth_spt(int k, long long samples, std::uint64_t seed, bool parallel) {
  return sweep_triple_lemma("smooth-spt", k, spt_lambda(k), samples, seed, parallel,
                            &verify_smooth_spt);
}

SweepReport sweep_smooth_spt_modif(int k, long long samples, std::uint64_t seed, bool parallel) {
  return sweep_triple_lemma("smooth-spt-modif", k, spt_lambda(k), samples, seed, parallel,
                            &verify_smooth_spt_modif);
}

SweepReport sweep_smooth_equi(int k, long long samples, std::uint64_t seed, bool parallel) {
  return sweep_triple_lemma("smooth-equi", k, equi_lambda(k), samples, seed, parallel,
                            &verify_smooth_equi);
}

SweepReport sweep_equi_spt_ratio(int k, long long samples, std::uint64_t seed, bool parallel) {
  CaseFn fn = [k, seed](std::uint64_t idx, double* margin, std::string* note) {
    std::mt19937_64 rng(mix_seed(seed, idx));
    int n = static_cast<int>(rand_long(rng, 1, 10));
    int m = static_cast<int>(rand_long(rng, 1, 3));
    std::vector<std::vector<Rat>> proc(n);
    for (auto& row : proc)
      for (int i = 0; i < m; ++i) row.push_back(rand_rat(rng, 1, 9, 3));
    Instance inst = Instance::make(m, n, std::move(proc));
    Profile x(n);
    for (int j = 0; j < n; ++j) x[j] = static_cast<int>(rand_long(rng, 0, m - 1));

    Rat spt_sum = 0, equi_sum = 0;
    for (const auto& c : spt_costs(inst, x, k).pow_costs) spt_sum += c.value();
    for (const auto& c : equi_costs(inst, x, k).pow_costs) equi_sum += c.value();
    Rat slack_low = equi_sum - spt_sum;
    Rat slack_high = (2 * k + 2) * spt_sum - equi_sum;
    *margin = std::min(slack_low.get_d(), slack_high.get_d());
    if (note) {
      std::ostringstream out;
      out << "n=" << n << " m=" << m << " sptSum=" << rat_str(spt_sum)
          << " equiSum=" << rat_str(equi_sum);
      *note = out.str();
    }
    return slack_low >= 0 && slack_high >= 0;
  };
  return run_sweep("equi-spt", k, samples, seed, parallel, fn);
}

SweepReport sweep_ab_inequality(long long samples, std::uint64_t seed, bool parallel) {
  CaseFn fn = [seed](std::uint64_t idx, double* margin, std::string* note) {
    std::mt19937_64 rng(mix_seed(seed, idx));
    Rat a = rand_rat(rng, 1, 9999, 100);
    Rat b = rand_rat(rng, 1, 9999, 100);
    int k = static_cast<int>(rand_long(rng, 1, 8));
    Int kk;
    mpz_ui_pow_ui(kk.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(k));
    Rat factor = Rat((Int(1) << k) * kk) / (k + 1);
    Rat slack = rat_pow(a, k + 1) / (2 * (k + 1)) + factor * rat_pow(b, k + 1) - b * rat_pow(a, k);
    *margin = slack.get_d();
    if (note) *note = "a=" + rat_str(a) + " b=" + rat_str(b) + " k=" + std::to_string(k);
    return slack >= 0;
  };
  return run_sweep("ab-inequality", 0, samples, seed, parallel, fn);
}

namespace {

// direct-sum definition: k! * sum over nondecreasing k-tuples of products
Rat psi_direct(std::span<const Rat> values, int k) {
  if (k == 0) return 1;
  if (values.empty()) return 0;
  Rat total = 0;
  const int n = static_cast<int>(values.size());
  std::vector<int> pick(k, 0);
  while (true) {
    Rat prod = 1;
    for (int t = 0; t < k; ++t) prod *= values[pick[t]];
    total += prod;
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == n - 1) --pos;
    if (pos < 0) break;
    int v = pick[pos] + 1;
    for (int t = pos; t < k; ++t) pick[t] = v;  // keep the tuple nondecreasing
  }
  return Rat(int_factorial(k)) * total;
}

}  // namespace

SweepReport sweep_psi_properties(long long samples, std::uint64_t seed, bool parallel) {
  CaseFn fn = [seed](std::uint64_t idx, double* margin, std::string* note) {
    std::mt19937_64 rng(mix_seed(seed, idx));
    int size = static_cast<int>(rand_long(rng, 0, 8));
    int k = static_cast<int>(rand_long(rng, 1, 5));
    std::vector<Rat> values;
    for (int i = 0; i < size; ++i) values.push_back(rand_rat(rng, 0, 9, 4));

    Rat load = 0;
    for (const auto& v : values) load += v;
    Rat p_k = psi(values, k);
    Rat p_prev = psi(values, k - 1);
    Rat p_next = psi(values, k + 1);

    bool ok = true;
    // (i) L^k <= Psi_k <= k! L^k
    ok = ok && rat_pow(load, k) <= p_k && p_k <= Rat(int_factorial(k)) * rat_pow(load, k);
    // (ii) Psi_k^{k+1} <= Psi_{k+1}^k
    ok = ok && rat_pow(p_k, k + 1) <= rat_pow(p_next, k);
    // (iv) Psi_k <= k L Psi_{k-1}
    ok = ok && p_k <= k * load * p_prev;
    // (iii) the recurrence, element appended explicitly
    Rat extra = rand_rat(rng, 0, 9, 4);
    std::vector<Rat> extended = values;
    extended.push_back(extra);
    Rat lhs = psi(extended, k);
    Rat rhs = p_k + k * extra * psi(extended, k - 1);
    ok = ok && lhs == rhs;
    // recurrence matches the direct-sum definition on small sets
    if (size <= 6) ok = ok && p_k == psi_direct(values, k);

    *margin = (Rat(int_factorial(k)) * rat_pow(load, k) - p_k).get_d();
    if (note) {
      std::ostringstream out;
      out << "k=" << k << " values=[";
      for (std::size_t i = 0; i < values.size(); ++i)
        out << (i ? "," : "") << rat_str(values[i]);
      out << "]";
      *note = out.str();
    }
    return ok;
  };
  return run_sweep("psi-properties", 0, samples, seed, parallel, fn);
}

}  // namespace coordlab
