#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coordlab/policies.hpp"

namespace coordlab {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoEquilibrium : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// a Balance/SPT better-response step failed to decrease the potential key;
// signals an implementation bug, never a valid outcome
struct PotentialViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr unsigned long long kDefaultBudget = 10'000'000ULL;

struct DeviationWitness {
  int job = -1;
  int from = -1;
  int to = -1;
  PowCost old_cost;
  PowCost new_cost;  // strictly smaller than old_cost
};

// true iff no job can strictly lower its pow cost by a unilateral move to
// an allowed machine; INFEASIBLE counts as the worst cost
bool is_nash(const Instance& inst, const PolicySpec& policy, const Profile& x,
             DeviationWitness* witness = nullptr);

// Sorted (cost, machine-order position) pairs over all jobs. Encodes the
// |x|_{u,t} count family of the Balance convergence proof: an improving move
// under SPT or Balance strictly decreases this key lexicographically.
// Balance uses the q_j-free cost (q_j * c_j^k); the others use c_j^k.
struct PotentialKey {
  std::vector<std::pair<PowCost, int>> entries;

  static PotentialKey of(const Instance& inst, const PolicySpec& policy, const Profile& x);
  std::uint64_t hash() const;

  friend bool operator<(const PotentialKey& a, const PotentialKey& b) {
    return a.entries < b.entries;
  }
  friend bool operator==(const PotentialKey& a, const PotentialKey& b) {
    return a.entries == b.entries;
  }
};

enum class SelectionRule { FirstImproving, BestResponse, Random };
SelectionRule parse_rule(const std::string& name);

struct Move {
  int job = -1;
  int from = -1;
  int to = -1;
  PowCost before;
  PowCost after;
};

// One better-response step, or nullopt iff x is a Nash equilibrium.
// Random rule draws uniformly among improving (job, machine) deviations.
std::optional<Move> better_response_step(const Instance& inst, const PolicySpec& policy,
                                         const Profile& x, SelectionRule rule,
                                         std::mt19937_64* rng = nullptr);

struct DynamicsResult {
  enum class Status { Converged, StepLimit };

  struct Step {
    long index = 0;
    Move move;
    std::uint64_t key_hash = 0;  // key after the move
  };

  Status status = Status::Converged;
  std::vector<Profile> profiles;  // trace including the start profile
  std::vector<Step> steps;
};

DynamicsResult run_dynamics(const Instance& inst, const PolicySpec& policy, const Profile& start,
                            SelectionRule rule, long max_steps, std::uint64_t seed = 0);

// step,mover,from,to,pow_cost_before,pow_cost_after,potential_key_hash
std::string trace_csv(const DynamicsResult& result);

// The strategy space Prod_j allowed[j], enumerable by rank. Ranks decode
// with job 0 as the most significant digit, so rank order is lexicographic
// profile order.
class ProfileSpace {
 public:
  explicit ProfileSpace(const Instance& inst);
  unsigned long long size() const { return size_; }
  Profile decode(unsigned long long rank) const;

 private:
  const Instance* inst_;
  unsigned long long size_;
};

// Complete pure-NE lists in lexicographic profile order. The parallel
// version partitions ranks across OpenMP threads and merges
// deterministically; the serial version is the reference kept for tests.
std::vector<Profile> enumerate_equilibria_serial(const Instance& inst, const PolicySpec& policy,
                                                 unsigned long long budget = kDefaultBudget);
std::vector<Profile> enumerate_equilibria(const Instance& inst, const PolicySpec& policy,
                                          unsigned long long budget = kDefaultBudget);

// Exact optimum over the whole strategy space. LkNorm minimizes the sum of
// k-th-powered SPT prefix sums (the best feasible policy on any assignment);
// Makespan minimizes the maximum load.
Rat optimum_pow_serial(const Instance& inst, const Objective& obj,
                       unsigned long long budget = kDefaultBudget);
Rat optimum_pow(const Instance& inst, const Objective& obj,
                unsigned long long budget = kDefaultBudget);

// The three sums of the smoothness inequality, exact:
// deviation_sum = sum_j c_j^k(x_{-j}, x*_j), profile_sum = sum_j c_j^k(x),
// reference_sum = sum_j c_j^k(x*).
struct SmoothnessProbe {
  Rat deviation_sum;
  Rat profile_sum;
  Rat reference_sum;
};

SmoothnessProbe smoothness_probe(const Instance& inst, const PolicySpec& policy, int k,
                                 const Profile& x, const Profile& x_star);

// Reassigns every job with rho > m to its fastest machine; the result is
// m-efficient and its makespan at most doubles.
Profile m_efficient_transform(const Instance& inst, const Profile& x);

struct EquilibriumReport {
  PolicySpec policy;
  Objective objective;
  std::vector<Profile> equilibria;
  PowCost worst_pow;   // largest social cost among equilibria
  Rat optimum;         // optimum_pow
  Rat poa_pow;         // worst_pow / optimum (ratio of k-th powers)
  double poa = 0.0;    // poa_pow^{1/k}
};

// Throws NoEquilibrium when the policy admits none (legal for BCOORD).
EquilibriumReport price_of_anarchy(const Instance& inst, const PolicySpec& policy,
                                   const Objective& obj,
                                   unsigned long long budget = kDefaultBudget);

}  // namespace coordlab
