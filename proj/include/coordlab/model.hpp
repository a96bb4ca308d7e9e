#pragma once

#include <vector>

#include "coordlab/rational.hpp"

namespace coordlab {

// x[j] = machine chosen by job j (0-based)
using Profile = std::vector<int>;

struct Objective {
  enum class Kind { LkNorm, Makespan };
  Kind kind = Kind::LkNorm;
  int k = 1;  // norm parameter; also powers the policy reports under Makespan

  static Objective lk(int k) { return {Kind::LkNorm, k}; }
  static Objective makespan(int k = 1) { return {Kind::Makespan, k}; }
};

// Unrelated-machines instance. proc[j][i] is job j's processing time on
// machine i (p_{ij} > 0). priority[i] is machine i's local tie-break order,
// earlier = higher priority. allowed[j] lists the machines job j may choose
// (restricted strategy sets); defaults to all machines.
//
// Immutable after finalize(); all derived accessors are pure and safe to
// call concurrently.
class Instance {
 public:
  int machines = 0;  // m
  int jobs = 0;      // n
  std::vector<std::vector<Rat>> proc;
  std::vector<std::vector<int>> priority;
  std::vector<std::vector<int>> allowed;

  static Instance make(int m, int n, std::vector<std::vector<Rat>> proc);

  // Validates invariants (p > 0, priority permutations, allowed subsets) and
  // builds the derived caches. Throws std::invalid_argument on violation.
  void finalize();

  const Rat& p(int j, int i) const { return proc[j][i]; }
  // q_j = min_i p_{ij}
  const Rat& fastest(int j) const { return q_[j]; }
  // rho_{ij} = p_{ij} / q_j  (>= 1)
  Rat rho(int j, int i) const { return proc[j][i] / q_[j]; }

  // position of job j in priority[i] (0-based; smaller = higher priority)
  int tiebreak_pos(int i, int j) const { return prio_pos_[i][j]; }

  // rank of j in the full machine-i order over all n jobs, 1-based.
  // This is pos_i(j) of the Balance convergence argument.
  int order_pos(int i, int j) const { return order_pos_[i][j]; }

  // the machine-i total order: ascending p_{ij}, ties by priority[i]
  bool precedes(int i, int j1, int j2) const;

  bool job_allowed(int j, int i) const;
  bool profile_valid(const Profile& x) const;

 private:
  std::vector<Rat> q_;
  std::vector<std::vector<int>> prio_pos_;
  std::vector<std::vector<int>> order_pos_;
};

// Per-job k-th-power costs under some policy; INFEASIBLE entries mark the
// paper's "infinite" completion times.
struct CostReport {
  int k = 1;
  std::vector<PowCost> pow_costs;
};

Rat machine_load(const Instance& inst, const Profile& x, int machine);
Rat makespan_cost(const Instance& inst, const Profile& x);

// sum of pow_costs (C^k); absorbing on INFEASIBLE
PowCost social_cost_pow(const CostReport& report);
// LkNorm -> sum, Makespan -> max
PowCost social_cost_pow(const CostReport& report, const Objective& obj);

}  // namespace coordlab
