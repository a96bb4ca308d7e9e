#pragma once

#include <span>
#include <string>

#include "coordlab/model.hpp"

namespace coordlab {

enum class PolicyKind { SPT, EQUI, BCOORD, CCOORD, BALANCE };

const char* policy_name(PolicyKind kind);
PolicyKind parse_policy(const std::string& name);

struct PolicySpec {
  PolicyKind kind = PolicyKind::SPT;
  // norm parameter: powers the report for SPT/EQUI, parametrizes the cost
  // function itself for BCOORD/CCOORD/BALANCE
  int k = 1;
};

// Psi_k of a multiset of nonnegative rationals, computed by the incremental
// recurrence Psi_k(A u {b}) = Psi_k(A) + k*b*Psi_{k-1}(A u {b}) with
// Psi_0 = 1 and Psi_k(empty) = 0 for k >= 1. Order-independent.
Rat psi(std::span<const Rat> values, int k);

// c_j = prefix sum of processing times in machine order up to and incl. j
CostReport spt_costs(const Instance& inst, const Profile& x, int k);
// c_j = sum over co-located j' of min(p_{ij'}, p_{ij})
CostReport equi_costs(const Instance& inst, const Profile& x, int k);
// c_j^k = rho_{ij} * L(x(i))^k, infeasible when rho > m
CostReport bcoord_pow_costs(const Instance& inst, const Profile& x, int k);
// c_j^k = rho_{ij} * Psi_k(x(i)), infeasible when rho > m
CostReport ccoord_pow_costs(const Instance& inst, const Profile& x, int k);
// c_j^k = ((p+S)^{k+1} - S^{k+1}) / q_j with S the preceding load,
// infeasible when rho > m
CostReport balance_pow_costs(const Instance& inst, const Profile& x, int k);

CostReport policy_pow_costs(const Instance& inst, const Profile& x, const PolicySpec& policy);

// c_j^k for job j unilaterally deviating to `target` while everyone else
// stays; target == x[j] reproduces j's current cost.
PowCost deviation_pow_cost(const Instance& inst, const Profile& x, const PolicySpec& policy,
                           int job, int target);

}  // namespace coordlab
