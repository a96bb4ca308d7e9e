#include "coordlab/policies.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace coordlab {

const char* policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::SPT: return "spt";
    case PolicyKind::EQUI: return "equi";
    case PolicyKind::BCOORD: return "bcoord";
    case PolicyKind::CCOORD: return "ccoord";
    case PolicyKind::BALANCE: return "balance";
  }
  return "?";
}

PolicyKind parse_policy(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "spt") return PolicyKind::SPT;
  if (s == "equi") return PolicyKind::EQUI;
  if (s == "bcoord") return PolicyKind::BCOORD;
  if (s == "ccoord") return PolicyKind::CCOORD;
  if (s == "balance") return PolicyKind::BALANCE;
  throw std::invalid_argument("unknown policy '" + name + "'");
}

Rat psi(std::span<const Rat> values, int k) {
  if (k < 0) throw std::invalid_argument("psi: k must be nonnegative");
  // layers[j] tracks Psi_j of the elements consumed so far
  std::vector<Rat> layers(static_cast<std::size_t>(k) + 1, Rat(0));
  layers[0] = 1;
  for (const Rat& b : values)
    for (int j = 1; j <= k; ++j) layers[j] += j * b * layers[j - 1];
  return layers[k];
}

namespace {

// jobs assigned to machine i, sorted by the machine order
std::vector<int> machine_jobs_ordered(const Instance& inst, const Profile& x, int i) {
  std::vector<int> jobs;
  for (int j = 0; j < inst.jobs; ++j)
    if (x[j] == i) jobs.push_back(j);
  std::sort(jobs.begin(), jobs.end(),
            [&](int a, int b) { return inst.precedes(i, a, b); });
  return jobs;
}

}  // namespace

CostReport spt_costs(const Instance& inst, const Profile& x, int k) {
  CostReport report{k, std::vector<PowCost>(inst.jobs)};
  for (int i = 0; i < inst.machines; ++i) {
    Rat prefix = 0;
    for (int j : machine_jobs_ordered(inst, x, i)) {
      prefix += inst.p(j, i);
      report.pow_costs[j] = PowCost::finite(rat_pow(prefix, k));
    }
  }
  return report;
}

CostReport equi_costs(const Instance& inst, const Profile& x, int k) {
  CostReport report{k, std::vector<PowCost>(inst.jobs)};
  for (int i = 0; i < inst.machines; ++i) {
    // round-robin sharing: the t-th shortest job (1-based) finishes at
    // sum_{u<=t} p_u + p_t * (s - t)
    std::vector<int> jobs = machine_jobs_ordered(inst, x, i);
    const int s = static_cast<int>(jobs.size());
    Rat prefix = 0;
    for (int t = 0; t < s; ++t) {
      const Rat& p = inst.p(jobs[t], i);
      prefix += p;
      report.pow_costs[jobs[t]] = PowCost::finite(rat_pow(prefix + p * (s - 1 - t), k));
    }
  }
  return report;
}

CostReport bcoord_pow_costs(const Instance& inst, const Profile& x, int k) {
  if (k < 1) throw std::invalid_argument("bcoord: k must be positive");
  CostReport report{k, std::vector<PowCost>(inst.jobs)};
  for (int i = 0; i < inst.machines; ++i) {
    Rat load = machine_load(inst, x, i);
    Rat load_pow = rat_pow(load, k);
    for (int j = 0; j < inst.jobs; ++j) {
      if (x[j] != i) continue;
      Rat rho = inst.rho(j, i);
      report.pow_costs[j] =
          rho <= inst.machines ? PowCost::finite(rho * load_pow) : PowCost::infeasible();
    }
  }
  return report;
}

CostReport ccoord_pow_costs(const Instance& inst, const Profile& x, int k) {
  if (k < 1) throw std::invalid_argument("ccoord: k must be positive");
  CostReport report{k, std::vector<PowCost>(inst.jobs)};
  for (int i = 0; i < inst.machines; ++i) {
    std::vector<Rat> times;
    for (int j = 0; j < inst.jobs; ++j)
      if (x[j] == i) times.push_back(inst.p(j, i));
    if (times.empty()) continue;
    Rat machine_psi = psi(times, k);
    for (int j = 0; j < inst.jobs; ++j) {
      if (x[j] != i) continue;
      Rat rho = inst.rho(j, i);
      report.pow_costs[j] =
          rho <= inst.machines ? PowCost::finite(rho * machine_psi) : PowCost::infeasible();
    }
  }
  return report;
}

CostReport balance_pow_costs(const Instance& inst, const Profile& x, int k) {
  if (k < 1) throw std::invalid_argument("balance: k must be positive");
  CostReport report{k, std::vector<PowCost>(inst.jobs)};
  for (int i = 0; i < inst.machines; ++i) {
    Rat before = 0;  // load of predecessors in the machine order
    for (int j : machine_jobs_ordered(inst, x, i)) {
      const Rat& p = inst.p(j, i);
      if (inst.rho(j, i) <= inst.machines) {
        Rat pow_cost = (rat_pow(before + p, k + 1) - rat_pow(before, k + 1)) / inst.fastest(j);
        report.pow_costs[j] = PowCost::finite(std::move(pow_cost));
      } else {
        report.pow_costs[j] = PowCost::infeasible();
      }
      before += p;
    }
  }
  return report;
}

CostReport policy_pow_costs(const Instance& inst, const Profile& x, const PolicySpec& policy) {
  switch (policy.kind) {
    case PolicyKind::SPT: return spt_costs(inst, x, policy.k);
    case PolicyKind::EQUI: return equi_costs(inst, x, policy.k);
    case PolicyKind::BCOORD: return bcoord_pow_costs(inst, x, policy.k);
    case PolicyKind::CCOORD: return ccoord_pow_costs(inst, x, policy.k);
    case PolicyKind::BALANCE: return balance_pow_costs(inst, x, policy.k);
  }
  throw std::logic_error("unreachable policy kind");
}

PowCost deviation_pow_cost(const Instance& inst, const Profile& x, const PolicySpec& policy,
                           int job, int target) {
  const int k = policy.k;
  const Rat& p = inst.p(job, target);

  switch (policy.kind) {
    case PolicyKind::SPT: {
      Rat ahead = 0;
      for (int j2 = 0; j2 < inst.jobs; ++j2)
        if (j2 != job && x[j2] == target && inst.precedes(target, j2, job))
          ahead += inst.p(j2, target);
      return PowCost::finite(rat_pow(ahead + p, k));
    }
    case PolicyKind::EQUI: {
      Rat total = p;
      for (int j2 = 0; j2 < inst.jobs; ++j2)
        if (j2 != job && x[j2] == target) total += std::min(inst.p(j2, target), p);
      return PowCost::finite(rat_pow(total, k));
    }
    case PolicyKind::BCOORD: {
      Rat rho = inst.rho(job, target);
      if (rho > inst.machines) return PowCost::infeasible();
      Rat load = p;
      for (int j2 = 0; j2 < inst.jobs; ++j2)
        if (j2 != job && x[j2] == target) load += inst.p(j2, target);
      return PowCost::finite(rho * rat_pow(load, k));
    }
    case PolicyKind::CCOORD: {
      Rat rho = inst.rho(job, target);
      if (rho > inst.machines) return PowCost::infeasible();
      std::vector<Rat> times{p};
      for (int j2 = 0; j2 < inst.jobs; ++j2)
        if (j2 != job && x[j2] == target) times.push_back(inst.p(j2, target));
      return PowCost::finite(rho * psi(times, k));
    }
    case PolicyKind::BALANCE: {
      Rat rho = inst.rho(job, target);
      if (rho > inst.machines) return PowCost::infeasible();
      Rat before = 0;
      for (int j2 = 0; j2 < inst.jobs; ++j2)
        if (j2 != job && x[j2] == target && inst.precedes(target, j2, job))
          before += inst.p(j2, target);
      return PowCost::finite((rat_pow(before + p, k + 1) - rat_pow(before, k + 1)) /
                             inst.fastest(job));
    }
  }
  throw std::logic_error("unreachable policy kind");
}

}  // namespace coordlab
