#include "coordlab/model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace coordlab {

Instance Instance::make(int m, int n, std::vector<std::vector<Rat>> proc) {
  Instance inst;
  inst.machines = m;
  inst.jobs = n;
  inst.proc = std::move(proc);
  inst.finalize();
  return inst;
}

void Instance::finalize() {
  if (machines <= 0 || jobs <= 0)
    throw std::invalid_argument("instance needs at least one machine and one job");
  if (static_cast<int>(proc.size()) != jobs)
    throw std::invalid_argument("proc must have one row per job");
  for (const auto& row : proc) {
    if (static_cast<int>(row.size()) != machines)
      throw std::invalid_argument("proc row must have one entry per machine");
    for (const auto& v : row)
      if (v <= 0) throw std::invalid_argument("processing times must be positive");
  }

  if (priority.empty()) {
    priority.assign(machines, std::vector<int>(jobs));
    for (auto& perm : priority) std::iota(perm.begin(), perm.end(), 0);
  }
  if (static_cast<int>(priority.size()) != machines)
    throw std::invalid_argument("priority must have one permutation per machine");
  for (const auto& perm : priority) {
    if (static_cast<int>(perm.size()) != jobs)
      throw std::invalid_argument("priority permutation has wrong length");
    std::vector<char> seen(jobs, 0);
    for (int j : perm) {
      if (j < 0 || j >= jobs || seen[j])
        throw std::invalid_argument("priority is not a permutation of jobs");
      seen[j] = 1;
    }
  }

  if (allowed.empty()) {
    std::vector<int> all(machines);
    std::iota(all.begin(), all.end(), 0);
    allowed.assign(jobs, all);
  }
  if (static_cast<int>(allowed.size()) != jobs)
    throw std::invalid_argument("allowed must have one machine list per job");
  for (auto& lst : allowed) {
    if (lst.empty()) throw std::invalid_argument("every job needs at least one allowed machine");
    std::sort(lst.begin(), lst.end());
    for (int i : lst)
      if (i < 0 || i >= machines) throw std::invalid_argument("allowed machine out of range");
  }

  q_.resize(jobs);
  for (int j = 0; j < jobs; ++j) {
    q_[j] = proc[j][0];
    for (int i = 1; i < machines; ++i)
      if (proc[j][i] < q_[j]) q_[j] = proc[j][i];
  }

  prio_pos_.assign(machines, std::vector<int>(jobs));
  for (int i = 0; i < machines; ++i)
    for (int pos = 0; pos < jobs; ++pos) prio_pos_[i][priority[i][pos]] = pos;

  order_pos_.assign(machines, std::vector<int>(jobs));
  std::vector<int> order(jobs);
  for (int i = 0; i < machines; ++i) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (proc[a][i] != proc[b][i]) return proc[a][i] < proc[b][i];
      return prio_pos_[i][a] < prio_pos_[i][b];
    });
    for (int rank = 0; rank < jobs; ++rank) order_pos_[i][order[rank]] = rank + 1;
  }
}

bool Instance::precedes(int i, int j1, int j2) const {
  if (proc[j1][i] != proc[j2][i]) return proc[j1][i] < proc[j2][i];
  return prio_pos_[i][j1] < prio_pos_[i][j2];
}

bool Instance::job_allowed(int j, int i) const {
  return std::binary_search(allowed[j].begin(), allowed[j].end(), i);
}

bool Instance::profile_valid(const Profile& x) const {
  if (static_cast<int>(x.size()) != jobs) return false;
  for (int j = 0; j < jobs; ++j)
    if (x[j] < 0 || x[j] >= machines || !job_allowed(j, x[j])) return false;
  return true;
}

Rat machine_load(const Instance& inst, const Profile& x, int machine) {
  Rat load = 0;
  for (int j = 0; j < inst.jobs; ++j)
    if (x[j] == machine) load += inst.p(j, machine);
  return load;
}

Rat makespan_cost(const Instance& inst, const Profile& x) {
  Rat best = 0;
  for (int i = 0; i < inst.machines; ++i) {
    Rat load = machine_load(inst, x, i);
    if (load > best) best = load;
  }
  return best;
}

PowCost social_cost_pow(const CostReport& report) {
  PowCost total;
  for (const auto& c : report.pow_costs) total += c;
  return total;
}

PowCost social_cost_pow(const CostReport& report, const Objective& obj) {
  if (obj.kind == Objective::Kind::LkNorm) return social_cost_pow(report);
  PowCost worst;
  for (const auto& c : report.pow_costs)
    if (c > worst) worst = c;
  return worst;
}

}  // namespace coordlab
