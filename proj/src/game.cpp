#include "coordlab/game.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace coordlab {

bool is_nash(const Instance& inst, const PolicySpec& policy, const Profile& x,
             DeviationWitness* witness) {
  CostReport report = policy_pow_costs(inst, x, policy);
  for (int j = 0; j < inst.jobs; ++j) {
    const PowCost& current = report.pow_costs[j];
    for (int target : inst.allowed[j]) {
      if (target == x[j]) continue;
      PowCost moved = deviation_pow_cost(inst, x, policy, j, target);
      if (moved < current) {
        if (witness) *witness = DeviationWitness{j, x[j], target, current, moved};
        return false;
      }
    }
  }
  return true;
}

PotentialKey PotentialKey::of(const Instance& inst, const PolicySpec& policy, const Profile& x) {
  CostReport report = policy_pow_costs(inst, x, policy);
  PotentialKey key;
  key.entries.reserve(inst.jobs);
  for (int j = 0; j < inst.jobs; ++j) {
    PowCost cost = report.pow_costs[j];
    // Balance converges in the q_j-free cost c'_j; rescale so equal-c'
    // jobs compare equal across different q_j
    if (policy.kind == PolicyKind::BALANCE && cost.is_finite())
      cost = PowCost::finite(inst.fastest(j) * cost.value());
    key.entries.emplace_back(std::move(cost), inst.order_pos(x[j], j));
  }
  std::sort(key.entries.begin(), key.entries.end());
  return key;
}

std::uint64_t PotentialKey::hash() const {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& [cost, pos] : entries) {
    mix(cost.str());
    mix(":" + std::to_string(pos) + ";");
  }
  return h;
}

SelectionRule parse_rule(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "first" || s == "first-improving") return SelectionRule::FirstImproving;
  if (s == "best" || s == "best-response") return SelectionRule::BestResponse;
  if (s == "random") return SelectionRule::Random;
  throw std::invalid_argument("unknown selection rule '" + name + "'");
}

std::optional<Move> better_response_step(const Instance& inst, const PolicySpec& policy,
                                         const Profile& x, SelectionRule rule,
                                         std::mt19937_64* rng) {
  CostReport report = policy_pow_costs(inst, x, policy);

  std::optional<Move> best;
  std::vector<Move> improving;  // Random rule only

  for (int j = 0; j < inst.jobs; ++j) {
    const PowCost& current = report.pow_costs[j];
    for (int target : inst.allowed[j]) {
      if (target == x[j]) continue;
      PowCost moved = deviation_pow_cost(inst, x, policy, j, target);
      if (!(moved < current)) continue;
      Move move{j, x[j], target, current, moved};
      switch (rule) {
        case SelectionRule::FirstImproving:
          return move;
        case SelectionRule::BestResponse:
          // minimize new cost, ties to lowest machine then lowest job
          if (!best || move.after < best->after ||
              (move.after == best->after &&
               (move.to < best->to || (move.to == best->to && move.job < best->job))))
            best = move;
          break;
        case SelectionRule::Random:
          improving.push_back(std::move(move));
          break;
      }
    }
  }

  if (rule == SelectionRule::Random && !improving.empty()) {
    if (!rng) throw std::invalid_argument("random selection rule needs an rng");
    std::uniform_int_distribution<std::size_t> pick(0, improving.size() - 1);
    return improving[pick(*rng)];
  }
  return best;
}

DynamicsResult run_dynamics(const Instance& inst, const PolicySpec& policy, const Profile& start,
                            SelectionRule rule, long max_steps, std::uint64_t seed) {
  if (max_steps < 1) throw std::invalid_argument("run_dynamics: max_steps must be >= 1");
  const bool track_potential =
      policy.kind == PolicyKind::SPT || policy.kind == PolicyKind::BALANCE;

  std::mt19937_64 rng(seed);
  DynamicsResult result;
  Profile x = start;
  result.profiles.push_back(x);

  PotentialKey key;
  if (track_potential) key = PotentialKey::of(inst, policy, x);

  for (long step = 0; step < max_steps; ++step) {
    std::optional<Move> move = better_response_step(inst, policy, x, rule, &rng);
    if (!move) {
      result.status = DynamicsResult::Status::Converged;
      return result;
    }
    x[move->job] = move->to;
    result.profiles.push_back(x);

    std::uint64_t key_hash = 0;
    if (track_potential) {
      PotentialKey next = PotentialKey::of(inst, policy, x);
      if (!(next < key))
        throw PotentialViolation("potential key failed to decrease at step " +
                                 std::to_string(step) + " (job " + std::to_string(move->job) +
                                 " -> machine " + std::to_string(move->to) + ")");
      key = std::move(next);
      key_hash = key.hash();
    }
    result.steps.push_back({step, *move, key_hash});
  }
  result.status = DynamicsResult::Status::StepLimit;
  return result;
}

std::string trace_csv(const DynamicsResult& result) {
  std::ostringstream out;
  out << "step,mover,from,to,pow_cost_before,pow_cost_after,potential_key_hash\n";
  for (const auto& s : result.steps) {
    out << s.index << ',' << s.move.job + 1 << ',' << s.move.from + 1 << ',' << s.move.to + 1
        << ',' << s.move.before.str() << ',' << s.move.after.str() << ',' << s.key_hash << '\n';
  }
  return out.str();
}

ProfileSpace::ProfileSpace(const Instance& inst) : inst_(&inst) {
  size_ = 1;
  for (int j = 0; j < inst.jobs; ++j) {
    unsigned long long choices = inst.allowed[j].size();
    if (size_ > std::numeric_limits<unsigned long long>::max() / choices) {
      size_ = std::numeric_limits<unsigned long long>::max();  // saturate; budget check rejects
      return;
    }
    size_ *= choices;
  }
}

Profile ProfileSpace::decode(unsigned long long rank) const {
  Profile x(inst_->jobs);
  for (int j = inst_->jobs - 1; j >= 0; --j) {
    const auto& choices = inst_->allowed[j];
    x[j] = choices[rank % choices.size()];
    rank /= choices.size();
  }
  return x;
}

namespace {

void check_budget(const ProfileSpace& space, unsigned long long budget) {
  if (space.size() > budget)
    throw BudgetExceeded("strategy space has " + std::to_string(space.size()) +
                         " profiles, budget is " + std::to_string(budget));
}

}  // namespace

std::vector<Profile> enumerate_equilibria_serial(const Instance& inst, const PolicySpec& policy,
                                                 unsigned long long budget) {
  ProfileSpace space(inst);
  check_budget(space, budget);
  std::vector<Profile> found;
  for (unsigned long long r = 0; r < space.size(); ++r) {
    Profile x = space.decode(r);
    if (is_nash(inst, policy, x)) found.push_back(std::move(x));
  }
  return found;
}

std::vector<Profile> enumerate_equilibria(const Instance& inst, const PolicySpec& policy,
                                          unsigned long long budget) {
  ProfileSpace space(inst);
  check_budget(space, budget);
  const long long total = static_cast<long long>(space.size());

  std::vector<unsigned long long> hits;
#pragma omp parallel
  {
    std::vector<unsigned long long> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long r = 0; r < total; ++r) {
      if (is_nash(inst, policy, space.decode(static_cast<unsigned long long>(r))))
        local.push_back(static_cast<unsigned long long>(r));
    }
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  std::sort(hits.begin(), hits.end());

  std::vector<Profile> found;
  found.reserve(hits.size());
  for (unsigned long long r : hits) found.push_back(space.decode(r));
  return found;
}

namespace {

Rat objective_value(const Instance& inst, const Profile& x, const Objective& obj) {
  if (obj.kind == Objective::Kind::Makespan) return makespan_cost(inst, x);
  CostReport spt = spt_costs(inst, x, obj.k);
  Rat sum = 0;
  for (const auto& c : spt.pow_costs) sum += c.value();
  return sum;
}

}  // namespace

Rat optimum_pow_serial(const Instance& inst, const Objective& obj, unsigned long long budget) {
  ProfileSpace space(inst);
  check_budget(space, budget);
  Rat best = objective_value(inst, space.decode(0), obj);
  for (unsigned long long r = 1; r < space.size(); ++r) {
    Rat v = objective_value(inst, space.decode(r), obj);
    if (v < best) best = std::move(v);
  }
  return best;
}

Rat optimum_pow(const Instance& inst, const Objective& obj, unsigned long long budget) {
  ProfileSpace space(inst);
  check_budget(space, budget);
  const long long total = static_cast<long long>(space.size());

  Rat best;
  bool have_best = false;
#pragma omp parallel
  {
    Rat local_best;
    bool have_local = false;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long r = 0; r < total; ++r) {
      Rat v = objective_value(inst, space.decode(static_cast<unsigned long long>(r)), obj);
      if (!have_local || v < local_best) {
        local_best = std::move(v);
        have_local = true;
      }
    }
#pragma omp critical
    {
      if (have_local && (!have_best || local_best < best)) {
        best = std::move(local_best);
        have_best = true;
      }
    }
  }
  return best;
}

SmoothnessProbe smoothness_probe(const Instance& inst, const PolicySpec& policy, int k,
                                 const Profile& x, const Profile& x_star) {
  PolicySpec powered{policy.kind, k};
  auto finite_sum = [&](const CostReport& report, const char* which) {
    Rat sum = 0;
    for (const auto& c : report.pow_costs) {
      if (c.is_infeasible())
        throw std::domain_error(std::string("smoothness_probe: infeasible cost in ") + which);
      sum += c.value();
    }
    return sum;
  };

  SmoothnessProbe probe;
  probe.profile_sum = finite_sum(policy_pow_costs(inst, x, powered), "x");
  probe.reference_sum = finite_sum(policy_pow_costs(inst, x_star, powered), "x*");
  probe.deviation_sum = 0;
  for (int j = 0; j < inst.jobs; ++j) {
    PowCost moved = deviation_pow_cost(inst, x, powered, j, x_star[j]);
    if (moved.is_infeasible())
      throw std::domain_error("smoothness_probe: infeasible deviation cost");
    probe.deviation_sum += moved.value();
  }
  return probe;
}

Profile m_efficient_transform(const Instance& inst, const Profile& x) {
  Profile out = x;
  for (int j = 0; j < inst.jobs; ++j) {
    if (inst.rho(j, x[j]) <= inst.machines) continue;
    int target = 0;
    for (int i = 1; i < inst.machines; ++i)
      if (inst.proc[j][i] < inst.proc[j][target]) target = i;
    out[j] = target;
  }
  return out;
}

EquilibriumReport price_of_anarchy(const Instance& inst, const PolicySpec& policy,
                                   const Objective& obj, unsigned long long budget) {
  if (obj.kind == Objective::Kind::LkNorm && obj.k != policy.k)
    throw std::invalid_argument("price_of_anarchy: objective k must match policy k");

  EquilibriumReport report;
  report.policy = policy;
  report.objective = obj;
  report.equilibria = enumerate_equilibria(inst, policy, budget);
  if (report.equilibria.empty())
    throw NoEquilibrium(std::string("no pure Nash equilibrium under ") +
                        policy_name(policy.kind));

  for (const Profile& eq : report.equilibria) {
    PowCost cost = social_cost_pow(policy_pow_costs(inst, eq, policy), obj);
    if (cost > report.worst_pow) report.worst_pow = cost;
  }
  report.optimum = optimum_pow(inst, obj, budget);
  if (report.optimum <= 0)
    throw std::domain_error("price_of_anarchy: optimum must be positive");
  if (report.worst_pow.is_infeasible())
    throw std::domain_error("price_of_anarchy: an equilibrium has infinite social cost");

  report.poa_pow = report.worst_pow.value() / report.optimum;
  report.poa = std::pow(report.poa_pow.get_d(), 1.0 / static_cast<double>(policy.k));
  return report;
}

}  // namespace coordlab
