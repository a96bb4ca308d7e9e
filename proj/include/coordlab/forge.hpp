#pragma once

#include <cstdint>
#include <string>

#include "coordlab/model.hpp"

namespace coordlab {

// A lower-bound instance family member together with its designated
// equilibrium and the comparison assignment the proof measures against.
struct LowerBoundBundle {
  Instance instance;
  Profile designated_x;
  Profile comparison_x_star;
  std::vector<long> group_sizes;  // n_1 .. n_{m-1}, then the single last-group job
  std::vector<Rat> group_costs;   // (j+1)/2 per group, the designated-profile cost level
};

// m machines, groups J_j of n_j = 2(m-1)!/(j-1)! jobs restricted to machines
// {j, j+1}, and one last job pinned to machine m. The designated profile
// splits each group in half; every group-j job then costs (j+1)/2 under EQUI.
LowerBoundBundle gen_equi_lower_bound(int m);

// Same instance, with each group split into halves that carry opposite
// priorities on their two machines; the designated profile is a pure NE
// under SPT.
LowerBoundBundle gen_spt_lower_bound(int m);

struct ValueModel {
  enum class Kind { UniformInt, UniformRational, RelatedSpeeds };
  Kind kind = Kind::UniformInt;
  long bound = 9;  // B for integers, max numerator/denominator for rationals
};

Instance gen_random(int n, int m, const ValueModel& model, std::uint64_t seed);

// canonical JSON, bit-exact round trip
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);
std::string bundle_to_json(const LowerBoundBundle& bundle);
LowerBoundBundle bundle_from_json(const std::string& text);

Instance read_instance(const std::string& path);
void write_instance(const std::string& path, const Instance& inst);
LowerBoundBundle read_bundle(const std::string& path);
void write_bundle(const std::string& path, const LowerBoundBundle& bundle);

}  // namespace coordlab
