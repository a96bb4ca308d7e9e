#include "coordlab/forge.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "coordlab/game.hpp"
#include "json.hpp"

namespace coordlab {

namespace {

// shared construction of the Lemma-6 instance family; the two public
// generators differ only in priorities and the designated profile
struct GroupLayout {
  int m = 0;
  long total_jobs = 0;
  std::vector<long> sizes;       // n_1 .. n_{m-1}
  std::vector<long> first_job;   // index of each group's first job (last entry: the J_m job)
};

GroupLayout group_layout(int m) {
  if (m < 2) throw std::invalid_argument("lower-bound family needs m >= 2");
  GroupLayout layout;
  layout.m = m;
  Int fact_m1 = int_factorial(static_cast<unsigned long>(m - 1));
  Int total = 1;
  for (int g = 1; g <= m - 1; ++g) {
    Int size = 2 * fact_m1 / int_factorial(static_cast<unsigned long>(g - 1));
    total += size;
    layout.sizes.push_back(size.get_si());
  }
  if (total > 500000)
    throw BudgetExceeded("lower-bound family with m = " + std::to_string(m) + " needs " +
                         total.get_str() + " jobs");
  long next = 0;
  for (long size : layout.sizes) {
    layout.first_job.push_back(next);
    next += size;
  }
  layout.first_job.push_back(next);  // J_m
  layout.total_jobs = next + 1;
  return layout;
}

Instance layout_instance(const GroupLayout& layout) {
  const int m = layout.m;
  Int fact_m1 = int_factorial(static_cast<unsigned long>(m - 1));
  const Rat off_mask(m + 1);  // rho > m there, and the mask forbids it anyway

  Instance inst;
  inst.machines = m;
  inst.jobs = static_cast<int>(layout.total_jobs);
  inst.proc.assign(inst.jobs, std::vector<Rat>(m, off_mask));
  inst.allowed.assign(inst.jobs, {});

  for (int g = 1; g <= m - 1; ++g) {
    Rat on_own(int_factorial(static_cast<unsigned long>(g - 1)), fact_m1);      // 2/n_g
    Rat on_next(int_factorial(static_cast<unsigned long>(g)), 2 * fact_m1);     // 1/n_{g+1}
    on_own.canonicalize();
    on_next.canonicalize();
    for (long j = layout.first_job[g - 1]; j < layout.first_job[g - 1] + layout.sizes[g - 1];
         ++j) {
      inst.proc[j][g - 1] = on_own;
      inst.proc[j][g] = on_next;
      inst.allowed[j] = {g - 1, g};
    }
  }
  long last = layout.first_job[m - 1];
  inst.proc[last][m - 1] = 1;
  inst.allowed[last] = {m - 1};
  return inst;
}

std::vector<Rat> layout_group_costs(int m) {
  std::vector<Rat> costs;
  for (int g = 1; g <= m; ++g) costs.push_back(make_rat(g + 1, 2));
  return costs;
}

std::vector<long> layout_group_sizes(const GroupLayout& layout) {
  std::vector<long> sizes = layout.sizes;
  sizes.push_back(1);
  return sizes;
}

}  // namespace

LowerBoundBundle gen_equi_lower_bound(int m) {
  GroupLayout layout = group_layout(m);
  LowerBoundBundle bundle;
  bundle.instance = layout_instance(layout);
  bundle.instance.finalize();
  bundle.group_sizes = layout_group_sizes(layout);
  bundle.group_costs = layout_group_costs(m);

  bundle.designated_x.assign(bundle.instance.jobs, 0);
  bundle.comparison_x_star.assign(bundle.instance.jobs, 0);
  for (int g = 1; g <= m - 1; ++g) {
    long begin = layout.first_job[g - 1];
    long half = layout.sizes[g - 1] / 2;
    for (long j = begin; j < begin + layout.sizes[g - 1]; ++j) {
      bundle.designated_x[j] = j < begin + half ? g - 1 : g;
      bundle.comparison_x_star[j] = g - 1;
    }
  }
  long last = layout.first_job[m - 1];
  bundle.designated_x[last] = m - 1;
  bundle.comparison_x_star[last] = m - 1;
  return bundle;
}

LowerBoundBundle gen_spt_lower_bound(int m) {
  GroupLayout layout = group_layout(m);
  LowerBoundBundle bundle;
  bundle.instance = layout_instance(layout);
  bundle.group_sizes = layout_group_sizes(layout);
  bundle.group_costs = layout_group_costs(m);

  // half 1 of J_g goes to machine g and has priority there; half 2 goes to
  // machine g+1 and has priority there
  const int n = static_cast<int>(layout.total_jobs);
  bundle.instance.priority.assign(m, {});
  for (int machine = 0; machine < m; ++machine) {
    auto& order = bundle.instance.priority[machine];
    std::vector<char> placed(n, 0);
    auto push_range = [&](long begin, long count) {
      for (long j = begin; j < begin + count; ++j) {
        order.push_back(static_cast<int>(j));
        placed[j] = 1;
      }
    };
    int guest = machine;      // group J_{machine} sits on machines machine-1, machine (0-based)
    int own = machine + 1;    // group J_{machine+1}
    if (guest >= 1 && guest <= m - 1) {
      long begin = layout.first_job[guest - 1];
      long half = layout.sizes[guest - 1] / 2;
      push_range(begin + half, layout.sizes[guest - 1] - half);  // second half first
      push_range(begin, half);
    }
    if (own <= m - 1) {
      long begin = layout.first_job[own - 1];
      long half = layout.sizes[own - 1] / 2;
      push_range(begin, half);  // first half has priority on its own machine
      push_range(begin + half, layout.sizes[own - 1] - half);
    }
    for (int j = 0; j < n; ++j)
      if (!placed[j]) order.push_back(j);
  }
  bundle.instance.finalize();

  bundle.designated_x.assign(n, 0);
  bundle.comparison_x_star.assign(n, 0);
  for (int g = 1; g <= m - 1; ++g) {
    long begin = layout.first_job[g - 1];
    long half = layout.sizes[g - 1] / 2;
    for (long j = begin; j < begin + layout.sizes[g - 1]; ++j) {
      bundle.designated_x[j] = j < begin + half ? g - 1 : g;
      bundle.comparison_x_star[j] = g - 1;
    }
  }
  long last = layout.first_job[m - 1];
  bundle.designated_x[last] = m - 1;
  bundle.comparison_x_star[last] = m - 1;
  return bundle;
}

Instance gen_random(int n, int m, const ValueModel& model, std::uint64_t seed) {
  if (n < 1 || m < 1) throw std::invalid_argument("gen_random: need n, m >= 1");
  if (model.bound < 1) throw std::invalid_argument("gen_random: bound must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> value(1, model.bound);

  std::vector<std::vector<Rat>> proc(n, std::vector<Rat>(m));
  switch (model.kind) {
    case ValueModel::Kind::UniformInt:
      for (auto& row : proc)
        for (auto& cell : row) cell = Rat(value(rng));
      break;
    case ValueModel::Kind::UniformRational:
      for (auto& row : proc)
        for (auto& cell : row) {
          long num = value(rng);
          long den = value(rng);
          cell = make_rat(num, den);
        }
      break;
    case ValueModel::Kind::RelatedSpeeds: {
      std::vector<long> speed(m);
      for (auto& s : speed) s = value(rng);
      for (auto& row : proc) {
        long base = value(rng);
        for (int i = 0; i < m; ++i) row[i] = make_rat(base, speed[i]);
      }
      break;
    }
  }
  return Instance::make(m, n, std::move(proc));
}

// ---- JSON -----------------------------------------------------------------

namespace {

using nlohmann::json;

json proc_json(const Instance& inst) {
  json rows = json::array();
  for (const auto& row : inst.proc) {
    json cells = json::array();
    for (const auto& cell : row) cells.push_back(rat_str(cell));
    rows.push_back(std::move(cells));
  }
  return rows;
}

json index_matrix_json(const std::vector<std::vector<int>>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json line = json::array();
    for (int v : row) line.push_back(v + 1);  // external format is 1-based
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<std::vector<int>> index_matrix_from(const json& rows, int upper,
                                                const char* field) {
  std::vector<std::vector<int>> out;
  for (const auto& row : rows) {
    std::vector<int> line;
    for (const auto& v : row) {
      long idx = v.get<long>();
      if (idx < 1 || idx > upper)
        throw ParseError(std::string(field) + ": index " + std::to_string(idx) +
                         " out of range 1.." + std::to_string(upper));
      line.push_back(static_cast<int>(idx - 1));
    }
    out.push_back(std::move(line));
  }
  return out;
}

bool restricted(const Instance& inst) {
  for (const auto& lst : inst.allowed)
    if (static_cast<int>(lst.size()) != inst.machines) return true;
  return false;
}

json instance_json(const Instance& inst) {
  json doc;
  doc["m"] = inst.machines;
  doc["n"] = inst.jobs;
  doc["proc"] = proc_json(inst);
  doc["priority"] = index_matrix_json(inst.priority);
  if (restricted(inst)) doc["allowed"] = index_matrix_json(inst.allowed);
  return doc;
}

Instance instance_from(const json& doc) {
  Instance inst;
  try {
    inst.machines = doc.at("m").get<int>();
    inst.jobs = doc.at("n").get<int>();
    for (const auto& row : doc.at("proc")) {
      std::vector<Rat> cells;
      for (const auto& cell : row) {
        if (cell.is_string())
          cells.push_back(parse_rat(cell.get<std::string>()));
        else if (cell.is_number_integer())
          cells.push_back(Rat(cell.get<long>()));
        else
          throw ParseError("proc: entries must be rational strings or integers");
      }
      inst.proc.push_back(std::move(cells));
    }
    if (doc.contains("priority"))
      inst.priority = index_matrix_from(doc.at("priority"), inst.jobs, "priority");
    if (doc.contains("allowed"))
      inst.allowed = index_matrix_from(doc.at("allowed"), inst.machines, "allowed");
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance json: ") + e.what());
  }
  try {
    inst.finalize();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("instance json: ") + e.what());
  }
  return inst;
}

Profile profile_from(const json& arr, const Instance& inst, const char* field) {
  Profile x;
  for (const auto& v : arr) {
    long machine = v.get<long>();
    if (machine < 1 || machine > inst.machines)
      throw ParseError(std::string(field) + ": machine index out of range");
    x.push_back(static_cast<int>(machine - 1));
  }
  if (static_cast<int>(x.size()) != inst.jobs)
    throw ParseError(std::string(field) + ": wrong length");
  return x;
}

json profile_json(const Profile& x) {
  json arr = json::array();
  for (int i : x) arr.push_back(i + 1);
  return arr;
}

}  // namespace

std::string instance_to_json(const Instance& inst) { return instance_json(inst).dump(2) + "\n"; }

Instance instance_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance json: ") + e.what());
  }
  return instance_from(doc);
}

std::string bundle_to_json(const LowerBoundBundle& bundle) {
  json doc = instance_json(bundle.instance);
  doc["allowed"] = index_matrix_json(bundle.instance.allowed);
  doc["designated_x"] = profile_json(bundle.designated_x);
  doc["comparison_x_star"] = profile_json(bundle.comparison_x_star);
  doc["group_sizes"] = bundle.group_sizes;
  json costs = json::array();
  for (const auto& c : bundle.group_costs) costs.push_back(rat_str(c));
  doc["group_costs"] = costs;
  return doc.dump(2) + "\n";
}

LowerBoundBundle bundle_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bundle json: ") + e.what());
  }
  LowerBoundBundle bundle;
  bundle.instance = instance_from(doc);
  try {
    bundle.designated_x = profile_from(doc.at("designated_x"), bundle.instance, "designated_x");
    bundle.comparison_x_star =
        profile_from(doc.at("comparison_x_star"), bundle.instance, "comparison_x_star");
    if (doc.contains("group_sizes"))
      bundle.group_sizes = doc.at("group_sizes").get<std::vector<long>>();
    if (doc.contains("group_costs"))
      for (const auto& c : doc.at("group_costs"))
        bundle.group_costs.push_back(parse_rat(c.get<std::string>()));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bundle json: ") + e.what());
  }
  return bundle;
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace

Instance read_instance(const std::string& path) { return instance_from_json(slurp(path)); }

void write_instance(const std::string& path, const Instance& inst) {
  spill(path, instance_to_json(inst));
}

LowerBoundBundle read_bundle(const std::string& path) { return bundle_from_json(slurp(path)); }

void write_bundle(const std::string& path, const LowerBoundBundle& bundle) {
  spill(path, bundle_to_json(bundle));
}

}  // namespace coordlab
