#pragma once

#include <random>

#include "flowsched/network.hpp"

namespace flowsched {

class InvalidParams : public Error {
 public:
  using Error::Error;
};

namespace gen {

/// The introduction's single-transhipment-node example: T = 2, jobs on the
/// two in-arcs; no-maintenance total 14, same-period 7, optimum 9.
inline Instance intro_example() {
  Instance inst;
  inst.network.nodes = {"s", "v", "t"};
  inst.network.source = "s";
  inst.network.sink = "t";
  inst.network.arcs = {{"a", "s", "v", 4}, {"b", "s", "v", 5}, {"c", "v", "t", 7}};
  inst.jobs = {{"a", 1}, {"b", 1}};
  inst.horizon = 2;
  return inst;
}

/// The worked series-parallel example: caps 4/1/2/2, J = {a,b,c}, T = 3;
/// optimum 9 with root vector (4,4,1).
inline Instance sp_example() {
  Instance inst;
  inst.network.nodes = {"s", "v", "t"};
  inst.network.source = "s";
  inst.network.sink = "t";
  inst.network.arcs = {
      {"a", "s", "v", 4}, {"b", "s", "v", 1}, {"c", "v", "t", 2}, {"d", "v", "t", 2}};
  inst.jobs = {{"a", 1}, {"b", 1}, {"c", 1}};
  inst.horizon = 3;
  return inst;
}

/// Two unit job arcs s->v in parallel, one unit arc v->t: the same-period
/// value is T-1 while spreading the outages attains T, so the (T-1)/T
/// approximation guarantee is tight.
inline Instance tight_ratio(int T) {
  if (T < 2) throw InvalidParams("tight_ratio requires T >= 2");
  Instance inst;
  inst.network.nodes = {"s", "v", "t"};
  inst.network.source = "s";
  inst.network.sink = "t";
  inst.network.arcs = {{"p", "s", "v", 1}, {"q", "s", "v", 1}, {"r", "v", "t", 1}};
  inst.jobs = {{"p", 1}, {"q", 1}};
  inst.horizon = T;
  return inst;
}

/// Equal-sum-bipartition gadget over T = 2: in-arcs of capacity 2*d_i (all
/// with jobs), two out job arcs of capacity 2B-1 and one plain out arc of
/// capacity 1. Scheduling everything in period 1 scores 4B-1; 4B is
/// attainable exactly when the d-values split into two halves of sum B.
inline Instance partition_reduction(const std::vector<Value>& d) {
  if (d.empty()) throw InvalidParams("partition_reduction: empty value set");
  Value sum = 0;
  for (Value x : d) {
    if (x < 1) throw InvalidParams("partition_reduction: values must be positive");
    sum += x;
  }
  if (sum % 2 != 0) throw InvalidParams("partition_reduction: value sum must be even");
  const Value B = sum / 2;

  Instance inst;
  inst.network.nodes = {"s", "v", "t"};
  inst.network.source = "s";
  inst.network.sink = "t";
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::string id = "d" + std::to_string(i + 1);
    inst.network.arcs.push_back({id, "s", "v", 2 * d[i]});
    inst.jobs[id] = 1;
  }
  inst.network.arcs.push_back({"f", "v", "t", 2 * B - 1});
  inst.network.arcs.push_back({"g", "v", "t", 2 * B - 1});
  inst.network.arcs.push_back({"bold", "v", "t", 1});
  inst.jobs["f"] = 1;
  inst.jobs["g"] = 1;
  inst.horizon = 2;
  return inst;
}

/// Balanced, non-series-parallel gadget over T = m for triple-partition
/// inputs (3m values with B/4 < d_i < B/2 summing to mB): value arcs s->v1
/// and m capacity-B arcs v2->t carry jobs; the bold arcs s->v2 ((m-1)B),
/// v1->v2 (B) and v1->t ((m-1)B) do not. The optimum reaches 2m(m-1)B
/// exactly when the values partition into m triples of sum B.
inline Instance three_partition_reduction(Value B, const std::vector<Value>& d) {
  if (d.size() % 3 != 0 || d.empty())
    throw InvalidParams("three_partition_reduction: need 3m values");
  const Value m = static_cast<Value>(d.size()) / 3;
  Value sum = 0;
  for (Value x : d) {
    if (4 * x <= B || 2 * x >= B)
      throw InvalidParams("three_partition_reduction: values must satisfy B/4 < d < B/2");
    sum += x;
  }
  if (sum != m * B) throw InvalidParams("three_partition_reduction: values must sum to mB");

  Instance inst;
  inst.network.nodes = {"s", "v1", "v2", "t"};
  inst.network.source = "s";
  inst.network.sink = "t";
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::string id = "d" + std::to_string(i + 1);
    inst.network.arcs.push_back({id, "s", "v1", d[i]});
    inst.jobs[id] = 1;
  }
  inst.network.arcs.push_back({"sv2", "s", "v2", (m - 1) * B});
  inst.network.arcs.push_back({"v1v2", "v1", "v2", B});
  inst.network.arcs.push_back({"v1t", "v1", "t", (m - 1) * B});
  for (Value i = 1; i <= m; ++i) {
    std::string id = "e" + std::to_string(i);
    inst.network.arcs.push_back({id, "v2", "t", B});
    inst.jobs[id] = 1;
  }
  inst.horizon = static_cast<int>(m);
  return inst;
}

namespace detail {

struct Shape {
  bool leaf = false;
  bool series = false;
  int left = -1, right = -1;
  int width = 1;  // minimal capacity a parallel split must leave each side
};

inline int random_shape(std::vector<Shape>& shapes, int leaves, std::mt19937_64& rng) {
  if (leaves == 1) {
    shapes.push_back({true, false, -1, -1, 1});
    return static_cast<int>(shapes.size()) - 1;
  }
  int l = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(leaves - 1));
  int left = random_shape(shapes, l, rng);
  int right = random_shape(shapes, leaves - l, rng);
  bool series = rng() % 2 == 0;
  Shape s{false, series, left, right, 1};
  s.width = series ? std::max(shapes[left].width, shapes[right].width)
                   : shapes[left].width + shapes[right].width;
  shapes.push_back(s);
  return static_cast<int>(shapes.size()) - 1;
}

inline void materialize(const std::vector<Shape>& shapes, int node, Instance& inst,
                        const std::string& src, const std::string& snk, int& arc_seq,
                        int& node_seq, std::mt19937_64& rng, Value capmax) {
  const Shape& s = shapes[node];
  if (s.leaf) {
    std::string id = "a" + std::to_string(++arc_seq);
    Value cap = 1 + static_cast<Value>(rng() % static_cast<std::uint64_t>(capmax));
    inst.network.arcs.push_back({id, src, snk, cap});
    if (rng() % 2 == 0) inst.jobs[id] = 1;
    return;
  }
  if (s.series) {
    std::string mid = "n" + std::to_string(++node_seq);
    inst.network.nodes.insert(mid);
    materialize(shapes, s.left, inst, src, mid, arc_seq, node_seq, rng, capmax);
    materialize(shapes, s.right, inst, mid, snk, arc_seq, node_seq, rng, capmax);
  } else {
    materialize(shapes, s.left, inst, src, snk, arc_seq, node_seq, rng, capmax);
    materialize(shapes, s.right, inst, src, snk, arc_seq, node_seq, rng, capmax);
  }
}

/// Materializes with capacities fixed top-down so that every transhipment
/// node ends up balanced: series passes the through-capacity to both sides,
/// parallel splits it.
inline void materialize_balanced(const std::vector<Shape>& shapes, int node, Instance& inst,
                                 const std::string& src, const std::string& snk, Value through,
                                 int& arc_seq, int& node_seq, std::mt19937_64& rng) {
  const Shape& s = shapes[node];
  if (s.leaf) {
    std::string id = "a" + std::to_string(++arc_seq);
    inst.network.arcs.push_back({id, src, snk, through});
    if (rng() % 2 == 0) inst.jobs[id] = 1;
    return;
  }
  if (s.series) {
    std::string mid = "n" + std::to_string(++node_seq);
    inst.network.nodes.insert(mid);
    materialize_balanced(shapes, s.left, inst, src, mid, through, arc_seq, node_seq, rng);
    materialize_balanced(shapes, s.right, inst, mid, snk, through, arc_seq, node_seq, rng);
  } else {
    Value lo = shapes[s.left].width;
    Value hi = through - shapes[s.right].width;
    Value left_cap = lo + static_cast<Value>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    materialize_balanced(shapes, s.left, inst, src, snk, left_cap, arc_seq, node_seq, rng);
    materialize_balanced(shapes, s.right, inst, src, snk, through - left_cap, arc_seq,
                         node_seq, rng);
  }
}

}  // namespace detail

/// Seeded random series-parallel instance: a uniformly split composition
/// shape over m arcs, capacities in [1, capmax], each arc a job with
/// probability 1/2.
inline Instance random_sp(std::uint64_t seed, int m, int T, Value capmax) {
  if (m < 1 || T < 1 || capmax < 1) throw InvalidParams("random_sp: bad size parameters");
  std::mt19937_64 rng(seed);
  std::vector<detail::Shape> shapes;
  int root = detail::random_shape(shapes, m, rng);
  Instance inst;
  inst.network.nodes = {"s", "t"};
  inst.network.source = "s";
  inst.network.sink = "t";
  inst.horizon = T;
  int arc_seq = 0, node_seq = 0;
  detail::materialize(shapes, root, inst, "s", "t", arc_seq, node_seq, rng, capmax);
  return inst;
}

/// Seeded random series-parallel instance whose transhipment nodes are all
/// balanced (capacities assigned by top-down splitting of a through-value).
inline Instance random_balanced_sp(std::uint64_t seed, int m, int T, Value capmax) {
  if (m < 1 || T < 1 || capmax < 1)
    throw InvalidParams("random_balanced_sp: bad size parameters");
  std::mt19937_64 rng(seed);
  std::vector<detail::Shape> shapes;
  int root = detail::random_shape(shapes, m, rng);
  Value width = shapes[root].width;
  Value through =
      width + static_cast<Value>(rng() % static_cast<std::uint64_t>(width * (capmax - 1) + 1));
  Instance inst;
  inst.network.nodes = {"s", "t"};
  inst.network.source = "s";
  inst.network.sink = "t";
  inst.horizon = T;
  int arc_seq = 0, node_seq = 0;
  detail::materialize_balanced(shapes, root, inst, "s", "t", through, arc_seq, node_seq, rng);
  return inst;
}

/// Seeded random unit-capacity instance on an acyclic node ordering; each
/// forward pair gets an arc with the given density, each arc a job with
/// probability 1/2 and multiplicity in [1, min(max_multiplicity, T)].
inline Instance random_uniform(std::uint64_t seed, int n, int T, double density,
                               int max_multiplicity, int max_jobs = 64) {
  if (n < 2 || T < 1 || max_multiplicity < 1)
    throw InvalidParams("random_uniform: bad size parameters");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  Instance inst;
  inst.network.source = "v1";
  inst.network.sink = "v" + std::to_string(n);
  inst.horizon = T;
  for (int i = 1; i <= n; ++i) inst.network.nodes.insert("v" + std::to_string(i));

  int arc_seq = 0, jobs_placed = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (coin(rng) >= density) continue;
      std::string id = "a" + std::to_string(++arc_seq);
      inst.network.arcs.push_back(
          {id, "v" + std::to_string(i), "v" + std::to_string(j), 1});
      if (jobs_placed < max_jobs && coin(rng) < 0.5) {
        int cap = std::min(max_multiplicity, T);
        inst.jobs[id] = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap));
        ++jobs_placed;
      }
    }
  if (inst.network.arcs.empty())
    inst.network.arcs.push_back({"a1", inst.network.source, inst.network.sink, 1});
  return inst;
}

}  // namespace gen
}  // namespace flowsched
