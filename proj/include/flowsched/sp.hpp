#pragma once

#include <optional>
#include <unordered_set>

#include "flowsched/max_flow.hpp"

namespace flowsched {

/// Full binary decomposition tree of a two-terminal series-parallel network.
/// Leaves carry arcs; internal nodes record the composition and the terminal
/// pair of the subnetwork they denote.
struct SpTree {
  enum class Kind { Leaf, Series, Parallel };
  struct Node {
    Kind kind = Kind::Leaf;
    int left = -1;
    int right = -1;
    std::string arc_id;  // leaves only
    std::string src;
    std::string snk;
  };
  std::vector<Node> nodes;
  int root = -1;
};

class NotSeriesParallel : public Error {
 public:
  explicit NotSeriesParallel(std::vector<std::pair<std::string, std::string>> remnant)
      : Error("network is not two-terminal series-parallel"), witness(std::move(remnant)) {}
  /// Irreducible remnant edges (tail, head) after exhaustive reduction.
  std::vector<std::pair<std::string, std::string>> witness;
};

class DisconnectedTerminals : public Error {
 public:
  DisconnectedTerminals() : Error("sink not reachable from source") {}
};

class LengthMismatch : public Error {
 public:
  LengthMismatch() : Error("throughput vectors of different length") {}
};

/// Recognizes a series-parallel network by exhaustive series/parallel
/// reduction and records the composition history. Throws NotSeriesParallel
/// with the irreducible remnant on failure.
inline SpTree build_sp_tree(const Network& net) {
  if (net.arcs.empty()) throw Error("build_sp_tree: network has no arcs");

  {  // terminal reachability check
    std::set<std::string> reach{net.source};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const Arc& a : net.arcs)
        if (reach.count(a.tail) && reach.insert(a.head).second) grew = true;
    }
    if (!reach.count(net.sink)) throw DisconnectedTerminals();
  }

  SpTree tree;
  struct Edge {
    std::string tail, head;
    int node;
    bool active = true;
  };
  std::vector<Edge> edges;
  for (const Arc& a : net.arcs) {
    tree.nodes.push_back({SpTree::Kind::Leaf, -1, -1, a.id, a.tail, a.head});
    edges.push_back({a.tail, a.head, static_cast<int>(tree.nodes.size()) - 1});
  }

  auto remnant = [&]() {
    std::vector<std::pair<std::string, std::string>> r;
    for (const Edge& e : edges)
      if (e.active) r.push_back({e.tail, e.head});
    return r;
  };

  for (;;) {
    int active = 0, last = -1;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].active) {
        ++active;
        last = static_cast<int>(i);
      }
    if (active == 1) {
      if (edges[last].tail != net.source || edges[last].head != net.sink)
        throw NotSeriesParallel(remnant());
      tree.root = edges[last].node;
      return tree;
    }

    // parallel reduction: first pair of active edges with equal endpoints
    bool reduced = false;
    for (std::size_t i = 0; i < edges.size() && !reduced; ++i) {
      if (!edges[i].active) continue;
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (!edges[j].active) continue;
        if (edges[i].tail == edges[j].tail && edges[i].head == edges[j].head) {
          tree.nodes.push_back({SpTree::Kind::Parallel, edges[i].node, edges[j].node, "",
                                edges[i].tail, edges[i].head});
          edges[i].node = static_cast<int>(tree.nodes.size()) - 1;
          edges[j].active = false;
          reduced = true;
          break;
        }
      }
    }
    if (reduced) continue;

    // series reduction: a transhipment node with in-degree 1 and out-degree 1
    for (const std::string& v : net.nodes) {
      if (v == net.source || v == net.sink) continue;
      int in = -1, out = -1, ind = 0, outd = 0;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!edges[i].active) continue;
        if (edges[i].head == v) {
          ++ind;
          in = static_cast<int>(i);
        }
        if (edges[i].tail == v) {
          ++outd;
          out = static_cast<int>(i);
        }
      }
      if (ind == 1 && outd == 1 && in != out) {
        tree.nodes.push_back({SpTree::Kind::Series, edges[in].node, edges[out].node, "",
                              edges[in].tail, edges[out].head});
        edges[in].node = static_cast<int>(tree.nodes.size()) - 1;
        edges[in].head = edges[out].head;
        edges[out].active = false;
        reduced = true;
        break;
      }
    }
    if (!reduced) throw NotSeriesParallel(remnant());
  }
}

inline bool is_series_parallel(const Network& net) {
  try {
    build_sp_tree(net);
    return true;
  } catch (const Error&) {
    return false;
  }
}

/// Per-period max-flow vector of a subnetwork under some schedule, kept in
/// canonical non-increasing order. Entries carry the provenance needed to
/// reconstruct one witness schedule.
struct VectorEntry {
  std::vector<Value> vec;       // canonical, non-increasing
  int left = -1;                // index into the left child list
  int right = -1;               // index into the right child list
  std::vector<int> align;       // raw slot i -> canonical index into right vec
  std::vector<int> sort_perm;   // canonical j = raw[sort_perm[j]]
};

struct VectorList {
  std::vector<VectorEntry> entries;
};

namespace detail {

inline bool dominates(const std::vector<Value>& a, const std::vector<Value>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

/// Keeps only non-dominated vectors. Entries must be sorted descending
/// lexicographically: any dominator then precedes what it dominates.
inline void prune_dominated(std::vector<VectorEntry>& entries) {
  std::vector<VectorEntry> kept;
  for (VectorEntry& e : entries) {
    bool dominated = false;
    for (const VectorEntry& k : kept)
      if (dominates(k.vec, e.vec)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(std::move(e));
  }
  entries = std::move(kept);
}

}  // namespace detail

/// One step of the sp-tree dynamic program: combines every vector pair under
/// every distinct period alignment. Parallel adds slots, series takes the
/// minimum. Results are canonicalized, deduplicated and (optionally)
/// dominance-pruned. Alignments are enumerated over distinct value
/// arrangements only, so repeated entries do not multiply the work.
inline VectorList compose_vector_lists(const VectorList& left, const VectorList& right,
                                       SpTree::Kind label, int T, bool prune = true) {
  std::map<std::vector<Value>, VectorEntry> seen;
  std::vector<Value> raw(T);
  for (std::size_t il = 0; il < left.entries.size(); ++il) {
    const std::vector<Value>& z = left.entries[il].vec;
    if (static_cast<int>(z.size()) != T) throw LengthMismatch();
    for (std::size_t ir = 0; ir < right.entries.size(); ++ir) {
      const std::vector<Value>& zp = right.entries[ir].vec;
      if (static_cast<int>(zp.size()) != T) throw LengthMismatch();

      std::vector<Value> arr(zp.begin(), zp.end());
      std::sort(arr.begin(), arr.end());
      do {
        for (int i = 0; i < T; ++i)
          raw[i] = label == SpTree::Kind::Parallel ? z[i] + arr[i] : std::min(z[i], arr[i]);

        std::vector<int> perm(T);
        for (int i = 0; i < T; ++i) perm[i] = i;
        std::stable_sort(perm.begin(), perm.end(),
                         [&](int a, int b) { return raw[a] > raw[b]; });
        std::vector<Value> canon(T);
        for (int j = 0; j < T; ++j) canon[j] = raw[perm[j]];

        if (!seen.count(canon)) {
          // map the value arrangement back to canonical indices of zp;
          // equal values consume canonical slots in order
          std::vector<char> used(T, 0);
          std::vector<int> align(T, -1);
          for (int i = 0; i < T; ++i)
            for (int k = 0; k < T; ++k)
              if (!used[k] && zp[k] == arr[i]) {
                used[k] = 1;
                align[i] = k;
                break;
              }
          VectorEntry e;
          e.vec = canon;
          e.left = static_cast<int>(il);
          e.right = static_cast<int>(ir);
          e.align = std::move(align);
          e.sort_perm = std::move(perm);
          seen.emplace(std::move(canon), std::move(e));
        }
      } while (std::next_permutation(arr.begin(), arr.end()));
    }
  }

  VectorList out;
  out.entries.reserve(seen.size());
  for (auto it = seen.rbegin(); it != seen.rend(); ++it)  // descending lex order
    out.entries.push_back(std::move(it->second));
  if (prune) detail::prune_dominated(out.entries);
  return out;
}

struct SpSolveResult {
  Value total = 0;
  std::vector<Value> vector;  // optimal root throughput vector
  Schedule schedule;
  std::size_t max_list_length = 0;
};

/// Per-node lists and the tree, exposed for tests.
struct SpTrace {
  SpTree tree;
  std::vector<VectorList> lists;  // indexed by tree node
};

namespace detail {

inline void reconstruct_schedule(const SpTrace& trace, int node, int entry,
                                 const std::vector<int>& period_of_slot, Schedule& out,
                                 const Instance& inst) {
  const SpTree::Node& n = trace.tree.nodes[node];
  const int T = static_cast<int>(period_of_slot.size());
  const VectorEntry& e = trace.lists[node].entries[entry];
  if (n.kind == SpTree::Kind::Leaf) {
    if (!inst.jobs.count(n.arc_id)) return;
    // the leaf vector is (u,...,u,0): the outage sits at a zero slot;
    // ties (u_a = 0) break to the lowest period
    int best = -1;
    for (int j = 0; j < T; ++j)
      if (e.vec[j] == 0 && (best < 0 || period_of_slot[j] < best))
        best = period_of_slot[j];
    out.outages[n.arc_id] = {best};
    return;
  }
  // raw slot p carries canonical slot j of this node with sort_perm[j] = p
  std::vector<int> raw_period(T);
  for (int j = 0; j < T; ++j) raw_period[e.sort_perm[j]] = period_of_slot[j];
  std::vector<int> left_periods(T), right_periods(T);
  for (int p = 0; p < T; ++p) {
    left_periods[p] = raw_period[p];          // left canonical slot p used raw slot p
    right_periods[e.align[p]] = raw_period[p];
  }
  reconstruct_schedule(trace, n.left, e.left, left_periods, out, inst);
  reconstruct_schedule(trace, n.right, e.right, right_periods, out, inst);
}

}  // namespace detail

/// Dynamic program over the sp-tree: computes the list of attainable
/// throughput vectors bottom-up and returns the maximum-total vector with a
/// witness schedule reconstructed from the stored alignments.
inline SpSolveResult sp_solve_traced(const Instance& inst, SpTrace* trace_out,
                                     bool prune = true) {
  require_valid(inst);
  if (!inst.unit_multiplicities())
    throw Error("sp_solve requires unit job multiplicities");
  const int T = inst.horizon;

  SpTrace trace;
  trace.tree = build_sp_tree(inst.network);
  trace.lists.resize(trace.tree.nodes.size());

  std::size_t max_len = 0;
  // children always precede parents in construction order
  for (std::size_t v = 0; v < trace.tree.nodes.size(); ++v) {
    const SpTree::Node& n = trace.tree.nodes[v];
    if (n.kind == SpTree::Kind::Leaf) {
      const Arc& a = inst.network.arcs[FlowSolver(inst.network).arc_index(n.arc_id)];
      VectorEntry e;
      e.vec.assign(T, a.capacity);
      if (inst.jobs.count(a.id)) e.vec[T - 1] = 0;
      trace.lists[v].entries.push_back(std::move(e));
    } else {
      trace.lists[v] =
          compose_vector_lists(trace.lists[n.left], trace.lists[n.right], n.kind, T, prune);
    }
    max_len = std::max(max_len, trace.lists[v].entries.size());
  }

  const VectorList& root = trace.lists[trace.tree.root];
  int best = 0;
  Value best_total = std::numeric_limits<Value>::min();
  for (std::size_t i = 0; i < root.entries.size(); ++i) {
    Value sum = 0;
    for (Value x : root.entries[i].vec) sum += x;
    if (sum > best_total) {
      best_total = sum;
      best = static_cast<int>(i);
    }
  }

  SpSolveResult res;
  res.total = best_total;
  res.vector = root.entries[best].vec;
  res.max_list_length = max_len;
  std::vector<int> periods(T);
  for (int j = 0; j < T; ++j) periods[j] = j + 1;
  detail::reconstruct_schedule(trace, trace.tree.root, best, periods, res.schedule, inst);
  if (trace_out) *trace_out = std::move(trace);
  return res;
}

inline SpSolveResult sp_solve(const Instance& inst, bool prune = true) {
  return sp_solve_traced(inst, nullptr, prune);
}

}  // namespace flowsched
