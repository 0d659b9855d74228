#include "hyfac/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace hyfac {

namespace {

constexpr Count kInfinite = std::numeric_limits<Count>::max() / 4;

class Dinic {
public:
  explicit Dinic(int n) : adj_(static_cast<std::size_t>(n)) {}

  std::size_t add_edge(int u, int v, Count cap) {
    adj_[static_cast<std::size_t>(u)].push_back(edges_.size());
    edges_.push_back({v, cap});
    adj_[static_cast<std::size_t>(v)].push_back(edges_.size());
    edges_.push_back({u, 0});
    return edges_.size() - 2;
  }

  /// Flow pushed through edge e (its reverse residual capacity).
  Count pushed(std::size_t e) const { return edges_[e ^ 1].cap; }

  Count run(int s, int t) {
    Count total = 0;
    while (bfs(s, t)) {
      it_.assign(adj_.size(), 0);
      while (Count f = dfs(s, t, kInfinite)) total += f;
    }
    return total;
  }

private:
  struct Edge {
    int to;
    Count cap;
  };

  bool bfs(int s, int t) {
    level_.assign(adj_.size(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (std::size_t e : adj_[static_cast<std::size_t>(u)]) {
        const auto& ed = edges_[e];
        if (ed.cap > 0 && level_[static_cast<std::size_t>(ed.to)] < 0) {
          level_[static_cast<std::size_t>(ed.to)] = level_[static_cast<std::size_t>(u)] + 1;
          q.push(ed.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  Count dfs(int u, int t, Count limit) {
    if (u == t) return limit;
    const auto uu = static_cast<std::size_t>(u);
    for (auto& i = it_[uu]; i < adj_[uu].size(); ++i) {
      const std::size_t e = adj_[uu][i];
      auto& ed = edges_[e];
      if (ed.cap <= 0 || level_[static_cast<std::size_t>(ed.to)] != level_[uu] + 1) continue;
      if (Count f = dfs(ed.to, t, std::min(limit, ed.cap)); f > 0) {
        ed.cap -= f;
        edges_[e ^ 1].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

} // namespace

std::size_t FlowNetwork::add_arc(int from, int to, Count lower, Count upper) {
  if (from < 0 || from >= nodes_ || to < 0 || to >= nodes_)
    throw DomainError("flow arc endpoint out of range");
  if (lower < 0 || upper < lower) throw DomainError("flow arc bounds must satisfy 0 <= lower <= upper");
  arcs_.push_back({from, to, lower, upper});
  return arcs_.size() - 1;
}

bool FlowNetwork::find_feasible(int source, int sink) {
  // Lower bounds become node excesses served from a super source/sink; the
  // sink->source return arc lets the original flow circulate.
  const int super_s = nodes_;
  const int super_t = nodes_ + 1;
  Dinic dinic(nodes_ + 2);
  std::vector<Count> excess(static_cast<std::size_t>(nodes_), 0);
  std::vector<std::size_t> handle;
  handle.reserve(arcs_.size());
  for (const auto& a : arcs_) {
    handle.push_back(dinic.add_edge(a.from, a.to, a.upper - a.lower));
    excess[static_cast<std::size_t>(a.to)] += a.lower;
    excess[static_cast<std::size_t>(a.from)] -= a.lower;
  }
  dinic.add_edge(sink, source, kInfinite);
  Count demand = 0;
  for (int v = 0; v < nodes_; ++v) {
    const Count x = excess[static_cast<std::size_t>(v)];
    if (x > 0) {
      dinic.add_edge(super_s, v, x);
      demand += x;
    } else if (x < 0) {
      dinic.add_edge(v, super_t, -x);
    }
  }
  if (dinic.run(super_s, super_t) != demand) return false;

  flow_.resize(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i)
    flow_[i] = arcs_[i].lower + dinic.pushed(handle[i]);
  return true;
}

Count FlowNetwork::max_flow(int source, int sink) {
  Dinic dinic(nodes_);
  std::vector<std::size_t> handle;
  for (const auto& a : arcs_) handle.push_back(dinic.add_edge(a.from, a.to, a.upper));
  const Count value = dinic.run(source, sink);
  flow_.resize(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) flow_[i] = dinic.pushed(handle[i]);
  return value;
}

} // namespace hyfac
