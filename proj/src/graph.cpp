#include "polygraph/graph.hpp"

#include <algorithm>
#include <unordered_map>

#include "polygraph/error.hpp"

namespace polygraph {

bool Csr::has_edge(NodeId u, NodeId v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Csr csr_from_edges(NodeId num_nodes, std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<std::pair<NodeId, NodeId>> dir;
  dir.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= num_nodes || v >= num_nodes)
      throw DataError("edge endpoint " + std::to_string(std::max(u, v)) +
                      " out of range for " + std::to_string(num_nodes) + " nodes");
    if (u == v) continue;  // self-loops live only in normalized adjacency
    dir.emplace_back(u, v);
    dir.emplace_back(v, u);
  }
  std::sort(dir.begin(), dir.end());
  dir.erase(std::unique(dir.begin(), dir.end()), dir.end());

  Csr csr;
  csr.offsets.assign(num_nodes + 1, 0);
  for (auto& [u, v] : dir) csr.offsets[u + 1]++;
  for (NodeId u = 0; u < num_nodes; ++u) csr.offsets[u + 1] += csr.offsets[u];
  csr.targets.reserve(dir.size());
  for (auto& [u, v] : dir) csr.targets.push_back(v);
  return csr;
}

void validate_dataset(const GraphDataset& g) {
  const NodeId n = g.num_nodes();
  if (g.adj.offsets.size() != static_cast<std::size_t>(n) + 1)
    throw DataError(g.name + ": csr offsets length mismatch");
  if (g.adj.offsets.back() != g.adj.targets.size())
    throw DataError(g.name + ": csr offsets do not cover targets");
  for (NodeId u = 0; u < n; ++u) {
    if (g.adj.offsets[u] > g.adj.offsets[u + 1])
      throw DataError(g.name + ": csr offsets not non-decreasing");
    auto nbrs = g.adj.neighbors(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] >= n) throw DataError(g.name + ": neighbor id out of range");
      if (nbrs[i] == u) throw DataError(g.name + ": self-loop stored");
      if (i > 0 && nbrs[i] <= nbrs[i - 1])
        throw DataError(g.name + ": neighbor list not sorted/unique");
      if (!g.adj.has_edge(nbrs[i], u))
        throw DataError(g.name + ": adjacency not symmetric at (" +
                        std::to_string(u) + "," + std::to_string(nbrs[i]) + ")");
    }
  }
  if (g.features.rows() != n)
    throw DataError(g.name + ": feature rows " + std::to_string(g.features.rows()) +
                    " != num_nodes " + std::to_string(n));
  if (!all_finite(g.features))
    throw DataError(g.name + ": non-finite feature values");
  if (g.labels) {
    if (g.labels->labels.size() != n)
      throw DataError(g.name + ": label count != num_nodes");
    for (std::int32_t y : g.labels->labels)
      if (y < 0 || static_cast<std::uint32_t>(y) >= g.labels->num_classes)
        throw DataError(g.name + ": label " + std::to_string(y) +
                        " outside [0," + std::to_string(g.labels->num_classes) + ")");
  }
}

std::uint64_t Corpus::total_nodes() const {
  std::uint64_t t = 0;
  for (const auto& d : datasets) t += d.num_nodes();
  return t;
}

const GraphDataset* Corpus::find(const std::string& name) const {
  for (const auto& d : datasets)
    if (d.name == name) return &d;
  return nullptr;
}

Corpus make_corpus(std::vector<GraphDataset> datasets) {
  if (datasets.empty()) throw DataError("empty corpus");
  Corpus corpus;
  corpus.feature_dim = datasets.front().feature_dim();
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    validate_dataset(datasets[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (datasets[j].name == datasets[i].name)
        throw DataError("duplicate dataset name: " + datasets[i].name);
    if (datasets[i].feature_dim() != corpus.feature_dim)
      throw DataError("feature_dim mismatch: " + datasets.front().name + "=" +
                      std::to_string(corpus.feature_dim) + ", " + datasets[i].name +
                      "=" + std::to_string(datasets[i].feature_dim()));
  }
  corpus.datasets = std::move(datasets);
  return corpus;
}

Subgraph induce_subgraph(const GraphDataset& g, std::span<const NodeId> nodes,
                         NodeId seed) {
  const NodeId n_global = g.num_nodes();
  std::unordered_map<NodeId, NodeId> to_local;
  to_local.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] >= n_global)
      throw DataError("subgraph node " + std::to_string(nodes[i]) + " out of range");
    if (!to_local.emplace(nodes[i], static_cast<NodeId>(i)).second)
      throw DataError("duplicate node " + std::to_string(nodes[i]) + " in subgraph set");
  }
  auto seed_it = to_local.find(seed);
  if (seed_it == to_local.end())
    throw DataError("seed " + std::to_string(seed) + " not in subgraph node set");

  Subgraph sub;
  sub.local_to_global.assign(nodes.begin(), nodes.end());
  sub.seed_local = seed_it->second;

  const std::size_t n = nodes.size();
  sub.adj.offsets.assign(n + 1, 0);
  std::vector<std::vector<NodeId>> local_nbrs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (NodeId v : g.adj.neighbors(nodes[i])) {
      auto it = to_local.find(v);
      if (it != to_local.end()) local_nbrs[i].push_back(it->second);
    }
    std::sort(local_nbrs[i].begin(), local_nbrs[i].end());
    sub.adj.offsets[i + 1] = sub.adj.offsets[i] + static_cast<std::uint32_t>(local_nbrs[i].size());
  }
  sub.adj.targets.reserve(sub.adj.offsets.back());
  for (auto& nb : local_nbrs)
    sub.adj.targets.insert(sub.adj.targets.end(), nb.begin(), nb.end());

  sub.features = Matrix(n, g.feature_dim());
  for (std::size_t i = 0; i < n; ++i) {
    auto src = g.features.row(nodes[i]);
    auto dst = sub.features.row(i);
    std::copy(src.begin(), src.end(), dst.begin());
  }
  return sub;
}

}  // namespace polygraph
