#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polygraph/matrix.hpp"

namespace polygraph {

using NodeId = std::uint32_t;

// Unweighted symmetric adjacency in CSR form. Both directions of every
// undirected edge are stored; neighbor lists are sorted ascending with no
// duplicates and no self-loops (self-loops appear only inside adjacency
// normalization).
struct Csr {
  std::vector<std::uint32_t> offsets;  // length num_nodes + 1
  std::vector<NodeId> targets;

  NodeId num_nodes() const {
    return offsets.empty() ? 0 : static_cast<NodeId>(offsets.size() - 1);
  }
  std::uint32_t degree(NodeId u) const { return offsets[u + 1] - offsets[u]; }
  std::span<const NodeId> neighbors(NodeId u) const {
    return {targets.data() + offsets[u], degree(u)};
  }
  bool has_edge(NodeId u, NodeId v) const;
};

// Builds CSR from an edge list. Accepts edges in either or both directions;
// self-loops are dropped, duplicates merged, every kept edge stored both ways.
Csr csr_from_edges(NodeId num_nodes, std::span<const std::pair<NodeId, NodeId>> edges);

struct LabelSet {
  std::vector<std::int32_t> labels;  // one per node
  std::uint32_t num_classes = 0;
};

struct GraphDataset {
  std::string name;
  Csr adj;
  Matrix features;  // num_nodes x d
  std::optional<LabelSet> labels;

  NodeId num_nodes() const { return adj.num_nodes(); }
  std::size_t feature_dim() const { return features.cols(); }
};

// Throws DataError on any structural violation: CSR asymmetry, unsorted or
// duplicated neighbor lists, self-loops, feature row-count mismatch,
// non-finite features, out-of-range labels.
void validate_dataset(const GraphDataset& g);

struct Corpus {
  std::vector<GraphDataset> datasets;
  std::size_t feature_dim = 0;

  std::size_t num_datasets() const { return datasets.size(); }
  std::uint64_t total_nodes() const;
  const GraphDataset* find(const std::string& name) const;
};

// Validates every dataset, requires unique names and one shared feature
// dimension. Throws DataError ("empty corpus", "feature_dim mismatch: ...").
Corpus make_corpus(std::vector<GraphDataset> datasets);

// A PPR-induced local cluster: the induced subgraph on a node subset with a
// map back into the source dataset.
struct Subgraph {
  std::uint32_t dataset_index = 0;
  std::vector<NodeId> local_to_global;
  Csr adj;          // induced, local ids
  Matrix features;  // n x d, rows copied from the source dataset
  NodeId seed_local = 0;

  NodeId num_nodes() const { return adj.num_nodes(); }
};

// Induces the subgraph on `nodes` (order defines local ids). `seed` must be
// a member of `nodes`; edges are kept iff both endpoints are members.
Subgraph induce_subgraph(const GraphDataset& g, std::span<const NodeId> nodes,
                         NodeId seed);

}  // namespace polygraph
