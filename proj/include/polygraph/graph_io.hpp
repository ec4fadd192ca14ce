#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "polygraph/graph.hpp"

namespace polygraph {

// Symmetric, deduplicated edge set (both directions present) plus the node
// count implied by the largest id seen. Self-loops are dropped on ingestion.
struct EdgeList {
  NodeId num_nodes = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
};

// Text edge list: one "src<TAB>dst" per line, '#' lines ignored.
EdgeList load_edge_list(const std::filesystem::path& path);
void save_edge_list(const std::filesystem::path& path, const Csr& adj);

// GAF1 feature file: "GAF1" magic, u32le N, u32le d, then N*d float32le
// row-major. Loaded values are widened to double; non-finite entries reject.
Matrix load_feature_matrix(const std::filesystem::path& path);
void save_feature_matrix(const std::filesystem::path& path, const Matrix& m);

// Labels file: first line "num_classes=<n>", then one integer per line.
LabelSet load_labels(const std::filesystem::path& path);
void save_labels(const std::filesystem::path& path, const LabelSet& labels);

// Manifest: "name<TAB>edges_path<TAB>features_path[<TAB>labels_path]" per
// line; relative paths resolve against the manifest's directory.
Corpus load_corpus(const std::filesystem::path& manifest_path);

struct ManifestEntry {
  std::string name;
  std::string edges_path;
  std::string features_path;
  std::string labels_path;  // empty when absent
};
void save_manifest(const std::filesystem::path& path,
                   const std::vector<ManifestEntry>& entries);

}  // namespace polygraph
