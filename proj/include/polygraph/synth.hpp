#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "polygraph/config.hpp"
#include "polygraph/graph.hpp"

namespace polygraph {

// Synthetic dataset recipe: stochastic block model structure with Gaussian
// class clusters in feature space, plus a per-dataset global offset.
struct SynthDatasetSpec {
  std::string name;
  std::uint32_t num_nodes = 0;
  std::uint32_t num_classes = 0;
  double p_intra = 0.0;
  double p_inter = 0.0;
  double noise_scale = 0.0;
  Vector offset;       // length feature_dim
  Matrix class_means;  // num_classes x feature_dim
};

struct SynthCorpusSpec {
  std::size_t feature_dim = 0;
  std::vector<SynthDatasetSpec> datasets;
};

// Throws ConfigError on invalid recipes (probabilities outside [0,1],
// fewer nodes than classes, zero nodes, dimension mismatches).
void validate_spec(const SynthCorpusSpec& spec);

// Deterministic given (spec, seed); per-dataset streams are keyed by name
// so dataset order in the spec does not change its contents.
Corpus synth_corpus(const SynthCorpusSpec& spec, std::uint64_t seed);

// Spec file syntax (key = value):
//   feature_dim = 16
//   classes = 4                    # corpus-wide default class count
//   class_mean_scale = 3.0         # default class geometry, shared across datasets
//   dataset.<i>.name = alpha
//   dataset.<i>.nodes = 400
//   dataset.<i>.classes = 4        # optional override
//   dataset.<i>.p_intra = 0.05
//   dataset.<i>.p_inter = 0.005
//   dataset.<i>.noise = 1.0
//   dataset.<i>.offset = 10,0     # zero-padded to feature_dim
//   dataset.<i>.class_mean.<c> = v1,v2,...   # optional explicit means
SynthCorpusSpec parse_synth_spec(const KeyValues& kv);
SynthCorpusSpec load_synth_spec(const std::filesystem::path& path);

// Default class geometry: deterministic unit directions scaled by `scale`,
// shared across datasets with equal (num_classes, dim).
Matrix default_class_means(std::uint32_t num_classes, std::size_t dim, double scale);

}  // namespace polygraph
