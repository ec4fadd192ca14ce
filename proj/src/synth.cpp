#include "polygraph/synth.hpp"

#include <algorithm>
#include <cmath>

#include "polygraph/error.hpp"
#include "polygraph/rng.hpp"

namespace polygraph {

void validate_spec(const SynthCorpusSpec& spec) {
  if (spec.feature_dim == 0) throw ConfigError("synth spec: feature_dim must be >= 1");
  if (spec.datasets.empty()) throw ConfigError("synth spec: no datasets");
  for (const auto& d : spec.datasets) {
    if (d.name.empty()) throw ConfigError("synth spec: dataset with empty name");
    if (d.num_nodes == 0)
      throw ConfigError("synth spec: dataset '" + d.name + "' has 0 nodes");
    if (d.num_classes == 0)
      throw ConfigError("synth spec: dataset '" + d.name + "' has 0 classes");
    if (d.num_nodes < d.num_classes)
      throw ConfigError("synth spec: dataset '" + d.name + "' has fewer nodes than classes");
    for (double p : {d.p_intra, d.p_inter})
      if (!(p >= 0.0 && p <= 1.0))
        throw ConfigError("synth spec: dataset '" + d.name +
                          "' edge probability outside [0,1]");
    if (d.noise_scale < 0.0)
      throw ConfigError("synth spec: dataset '" + d.name + "' negative noise scale");
    if (d.offset.size() != spec.feature_dim)
      throw ConfigError("synth spec: dataset '" + d.name + "' offset length mismatch");
    if (d.class_means.rows() != d.num_classes || d.class_means.cols() != spec.feature_dim)
      throw ConfigError("synth spec: dataset '" + d.name + "' class_means shape mismatch");
  }
}

Matrix default_class_means(std::uint32_t num_classes, std::size_t dim, double scale) {
  Matrix means(num_classes, dim);
  Rng rng(mix_seed(0x706F6C79ULL, "class-geometry"));
  for (std::uint32_t c = 0; c < num_classes; ++c) {
    auto row = means.row(c);
    for (double& x : row) x = rng.gaussian();
    double n = norm2(row);
    if (n == 0.0) n = 1.0;
    for (double& x : row) x *= scale / n;
  }
  return means;
}

Corpus synth_corpus(const SynthCorpusSpec& spec, std::uint64_t seed) {
  validate_spec(spec);
  std::vector<GraphDataset> datasets;
  datasets.reserve(spec.datasets.size());
  for (const auto& dspec : spec.datasets) {
    Rng rng(mix_seed(mix_seed(seed, "synth"), dspec.name));
    const std::uint32_t n = dspec.num_nodes;
    const std::uint32_t k = dspec.num_classes;

    // Contiguous, near-equal blocks: node i belongs to block i*k/n.
    std::vector<std::int32_t> labels(n);
    for (std::uint32_t i = 0; i < n; ++i)
      labels[i] = static_cast<std::int32_t>((std::uint64_t(i) * k) / n);

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) {
        const double p = labels[i] == labels[j] ? dspec.p_intra : dspec.p_inter;
        if (rng.uniform() < p) edges.emplace_back(i, j);
      }
    }

    GraphDataset ds;
    ds.name = dspec.name;
    ds.adj = csr_from_edges(n, edges);
    ds.features = Matrix(n, spec.feature_dim);
    for (std::uint32_t i = 0; i < n; ++i) {
      auto mean = dspec.class_means.row(static_cast<std::size_t>(labels[i]));
      auto row = ds.features.row(i);
      for (std::size_t c = 0; c < spec.feature_dim; ++c)
        row[c] = mean[c] + dspec.noise_scale * rng.gaussian() + dspec.offset[c];
    }
    ds.labels = LabelSet{std::move(labels), k};
    datasets.push_back(std::move(ds));
  }
  return make_corpus(std::move(datasets));
}

SynthCorpusSpec parse_synth_spec(const KeyValues& kv) {
  SynthCorpusSpec spec;
  spec.feature_dim = static_cast<std::size_t>(get_int(kv, "feature_dim", 16));
  const auto default_classes = static_cast<std::uint32_t>(get_int(kv, "classes", 4));
  const double mean_scale = get_double(kv, "class_mean_scale", 3.0);

  for (int i = 0;; ++i) {
    const std::string prefix = "dataset." + std::to_string(i) + ".";
    auto name = get_string(kv, prefix + "name");
    if (!name) break;
    SynthDatasetSpec d;
    d.name = *name;
    d.num_nodes = static_cast<std::uint32_t>(get_int(kv, prefix + "nodes", 0));
    d.num_classes = static_cast<std::uint32_t>(get_int(kv, prefix + "classes", default_classes));
    d.p_intra = get_double(kv, prefix + "p_intra", 0.05);
    d.p_inter = get_double(kv, prefix + "p_inter", 0.005);
    d.noise_scale = get_double(kv, prefix + "noise", 1.0);

    d.offset.assign(spec.feature_dim, 0.0);
    if (auto off = get_string(kv, prefix + "offset")) {
      auto values = parse_double_list(*off, prefix + "offset");
      if (values.size() > spec.feature_dim)
        throw ConfigError("synth spec: dataset '" + d.name + "' offset longer than feature_dim");
      std::copy(values.begin(), values.end(), d.offset.begin());
    }

    d.class_means = default_class_means(d.num_classes, spec.feature_dim, mean_scale);
    for (std::uint32_t c = 0; c < d.num_classes; ++c) {
      auto key = prefix + "class_mean." + std::to_string(c);
      if (auto mean = get_string(kv, key)) {
        auto values = parse_double_list(*mean, key);
        if (values.size() != spec.feature_dim)
          throw ConfigError("synth spec: '" + key + "' must have feature_dim entries");
        std::copy(values.begin(), values.end(), d.class_means.row(c).begin());
      }
    }
    spec.datasets.push_back(std::move(d));
  }
  validate_spec(spec);
  return spec;
}

SynthCorpusSpec load_synth_spec(const std::filesystem::path& path) {
  return parse_synth_spec(parse_config_file(path));
}

}  // namespace polygraph
