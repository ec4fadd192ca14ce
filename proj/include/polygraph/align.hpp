#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>

#include "polygraph/graph.hpp"
#include "polygraph/matrix.hpp"

namespace polygraph {

// Per-dataset feature means, keyed by dataset name. Subtracting each
// dataset's own mean moves every graph's feature cloud to the origin while
// leaving per-column standard deviations untouched.
struct CenteringStats {
  std::map<std::string, Vector> means;
  std::size_t feature_dim = 0;
};

// Arithmetic mean over rows, accumulated in 64-bit.
// Throws DataError on an empty matrix or non-finite entries.
Vector compute_center(const Matrix& features);

// Returns features with `mean` subtracted from every row.
Matrix apply_centering(const Matrix& features, const Vector& mean);

// One mean per dataset, each computed independently over all of its nodes.
CenteringStats fit_corpus(const Corpus& corpus);

// Corpus copy with every dataset's features centered by its stored mean.
Corpus apply_centering(const Corpus& corpus, const CenteringStats& stats);

// Centers an unseen graph's features by its own mean; returns both.
std::pair<Matrix, Vector> transform_unseen(const Matrix& features);

// Text format: one "name<TAB>v1,v2,...,vd" line per dataset, 17 significant
// digits (round-trip exact for doubles).
void save_centering(const std::filesystem::path& path, const CenteringStats& stats);
CenteringStats load_centering(const std::filesystem::path& path);

}  // namespace polygraph
