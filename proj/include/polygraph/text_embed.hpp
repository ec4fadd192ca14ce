#pragma once

#include <string_view>

#include "polygraph/matrix.hpp"

namespace polygraph {

// Deterministic stand-in for a text encoder: per-dimension values derived
// from a keyed 64-bit hash of (text, dimension index), mapped to [-1, 1],
// then L2-normalized. Distinct texts give distinct directions w.h.p.
Vector hash_text_embed(std::string_view text, std::size_t dim);

}  // namespace polygraph
