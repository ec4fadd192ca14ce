#include "polygraph/text_embed.hpp"

#include <cmath>

#include "polygraph/error.hpp"
#include "polygraph/rng.hpp"

namespace polygraph {

Vector hash_text_embed(std::string_view text, std::size_t dim) {
  if (dim == 0) throw ConfigError("hash_text_embed: dimension must be >= 1");
  const std::uint64_t key = fnv1a64(text);
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::uint64_t h = splitmix64_once(key ^ splitmix64_once(i));
    v[i] = static_cast<double>(h >> 11) * 0x1.0p-52 - 1.0;  // [-1, 1)
  }
  double n = norm2(v);
  if (n == 0.0) {  // unreachable in practice; keeps the unit-norm contract total
    v[0] = 1.0;
    n = 1.0;
  }
  for (double& x : v) x /= n;
  return v;
}

}  // namespace polygraph
