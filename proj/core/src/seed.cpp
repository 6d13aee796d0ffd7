#include "friedlab/seed.hpp"

#include <cstdlib>
#include <string>

namespace friedlab {

std::uint64_t default_seed() {
  const char* env = std::getenv("FRIEDLAB_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(env, &used, 0);
    if (used == std::string(env).size()) return value;
  } catch (const std::exception&) {
  }
  return kDefaultSeed;
}

}  // namespace friedlab
