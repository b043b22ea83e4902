#include "folia/polynomial.hpp"

namespace folia {

std::vector<std::string> default_names(std::size_t nvars, std::size_t first_index) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(first_index + i));
  return names;
}

}  // namespace folia
