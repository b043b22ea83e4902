#include "folia/random.hpp"

#include "folia/error.hpp"

namespace folia {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidInput("empty range for uniform draw");
  const std::uint64_t span = std::uint64_t(hi - lo) + 1;
  if (span == 0) return std::int64_t(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + std::int64_t(x % span);
}

Rng Rng::substream(std::string_view name, std::uint64_t index) const {
  return Rng(mix(seed_ ^ mix(fnv1a(name) + mix(index + 0x632be59bd9b4e019ULL))));
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) return out;
  std::vector<unsigned> exps(nvars, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == nvars) {
      exps[var] = left;
      out.emplace_back(exps);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      exps[var] = e;
      self(self, var + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace folia
