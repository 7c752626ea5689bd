#include "hmds/simulate.hpp"

#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "hmds/code.hpp"
#include "hmds/decoder.hpp"

namespace hmds {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do v = rng();
  while (v >= limit);
  return v % n;
}

}  // namespace

SimulationReport simulate(const CodeSpec& spec, std::size_t error_weight, std::uint64_t trials, std::uint64_t seed) {
  const std::size_t n = spec.length();
  if (error_weight > n) throw std::invalid_argument("error weight exceeds code length");
  const auto& T = spec.tower();
  const auto& F = spec.field();
  const GeometricDecoder decoder(spec);

  SimulationReport report{trials, error_weight, 0, 0, 0, seed};
  std::vector<std::size_t> positions(n);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(splitmix64(seed + t));
    const Fq2 x = T.decode(static_cast<std::uint32_t>(draw(rng, std::uint64_t{T.q()} * T.q())));
    const Fq2 y = spec.transversal().elements()[draw(rng, T.q())];
    const Word sent = encode(spec, {x, y});

    Word received = sent;
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    for (std::size_t e = 0; e < error_weight; ++e) {
      const std::size_t j = e + static_cast<std::size_t>(draw(rng, n - e));
      std::swap(positions[e], positions[j]);
      const Fq err{static_cast<std::uint32_t>(1 + draw(rng, T.q() - 1))};
      received[positions[e]] = F.add(received[positions[e]], err);
    }

    const auto result = decoder.decode(received);
    if (!result) ++report.failures;
    else if (result->codeword == sent) ++report.successes;
    else ++report.miscorrections;
  }
  return report;
}

void print_simulation(std::ostream& out, const SimulationReport& r) {
  out << "trials=" << r.trials << '\n'
      << "error_weight=" << r.error_weight << '\n'
      << "successes=" << r.successes << '\n'
      << "failures=" << r.failures << '\n'
      << "miscorrections=" << r.miscorrections << '\n'
      << "seed=" << r.seed << '\n';
}

}  // namespace hmds
