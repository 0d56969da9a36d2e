#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "projcodes/multilevel.hpp"

namespace projcodes {

/// Operator channel: erase `erasures` dimensions and insert `errors` new ones.
struct ChannelConfig {
  std::size_t errors = 0;    // t
  std::size_t erasures = 0;  // rho
  std::uint64_t seed = 1;
};

/// A uniformly random subspace of x of dimension dim(x) - erasures, plus
/// `errors` random vectors outside x and outside each other. The result is at
/// distance erasures + errors from x.
Subspace operator_channel(const Subspace& x, std::size_t errors, std::size_t erasures, std::mt19937_64& rng);

struct SimulationReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  /// Trials where the codeword was too small or too large for the requested
  /// erasures or errors, which were then reduced.
  std::uint64_t clipped = 0;
  double success_rate() const { return trials ? double(successes) / double(trials) : 1.0; }
};

using Decoder = std::function<SubspaceDecodeResult(const Subspace&)>;

/// Sends uniformly random codewords through the channel and counts exact
/// recoveries. Deterministic for a given seed.
SimulationReport simulate(const SubspaceCode& code, const Decoder& decode, const ChannelConfig& channel,
                          std::uint64_t trials);

}  // namespace projcodes
