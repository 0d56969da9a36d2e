#include "projcodes/simulator.hpp"

#include <algorithm>
#include <stdexcept>

namespace projcodes {

namespace {

std::vector<Elem> random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(f.size() - 1));
  std::vector<Elem> v(n);
  for (auto& e : v) e = pick(rng);
  return v;
}

}  // namespace

Subspace operator_channel(const Subspace& x, std::size_t errors, std::size_t erasures, std::mt19937_64& rng) {
  if (erasures > x.dim()) throw std::invalid_argument("more erasures than dimensions");
  if (x.dim() + errors > x.ambient_dim()) throw std::invalid_argument("no room for that many errors");
  const FieldPtr& field = x.field();
  const std::size_t keep = x.dim() - erasures;
  Matrix kept(field, 0, x.ambient_dim());
  while (kept.rows() < keep) {
    const auto coeffs = random_vector(*field, x.dim(), rng);
    Matrix trial = kept;
    trial.append_row(x.generator().left_multiply(coeffs));
    if (rank(trial) == trial.rows()) kept = std::move(trial);
  }
  Matrix held = x.generator();
  Matrix out = kept;
  while (out.rows() < keep + errors) {
    const auto v = random_vector(*field, x.ambient_dim(), rng);
    Matrix trial = held;
    trial.append_row(v);
    if (rank(trial) != trial.rows()) continue;
    held = std::move(trial);
    out.append_row(v);
  }
  return Subspace::span(out);
}

SimulationReport simulate(const SubspaceCode& code, const Decoder& decode, const ChannelConfig& channel,
                          std::uint64_t trials) {
  if (code.size() == 0) throw std::invalid_argument("empty code");
  std::mt19937_64 rng(channel.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, code.size() - 1);
  SimulationReport report;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Subspace sent = code.codeword_at(pick(rng));
    const std::size_t erase = std::min(channel.erasures, sent.dim());
    const std::size_t insert = std::min(channel.errors, sent.ambient_dim() - sent.dim());
    if (erase != channel.erasures || insert != channel.errors) ++report.clipped;
    const Subspace received = operator_channel(sent, insert, erase, rng);
    const auto result = decode(received);
    ++report.trials;
    if (result.success && result.codeword && *result.codeword == sent) ++report.successes;
  }
  return report;
}

}  // namespace projcodes
