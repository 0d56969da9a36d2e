#include "reports.hpp"

#include <iostream>

namespace projcodes::cli {

void emit(const json& record) { std::cout << record.dump() << '\n' << std::flush; }

json field_json(const FieldPtr& f) {
  return {{"p", f->characteristic()}, {"e", f->degree()}, {"q", f->size()}};
}

json verify_json(const VerifyReport& r) {
  json j = {{"size", r.size},
            {"pairs", r.pairs},
            {"method", r.exhaustive ? "exhaustive" : "sampled"},
            {"min_distance", r.min_distance ? json(*r.min_distance) : json(nullptr)},
            {"ok", r.ok()}};
  if (r.violation) j["violation"] = {r.violation->first, r.violation->second};
  return j;
}

json blocks_json(const SubspaceCode& code) {
  json rows = json::array();
  if (!code.multilevel()) return rows;
  for (const auto& b : code.multilevel()->blocks) {
    rows.push_back({{"v", b.identifying_vector.to_string()},
                    {"dim", b.rank_code ? b.rank_code->dimension() : 0},
                    {"bound", b.bound},
                    {"size", b.size()},
                    {"hypothesis", b.hypothesis},
                    {"fixture", b.from_fixture}});
  }
  return rows;
}

json punctured_json(const PuncturedCode& p) {
  json j = {{"M", p.code->size()},
            {"d", p.code->declared_distance()},
            {"n", p.code->n()},
            {"tau", p.context.tau()},
            {"inside_Q", p.inside},
            {"through_v", p.through_v},
            {"duplicates", p.duplicates},
            {"trivial_added", p.trivial_added}};
  std::string v;
  for (Elem e : p.context.v()) v += format_symbols(p.context.field(), std::span<const Elem>(&e, 1));
  j["v"] = v;
  if (p.source->multilevel()) {
    json rows = json::array();
    const auto& blocks = p.source->multilevel()->blocks;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      rows.push_back({{"v", blocks[b].identifying_vector.to_string()},
                      {"inside_Q", p.inside_by_block[b]},
                      {"through_v", p.through_v_by_block[b]}});
    }
    j["blocks"] = rows;
  }
  return j;
}

json decode_json(const SubspaceDecodeResult& r) {
  static const char* paths[] = {"trivial", "algebraic", "block_search"};
  json j = {{"success", r.success},
            {"distance", r.success ? json(r.distance) : json(nullptr)},
            {"ambiguous", r.ambiguous},
            {"path", paths[static_cast<int>(r.path)]}};
  if (r.codeword) {
    json rows = json::array();
    for (std::size_t i = 0; i < r.codeword->dim(); ++i) {
      rows.push_back(format_symbols(r.codeword->field(), r.codeword->generator().row(i)));
    }
    j["codeword"] = rows;
  }
  return j;
}

json simulation_json(const SimulationReport& r, const ChannelConfig& c) {
  return {{"t", c.errors},        {"rho", c.erasures},         {"seed", c.seed},
          {"trials", r.trials},   {"successes", r.successes}, {"success_rate", r.success_rate()},
          {"clipped", r.clipped}};
}

}  // namespace projcodes::cli
