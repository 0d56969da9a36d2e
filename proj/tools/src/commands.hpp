#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace projcodes::cli {

struct ConstructOptions {
  std::uint64_t q = 2;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t delta = 0;
  std::optional<std::size_t> d;  // lexicode only; defaults to 2*delta
  std::string skeleton = "lexicode";
  std::string out;
  std::string verify = "auto";  // auto | exhaustive | none
  // puncture
  std::string code;
  std::string hyperplane;
  std::string v;
  std::string tau = "auto";
  bool augment_trivial = false;
  std::string search;  // empty, exhaustive or sampled
  std::uint64_t samples = 2048;
  std::uint64_t seed = 1;
  // family-4k
  bool extended = false;
};

int construct_lexicode(const ConstructOptions& o);
int construct_skeleton_fixture(const ConstructOptions& o);
int construct_multilevel_cmd(const ConstructOptions& o);
int construct_puncture(const ConstructOptions& o);
int construct_family(const ConstructOptions& o);

int verify_cmd(const std::string& path, bool force_exhaustive, std::uint64_t samples, std::uint64_t seed);
int dim_bound_cmd(const std::string& rows, std::size_t delta);
int table_cmd(const std::string& rows, const std::string& verify);
int decode_cmd(const std::string& code, const std::string& received);
int simulate_cmd(const std::string& code, std::size_t t, std::size_t rho, std::uint64_t trials,
                 std::uint64_t seed);

}  // namespace projcodes::cli
