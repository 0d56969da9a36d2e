#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "projcodes/puncturing.hpp"

namespace projcodes {

/// How a stored code was built, enough to rebuild its decoder.
struct Construction {
  enum class Kind { bare, multilevel, punctured };
  Kind kind = Kind::bare;
  std::vector<BinaryWord> skeleton;
  std::size_t delta = 0;
  /// Punctured codes: hyperplane generator, v, and the augment flag.
  std::optional<Matrix> hyperplane;
  std::vector<Elem> v;
  bool augmented = false;

  static Construction of(const SubspaceCode& multilevel_code);
  static Construction of(const PuncturedCode& punctured);
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text format, version 1:
///
///   projcodes-code v1
///   field <p> <e> [modulus digits, constant term first]
///   n <n>
///   d <declared distance>
///   M <size>
///   kind bare|multilevel|punctured
///   [skeleton <word>,<word>,...]  [delta <delta>]
///   [hyperplane <row>,<row>,...]  [v <digits>]  [augmented 0|1]
///   codeword <k>
///   <k rows of n symbols>
///
/// Symbols are base-p digits, e per symbol, most significant first.
/// Codewords are sorted by dimension and then by their rows.
void save_code(std::ostream& out, const SubspaceCode& code, const Construction& how);
struct LoadedCode {
  std::shared_ptr<const SubspaceCode> code;  // bare set as stored
  Construction construction;
};
LoadedCode load_code(std::istream& in);

/// A single subspace: "projcodes-subspace v1", the field line, "n <n>",
/// then generator rows (any spanning set).
void save_subspace(std::ostream& out, const Subspace& s);
Subspace load_subspace(std::istream& in);

std::string format_symbols(const FieldPtr& field, std::span<const Elem> row);
std::vector<Elem> parse_symbols(const FieldPtr& field, std::string_view text);

/// Rebuilds the construction metadata for a loaded code and checks that the
/// rebuilt code has exactly the stored codewords.
std::shared_ptr<const SubspaceCode> rebuild_multilevel(const LoadedCode& loaded);
PuncturedCode rebuild_punctured(const LoadedCode& loaded);

}  // namespace projcodes
