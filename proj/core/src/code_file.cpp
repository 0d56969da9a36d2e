#include "projcodes/code_file.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace projcodes {

namespace {

constexpr std::string_view kCodeHeader = "projcodes-code v1";
constexpr std::string_view kSubspaceHeader = "projcodes-subspace v1";

char digit_char(std::uint32_t d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)); }

std::uint32_t digit_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<std::uint32_t>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<std::uint32_t>(c - 'a' + 10);
  throw FormatError(std::string("bad digit '") + c + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

// Next non-empty line, trimmed of a trailing CR.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

std::string expect_key(std::istream& in, std::string_view key) {
  std::string line;
  if (!next_line(in, line)) throw FormatError("missing '" + std::string(key) + "' line");
  const auto space = line.find(' ');
  if (line.substr(0, space) != key) throw FormatError("expected '" + std::string(key) + "', got: " + line);
  return space == std::string::npos ? "" : line.substr(space + 1);
}

std::size_t to_size(const std::string& s) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (pos != s.size()) throw FormatError("not a number: " + s);
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw FormatError("not a number: " + s);
  }
}

void write_field(std::ostream& out, const FieldPtr& f) {
  if (f->base() && f->base()->size() != f->characteristic()) {
    throw FormatError("only fields built over their prime field can be stored");
  }
  out << "field " << f->characteristic() << ' ' << f->degree();
  if (f->degree() > 1) {
    for (Elem c : f->modulus()) out << ' ' << c;
  }
  out << '\n';
}

FieldPtr read_field(std::istream& in) {
  std::istringstream words(expect_key(in, "field"));
  std::uint32_t p = 0;
  unsigned e = 0;
  if (!(words >> p >> e) || e == 0) throw FormatError("bad field line");
  if (p > 36) throw FormatError("characteristic too large for the digit alphabet");
  std::vector<Elem> modulus;
  Elem c;
  while (words >> c) modulus.push_back(c);
  try {
    if (e == 1) return Field::gf(p);
    return Field::make(p, e, modulus);
  } catch (const std::invalid_argument& err) {
    throw FormatError(std::string("bad field: ") + err.what());
  }
}

std::vector<std::vector<std::string>> sorted_records(const SubspaceCode& code) {
  std::vector<const Subspace*> order;
  for (const auto& w : code.words()) order.push_back(&w);
  std::sort(order.begin(), order.end(), [](const Subspace* a, const Subspace* b) {
    if (a->dim() != b->dim()) return a->dim() < b->dim();
    return a->generator().data() < b->generator().data();
  });
  std::vector<std::vector<std::string>> out;
  for (const auto* w : order) {
    std::vector<std::string> rows;
    for (std::size_t r = 0; r < w->dim(); ++r) rows.push_back(format_symbols(code.field(), w->generator().row(r)));
    out.push_back(std::move(rows));
  }
  return out;
}

std::string join_words(const std::vector<BinaryWord>& words) {
  std::string s;
  for (const auto& w : words) {
    if (!s.empty()) s += ',';
    s += w.to_string();
  }
  return s;
}

std::vector<Subspace> sorted_words(const SubspaceCode& c) {
  std::vector<Subspace> w;
  c.for_each([&](const Subspace& x) { w.push_back(x); });
  std::sort(w.begin(), w.end());
  return w;
}

std::shared_ptr<const SubspaceCode> source_of(const Construction& how, const FieldPtr& field) {
  if (how.skeleton.empty() || how.delta == 0) throw FormatError("construction metadata is incomplete");
  const std::size_t n = how.skeleton.front().size();
  const std::size_t declared = min_hamming_distance(how.skeleton).value_or(1);
  const SkeletonCode skeleton(n, declared, how.skeleton);
  return std::make_shared<const SubspaceCode>(construct_multilevel(field, skeleton, how.delta));
}

}  // namespace

Construction Construction::of(const SubspaceCode& code) {
  if (!code.multilevel()) return {};
  Construction c;
  c.kind = Kind::multilevel;
  c.skeleton = code.multilevel()->skeleton->words();
  c.delta = code.multilevel()->delta;
  return c;
}

Construction Construction::of(const PuncturedCode& p) {
  Construction c = of(*p.source);
  c.kind = Kind::punctured;
  c.hyperplane = p.context.hyperplane().generator();
  c.v = p.context.v();
  c.augmented = p.augmented;
  return c;
}

std::string format_symbols(const FieldPtr& field, std::span<const Elem> row) {
  std::string s;
  for (Elem e : row) {
    const auto digits = field->prime_digit_vector(e);
    for (std::size_t i = digits.size(); i-- > 0;) s.push_back(digit_char(digits[i]));
  }
  return s;
}

std::vector<Elem> parse_symbols(const FieldPtr& field, std::string_view text) {
  const std::size_t e = field->prime_digits();
  if (text.size() % e != 0) throw FormatError("row length is not a multiple of the symbol width");
  std::vector<Elem> out;
  std::vector<std::uint32_t> digits(e);
  for (std::size_t i = 0; i < text.size(); i += e) {
    for (std::size_t j = 0; j < e; ++j) {
      const auto d = digit_value(text[i + j]);
      if (d >= field->characteristic()) throw FormatError("digit out of range");
      digits[e - 1 - j] = d;
    }
    out.push_back(field->from_prime_digits(digits));
  }
  return out;
}

void save_code(std::ostream& out, const SubspaceCode& code, const Construction& how) {
  if (!code.materialized()) throw std::invalid_argument("code is too large to store");
  out << kCodeHeader << '\n';
  write_field(out, code.field());
  out << "n " << code.n() << '\n';
  out << "d " << code.declared_distance() << '\n';
  out << "M " << code.size() << '\n';
  static const char* kinds[] = {"bare", "multilevel", "punctured"};
  out << "kind " << kinds[static_cast<int>(how.kind)] << '\n';
  if (how.kind != Construction::Kind::bare) {
    out << "skeleton " << join_words(how.skeleton) << '\n';
    out << "delta " << how.delta << '\n';
  }
  if (how.kind == Construction::Kind::punctured) {
    std::string rows;
    for (std::size_t r = 0; r < how.hyperplane->rows(); ++r) {
      if (r) rows += ',';
      rows += format_symbols(code.field(), how.hyperplane->row(r));
    }
    out << "hyperplane " << rows << '\n';
    out << "v " << format_symbols(code.field(), how.v) << '\n';
    out << "augmented " << (how.augmented ? 1 : 0) << '\n';
  }
  for (const auto& rec : sorted_records(code)) {
    out << "codeword " << rec.size() << '\n';
    for (const auto& row : rec) out << row << '\n';
  }
}

LoadedCode load_code(std::istream& in) {
  std::string line;
  if (!next_line(in, line) || line != kCodeHeader) throw FormatError("not a projcodes-code v1 file");
  const FieldPtr field = read_field(in);
  const std::size_t n = to_size(expect_key(in, "n"));
  const std::size_t d = to_size(expect_key(in, "d"));
  const std::size_t m = to_size(expect_key(in, "M"));
  const std::string kind = expect_key(in, "kind");
  LoadedCode loaded;
  auto& how = loaded.construction;
  if (kind == "bare") {
    how.kind = Construction::Kind::bare;
  } else if (kind == "multilevel") {
    how.kind = Construction::Kind::multilevel;
  } else if (kind == "punctured") {
    how.kind = Construction::Kind::punctured;
  } else {
    throw FormatError("unknown kind: " + kind);
  }
  if (how.kind != Construction::Kind::bare) {
    for (const auto& w : split(expect_key(in, "skeleton"), ',')) how.skeleton.push_back(BinaryWord::parse(w));
    how.delta = to_size(expect_key(in, "delta"));
  }
  if (how.kind == Construction::Kind::punctured) {
    std::vector<std::vector<Elem>> rows;
    for (const auto& r : split(expect_key(in, "hyperplane"), ',')) rows.push_back(parse_symbols(field, r));
    how.hyperplane = Matrix::from_rows(field, rows, n + 1);
    how.v = parse_symbols(field, expect_key(in, "v"));
    how.augmented = expect_key(in, "augmented") == "1";
  }

  std::vector<Subspace> words;
  while (next_line(in, line)) {
    if (line.rfind("codeword ", 0) != 0) throw FormatError("expected a codeword record, got: " + line);
    const std::size_t k = to_size(line.substr(9));
    Matrix g(field, 0, n);
    for (std::size_t r = 0; r < k; ++r) {
      if (!next_line(in, line)) throw FormatError("truncated codeword record");
      const auto row = parse_symbols(field, line);
      if (row.size() != n) throw FormatError("row has the wrong length");
      g.append_row(row);
    }
    if (k == 0) {
      words.push_back(Subspace::zero(field, n));
      continue;
    }
    if (!is_rref(g) || rank(g) != k) throw FormatError("codeword rows are not a reduced generator");
    words.push_back(Subspace::from_rref(std::move(g)));
  }
  if (words.size() != m) throw FormatError("header says M = " + std::to_string(m) + " but file has " +
                                           std::to_string(words.size()) + " codewords");
  try {
    loaded.code = std::make_shared<const SubspaceCode>(field, n, d, std::move(words));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return loaded;
}

void save_subspace(std::ostream& out, const Subspace& s) {
  out << kSubspaceHeader << '\n';
  write_field(out, s.field());
  out << "n " << s.ambient_dim() << '\n';
  for (std::size_t r = 0; r < s.dim(); ++r) out << format_symbols(s.field(), s.generator().row(r)) << '\n';
}

Subspace load_subspace(std::istream& in) {
  std::string line;
  if (!next_line(in, line) || line != kSubspaceHeader) throw FormatError("not a projcodes-subspace v1 file");
  const FieldPtr field = read_field(in);
  const std::size_t n = to_size(expect_key(in, "n"));
  Matrix rows(field, 0, n);
  while (next_line(in, line)) {
    const auto row = parse_symbols(field, line);
    if (row.size() != n) throw FormatError("row has the wrong length");
    rows.append_row(row);
  }
  return Subspace::span(rows);
}

std::shared_ptr<const SubspaceCode> rebuild_multilevel(const LoadedCode& loaded) {
  if (loaded.construction.kind != Construction::Kind::multilevel) throw FormatError("not a multilevel code file");
  auto code = source_of(loaded.construction, loaded.code->field());
  if (code->n() != loaded.code->n() || sorted_words(*code) != sorted_words(*loaded.code)) {
    throw FormatError("stored codewords differ from the rebuilt construction");
  }
  return code;
}

PuncturedCode rebuild_punctured(const LoadedCode& loaded) {
  const auto& how = loaded.construction;
  if (how.kind != Construction::Kind::punctured) throw FormatError("not a punctured code file");
  const FieldPtr& field = loaded.code->field();
  auto source = source_of(how, field);
  const PuncturingContext ctx(Subspace::span(*how.hyperplane), how.v);
  PuncturedCode p = puncture_code(source, ctx, how.augmented);
  if (sorted_words(*p.code) != sorted_words(*loaded.code)) {
    throw FormatError("stored codewords differ from the rebuilt construction");
  }
  return p;
}

}  // namespace projcodes
