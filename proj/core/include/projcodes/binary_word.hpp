#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace projcodes {

/// Binary vector of length n <= 64. Coordinate 0 is the leftmost character
/// and the most significant bit, so numeric order on `bits()` equals the
/// lexicographic order of the printed strings.
class BinaryWord {
 public:
  BinaryWord() = default;
  BinaryWord(std::size_t n, std::uint64_t bits) : n_(n), bits_(bits) {
    if (n > 64) throw std::invalid_argument("binary words longer than 64 are not supported");
    if (n < 64 && (bits >> n) != 0) throw std::invalid_argument("bits beyond word length");
  }

  static BinaryWord parse(std::string_view s) {
    std::uint64_t b = 0;
    for (char c : s) {
      if (c != '0' && c != '1') throw std::invalid_argument("binary word must be 0/1 digits");
      b = (b << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return {s.size(), b};
  }

  static BinaryWord from_positions(std::size_t n, const std::vector<std::size_t>& ones) {
    std::uint64_t b = 0;
    for (std::size_t i : ones) {
      if (i >= n) throw std::invalid_argument("position out of range");
      b |= 1ULL << (n - 1 - i);
    }
    return {n, b};
  }

  std::size_t size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  std::size_t weight() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool operator[](std::size_t i) const { return (bits_ >> (n_ - 1 - i)) & 1ULL; }

  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i) {
      if ((*this)[i]) out.push_back(i);
    }
    return out;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) s[i] = (*this)[i] ? '1' : '0';
    return s;
  }

  friend std::size_t hamming_distance(const BinaryWord& a, const BinaryWord& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("length mismatch");
    return static_cast<std::size_t>(std::popcount(a.bits_ ^ b.bits_));
  }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::size_t n_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace projcodes
