#ifndef GEHMAN_WORDS_HPP
#define GEHMAN_WORDS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gehman {

// Finite binary word, least-significant digit first.  Words of length n are
// in bijection with {0,...,2^n-1} via w -> w0*2^0 + w1*2^1 + ... .  The empty
// word (length 0) is allowed and serializes as "".
class BinaryWord {
public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<uint8_t> bits) : bits_(std::move(bits)) {}

  static BinaryWord zeros(std::size_t n) { return BinaryWord(std::vector<uint8_t>(n, 0)); }
  static BinaryWord ones(std::size_t n) { return BinaryWord(std::vector<uint8_t>(n, 1)); }
  // Parses "011" style strings, first character = least significant digit.
  static BinaryWord parse(const std::string& s);
  // Length-n expansion of value mod 2^n.
  static BinaryWord from_integer(std::uint64_t value, std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int bit(std::size_t i) const { return bits_[i]; }
  const std::vector<uint8_t>& bits() const { return bits_; }

  bool all_ones() const;
  bool all_zeros() const;

  // Requires size() <= 63.
  std::uint64_t to_integer() const;

  // The word of the same length representing <w>+1 mod 2^|w|.
  BinaryWord oplus() const;

  // Same-length prefix of the odometer image of any infinite word extending
  // this prefix: all-ones maps to all-zeros, otherwise the leading ones flip
  // to zero, the first zero flips to one and the tail is kept.  Agrees with
  // oplus() on every finite word; kept as a separate code path because the
  // two are checked against each other.
  BinaryWord prefix_odometer() const;

  BinaryWord prefix(std::size_t m) const;
  BinaryWord concat(const BinaryWord& tail) const;
  // Word with the last (most significant) digit removed; requires size() >= 1.
  BinaryWord parent() const;
  BinaryWord child(int b) const;

  std::string str() const;

  bool operator==(const BinaryWord& o) const { return bits_ == o.bits_; }
  // Lexicographic order on the stored digit sequence read left to right.
  std::strong_ordering operator<=>(const BinaryWord& o) const;

private:
  std::vector<uint8_t> bits_;
};

// All words of length n in lexicographic order.
std::vector<BinaryWord> all_words(std::size_t n);

}  // namespace gehman

#endif
