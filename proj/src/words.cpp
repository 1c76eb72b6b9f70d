#include "gehman/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace gehman {

BinaryWord BinaryWord::parse(const std::string& s) {
  std::vector<uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c == '0')
      bits.push_back(0);
    else if (c == '1')
      bits.push_back(1);
    else
      throw std::invalid_argument("binary word may contain only '0' and '1'");
  }
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::from_integer(std::uint64_t value, std::size_t n) {
  std::vector<uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<uint8_t>((value >> i) & 1u);
  return BinaryWord(std::move(bits));
}

bool BinaryWord::all_ones() const {
  for (uint8_t b : bits_)
    if (!b) return false;
  return true;
}

bool BinaryWord::all_zeros() const {
  for (uint8_t b : bits_)
    if (b) return false;
  return true;
}

std::uint64_t BinaryWord::to_integer() const {
  if (size() > 63) throw std::overflow_error("word too long for integer conversion");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) v |= static_cast<std::uint64_t>(bits_[i]) << i;
  return v;
}

BinaryWord BinaryWord::oplus() const {
  std::vector<uint8_t> out = bits_;
  for (auto& b : out) {
    if (b == 0) {
      b = 1;
      return BinaryWord(std::move(out));
    }
    b = 0;  // carry
  }
  return BinaryWord(std::move(out));  // wrapped around: all ones -> all zeros
}

BinaryWord BinaryWord::prefix_odometer() const {
  if (all_ones()) return zeros(size());
  std::vector<uint8_t> out = bits_;
  std::size_t j = 0;
  while (out[j] == 1) {
    out[j] = 0;
    ++j;
  }
  out[j] = 1;
  return BinaryWord(std::move(out));
}

BinaryWord BinaryWord::prefix(std::size_t m) const {
  if (m > size()) throw std::out_of_range("prefix longer than word");
  return BinaryWord(std::vector<uint8_t>(bits_.begin(), bits_.begin() + m));
}

BinaryWord BinaryWord::concat(const BinaryWord& tail) const {
  std::vector<uint8_t> out = bits_;
  out.insert(out.end(), tail.bits_.begin(), tail.bits_.end());
  return BinaryWord(std::move(out));
}

BinaryWord BinaryWord::parent() const {
  if (empty()) throw std::logic_error("root has no parent");
  return prefix(size() - 1);
}

BinaryWord BinaryWord::child(int b) const {
  std::vector<uint8_t> out = bits_;
  out.push_back(static_cast<uint8_t>(b));
  return BinaryWord(std::move(out));
}

std::string BinaryWord::str() const {
  std::string s;
  s.reserve(size());
  for (uint8_t b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::strong_ordering BinaryWord::operator<=>(const BinaryWord& o) const {
  const std::size_t n = std::min(size(), o.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (bits_[i] != o.bits_[i]) return bits_[i] <=> o.bits_[i];
  }
  return size() <=> o.size();
}

std::vector<BinaryWord> all_words(std::size_t n) {
  if (n > 20) throw std::length_error("refusing to enumerate 2^n words for n > 20");
  std::vector<BinaryWord> out;
  out.reserve(std::size_t{1} << n);
  std::vector<uint8_t> bits(n, 0);
  while (true) {
    out.push_back(BinaryWord(bits));
    std::size_t i = 0;
    while (i < n && bits[i] == 1) bits[i++] = 0;
    if (i == n) break;
    bits[i] = 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gehman
