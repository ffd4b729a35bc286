#include "periodica/bitvector.hpp"

#include <bit>

#include "periodica/errors.hpp"

namespace periodica {

Bitvector::Bitvector(std::size_t n) : n_(n) {
  if (n_ > 64) tail_.assign(word_count() - 1, 0);
}

Bitvector Bitvector::from_mask(std::uint64_t mask, std::size_t n) {
  if (n > 64)
    throw CapacityError("from_mask supports lengths up to 64, got " +
                        std::to_string(n));
  Bitvector b(n);
  b.head_ = n == 64 ? mask : (mask & ((std::uint64_t{1} << n) - 1));
  return b;
}

Bitvector Bitvector::parse(std::string_view text) {
  Bitvector b(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      b.set(i);
    else if (text[i] != '0')
      throw DomainError(std::string("bit vector may contain only 0/1, got '") +
                        text[i] + "'");
  }
  return b;
}

bool Bitvector::test(std::size_t i) const {
  if (i >= n_)
    throw DomainError("bit position " + std::to_string(i) +
                      " out of range for length " + std::to_string(n_));
  return (word(i / 64) >> (i % 64)) & 1u;
}

void Bitvector::set(std::size_t i, bool value) {
  if (i >= n_)
    throw DomainError("bit position " + std::to_string(i) +
                      " out of range for length " + std::to_string(n_));
  const std::uint64_t m = std::uint64_t{1} << (i % 64);
  if (value)
    word(i / 64) |= m;
  else
    word(i / 64) &= ~m;
}

std::size_t Bitvector::count() const {
  std::size_t total = std::popcount(head_);
  for (std::uint64_t w : tail_) total += std::popcount(w);
  return total;
}

std::size_t Bitvector::first_set() const {
  for (std::size_t w = 0; w < word_count(); ++w)
    if (word(w) != 0)
      return w * 64 + static_cast<std::size_t>(std::countr_zero(word(w)));
  return n_;
}

Bitvector Bitvector::slice_from(std::size_t from) const {
  if (from > n_)
    throw DomainError("slice start " + std::to_string(from) +
                      " exceeds length " + std::to_string(n_));
  Bitvector out(n_ - from);
  for (std::size_t i = from; i < n_; ++i)
    if (test(i)) out.set(i - from);
  return out;
}

std::string Bitvector::str() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

std::uint64_t Bitvector::mask() const {
  if (n_ > 64)
    throw CapacityError("mask() supports lengths up to 64, got " +
                        std::to_string(n_));
  return head_;
}

bool Bitvector::operator==(const Bitvector& other) const {
  return n_ == other.n_ && head_ == other.head_ && tail_ == other.tail_;
}

std::strong_ordering Bitvector::operator<=>(const Bitvector& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  // Position order equals textual order; position 0 is the low bit of each
  // word, so compare bit-reversed words to get string comparison semantics.
  for (std::size_t w = 0; w < word_count(); ++w) {
    const std::uint64_t a = word(w);
    const std::uint64_t b = other.word(w);
    if (a != b) {
      const int i = std::countr_zero(a ^ b);  // first differing position
      const bool mine = (a >> i) & 1u;
      return mine ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t Bitvector::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n_;
  const auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(head_);
  for (std::uint64_t w : tail_) mix(w);
  return static_cast<std::size_t>(h);
}

}  // namespace periodica
