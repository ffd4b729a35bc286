#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace periodica {

// Fixed-length bit sequence indexed from 0. Position 0 is the leftmost
// character of the textual form, e.g. parse("10001001").test(0) == true.
// Lengths up to 64 live in a single machine word; longer vectors spill the
// remaining bits into a heap block, which keeps desk-scale work allocation
// free without capping the input length.
class Bitvector {
 public:
  Bitvector() = default;
  explicit Bitvector(std::size_t n);

  // n <= 64 only; bit i of `mask` becomes position i.
  static Bitvector from_mask(std::uint64_t mask, std::size_t n);
  // Accepts only '0'/'1'; throws DomainError otherwise.
  static Bitvector parse(std::string_view text);

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);

  // Number of set bits.
  std::size_t count() const;
  // Smallest set position, or size() when none is set.
  std::size_t first_set() const;
  // Positions [from, size()) as a new vector.
  Bitvector slice_from(std::size_t from) const;

  std::string str() const;
  // Packed form for n <= 64 (bit i == position i); throws beyond that.
  std::uint64_t mask() const;

  bool operator==(const Bitvector& other) const;
  // Textual order: length first, then '0' < '1' position by position, so
  // equal-length vectors compare exactly like their str() forms.
  std::strong_ordering operator<=>(const Bitvector& other) const;

  std::size_t hash() const;

 private:
  std::size_t word_count() const { return n_ == 0 ? 0 : (n_ + 63) / 64; }
  std::uint64_t word(std::size_t w) const { return w == 0 ? head_ : tail_[w - 1]; }
  std::uint64_t& word(std::size_t w) { return w == 0 ? head_ : tail_[w - 1]; }

  std::size_t n_ = 0;
  std::uint64_t head_ = 0;
  std::vector<std::uint64_t> tail_;  // words 1.., used only when n_ > 64
};

}  // namespace periodica

template <>
struct std::hash<periodica::Bitvector> {
  std::size_t operator()(const periodica::Bitvector& b) const { return b.hash(); }
};
