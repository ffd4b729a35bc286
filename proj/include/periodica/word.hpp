#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace periodica {

// A finite string over a totally ordered alphabet; operationally bytes.
// Distinct from the '0'/'1' textual form of a Bitvector on purpose: one is
// the object under study, the other is a result encoding.
class Word {
 public:
  Word() = default;
  explicit Word(std::string symbols) : symbols_(std::move(symbols)) {}
  explicit Word(std::string_view symbols) : symbols_(symbols) {}
  // Literals would otherwise be ambiguous between the two above.
  explicit Word(const char* symbols) : symbols_(symbols) {}

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  char operator[](std::size_t i) const { return symbols_[i]; }
  const char* data() const { return symbols_.data(); }
  const std::string& str() const { return symbols_; }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(symbols_.substr(pos, len));
  }
  Word suffix(std::size_t from) const { return substr(from); }

  auto operator<=>(const Word&) const = default;

 private:
  std::string symbols_;
};

}  // namespace periodica
