#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ietlab {

struct BinaryAlphabet {
  static constexpr std::string_view letters = "01";
};
struct TernaryAlphabet {
  static constexpr std::string_view letters = "ABC";
};

/// Finite word over a fixed alphabet. Ordering is lexicographic in the
/// alphabet's letter order (which coincides with ASCII order for both).
template <typename Alphabet>
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {
    for (char ch : letters_) {
      if (Alphabet::letters.find(ch) == std::string_view::npos)
        throw std::invalid_argument("letter '" + std::string(1, ch) + "' not in alphabet \"" +
                                    std::string(Alphabet::letters) + "\"");
    }
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  const std::string& str() const { return letters_; }

  std::size_t count(char letter) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
  }

  Word substr(std::size_t pos, std::size_t len) const { return unchecked(letters_.substr(pos, len)); }
  Word operator+(char letter) const { return unchecked(letters_ + letter); }
  Word operator+(const Word& other) const { return unchecked(letters_ + other.letters_); }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.letters_; }

  /// Builds a word from letters already known to be in the alphabet.
  static Word unchecked(std::string letters) {
    Word w;
    w.letters_ = std::move(letters);
    return w;
  }

 private:
  std::string letters_;
};

using BinaryWord = Word<BinaryAlphabet>;
using TernaryWord = Word<TernaryAlphabet>;

/// Every length-n subword of w (n <= |w|), in order of position.
template <typename Alphabet>
std::vector<Word<Alphabet>> windows(const Word<Alphabet>& w, std::size_t n) {
  std::vector<Word<Alphabet>> out;
  if (n > w.size()) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.push_back(w.substr(i, n));
  return out;
}

/// Interchanges letters A and C.
inline TernaryWord mirror(const TernaryWord& w) {
  std::string s = w.str();
  for (char& ch : s) ch = ch == 'A' ? 'C' : (ch == 'C' ? 'A' : ch);
  return TernaryWord::unchecked(std::move(s));
}

}  // namespace ietlab

template <typename Alphabet>
struct std::hash<ietlab::Word<Alphabet>> {
  std::size_t operator()(const ietlab::Word<Alphabet>& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};
