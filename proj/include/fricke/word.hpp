#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fricke/error.hpp"
#include "fricke/rng.hpp"

namespace fricke {

/// One letter of a word in a free group: +i is the generator x_i
/// (1-based), -i its inverse. Never zero.
using Letter = std::int32_t;

inline int letter_index(Letter g) { return std::abs(g); }
inline int letter_sign(Letter g) { return g > 0 ? 1 : -1; }

/// How far a Word is known to be normalized.
enum class Form : std::uint8_t { raw, reduced, cyclically_reduced };

/// A word over a ranked generator alphabet. Immutable after
/// construction; the reduction routines return new values.
class Word {
 public:
  Word() : form_(Form::cyclically_reduced) {}

  explicit Word(std::vector<Letter> letters, Form form = Form::raw)
      : letters_(std::move(letters)), form_(form) {
    for (Letter g : letters_) {
      if (g == 0) throw validation_error("word letter must be nonzero");
    }
  }

  /// Parse text over a..z (generators x_1..x_26) and A..Z (inverses).
  /// Whitespace is ignored; anything else is rejected, as is a letter
  /// index above `rank`.
  static Word parse(std::string_view text, int rank);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Form form() const { return form_; }

  /// Largest generator index used (0 for the empty word).
  int max_index() const {
    int m = 0;
    for (Letter g : letters_) m = std::max(m, letter_index(g));
    return m;
  }

  /// Letter encoding of the word ("" for the identity).
  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter g : letters_) {
      char c = static_cast<char>('a' + letter_index(g) - 1);
      s.push_back(g > 0 ? c : static_cast<char>(c - 'a' + 'A'));
    }
    return s;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) {
    return a.letters_ < b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  Form form_;
};

inline Word Word::parse(std::string_view text, int rank) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    Letter g;
    if (c >= 'a' && c <= 'z') {
      g = static_cast<Letter>(c - 'a' + 1);
    } else if (c >= 'A' && c <= 'Z') {
      g = -static_cast<Letter>(c - 'A' + 1);
    } else {
      throw parse_error(std::string("unknown character '") + c + "' in word");
    }
    if (letter_index(g) > rank) {
      throw parse_error(std::string("letter '") + c + "' exceeds rank " +
                        std::to_string(rank));
    }
    letters.push_back(g);
  }
  return Word(std::move(letters), Form::raw);
}

/// Append a letter to a letter stack, cancelling against the top.
inline void push_cancel(std::vector<Letter>& stack, Letter g) {
  if (!stack.empty() && stack.back() == -g) {
    stack.pop_back();
  } else {
    stack.push_back(g);
  }
}

/// Freely reduce: remove all adjacent inverse pairs. Idempotent.
inline Word reduce(const Word& w) {
  if (w.form() != Form::raw) return w;
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter g : w.letters()) push_cancel(out, g);
  return Word(std::move(out), Form::reduced);
}

/// Cyclically reduce: freely reduce, then strip mutually inverse
/// first/last pairs. The result represents the conjugacy class of w;
/// its size is the conjugation-invariant cyclic length |w|_red.
inline Word cyclically_reduce(const Word& w) {
  if (w.form() == Form::cyclically_reduced) return w;
  Word r = reduce(w);
  std::size_t lo = 0, hi = r.size();
  const auto& ls = r.letters();
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(ls.begin() + lo, ls.begin() + hi),
              Form::cyclically_reduced);
}

/// Cyclically reduced word length of w.
inline std::size_t cyclic_length(const Word& w) {
  return cyclically_reduce(w).size();
}

inline Word inverse(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(-*it);
  }
  // inverting preserves every normal form
  return Word(std::move(out), w.form());
}

/// Freely reduced concatenation.
inline Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  for (Letter g : a.letters()) push_cancel(out, g);
  for (Letter g : b.letters()) push_cancel(out, g);
  return Word(std::move(out), Form::reduced);
}

/// All cyclically reduced words of length 1..max_len over the given
/// rank, in length-then-lexicographic order. Used by the certification
/// harness; sizes are 2r * (2r-1)^(L-1)-ish, fine for small max_len.
inline std::vector<Word> cyclically_reduced_words(int rank, int max_len) {
  std::vector<Word> out;
  std::vector<Letter> alphabet;
  for (int i = 1; i <= rank; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::vector<Letter> cur;
  auto emit = [&](auto&& self, int len) -> void {
    if (static_cast<int>(cur.size()) == len) {
      if (len >= 2 && cur.front() == -cur.back()) return;
      out.emplace_back(cur, Form::cyclically_reduced);
      return;
    }
    for (Letter g : alphabet) {
      if (!cur.empty() && cur.back() == -g) continue;
      cur.push_back(g);
      self(self, len);
      cur.pop_back();
    }
  };
  for (int len = 1; len <= max_len; ++len) emit(emit, len);
  return out;
}

/// Random freely reduced word of exactly the given length.
inline Word random_reduced_word(Rng& rng, int rank, std::size_t length) {
  std::vector<Letter> out;
  out.reserve(length);
  while (out.size() < length) {
    int idx = static_cast<int>(rng.below(static_cast<std::uint64_t>(rank))) + 1;
    Letter g = rng.below(2) == 0 ? idx : -idx;
    if (!out.empty() && out.back() == -g) continue;
    out.push_back(g);
  }
  return Word(std::move(out), Form::reduced);
}

/// Random cyclically reduced word of exactly the given length.
inline Word random_cyclically_reduced_word(Rng& rng, int rank,
                                           std::size_t length) {
  for (;;) {
    Word w = random_reduced_word(rng, rank, length);
    if (length < 2 || w.letters().front() != -w.letters().back()) {
      return Word(w.letters(), Form::cyclically_reduced);
    }
  }
}

}  // namespace fricke
