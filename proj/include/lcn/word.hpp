#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lcn {

// Generator indices are 1-based throughout; every piece of circular
// arithmetic goes through wrap() so that "mod n" off-by-ones live in exactly
// one place.
inline int wrap(int k, int n) {
  int m = (k - 1) % n;
  if (m < 0) {
    m += n;
  }
  return m + 1;
}

// Letter sets as bitmasks, bit (i - 1) for a_i.
using LetterSet = std::uint32_t;

inline LetterSet letter_bit(int letter) {
  return LetterSet{1} << (letter - 1);
}

inline bool has_letter(LetterSet s, int letter) {
  return letter >= 1 && ((s >> (letter - 1)) & 1u) != 0;
}

std::vector<int> letters_of(LetterSet mask);

// A word over {a_1, ..., a_rank}. Immutable value; the empty word is the
// monoid identity. Prints as "1" when empty, dotted otherwise ("a2.a1.a3").
class Word {
 public:
  Word(int rank, std::vector<int> letters);

  static Word identity(int rank) { return Word(rank, {}); }
  static Word parse(int rank, const std::string& text);

  int rank() const { return rank_; }
  bool empty() const { return letters_.empty(); }
  int size() const { return static_cast<int>(letters_.size()); }
  int at(int i) const { return letters_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& letters() const { return letters_; }

  LetterSet content_mask() const;
  std::vector<int> content() const;  // sorted, distinct

  // The longest subword whose content lies in `keep` (t_Y).
  Word restricted(LetterSet keep) const;
  Word concat(const Word& other) const;
  // Relabels a_i -> a_{wrap(i + delta, rank)}.
  Word shifted(int delta) const;

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  // Shortlex, used to pick class representatives.
  friend bool operator<(const Word& a, const Word& b);

 private:
  int rank_;
  std::vector<int> letters_;
};

Word restrict_to(const Word& w, const std::vector<int>& keep);

// u embeds in t as a (not necessarily contiguous) subsequence.
bool is_subword(const Word& u, const Word& t);

// s is a contiguous factor of t; s must be non-empty.
bool occurs_factor(const Word& s, const Word& t);

}  // namespace lcn
