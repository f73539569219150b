#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcn/word.hpp"

namespace lcn {

enum class SegmentShape { Singleton, Blocker, ReversedPair, EvenRun, OddRun };

const char* to_string(SegmentShape shape);

// One block of a canonical form: the circular interval [start, end], walked
// clockwise, rendered according to its shape:
//
//   Singleton      a_i                          start == end
//   Blocker        a_i a_{i+1}                  span 1
//   ReversedPair   a_{i+1} a_i                  span 1
//   EvenRun        a_i a_{i+2} ... a_j          span even >= 2
//   OddRun         a_i a_{i+1} a_{i+3} ... a_j  span odd >= 3
//
// The blocker is the only non-idempotent shape.
struct Segment {
  int start;
  int end;
  SegmentShape shape;

  // Clockwise distance end - start, taken circularly.
  int span(int n) const { return wrap(end - start + 1, n) - 1; }
  // The arc crosses the n -> 1 boundary.
  bool wraps() const { return end < start; }
  Word render(int n) const;

  friend bool operator==(const Segment& a, const Segment& b) {
    return a.start == b.start && a.end == b.end && a.shape == b.shape;
  }
};

enum class FormKind { Identity, Zero, Segments };

const char* to_string(FormKind kind);

// The unique normal form of an LC_n element. Equality is kind plus rendered
// word. For kind Zero the rendered word is zero_word(n); for Identity it is
// empty.
class CanonicalForm {
 public:
  static CanonicalForm identity(int n);
  static CanonicalForm zero(int n);
  static CanonicalForm with_segments(int n, std::vector<Segment> segments);

  FormKind kind() const { return kind_; }
  int rank() const { return word_.rank(); }
  bool is_identity() const { return kind_ == FormKind::Identity; }
  bool is_zero() const { return kind_ == FormKind::Zero; }
  const std::vector<Segment>& segments() const;
  const Word& word() const { return word_; }
  std::string str() const { return word_.str(); }

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.kind_ == b.kind_ && a.word_ == b.word_;
  }
  friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) {
    return !(a == b);
  }

 private:
  CanonicalForm(FormKind kind, Word word, std::vector<Segment> segments);

  FormKind kind_;
  Word word_;
  std::vector<Segment> segments_;
};

// The absorbing element as a word: a1 a3 ... a_{n-1} for even n > 3,
// a1 a2 a4 ... a_{n-1} for odd n > 3, a1 a2 for n = 2, a1 a3 for n = 3.
// LC_1 has no zero; n = 1 is an error.
Word zero_word(int n);

// Condition (*): some r with a_{r+1}, a_{r+2} (circularly) both absent from
// c(w). Returns the largest such r that lies in c(w), or nullopt. When the
// condition holds at all and w is non-empty, a qualifying r in the content
// always exists. Errors on the empty word.
std::optional<int> star_condition(const Word& w);

// Prefix simplification rules (a)-(g), applied first-match in listed order
// and iterated to fixpoint. Plain integer index arithmetic: callers pass
// words in the shift-normalized frame where the content does not cross the
// n -> 1 boundary.
Word simplify_y(const Word& y);

// Full canonicalization: Identity for the empty word, Zero for absorbing
// words (case tables for n <= 3, failure of (*) for n >= 4), otherwise
// cluster detection, index shift, the reduction loop, segment parsing and
// back-shift. Throws std::logic_error if the result fails validation, which
// would indicate a bug, never bad input.
CanonicalForm canonicalize(const Word& w);

// Segment list of a Segments form; errors on Identity/Zero.
const std::vector<Segment>& parse_segments(const CanonicalForm& cf);

bool validate_canonical(const CanonicalForm& cf);

// inner's arc lies inside outer's arc (circular containment).
bool segment_covers(int n, const Segment& outer, const Segment& inner);

}  // namespace lcn
