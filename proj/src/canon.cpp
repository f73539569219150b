#include "lcn/canon.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcn {

const char* to_string(SegmentShape shape) {
  switch (shape) {
    case SegmentShape::Singleton:
      return "singleton";
    case SegmentShape::Blocker:
      return "blocker";
    case SegmentShape::ReversedPair:
      return "reversed";
    case SegmentShape::EvenRun:
      return "even_run";
    case SegmentShape::OddRun:
      return "odd_run";
  }
  return "?";
}

const char* to_string(FormKind kind) {
  switch (kind) {
    case FormKind::Identity:
      return "identity";
    case FormKind::Zero:
      return "zero";
    case FormKind::Segments:
      return "segments";
  }
  return "?";
}

Word Segment::render(int n) const {
  std::vector<int> out;
  switch (shape) {
    case SegmentShape::Singleton:
      out = {start};
      break;
    case SegmentShape::Blocker:
      out = {start, wrap(start + 1, n)};
      break;
    case SegmentShape::ReversedPair:
      out = {wrap(start + 1, n), start};
      break;
    case SegmentShape::EvenRun:
      for (int d = 0; d <= span(n); d += 2) {
        out.push_back(wrap(start + d, n));
      }
      break;
    case SegmentShape::OddRun:
      out = {start, wrap(start + 1, n)};
      for (int d = 3; d <= span(n); d += 2) {
        out.push_back(wrap(start + d, n));
      }
      break;
  }
  return Word(n, std::move(out));
}

CanonicalForm::CanonicalForm(FormKind kind, Word word,
                             std::vector<Segment> segments)
    : kind_(kind), word_(std::move(word)), segments_(std::move(segments)) {}

CanonicalForm CanonicalForm::identity(int n) {
  return CanonicalForm(FormKind::Identity, Word::identity(n), {});
}

CanonicalForm CanonicalForm::zero(int n) {
  return CanonicalForm(FormKind::Zero, zero_word(n), {});
}

CanonicalForm CanonicalForm::with_segments(int n,
                                           std::vector<Segment> segments) {
  if (segments.empty()) {
    throw std::invalid_argument("segment form needs at least one segment");
  }
  Word word = Word::identity(n);
  for (const Segment& s : segments) {
    word = word.concat(s.render(n));
  }
  return CanonicalForm(FormKind::Segments, std::move(word),
                       std::move(segments));
}

const std::vector<Segment>& CanonicalForm::segments() const {
  if (kind_ != FormKind::Segments) {
    throw std::invalid_argument("only segment forms have segments");
  }
  return segments_;
}

const std::vector<Segment>& parse_segments(const CanonicalForm& cf) {
  return cf.segments();
}

Word zero_word(int n) {
  if (n < 2) {
    throw std::invalid_argument("LC_1 has no zero element");
  }
  if (n == 2) {
    return Word(2, {1, 2});
  }
  if (n == 3) {
    return Word(3, {1, 3});
  }
  std::vector<int> letters;
  if (n % 2 == 0) {
    for (int i = 1; i <= n - 1; i += 2) {
      letters.push_back(i);
    }
  } else {
    letters = {1, 2};
    for (int i = 4; i <= n - 1; i += 2) {
      letters.push_back(i);
    }
  }
  return Word(n, std::move(letters));
}

std::optional<int> star_condition(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("star_condition on the empty word");
  }
  const int n = w.rank();
  const LetterSet c = w.content_mask();
  std::vector<int> letters = w.content();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    int r = *it;
    if (!has_letter(c, wrap(r + 1, n)) && !has_letter(c, wrap(r + 2, n))) {
      return r;
    }
  }
  return std::nullopt;
}

namespace {

// One pass of Simplify Y at the prefix. Returns true if a rule fired. Plain
// integer arithmetic; only valid in the shift-normalized frame.
bool simplify_step(std::vector<int>& y) {
  const int m = static_cast<int>(y.size());
  if (m >= 3) {
    const int a = y[0], b = y[1], c = y[2];
    // (a)  a_r a_{r+1} a_{r+2} | a_r a_{r+2} a_{r+1}  ->  a_r a_{r+2}
    if ((b == a + 1 && c == a + 2) || (b == a + 2 && c == a + 1)) {
      y[1] = a + 2;
      y.erase(y.begin() + 2);
      return true;
    }
    // (b)  a_r a_{r+2} a_{r+3} | a_r a_{r+3} a_{r+2}  ->  a_r a_{r+1} a_{r+3}
    if ((b == a + 2 && c == a + 3) || (b == a + 3 && c == a + 2)) {
      y[1] = a + 1;
      y[2] = a + 3;
      return true;
    }
    // (c)  a_r a_{r-1} a_{r+1}  ->  a_{r-1} a_{r+1}
    //      (its second pattern a_{r-1} a_r a_{r+1} is rule (a)'s shape)
    if (b == a - 1 && c == a + 1) {
      y.erase(y.begin());
      return true;
    }
    // (d)  a_r a_{r-1} a_{r+2}  ->  a_{r-1} a_r a_{r+2}
    if (b == a - 1 && c == a + 2) {
      std::swap(y[0], y[1]);
      return true;
    }
  }
  if (m >= 4) {
    const int a = y[0], b = y[1], c = y[2], d = y[3];
    // (e)  a_{r-1} a_r a_{r+1} a_{r+2} | a_{r-1} a_r a_{r+2} a_{r+1}
    //        ->  a_{r-1} a_r a_{r+2}
    if (b == a + 1 &&
        ((c == a + 2 && d == a + 3) || (c == a + 3 && d == a + 2))) {
      y[2] = a + 3;
      y.erase(y.begin() + 3);
      return true;
    }
    // (f)  a_r a_{r-1} a_{r+1} a_{r+2} | a_r a_{r-1} a_{r+2} a_{r+1}
    //        ->  a_r a_{r-1} a_{r+2}
    if (b == a - 1 &&
        ((c == a + 1 && d == a + 2) || (c == a + 2 && d == a + 1))) {
      y[2] = a + 2;
      y.erase(y.begin() + 3);
      return true;
    }
    // (g)  a_r a_{r-1} a_{r+2} a_{r+3} | a_r a_{r-1} a_{r+3} a_{r+2}
    //        ->  a_{r-1} a_{r+1} a_{r+3}
    if (b == a - 1 &&
        ((c == a + 2 && d == a + 3) || (c == a + 3 && d == a + 2))) {
      y[0] = a - 1;
      y[1] = a + 1;
      y[2] = a + 3;
      y.erase(y.begin() + 3);
      return true;
    }
    // (g)  a_{r-1} a_r a_{r+2} a_{r+3} | a_{r-1} a_r a_{r+3} a_{r+2}
    //        ->  a_{r-1} a_{r+1} a_{r+3}
    if (b == a + 1 &&
        ((c == a + 3 && d == a + 4) || (c == a + 4 && d == a + 3))) {
      y[1] = a + 2;
      y[2] = a + 4;
      y.erase(y.begin() + 3);
      return true;
    }
  }
  return false;
}

void simplify_to_fixpoint(std::vector<int>& y) {
  while (simplify_step(y)) {
  }
}

bool letters_contain(const std::vector<int>& xs, int v) {
  return std::find(xs.begin(), xs.end(), v) != xs.end();
}

// The reduction loop on a shift-normalized word. Returns the canonical word
// in the same frame.
std::vector<int> reduce(std::vector<int> x) {
  std::vector<int> y;
  while (!x.empty()) {
    const int r = *std::max_element(x.begin(), x.end());
    const bool rm1 = r >= 2 && letters_contain(x, r - 1);
    const bool rm2 = r >= 3 && letters_contain(x, r - 2);
    std::vector<int> keep;
    if (!rm1) {
      // Case 1: drop all a_r, prepend a_r.
      for (int v : x) {
        if (v != r) {
          keep.push_back(v);
        }
      }
      y.insert(y.begin(), r);
    } else if (!rm2) {
      // Case 2: drop a_r and a_{r-1}; the pair's orientation depends on
      // whether some a_r occurs before some a_{r-1}.
      bool r_before = false;
      for (int i = 0; i < static_cast<int>(x.size()) && !r_before; ++i) {
        if (x[static_cast<std::size_t>(i)] == r) {
          for (int j = i + 1; j < static_cast<int>(x.size()); ++j) {
            if (x[static_cast<std::size_t>(j)] == r - 1) {
              r_before = true;
              break;
            }
          }
          break;  // first a_r decides
        }
      }
      for (int v : x) {
        if (v != r && v != r - 1) {
          keep.push_back(v);
        }
      }
      if (r_before) {
        y.insert(y.begin(), {r, r - 1});
      } else {
        y.insert(y.begin(), {r - 1, r});
      }
    } else {
      // Case 3: a_{r-1} is glued to a_{r-2}; drop both top letters, prepend
      // a_r alone.
      for (int v : x) {
        if (v != r && v != r - 1) {
          keep.push_back(v);
        }
      }
      y.insert(y.begin(), r);
    }
    x = std::move(keep);
    simplify_to_fixpoint(y);
  }
  return y;
}

// Parses a shift-normalized canonical word into segments (plain arithmetic,
// ascending starts). Throws std::logic_error on anything malformed.
std::vector<Segment> parse_linear(const std::vector<int>& y) {
  std::vector<Segment> segs;
  const int m = static_cast<int>(y.size());
  int i = 0;
  while (i < m) {
    const int a = y[static_cast<std::size_t>(i)];
    if (i + 1 == m) {
      segs.push_back({a, a, SegmentShape::Singleton});
      ++i;
      continue;
    }
    const int b = y[static_cast<std::size_t>(i + 1)];
    if (b == a - 1) {
      segs.push_back({b, a, SegmentShape::ReversedPair});
      i += 2;
    } else if (b == a + 2) {
      int j = i + 1;
      while (j + 1 < m && y[static_cast<std::size_t>(j + 1)] ==
                              y[static_cast<std::size_t>(j)] + 2) {
        ++j;
      }
      segs.push_back({a, y[static_cast<std::size_t>(j)], SegmentShape::EvenRun});
      i = j + 1;
    } else if (b == a + 1) {
      if (i + 2 < m && y[static_cast<std::size_t>(i + 2)] == a + 3) {
        int j = i + 2;
        while (j + 1 < m && y[static_cast<std::size_t>(j + 1)] ==
                                y[static_cast<std::size_t>(j)] + 2) {
          ++j;
        }
        segs.push_back(
            {a, y[static_cast<std::size_t>(j)], SegmentShape::OddRun});
        i = j + 1;
      } else {
        segs.push_back({a, a + 1, SegmentShape::Blocker});
        i += 2;
      }
    } else if (b >= a + 3) {
      segs.push_back({a, a, SegmentShape::Singleton});
      ++i;
    } else {
      throw std::logic_error("reduction produced a non-canonical word");
    }
  }
  return segs;
}

CanonicalForm small_rank_canonicalize(const Word& w) {
  const int n = w.rank();
  const LetterSet c = w.content_mask();
  const std::vector<int> letters = letters_of(c);
  if (n == 1) {
    return CanonicalForm::with_segments(1, {{1, 1, SegmentShape::Singleton}});
  }
  if (letters.size() == 1) {
    const int i = letters[0];
    return CanonicalForm::with_segments(n, {{i, i, SegmentShape::Singleton}});
  }
  if (n == 2 || letters.size() == 3) {
    return CanonicalForm::zero(n);
  }
  // n = 3, two distinct letters {i, i+1 mod 3}: the pair collapses to the
  // blocker a_i a_{i+1} unless some a_{i+1} occurs before some a_i, in which
  // case the reversed pair is the zero a_1 a_3.
  int lo = 0;
  for (int i = 1; i <= 3; ++i) {
    if (has_letter(c, i) && has_letter(c, wrap(i + 1, 3))) {
      lo = i;
      break;
    }
  }
  const int hi = wrap(lo + 1, 3);
  int first_hi = -1, last_lo = -1;
  for (int i = 0; i < w.size(); ++i) {
    if (w.at(i) == hi && first_hi < 0) {
      first_hi = i;
    }
    if (w.at(i) == lo) {
      last_lo = i;
    }
  }
  if (first_hi < last_lo) {
    return CanonicalForm::zero(3);
  }
  return CanonicalForm::with_segments(3, {{lo, hi, SegmentShape::Blocker}});
}

}  // namespace

bool segment_covers(int n, const Segment& outer, const Segment& inner) {
  const int off = wrap(inner.start - outer.start + 1, n) - 1;
  return off + inner.span(n) <= outer.span(n);
}

Word simplify_y(const Word& y) {
  std::vector<int> letters = y.letters();
  simplify_to_fixpoint(letters);
  return Word(y.rank(), std::move(letters));
}

CanonicalForm canonicalize(const Word& w) {
  const int n = w.rank();
  if (w.empty()) {
    return CanonicalForm::identity(n);
  }
  if (n <= 3) {
    return small_rank_canonicalize(w);
  }

  const std::vector<int> cs = w.content();
  const int k = static_cast<int>(cs.size());
  // (*) is equivalent to some circular gap between consecutive content
  // letters being >= 3.
  bool any_split = (k == 1);
  for (int i = 0; i + 1 < k; ++i) {
    if (cs[static_cast<std::size_t>(i + 1)] - cs[static_cast<std::size_t>(i)] >= 3) {
      any_split = true;
    }
  }
  const int wrap_gap =
      (k >= 2) ? cs[0] + n - cs[static_cast<std::size_t>(k - 1)] : n;
  if (wrap_gap >= 3) {
    any_split = true;
  }
  if (!any_split) {
    return CanonicalForm::zero(n);
  }

  // If a content cluster crosses the n -> 1 boundary, rotate its first
  // letter to position 1; otherwise leave indices alone.
  int delta = 0;
  if (k >= 2 && wrap_gap <= 2) {
    int j = k - 1;
    while (j >= 1 && cs[static_cast<std::size_t>(j)] -
                             cs[static_cast<std::size_t>(j - 1)] <=
                         2) {
      --j;
    }
    delta = cs[static_cast<std::size_t>(j)] - 1;
  }

  const Word shifted = w.shifted(-delta);
  const std::vector<int> y = reduce(shifted.letters());
  std::vector<Segment> segments = parse_linear(y);
  for (Segment& s : segments) {
    s.start = wrap(s.start + delta, n);
    s.end = wrap(s.end + delta, n);
  }
  CanonicalForm cf = CanonicalForm::with_segments(n, std::move(segments));
  if (!validate_canonical(cf)) {
    throw std::logic_error("canonicalize produced an invalid form for " +
                           w.str());
  }
  return cf;
}

bool validate_canonical(const CanonicalForm& cf) {
  const int n = cf.rank();
  if (cf.kind() == FormKind::Identity) {
    return cf.word().empty();
  }
  if (cf.kind() == FormKind::Zero) {
    return n >= 2 && cf.word() == zero_word(n);
  }
  const std::vector<Segment>& segs = cf.segments();
  if (segs.empty()) {
    return false;
  }
  for (const Segment& s : segs) {
    if (s.start < 1 || s.start > n || s.end < 1 || s.end > n) {
      return false;
    }
    const int d = s.span(n);
    switch (s.shape) {
      case SegmentShape::Singleton:
        if (d != 0) return false;
        break;
      case SegmentShape::Blocker:
      case SegmentShape::ReversedPair:
        if (d != 1) return false;
        break;
      case SegmentShape::EvenRun:
        if (d < 2 || d % 2 != 0) return false;
        break;
      case SegmentShape::OddRun:
        if (d < 3 || d % 2 != 1) return false;
        break;
    }
  }
  if (n <= 3) {
    // Case-table ranks: singletons everywhere; for n = 3 also the three
    // blockers, which escape the generic gap rules.
    if (segs.size() != 1) {
      return false;
    }
    return segs[0].shape == SegmentShape::Singleton ||
           (n == 3 && segs[0].shape == SegmentShape::Blocker);
  }
  // Disjoint arcs in clockwise order starting at segs[0], with at least two
  // absent letters between consecutive segments (circularly) and the cycle
  // not completed.
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment& cur = segs[i];
    const Segment& nxt = segs[(i + 1) % segs.size()];
    const int gap_count = wrap(nxt.start - cur.end, n) - 1;  // strictly between
    if (gap_count < 2) {
      return false;
    }
    if (i > 0 && cur.wraps()) {
      return false;  // only the leading segment may cross the boundary
    }
  }
  if (segs.size() >= 2) {
    // Offsets from segs[0].start strictly increase: arcs listed clockwise,
    // pairwise disjoint, and the last one must not run into the first.
    int prev_end_off = segs[0].span(n);
    for (std::size_t i = 1; i < segs.size(); ++i) {
      const int start_off = wrap(segs[i].start - segs[0].start + 1, n) - 1;
      if (start_off <= prev_end_off) {
        return false;
      }
      prev_end_off = start_off + segs[i].span(n);
    }
    if (prev_end_off >= n) {
      return false;
    }
    if (!segs[0].wraps()) {
      // No wrapping segment: the listed order starts at the smallest start.
      for (std::size_t i = 1; i < segs.size(); ++i) {
        if (segs[i].start < segs[0].start) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace lcn
