#include "lcn/monoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>

#include "lcn/oracle.hpp"

namespace lcn {

namespace {

int universe_element_cap() {
  if (const char* env = std::getenv("LCN_MAX_ELEMENTS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) {
      return static_cast<int>(v);
    }
  }
  return 250000;
}

}  // namespace

Universe Universe::build(int n) {
  if (n < 1) {
    throw std::invalid_argument("rank must be at least 1");
  }
  if (n > 12 && std::getenv("LCN_MAX_ELEMENTS") == nullptr) {
    throw std::runtime_error(
        "universe cap: n > 12 (set LCN_MAX_ELEMENTS to override)");
  }
  const int cap = universe_element_cap();

  Universe u;
  u.rank_ = n;

  // BFS over right multiplication by generators, identity first.
  std::deque<int> queue;
  auto intern = [&](const CanonicalForm& cf) {
    auto [it, fresh] = u.index_.emplace(cf.str(), u.size());
    if (fresh) {
      if (u.size() >= cap) {
        throw std::runtime_error("universe cap exceeded");
      }
      u.elements_.push_back(cf);
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern(CanonicalForm::identity(n));
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    const Word base = u.elements_[static_cast<std::size_t>(id)].word();
    for (int g = 1; g <= n; ++g) {
      intern(canonicalize(base.concat(Word(n, {g}))));
    }
  }

  // Renumber: identity stays 0, zero moves last, everything else keeps BFS
  // order.
  if (n >= 2) {
    const std::string zw = zero_word(n).str();
    const auto it = u.index_.find(zw);
    if (it == u.index_.end()) {
      throw std::logic_error("zero element missing from universe");
    }
    const int zid = it->second;
    std::vector<CanonicalForm> reordered;
    reordered.reserve(u.elements_.size());
    std::vector<int> old_to_new(u.elements_.size());
    for (int id = 0; id < u.size(); ++id) {
      if (id == zid) {
        continue;
      }
      old_to_new[static_cast<std::size_t>(id)] =
          static_cast<int>(reordered.size());
      reordered.push_back(u.elements_[static_cast<std::size_t>(id)]);
    }
    old_to_new[static_cast<std::size_t>(zid)] =
        static_cast<int>(reordered.size());
    reordered.push_back(u.elements_[static_cast<std::size_t>(zid)]);
    u.elements_ = std::move(reordered);
    u.index_.clear();
    for (int id = 0; id < u.size(); ++id) {
      u.index_.emplace(u.elements_[static_cast<std::size_t>(id)].str(), id);
    }
    u.zero_id_ = u.size() - 1;
  }

  const auto size = static_cast<std::size_t>(u.size());
  u.table_.assign(size * size, -1);
  for (int a = 0; a < u.size(); ++a) {
    const Word wa = u.elements_[static_cast<std::size_t>(a)].word();
    for (int b = 0; b < u.size(); ++b) {
      const Word wb = u.elements_[static_cast<std::size_t>(b)].word();
      const CanonicalForm prod = canonicalize(wa.concat(wb));
      const auto it = u.index_.find(prod.str());
      if (it == u.index_.end()) {
        throw std::logic_error("universe not closed under multiplication");
      }
      u.table_[static_cast<std::size_t>(a) * size +
               static_cast<std::size_t>(b)] = it->second;
    }
  }

  for (int id = 0; id < u.size(); ++id) {
    if (u.multiply(id, id) == id) {
      u.idempotents_.push_back(id);
    }
  }
  return u;
}

int Universe::generator_id(int letter) const {
  if (letter < 1 || letter > rank_) {
    throw std::invalid_argument("generator index out of range");
  }
  const auto it = index_.find(Word(rank_, {letter}).str());
  if (it == index_.end()) {
    throw std::logic_error("generator missing from universe");
  }
  return it->second;
}

int Universe::product_of_word(const Word& w) const {
  int acc = identity_id();
  for (int x : w.letters()) {
    acc = multiply(acc, generator_id(x));
  }
  return acc;
}

int Universe::id_of(const CanonicalForm& cf) const {
  const auto it = index_.find(cf.str());
  if (it == index_.end()) {
    throw std::invalid_argument("element not in universe: " + cf.str());
  }
  return it->second;
}

std::optional<int> Universe::find_word(const std::string& dotted) const {
  const CanonicalForm cf = canonicalize(Word::parse(rank_, dotted));
  const auto it = index_.find(cf.str());
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::vector<int> Universe::nonzero_idempotents() const {
  std::vector<int> out;
  for (int e : idempotents_) {
    if (!is_zero(e)) {
      out.push_back(e);
    }
  }
  return out;
}

namespace {

void shapes_for_span(int span, std::vector<SegmentShape>& out) {
  out.clear();
  if (span == 0) {
    out.push_back(SegmentShape::Singleton);
  } else if (span == 1) {
    out.push_back(SegmentShape::Blocker);
    out.push_back(SegmentShape::ReversedPair);
  } else if (span % 2 == 0) {
    out.push_back(SegmentShape::EvenRun);
  } else {
    out.push_back(SegmentShape::OddRun);
  }
}

// Extends a partial arrangement with arcs starting at or after `from`, all
// ending at or before `limit` (inclusive), in plain coordinates.
void extend_linear(int n, int from, int limit,
                   std::vector<std::pair<int, int>>& arcs,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
  out.push_back(arcs);
  for (int s = from; s <= limit; ++s) {
    for (int e = s; e <= limit; ++e) {
      arcs.emplace_back(s, e);
      extend_linear(n, e + 3, limit, arcs, out);
      arcs.pop_back();
    }
  }
}

}  // namespace

std::vector<CanonicalForm> enumerate_canonical(int n) {
  if (n < 4) {
    throw std::invalid_argument("enumerate_canonical needs n >= 4");
  }
  std::vector<std::vector<std::pair<int, int>>> arrangements;
  std::vector<std::pair<int, int>> arcs;

  // No wrapping arc: arcs in increasing order within [s1, s1 + n - 3].
  for (int s1 = 1; s1 <= n; ++s1) {
    for (int e1 = s1; e1 <= std::min(n, s1 + n - 3); ++e1) {
      arcs = {{s1, e1}};
      extend_linear(n, e1 + 3, std::min(n, s1 + n - 3), arcs, arrangements);
    }
  }
  // One wrapping arc [s1 > e1], listed first; the rest fit linearly between
  // e1 + 3 and s1 - 3.
  for (int s1 = 2; s1 <= n; ++s1) {
    for (int e1 = 1; e1 <= s1 - 3; ++e1) {
      arcs = {{s1, e1}};
      extend_linear(n, e1 + 3, s1 - 3, arcs, arrangements);
    }
  }

  std::vector<CanonicalForm> out;
  out.push_back(CanonicalForm::identity(n));
  out.push_back(CanonicalForm::zero(n));
  std::vector<Segment> segs;
  for (const auto& arr : arrangements) {
    if (arr.empty()) {
      continue;
    }
    // Expand the shape choices (2 per span-1 arc, 1 otherwise).
    std::vector<std::vector<SegmentShape>> choices(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const int span = wrap(arr[i].second - arr[i].first + 1, n) - 1;
      shapes_for_span(span, choices[i]);
    }
    std::vector<std::size_t> pick(arr.size(), 0);
    while (true) {
      segs.clear();
      for (std::size_t i = 0; i < arr.size(); ++i) {
        segs.push_back({arr[i].first, arr[i].second, choices[i][pick[i]]});
      }
      out.push_back(CanonicalForm::with_segments(n, segs));
      std::size_t i = 0;
      while (i < arr.size() && pick[i] + 1 == choices[i].size()) {
        pick[i] = 0;
        ++i;
      }
      if (i == arr.size()) {
        break;
      }
      ++pick[i];
    }
  }
  return out;
}

unsigned long long catalan_number(int n) {
  // (1/(n+1)) C(2n, n), exact for the small n used here.
  unsigned long long num = 1;
  for (int k = 0; k < n; ++k) {
    num = num * static_cast<unsigned long long>(2 * n - k) /
          static_cast<unsigned long long>(k + 1);
  }
  return num / static_cast<unsigned long long>(n + 1);
}

bool catalan_cardinality_check(int n) {
  if (n < 1 || n > 7) {
    throw std::invalid_argument("catalan_cardinality_check supports 1..7");
  }
  const auto presentation = oracle::catalan_presentation(n);
  const auto enumeration = oracle::enumerate_elements(presentation);
  return static_cast<unsigned long long>(enumeration.element_count) ==
         catalan_number(n);
}

}  // namespace lcn
