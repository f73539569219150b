#include "lcn/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace lcn {
namespace oracle {

namespace {

void add_pair(std::set<std::pair<std::vector<int>, std::vector<int>>>& out,
              std::vector<int> a, std::vector<int> b) {
  if (a == b) {
    return;
  }
  if (std::make_pair(b.size(), b) < std::make_pair(a.size(), a)) {
    std::swap(a, b);
  }
  out.insert({std::move(a), std::move(b)});
}

Presentation build_presentation(
    int rank,
    const std::set<std::pair<std::vector<int>, std::vector<int>>>& pairs) {
  Presentation p;
  p.rank = rank;
  for (const auto& [a, b] : pairs) {
    p.relations.emplace_back(Word(rank, a), Word(rank, b));
  }
  return p;
}

}  // namespace

Presentation lc_presentation(int n) {
  if (n < 1) {
    throw std::invalid_argument("lc_presentation needs n >= 1");
  }
  std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;
  for (int i = 1; i <= n; ++i) {
    add_pair(pairs, {i, i}, {i});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      if (i == 1 && j == n) {
        continue;  // the one commutation LC_n drops
      }
      add_pair(pairs, {i, j}, {j, i});
    }
  }
  for (int i = 1; i < n; ++i) {
    add_pair(pairs, {i, i + 1, i}, {i + 1, i, i + 1});
    add_pair(pairs, {i + 1, i, i + 1}, {i + 1, i});
  }
  if (n >= 2) {
    // (1'): a_n a_1 a_n = a_1 a_n a_1 = a_1 a_n
    add_pair(pairs, {n, 1, n}, {1, n, 1});
    add_pair(pairs, {1, n, 1}, {1, n});
  }
  for (int i = 1; i <= n; ++i) {
    const int q = wrap(i + 1, n);
    const int r = wrap(i + 2, n);
    if (i != q && i != r && q != r) {
      add_pair(pairs, {i, q, r}, {i, r});
    }
  }
  return build_presentation(n, pairs);
}

Presentation catalan_presentation(int n) {
  if (n < 1) {
    throw std::invalid_argument("catalan_presentation needs n >= 1");
  }
  const int m = n - 1;  // generators of the monoid on n points
  if (m == 0) {
    return Presentation{0, {}};
  }
  std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;
  for (int i = 1; i <= m; ++i) {
    add_pair(pairs, {i, i}, {i});
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 2; j <= m; ++j) {
      add_pair(pairs, {i, j}, {j, i});
    }
  }
  for (int i = 1; i < m; ++i) {
    add_pair(pairs, {i, i + 1, i}, {i + 1, i, i + 1});
    add_pair(pairs, {i + 1, i, i + 1}, {i + 1, i});
  }
  return build_presentation(m, pairs);
}

CongruenceResult::CongruenceResult(Presentation p, int max_len)
    : presentation_(std::move(p)), max_len_(max_len) {
  const int n = presentation_.rank;
  if (n < 1) {
    parent_ = {0};
    class_count_ = 1;
    stable_ = true;
    longest_side_ = 0;
    return;
  }
  std::int64_t total = 1;
  std::int64_t pow = 1;
  for (int k = 1; k <= max_len_; ++k) {
    pow *= n;
    total += pow;
    if (total > 80'000'000) {
      throw std::runtime_error("oracle arena too large: rank " +
                               std::to_string(n) + ", max_len " +
                               std::to_string(max_len_));
    }
  }
  longest_side_ = 0;
  for (const auto& [a, b] : presentation_.relations) {
    longest_side_ = std::max({longest_side_, a.size(), b.size()});
  }

  parent_.assign(static_cast<std::size_t>(total), 0);
  for (std::int64_t i = 0; i < total; ++i) {
    parent_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i);
  }

  auto unite = [&](std::int64_t a, std::int64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return;
    }
    if (a > b) {
      std::swap(a, b);
    }
    parent_[static_cast<std::size_t>(b)] = static_cast<std::int32_t>(a);
  };

  // Sides as flat letter vectors for cheap matching.
  struct Rule {
    std::vector<int> from, to;
  };
  std::vector<Rule> rules;
  for (const auto& [a, b] : presentation_.relations) {
    rules.push_back({a.letters(), b.letters()});
    rules.push_back({b.letters(), a.letters()});
  }

  // Odometer over the arena in shortlex order; idx tracked alongside.
  std::vector<int> w;
  std::vector<int> scratch;
  for (int len = 0; len <= max_len_; ++len) {
    w.assign(static_cast<std::size_t>(len), 1);
    while (true) {
      std::int64_t idx = 0;
      for (int x : w) {
        idx = idx * n + x;
      }
      for (const Rule& rule : rules) {
        const int fl = static_cast<int>(rule.from.size());
        const int tl = static_cast<int>(rule.to.size());
        if (len - fl + tl > max_len_) {
          continue;
        }
        for (int pos = 0; pos + fl <= len; ++pos) {
          if (!std::equal(rule.from.begin(), rule.from.end(),
                          w.begin() + pos)) {
            continue;
          }
          scratch.clear();
          scratch.insert(scratch.end(), w.begin(), w.begin() + pos);
          scratch.insert(scratch.end(), rule.to.begin(), rule.to.end());
          scratch.insert(scratch.end(), w.begin() + pos + fl, w.end());
          std::int64_t jdx = 0;
          for (int x : scratch) {
            jdx = jdx * n + x;
          }
          unite(idx, jdx);
        }
      }
      // next word of this length
      int i = len - 1;
      while (i >= 0 && w[static_cast<std::size_t>(i)] == n) {
        w[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) {
        break;
      }
      ++w[static_cast<std::size_t>(i)];
    }
  }

  // Class count and stability: the index blocks of lengths 0, 1, ... have
  // sizes 1, n, n^2, ...; the min length per root must leave a margin of
  // longest_side_.
  std::unordered_map<std::int32_t, int> min_len;
  std::int64_t lo = 0;
  std::int64_t block = 1;
  int len = 0;
  std::int64_t count = 0;
  while (lo < total) {
    const std::int64_t hi = std::min(total, lo + block);
    for (std::int64_t i = lo; i < hi; ++i) {
      const auto root = static_cast<std::int32_t>(find(i));
      if (min_len.emplace(root, len).second) {
        ++count;
      }
    }
    lo = hi;
    block *= n;
    ++len;
  }
  class_count_ = static_cast<int>(count);
  stable_ = true;
  for (const auto& [root, ml] : min_len) {
    if (ml > max_len_ - longest_side_) {
      stable_ = false;
      break;
    }
  }
}

std::int64_t CongruenceResult::find(std::int64_t i) const {
  while (parent_[static_cast<std::size_t>(i)] != i) {
    const auto up = parent_[static_cast<std::size_t>(i)];
    parent_[static_cast<std::size_t>(i)] =
        parent_[static_cast<std::size_t>(up)];
    i = parent_[static_cast<std::size_t>(i)];
  }
  return i;
}

std::int64_t CongruenceResult::index_of(const Word& w) const {
  if (presentation_.rank >= 1 && w.rank() != presentation_.rank) {
    throw std::invalid_argument("word rank does not match presentation");
  }
  if (w.size() > max_len_) {
    throw std::invalid_argument("word exceeds the oracle arena length");
  }
  std::int64_t idx = 0;
  for (int x : w.letters()) {
    idx = idx * presentation_.rank + x;
  }
  return idx;
}

std::int64_t CongruenceResult::class_of(std::int64_t word_index) const {
  return find(word_index);
}

bool CongruenceResult::equal(const Word& a, const Word& b) const {
  return find(index_of(a)) == find(index_of(b));
}

Word CongruenceResult::representative(const Word& w) const {
  const std::int64_t root = find(index_of(w));
  // Scan in shortlex (= index) order for the first member of the class.
  for (std::int64_t i = 0; i < word_count(); ++i) {
    if (find(i) == root) {
      // decode i
      std::vector<int> letters;
      std::int64_t v = i;
      while (v > 0) {
        const int a = static_cast<int>((v - 1) % presentation_.rank) + 1;
        letters.push_back(a);
        v = (v - a) / presentation_.rank;
      }
      std::reverse(letters.begin(), letters.end());
      return Word(presentation_.rank, std::move(letters));
    }
  }
  throw std::logic_error("class representative not found");
}

std::vector<Word> CongruenceResult::class_representatives() const {
  std::vector<Word> reps;
  std::set<std::int64_t> seen;
  std::vector<int> letters;
  for (std::int64_t i = 0; i < word_count(); ++i) {
    const std::int64_t root = find(i);
    if (seen.insert(root).second) {
      letters.clear();
      std::int64_t v = i;
      while (v > 0) {
        const int a = static_cast<int>((v - 1) % presentation_.rank) + 1;
        letters.push_back(a);
        v = (v - a) / presentation_.rank;
      }
      std::reverse(letters.begin(), letters.end());
      reps.emplace_back(std::max(presentation_.rank, 1), letters);
    }
  }
  return reps;
}

CongruenceResult congruence_classes(const Presentation& p, int max_len) {
  return CongruenceResult(p, max_len);
}

bool oracle_equal(const CongruenceResult& classes, const Word& w1,
                  const Word& w2) {
  return classes.equal(w1, w2);
}

int EnumerationResult::trace(const Word& w) const {
  int v = 0;
  for (int x : w.letters()) {
    v = transitions[static_cast<std::size_t>(v)][static_cast<std::size_t>(x - 1)];
  }
  return v;
}

EnumerationResult enumerate_elements(const Presentation& p, int node_cap) {
  const int rank = p.rank;
  if (rank == 0) {
    return EnumerationResult{1, {std::vector<int>{}}};
  }
  constexpr int kUndef = -1;

  std::vector<std::vector<int>> trans;
  std::vector<int> parent;
  auto root = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  auto new_node = [&]() {
    if (static_cast<int>(trans.size()) >= node_cap) {
      throw std::runtime_error("enumeration node cap exceeded");
    }
    trans.emplace_back(static_cast<std::size_t>(rank), kUndef);
    parent.push_back(static_cast<int>(trans.size()) - 1);
    return static_cast<int>(trans.size()) - 1;
  };

  std::deque<std::pair<int, int>> pending;
  auto coincide = [&](int a, int b) {
    pending.emplace_back(a, b);
    while (!pending.empty()) {
      auto [x, y] = pending.front();
      pending.pop_front();
      x = root(x);
      y = root(y);
      if (x == y) {
        continue;
      }
      if (x > y) {
        std::swap(x, y);
      }
      parent[static_cast<std::size_t>(y)] = x;
      for (int g = 0; g < rank; ++g) {
        const int ty = trans[static_cast<std::size_t>(y)][static_cast<std::size_t>(g)];
        if (ty == kUndef) {
          continue;
        }
        int& tx = trans[static_cast<std::size_t>(x)][static_cast<std::size_t>(g)];
        if (tx == kUndef) {
          tx = ty;
        } else if (root(tx) != root(ty)) {
          pending.emplace_back(tx, ty);
        }
      }
    }
  };

  auto trace_fill = [&](int u, const Word& w) {
    int v = root(u);
    for (int x : w.letters()) {
      const int g = x - 1;
      int t = trans[static_cast<std::size_t>(v)][static_cast<std::size_t>(g)];
      if (t == kUndef) {
        t = new_node();
        trans[static_cast<std::size_t>(v)][static_cast<std::size_t>(g)] = t;
      }
      v = root(t);
    }
    return v;
  };

  new_node();  // identity
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < static_cast<int>(trans.size()); ++u) {
      if (root(u) != u) {
        continue;
      }
      for (const auto& [a, b] : p.relations) {
        const int x = trace_fill(u, a);
        const int y = trace_fill(u, b);
        if (root(x) != root(y)) {
          coincide(x, y);
          changed = true;
        }
      }
      if (root(u) != u) {
        continue;  // u died during its own scans
      }
      for (int g = 0; g < rank; ++g) {
        if (trans[static_cast<std::size_t>(u)][static_cast<std::size_t>(g)] ==
            kUndef) {
          trans[static_cast<std::size_t>(u)][static_cast<std::size_t>(g)] =
              new_node();
          changed = true;
        }
      }
    }
  }

  // Compact live roots.
  std::vector<int> remap(trans.size(), -1);
  int count = 0;
  for (int v = 0; v < static_cast<int>(trans.size()); ++v) {
    if (root(v) == v) {
      remap[static_cast<std::size_t>(v)] = count++;
    }
  }
  EnumerationResult out;
  out.element_count = count;
  out.transitions.assign(static_cast<std::size_t>(count),
                         std::vector<int>(static_cast<std::size_t>(rank), -1));
  for (int v = 0; v < static_cast<int>(trans.size()); ++v) {
    if (root(v) != v) {
      continue;
    }
    for (int g = 0; g < rank; ++g) {
      const int t = trans[static_cast<std::size_t>(v)][static_cast<std::size_t>(g)];
      out.transitions[static_cast<std::size_t>(remap[static_cast<std::size_t>(v)])]
                     [static_cast<std::size_t>(g)] =
          remap[static_cast<std::size_t>(root(t))];
    }
  }
  return out;
}

}  // namespace oracle
}  // namespace lcn
