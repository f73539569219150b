#pragma once

#include <cstdint>
#include <vector>

#include "lcn/word.hpp"

namespace lcn {
namespace oracle {

// A finite monoid presentation: relations are unordered pairs of words over
// a_1..a_rank.
struct Presentation {
  int rank;
  std::vector<std::pair<Word, Word>> relations;
};

// Defining relations of LC_n: idempotency, far commutation minus a_1 a_n =
// a_n a_1, the braid collapses including the circular (1'), and the
// three-consecutive-generator collapses (degenerate instances dropped).
Presentation lc_presentation(int n);

// The classical Catalan monoid C_n (order-decreasing order-preserving maps
// on n points) on n - 1 generators: idempotency, far commutation, braid
// collapses.
Presentation catalan_presentation(int n);

// Brute-force congruence on all words of length <= max_len: the finest
// equivalence closed under applying any relation in either direction inside
// any context, restricted to the arena. Words index into a shortlex-ordered
// arena.
class CongruenceResult {
 public:
  CongruenceResult(Presentation p, int max_len);

  int rank() const { return presentation_.rank; }
  int max_len() const { return max_len_; }
  std::int64_t word_count() const { return static_cast<std::int64_t>(parent_.size()); }
  int class_count() const { return class_count_; }
  // Every class already owns a word of length <= max_len - (longest relation
  // side); longer arenas cannot split or merge anything new.
  bool stable() const { return stable_; }

  std::int64_t index_of(const Word& w) const;
  std::int64_t class_of(std::int64_t word_index) const;
  bool equal(const Word& a, const Word& b) const;
  // Shortlex-least word in the class of w.
  Word representative(const Word& w) const;
  std::vector<Word> class_representatives() const;

 private:
  std::int64_t find(std::int64_t i) const;

  Presentation presentation_;
  int max_len_;
  int longest_side_;
  mutable std::vector<std::int32_t> parent_;
  int class_count_ = 0;
  bool stable_ = false;
};

CongruenceResult congruence_classes(const Presentation& p, int max_len);

bool oracle_equal(const CongruenceResult& classes, const Word& w1,
                  const Word& w2);

// Todd-Coxeter element enumeration for a finite presented monoid: complete
// and independent of any normal-form theory. Throws on exceeding node_cap.
struct EnumerationResult {
  int element_count;
  // Right Cayley graph on the surviving nodes, node 0 = identity,
  // trans[v][g] for g in 0..rank-1.
  std::vector<std::vector<int>> transitions;
  int trace(const Word& w) const;
};

EnumerationResult enumerate_elements(const Presentation& p,
                                     int node_cap = 200000);

}  // namespace oracle
}  // namespace lcn
