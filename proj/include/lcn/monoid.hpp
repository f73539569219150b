#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcn/canon.hpp"

namespace lcn {

// The fully materialized monoid LC_n: every element as a canonical form,
// plus a dense multiplication table. Ids are BFS discovery order with the
// identity at 0 and the zero last, so emitted tables are reproducible.
class Universe {
 public:
  static Universe build(int n);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const CanonicalForm& form(int id) const {
    return elements_[static_cast<std::size_t>(id)];
  }
  int identity_id() const { return 0; }
  std::optional<int> zero_id() const { return zero_id_; }
  bool is_zero(int id) const { return zero_id_ && *zero_id_ == id; }
  int generator_id(int letter) const;

  int multiply(int a, int b) const {
    return table_[static_cast<std::size_t>(a) *
                      static_cast<std::size_t>(elements_.size()) +
                  static_cast<std::size_t>(b)];
  }
  int product_of_word(const Word& w) const;

  int id_of(const CanonicalForm& cf) const;
  std::optional<int> find_word(const std::string& dotted) const;

  const std::vector<int>& idempotents() const { return idempotents_; }
  std::vector<int> nonzero_idempotents() const;

 private:
  Universe() = default;

  int rank_ = 0;
  std::vector<CanonicalForm> elements_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> table_;
  std::optional<int> zero_id_;
  std::vector<int> idempotents_;
};

// Direct generation of all canonical forms for n >= 4: every valid segment
// arrangement plus Identity and Zero. Must agree with Universe::build as a
// set.
std::vector<CanonicalForm> enumerate_canonical(int n);

unsigned long long catalan_number(int n);

// Counts the classical Catalan monoid C_n through the oracle's presentation
// machinery and compares with the formula.
bool catalan_cardinality_check(int n);

}  // namespace lcn
