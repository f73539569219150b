#include "lcn/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcn {

namespace {

constexpr int kMaxRank = 30;  // keeps content masks in 32 bits

}  // namespace

std::vector<int> letters_of(LetterSet mask) {
  std::vector<int> out;
  for (int i = 1; i <= kMaxRank; ++i) {
    if (has_letter(mask, i)) {
      out.push_back(i);
    }
  }
  return out;
}

Word::Word(int rank, std::vector<int> letters)
    : rank_(rank), letters_(std::move(letters)) {
  if (rank < 1 || rank > kMaxRank) {
    throw std::invalid_argument("word rank out of range: " +
                                std::to_string(rank));
  }
  for (int x : letters_) {
    if (x < 1 || x > rank_) {
      throw std::invalid_argument("letter a_" + std::to_string(x) +
                                  " outside rank " + std::to_string(rank_));
    }
  }
}

Word Word::parse(int rank, const std::string& text) {
  if (text == "1" || text.empty()) {
    return Word::identity(rank);
  }
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != 'a') {
      throw std::invalid_argument("cannot parse word: " + text);
    }
    ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != '.') {
      ++j;
    }
    if (j == i) {
      throw std::invalid_argument("cannot parse word: " + text);
    }
    letters.push_back(std::stoi(text.substr(i, j - i)));
    i = (j < text.size()) ? j + 1 : j;
  }
  return Word(rank, std::move(letters));
}

LetterSet Word::content_mask() const {
  LetterSet mask = 0;
  for (int x : letters_) {
    mask |= letter_bit(x);
  }
  return mask;
}

std::vector<int> Word::content() const {
  return letters_of(content_mask());
}

Word Word::restricted(LetterSet keep) const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int x : letters_) {
    if (has_letter(keep, x)) {
      out.push_back(x);
    }
  }
  return Word(rank_, std::move(out));
}

Word Word::concat(const Word& other) const {
  if (other.rank_ != rank_) {
    throw std::invalid_argument("concat across different ranks");
  }
  std::vector<int> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(rank_, std::move(out));
}

Word Word::shifted(int delta) const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int x : letters_) {
    out.push_back(wrap(x + delta, rank_));
  }
  return Word(rank_, std::move(out));
}

std::string Word::str() const {
  if (letters_.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) {
      out += '.';
    }
    out += 'a';
    out += std::to_string(letters_[i]);
  }
  return out;
}

bool operator<(const Word& a, const Word& b) {
  if (a.letters_.size() != b.letters_.size()) {
    return a.letters_.size() < b.letters_.size();
  }
  return a.letters_ < b.letters_;
}

Word restrict_to(const Word& w, const std::vector<int>& keep) {
  LetterSet mask = 0;
  for (int x : keep) {
    if (x < 1 || x > w.rank()) {
      throw std::invalid_argument("restriction letter outside rank");
    }
    mask |= letter_bit(x);
  }
  return w.restricted(mask);
}

bool is_subword(const Word& u, const Word& t) {
  int i = 0;
  for (int j = 0; j < t.size() && i < u.size(); ++j) {
    if (t.at(j) == u.at(i)) {
      ++i;
    }
  }
  return i == u.size();
}

bool occurs_factor(const Word& s, const Word& t) {
  if (s.empty()) {
    throw std::invalid_argument("occurs_factor requires non-empty factor");
  }
  if (s.size() > t.size()) {
    return false;
  }
  const auto& sl = s.letters();
  const auto& tl = t.letters();
  return std::search(tl.begin(), tl.end(), sl.begin(), sl.end()) != tl.end();
}

}  // namespace lcn
