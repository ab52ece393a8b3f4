#include "gl6j/indexcore.hpp"

#include <algorithm>
#include <sstream>

namespace gl6j {

IndexSet::IndexSet(int rank, std::vector<int> elements)
    : rank_(rank), elems_(std::move(elements)) {
  if (rank_ < 1)
    throw std::invalid_argument("IndexSet: rank must be positive");
  if (elems_.empty())
    throw std::invalid_argument("IndexSet: empty index set");
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 1 || elems_[i] > rank_)
      throw std::invalid_argument("IndexSet: entry out of range 1..n");
    if (i > 0 && elems_[i - 1] >= elems_[i])
      throw std::invalid_argument("IndexSet: entries must strictly increase");
  }
}

bool IndexSet::contains(int k) const {
  return std::binary_search(elems_.begin(), elems_.end(), k);
}

IndexSet IndexSet::complement() const {
  std::vector<int> rest;
  rest.reserve(rank_ - size());
  for (int k = 1; k <= rank_; ++k)
    if (!contains(k))
      rest.push_back(k);
  return IndexSet(rank_, std::move(rest));
}

std::string IndexSet::render() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i)
      os << ',';
    os << elems_[i];
  }
  os << '}';
  return os.str();
}

int IndexSet::compare(const IndexSet &a, const IndexSet &b) {
  if (a.rank_ != b.rank_)
    return a.rank_ < b.rank_ ? -1 : 1;
  if (a.elems_ != b.elems_)
    return std::lexicographical_compare(a.elems_.begin(), a.elems_.end(),
                                        b.elems_.begin(), b.elems_.end())
               ? -1
               : 1;
  return 0;
}

SignedIndexSet normalize(int rank, const std::vector<int> &raw) {
  if (raw.empty())
    throw std::invalid_argument("normalize: empty index list");
  for (int v : raw)
    if (v < 1 || v > rank)
      throw std::invalid_argument("normalize: entry out of range 1..n");

  std::vector<int> sorted = raw;
  // Insertion sort with inversion count; lists are tiny.
  long long inversions = 0;
  for (size_t i = 1; i < sorted.size(); ++i) {
    int v = sorted[i];
    size_t j = i;
    while (j > 0 && sorted[j - 1] > v) {
      sorted[j] = sorted[j - 1];
      --j;
      ++inversions;
    }
    sorted[j] = v;
  }
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i - 1] == sorted[i])
      return SignedIndexSet{std::nullopt, 0};

  int sign = (inversions % 2 == 0) ? 1 : -1;
  return SignedIndexSet{IndexSet(rank, std::move(sorted)), sign};
}

char letter_char(Letter l) {
  switch (l) {
  case Letter::A:
    return 'a';
  case Letter::B:
    return 'b';
  case Letter::C:
    return 'c';
  }
  return '?';
}

Letter letter_from_char(char c) {
  switch (c) {
  case 'a':
    return Letter::A;
  case 'b':
    return Letter::B;
  case 'c':
    return Letter::C;
  default:
    throw std::invalid_argument(std::string("unknown symbol letter '") + c +
                                "'");
  }
}

std::string Symbol::render() const {
  if (family != 0)
    return "A" + std::to_string(family);
  return std::string(1, letter_char(letter));
}

int Symbol::compare(const Symbol &a, const Symbol &b) {
  if (a.letter != b.letter)
    return static_cast<int>(a.letter) < static_cast<int>(b.letter) ? -1 : 1;
  if (a.family != b.family)
    return a.family < b.family ? -1 : 1;
  return 0;
}

} // namespace gl6j
