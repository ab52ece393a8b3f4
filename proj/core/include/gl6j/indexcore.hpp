#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gl6j {

// Canonically ordered subset of {1..n}. Determinant variables are indexed by
// these; all other orderings are rewritten immediately with a sign.
class IndexSet {
public:
  // elements must be strictly increasing and within 1..rank.
  IndexSet(int rank, std::vector<int> elements);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<int> &elements() const { return elems_; }
  bool contains(int k) const;

  // {1..n} \ this, sorted.
  IndexSet complement() const;

  std::string render() const; // "{1,2,3}"

  friend bool operator==(const IndexSet &a, const IndexSet &b) {
    return a.rank_ == b.rank_ && a.elems_ == b.elems_;
  }

  // Total order: by rank, then lexicographically on elements.
  static int compare(const IndexSet &a, const IndexSet &b);

private:
  int rank_;
  std::vector<int> elems_;
};

// Sorting result of a raw index list. sign == 0 iff the raw list had a
// repeated entry (the determinant variable vanishes); set is absent then.
struct SignedIndexSet {
  std::optional<IndexSet> set;
  int sign = 0;
};

// Sorts raw into an IndexSet, returning the parity of the sorting
// permutation. Entries outside 1..rank are an input error.
SignedIndexSet normalize(int rank, const std::vector<int> &raw);

// Tensor-slot letters. The optional family tag (1..6) names one of the six
// independent variable sets used by the 6j contraction.
enum class Letter : int { A = 0, B = 1, C = 2 };

char letter_char(Letter l);
Letter letter_from_char(char c); // throws on anything but a/b/c

struct Symbol {
  Letter letter = Letter::A;
  int family = 0; // 0 = none

  static Symbol plain(Letter l) { return Symbol{l, 0}; }
  static Symbol of_family(int family) { return Symbol{Letter::A, family}; }

  std::string render() const; // "a" or "A3"

  friend bool operator==(const Symbol &, const Symbol &) = default;
  static int compare(const Symbol &a, const Symbol &b);
};

} // namespace gl6j
