#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fgb {

// One symbol of the alphabet {a, a^-1, b, b^-1, ...}.
// Generators are numbered 1..rank; `inverted` marks the formal inverse.
struct Letter {
  int gen = 1;
  bool inverted = false;

  Letter() = default;
  Letter(int g, bool inv) : gen(g), inverted(inv) {}

  Letter inverse() const { return Letter(gen, !inverted); }
  bool is_inverse_of(const Letter& o) const {
    return gen == o.gen && inverted != o.inverted;
  }

  // Total order: a < a^-1 < b < b^-1 < ...
  int order_key() const { return 2 * gen + (inverted ? 1 : 0); }

  friend bool operator==(const Letter& x, const Letter& y) {
    return x.gen == y.gen && x.inverted == y.inverted;
  }
  friend bool operator!=(const Letter& x, const Letter& y) { return !(x == y); }
  friend bool operator<(const Letter& x, const Letter& y) {
    return x.order_key() < y.order_key();
  }
};

// Element of the free group of the given rank, stored as a reduced letter
// sequence. Immutable value type; the empty sequence is the identity.
class ReducedWord {
 public:
  explicit ReducedWord(int rank);
  ReducedWord(int rank, std::vector<Letter> letters);  // validates reducedness

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }
  const Letter& at(std::size_t i) const { return letters_[i]; }

  // Text form: "a".."z" for generators, uppercase for inverses, "1" = identity.
  static ReducedWord parse(int rank, const std::string& text);
  std::string str() const;

  friend bool operator==(const ReducedWord& x, const ReducedWord& y) {
    return x.rank_ == y.rank_ && x.letters_ == y.letters_;
  }
  friend bool operator!=(const ReducedWord& x, const ReducedWord& y) {
    return !(x == y);
  }
  // Length-lexicographic order under the letter order; used wherever a
  // deterministic word order is required.
  friend bool operator<(const ReducedWord& x, const ReducedWord& y);

 private:
  int rank_;
  std::vector<Letter> letters_;
};

ReducedWord multiply(const ReducedWord& x, const ReducedWord& y);
ReducedWord inverse(const ReducedWord& x);
ReducedWord power(const ReducedWord& x, long long k);

// (|base^-1 y| + |base^-1 z| - |y^-1 z|); always even in a free group.
long long gromov_product_doubled(const ReducedWord& y, const ReducedWord& z,
                                 const ReducedWord& base);
long long gromov_product(const ReducedWord& y, const ReducedWord& z,
                         const ReducedWord& base);

// True iff |x w y^-1| = |x| + |w| + |y|.
bool is_geodesic_concat(const ReducedWord& x, const ReducedWord& w,
                        const ReducedWord& y);

// w = a c a^-1 with c cyclically reduced and a of maximal length. w != e.
std::pair<ReducedWord, ReducedWord> cyclic_reduce(const ReducedWord& w);

bool is_cyclically_reduced(const ReducedWord& w);

// w = u^k with k maximal; requires w cyclically reduced and nonempty.
std::pair<ReducedWord, int> primitive_root(const ReducedWord& w);

// Lexicographically least rotation; equal keys iff the cyclic words agree.
// Requires w cyclically reduced and nonempty.
ReducedWord conjugacy_key(const ReducedWord& w);

ReducedWord rotate_left(const ReducedWord& w, std::size_t k);

// All reduced words of the given length, in lexicographic order.
std::vector<ReducedWord> words_of_length(int rank, int n);
// All reduced words of length <= n (identity first).
std::vector<ReducedWord> words_up_to_length(int rank, int n);

// Number of reduced words of length n: 2d(2d-1)^(n-1) for n >= 1.
long long count_words(int rank, int n);
// Position of w among words_of_length(rank, |w|).
long long word_index(const ReducedWord& w);
ReducedWord word_at_index(int rank, int n, long long index);

void require_same_rank(const ReducedWord& x, const ReducedWord& y);

}  // namespace fgb
