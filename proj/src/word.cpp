#include "fgb/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace fgb {

namespace {

void check_rank(int rank) {
  if (rank < 2) throw std::invalid_argument("rank must be at least 2");
}

void check_letter(int rank, const Letter& l) {
  if (l.gen < 1 || l.gen > rank)
    throw std::invalid_argument("letter outside generator range 1.." +
                                std::to_string(rank));
}

}  // namespace

ReducedWord::ReducedWord(int rank) : rank_(rank) { check_rank(rank); }

ReducedWord::ReducedWord(int rank, std::vector<Letter> letters)
    : rank_(rank), letters_(std::move(letters)) {
  check_rank(rank);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    check_letter(rank_, letters_[i]);
    if (i > 0 && letters_[i].is_inverse_of(letters_[i - 1]))
      throw std::invalid_argument("letter sequence is not reduced");
  }
}

ReducedWord ReducedWord::parse(int rank, const std::string& text) {
  check_rank(rank);
  if (rank > 26) throw std::invalid_argument("text format supports rank <= 26");
  if (text == "1") return ReducedWord(rank);
  if (text.empty()) throw std::invalid_argument("empty word text; use \"1\"");
  std::vector<Letter> ls;
  ls.reserve(text.size());
  for (char c : text) {
    Letter l;
    if (c >= 'a' && c <= 'z') {
      l = Letter(c - 'a' + 1, false);
    } else if (c >= 'A' && c <= 'Z') {
      l = Letter(c - 'A' + 1, true);
    } else {
      throw std::invalid_argument(std::string("invalid character '") + c +
                                  "' in word");
    }
    if (l.gen > rank)
      throw std::invalid_argument(std::string("letter '") + c +
                                  "' outside rank " + std::to_string(rank));
    if (!ls.empty() && l.is_inverse_of(ls.back()))
      throw std::invalid_argument("word \"" + text +
                                  "\" is not reduced (adjacent inverse pair)");
    ls.push_back(l);
  }
  return ReducedWord(rank, std::move(ls));
}

std::string ReducedWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (const Letter& l : letters_)
    s.push_back(static_cast<char>((l.inverted ? 'A' : 'a') + l.gen - 1));
  return s;
}

bool operator<(const ReducedWord& x, const ReducedWord& y) {
  if (x.length() != y.length()) return x.length() < y.length();
  for (std::size_t i = 0; i < x.length(); ++i) {
    int a = x.letters_[i].order_key(), b = y.letters_[i].order_key();
    if (a != b) return a < b;
  }
  return false;
}

void require_same_rank(const ReducedWord& x, const ReducedWord& y) {
  if (x.rank() != y.rank())
    throw std::invalid_argument("rank mismatch: " + std::to_string(x.rank()) +
                                " vs " + std::to_string(y.rank()));
}

ReducedWord multiply(const ReducedWord& x, const ReducedWord& y) {
  require_same_rank(x, y);
  std::vector<Letter> out(x.letters());
  for (const Letter& l : y.letters()) {
    if (!out.empty() && out.back().is_inverse_of(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return ReducedWord(x.rank(), std::move(out));
}

ReducedWord inverse(const ReducedWord& x) {
  std::vector<Letter> out;
  out.reserve(x.length());
  for (auto it = x.letters().rbegin(); it != x.letters().rend(); ++it)
    out.push_back(it->inverse());
  return ReducedWord(x.rank(), std::move(out));
}

ReducedWord power(const ReducedWord& x, long long k) {
  ReducedWord base = k < 0 ? inverse(x) : x;
  long long reps = std::llabs(k);
  ReducedWord acc(x.rank());
  for (long long i = 0; i < reps; ++i) acc = multiply(acc, base);
  return acc;
}

long long gromov_product_doubled(const ReducedWord& y, const ReducedWord& z,
                                 const ReducedWord& base) {
  require_same_rank(y, z);
  require_same_rank(y, base);
  const ReducedWord bi = inverse(base);
  long long dy = static_cast<long long>(multiply(bi, y).length());
  long long dz = static_cast<long long>(multiply(bi, z).length());
  long long dyz = static_cast<long long>(multiply(inverse(y), z).length());
  return dy + dz - dyz;
}

long long gromov_product(const ReducedWord& y, const ReducedWord& z,
                         const ReducedWord& base) {
  long long twice = gromov_product_doubled(y, z, base);
  // In a tree the product is the common-prefix depth, hence integral.
  if (twice % 2 != 0) throw std::logic_error("odd doubled Gromov product");
  return twice / 2;
}

bool is_geodesic_concat(const ReducedWord& x, const ReducedWord& w,
                        const ReducedWord& y) {
  ReducedWord prod = multiply(multiply(x, w), inverse(y));
  return prod.length() == x.length() + w.length() + y.length();
}

std::pair<ReducedWord, ReducedWord> cyclic_reduce(const ReducedWord& w) {
  if (w.empty()) throw std::invalid_argument("cyclic_reduce: empty word");
  std::size_t lo = 0, hi = w.length();
  while (hi - lo >= 2 && w.at(lo).is_inverse_of(w.at(hi - 1))) {
    ++lo;
    --hi;
  }
  std::vector<Letter> a(w.letters().begin(), w.letters().begin() + lo);
  std::vector<Letter> c(w.letters().begin() + lo, w.letters().begin() + hi);
  return {ReducedWord(w.rank(), std::move(a)),
          ReducedWord(w.rank(), std::move(c))};
}

bool is_cyclically_reduced(const ReducedWord& w) {
  if (w.empty()) return true;
  return !w.front().is_inverse_of(w.back());
}

std::pair<ReducedWord, int> primitive_root(const ReducedWord& w) {
  if (w.empty()) throw std::invalid_argument("primitive_root: empty word");
  if (!is_cyclically_reduced(w))
    throw std::invalid_argument("primitive_root: word not cyclically reduced");
  const std::size_t n = w.length();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i)
      periodic = (w.at(i) == w.at(i - p));
    if (periodic) {
      std::vector<Letter> u(w.letters().begin(), w.letters().begin() + p);
      return {ReducedWord(w.rank(), std::move(u)), static_cast<int>(n / p)};
    }
  }
  return {w, 1};  // unreachable: p = n always matches
}

ReducedWord rotate_left(const ReducedWord& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.length();
  std::vector<Letter> ls;
  ls.reserve(w.length());
  for (std::size_t i = 0; i < w.length(); ++i)
    ls.push_back(w.at((i + k) % w.length()));
  return ReducedWord(w.rank(), std::move(ls));
}

ReducedWord conjugacy_key(const ReducedWord& w) {
  if (w.empty()) throw std::invalid_argument("conjugacy_key: empty word");
  if (!is_cyclically_reduced(w))
    throw std::invalid_argument("conjugacy_key: word not cyclically reduced");
  ReducedWord best = w;
  for (std::size_t k = 1; k < w.length(); ++k) {
    ReducedWord r = rotate_left(w, k);
    if (r < best) best = r;
  }
  return best;
}

std::vector<ReducedWord> words_of_length(int rank, int n) {
  check_rank(rank);
  if (n < 0) throw std::invalid_argument("negative length");
  std::vector<ReducedWord> out;
  if (n == 0) {
    out.emplace_back(rank);
    return out;
  }
  out.reserve(static_cast<std::size_t>(count_words(rank, n)));
  std::vector<Letter> alphabet;
  for (int g = 1; g <= rank; ++g) {
    alphabet.emplace_back(g, false);
    alphabet.emplace_back(g, true);
  }
  std::vector<Letter> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.emplace_back(rank, cur);
      return;
    }
    for (const Letter& l : alphabet) {
      if (!cur.empty() && l.is_inverse_of(cur.back())) continue;
      cur.push_back(l);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::vector<ReducedWord> words_up_to_length(int rank, int n) {
  std::vector<ReducedWord> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<ReducedWord> layer = words_of_length(rank, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

long long count_words(int rank, int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (n == 0) return 1;
  long long count = 2LL * rank;
  for (int i = 1; i < n; ++i) {
    count *= (2LL * rank - 1);
    if (count > (1LL << 40))
      throw std::invalid_argument("cylinder level too large");
  }
  return count;
}

long long word_index(const ReducedWord& w) {
  const int rank = w.rank();
  if (w.empty()) return 0;
  // Positional code: 2d choices for the first letter, 2d-1 afterwards,
  // skipping the inverse of the previous letter.
  long long idx = 0;
  long long block = count_words(rank, static_cast<int>(w.length())) / (2 * rank);
  idx += static_cast<long long>(w.front().order_key() - 2) * block;
  for (std::size_t i = 1; i < w.length(); ++i) {
    block /= (2 * rank - 1);
    int key = w.at(i).order_key() - 2;
    int skip = w.at(i - 1).inverse().order_key() - 2;
    idx += static_cast<long long>(key > skip ? key - 1 : key) * block;
  }
  return idx;
}

ReducedWord word_at_index(int rank, int n, long long index) {
  check_rank(rank);
  if (n == 0) {
    if (index != 0) throw std::out_of_range("word index out of range");
    return ReducedWord(rank);
  }
  long long total = count_words(rank, n);
  if (index < 0 || index >= total)
    throw std::out_of_range("word index out of range");
  std::vector<Letter> ls;
  long long block = total / (2 * rank);
  int key = static_cast<int>(index / block);
  index %= block;
  ls.emplace_back(key / 2 + 1, key % 2 == 1);
  for (int i = 1; i < n; ++i) {
    block /= (2 * rank - 1);
    int pos = static_cast<int>(index / block);
    index %= block;
    int skip = ls.back().inverse().order_key() - 2;
    if (pos >= skip) ++pos;
    ls.emplace_back(pos / 2 + 1, pos % 2 == 1);
  }
  return ReducedWord(rank, std::move(ls));
}

}  // namespace fgb
