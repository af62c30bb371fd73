#pragma once

#include <numeric>
#include <vector>

namespace polybernoulli {

/// A permutation of {0,...,n+k+1} that fixes 0 first and n+k+1 last.
/// Values 0..n are "left values", n+1..n+k+1 are "right values"; 0 and
/// n+k+1 are the special left/right values.
struct ExtPermutation {
  int n = 0;
  int k = 0;
  std::vector<int> seq;  // size n+k+2

  static ExtPermutation identity(int n, int k) {
    ExtPermutation p{n, k, std::vector<int>(static_cast<std::size_t>(n) + k + 2)};
    std::iota(p.seq.begin(), p.seq.end(), 0);
    return p;
  }

  bool is_left(int value) const { return value <= n; }
  int size() const { return n + k + 2; }

  bool well_formed() const {
    if (n < 0 || k < 0 || static_cast<int>(seq.size()) != n + k + 2) return false;
    if (seq.front() != 0 || seq.back() != n + k + 1) return false;
    std::vector<char> seen(seq.size(), 0);
    for (int v : seq) {
      if (v < 0 || v >= static_cast<int>(seq.size()) || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  auto operator<=>(const ExtPermutation&) const = default;
};

/// A permutation of [s] = {1,...,s}; seq[i] is the image of position i+1.
struct PlainPermutation {
  std::vector<int> seq;

  static PlainPermutation identity(int size) {
    PlainPermutation p{std::vector<int>(size)};
    std::iota(p.seq.begin(), p.seq.end(), 1);
    return p;
  }

  int size() const { return static_cast<int>(seq.size()); }

  bool well_formed() const {
    std::vector<char> seen(seq.size() + 1, 0);
    for (int v : seq) {
      if (v < 1 || v > size() || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  auto operator<=>(const PlainPermutation&) const = default;
};

}  // namespace polybernoulli
