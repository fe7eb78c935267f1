#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "cplab/cyclo.hpp"
#include "cplab/rational.hpp"

namespace cplab {

/// Letters of words in the free family {X1, X2, X3, u}: three semicircular
/// elements (normalized so that tau(X^2) = 1) and one Haar-type unitary of
/// order 3, all mutually free.
enum class L1 : std::uint8_t { X1 = 0, X2 = 1, X3 = 2, u = 3, u2 = 4 };

struct FreeWord {
  std::vector<L1> letters;

  /// Merge adjacent u-powers mod 3 and drop trivial ones.
  FreeWord canonical() const;
  bool operator<(const FreeWord& o) const { return letters < o.letters; }
  bool operator==(const FreeWord& o) const { return letters == o.letters; }
};

/// Number of non-crossing pair partitions of positions 1..n that only pair
/// equal labels. This is tau(X_{l1} ... X_{ln}) for semicircular letters.
/// Computed by the first-position split recursion.
long long semicircular_moment(const std::vector<int>& labels);

/// Independent oracle: enumerate every perfect matching, keep the
/// label-respecting non-crossing ones. Lengths above 16 are rejected
/// (factorial growth).
long long nc_pairings_bruteforce(const std::vector<int>& labels);

class MomentCache {
 public:
  bool lookup(const FreeWord& w, Rational* out) const;
  void store(const FreeWord& w, const Rational& v);
  void clear();
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::map<FreeWord, Rational> map_;
};

/// tau of a word in the free family, by the freeness centering recursion:
/// collapse same-component runs, evaluate length <= 1 marginally, otherwise
/// write each letter as centered + trace and use that alternating products
/// of centered elements have trace zero. `cache` may be null.
Rational mixed_moment_rational(const FreeWord& w, MomentCache* cache);

inline CycloNum mixed_moment(const FreeWord& w, MomentCache* cache = nullptr) {
  return CycloNum(mixed_moment_rational(w, cache));
}

}  // namespace cplab
