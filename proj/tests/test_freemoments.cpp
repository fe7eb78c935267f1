#include <doctest.h>

#include <random>

#include "cplab/freemoments.hpp"
#include "oracles.hpp"

using namespace cplab;

namespace {

FreeWord word_from(std::initializer_list<L1> ls) {
  FreeWord w;
  w.letters = ls;
  return w;
}

FreeWord random_word(std::mt19937_64& rng, int maxlen) {
  FreeWord w;
  int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(maxlen));
  for (int i = 0; i < len; ++i) w.letters.push_back(static_cast<L1>(rng() % 5));
  return w;
}

FreeWord rotate(const FreeWord& w, size_t by) {
  FreeWord r;
  size_t n = w.letters.size();
  for (size_t i = 0; i < n; ++i) r.letters.push_back(w.letters[(i + by) % n]);
  return r;
}

FreeWord star(const FreeWord& w) {
  FreeWord r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (*it == L1::u)
      r.letters.push_back(L1::u2);
    else if (*it == L1::u2)
      r.letters.push_back(L1::u);
    else
      r.letters.push_back(*it);
  }
  return r;
}

}  // namespace

TEST_CASE("semicircular pairing counts") {
  CHECK(semicircular_moment({1, 1, 1, 1}) == 2);
  CHECK(semicircular_moment({1, 2, 1, 2}) == 0);
  CHECK(semicircular_moment({}) == 1);
  CHECK(semicircular_moment({1, 1}) == 1);
  CHECK(semicircular_moment({1, 1, 2, 2}) == 1);
  CHECK(semicircular_moment({1, 2, 2, 1}) == 1);
  CHECK(semicircular_moment({1, 1, 1}) == 0);
}

TEST_CASE("brute force agrees with the split recursion") {
  CHECK(nc_pairings_bruteforce({1, 1}) == 1);
  CHECK(nc_pairings_bruteforce({1, 1, 2, 2}) == 1);
  CHECK(nc_pairings_bruteforce({1, 2, 2, 1}) == 1);
  for (int len = 0; len <= 10; ++len) {
    for (long mask = 0; mask < (1L << len); ++mask) {
      std::vector<int> labels;
      for (int i = 0; i < len; ++i) labels.push_back((mask >> i) & 1 ? 2 : 1);
      CHECK(nc_pairings_bruteforce(labels) == semicircular_moment(labels));
    }
  }
  std::mt19937_64 rng(5);
  for (int it = 0; it < 30; ++it) {
    std::vector<int> labels;
    for (int i = 0; i < 12; ++i) labels.push_back(1 + static_cast<int>(rng() % 3));
    CHECK(nc_pairings_bruteforce(labels) == semicircular_moment(labels));
  }
  CHECK_THROWS_AS(nc_pairings_bruteforce(std::vector<int>(17, 1)), std::invalid_argument);
}

TEST_CASE("catalan moments") {
  for (int n = 0; n <= 6; ++n) {
    FreeWord w;
    for (int i = 0; i < 2 * n; ++i) w.letters.push_back(L1::X1);
    CHECK(mixed_moment_rational(w, nullptr) == Rational(static_cast<long>(oracles::catalan(n))));
  }
}

TEST_CASE("mixed moment examples") {
  CHECK(mixed_moment_rational(word_from({L1::u}), nullptr) == 0);
  CHECK(mixed_moment_rational(word_from({L1::u2}), nullptr) == 0);
  CHECK(mixed_moment_rational(word_from({L1::X1, L1::X2, L1::X1, L1::X2}), nullptr) == 0);
  CHECK(mixed_moment_rational(word_from({L1::u, L1::X1, L1::u2, L1::X1}), nullptr) == 0);
  CHECK(mixed_moment_rational(word_from({L1::X1, L1::u, L1::u2, L1::X1}), nullptr) == 1);
  CHECK(mixed_moment_rational(word_from({}), nullptr) == 1);
  CHECK(mixed_moment_rational(word_from({L1::X1, L1::X1, L1::X2, L1::X2}), nullptr) == 1);
}

TEST_CASE("agrees with the pairing-face oracle") {
  // Exhaustive over {X1, X2, u} up to length 7, then random longer words.
  MomentCache cache;
  for (int len = 0; len <= 7; ++len) {
    long total = 1;
    for (int i = 0; i < len; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
      FreeWord w;
      long c = code;
      for (int i = 0; i < len; ++i) {
        int d = static_cast<int>(c % 3);
        c /= 3;
        w.letters.push_back(d == 0 ? L1::X1 : (d == 1 ? L1::X2 : L1::u));
      }
      CHECK(mixed_moment_rational(w, &cache) == oracles::pairing_face_moment(w));
    }
  }
  std::mt19937_64 rng(77);
  for (int it = 0; it < 60; ++it) {
    FreeWord w = random_word(rng, 9);
    CHECK(mixed_moment_rational(w, &cache) == oracles::pairing_face_moment(w));
  }
}

TEST_CASE("traciality under rotation") {
  std::mt19937_64 rng(11);
  MomentCache cache;
  for (int it = 0; it < 300; ++it) {
    FreeWord w = random_word(rng, 8);
    Rational base = mixed_moment_rational(w, &cache);
    size_t by = rng() % w.letters.size();
    CHECK(mixed_moment_rational(rotate(w, by), &cache) == base);
  }
}

TEST_CASE("positivity of w* w") {
  std::mt19937_64 rng(13);
  MomentCache cache;
  for (int it = 0; it < 150; ++it) {
    FreeWord w = random_word(rng, 6);
    FreeWord sw = star(w);
    sw.letters.insert(sw.letters.end(), w.letters.begin(), w.letters.end());
    CHECK(mixed_moment_rational(sw, &cache) >= 0);
  }
}

TEST_CASE("cache determinism") {
  std::mt19937_64 rng(17);
  MomentCache cache;
  std::vector<FreeWord> words;
  for (int it = 0; it < 80; ++it) words.push_back(random_word(rng, 8));
  std::vector<Rational> uncached, cached, recached;
  for (const auto& w : words) uncached.push_back(mixed_moment_rational(w, nullptr));
  for (const auto& w : words) cached.push_back(mixed_moment_rational(w, &cache));
  CHECK(cache.size() > 0);
  cache.clear();
  CHECK(cache.size() == 0);
  for (const auto& w : words) recached.push_back(mixed_moment_rational(w, &cache));
  CHECK(uncached == cached);
  CHECK(cached == recached);
}

TEST_CASE("canonical form merges u runs") {
  FreeWord w = word_from({L1::X1, L1::u, L1::u2, L1::X2, L1::u, L1::u});
  FreeWord c = w.canonical();
  CHECK(c == word_from({L1::X1, L1::X2, L1::u2}));
}
