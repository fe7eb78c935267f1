#include "cplab/freemoments.hpp"

#include <stdexcept>

namespace cplab {

namespace {

bool is_u(L1 l) { return l == L1::u || l == L1::u2; }
int u_exp(L1 l) { return l == L1::u ? 1 : 2; }

// A maximal same-component run: comp 0..2 = X_{comp+1} with exp = run length,
// comp 3 = u with exp in {1,2}.
struct Run {
  int comp;
  int exp;
};

std::vector<Run> merge_runs(std::vector<Run> in) {
  std::vector<Run> out;
  for (const Run& r : in) {
    Run cur = r;
    if (cur.comp == 3) cur.exp %= 3;
    while (true) {
      if (cur.comp == 3 && cur.exp == 0) break;
      if (!out.empty() && out.back().comp == cur.comp) {
        cur.exp += out.back().exp;
        if (cur.comp == 3) cur.exp %= 3;
        out.pop_back();
        continue;
      }
      out.push_back(cur);
      break;
    }
  }
  // Dropping a trivial u-run can expose two mergeable X runs; repeat until
  // stable.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Run> next;
    for (const Run& r : out) {
      if (r.comp == 3 && r.exp % 3 == 0) { changed = true; continue; }
      if (!next.empty() && next.back().comp == r.comp) {
        next.back().exp += r.exp;
        if (r.comp == 3) next.back().exp %= 3;
        changed = true;
      } else {
        next.push_back(r);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Run> word_to_runs(const FreeWord& w) {
  std::vector<Run> runs;
  for (L1 l : w.letters) {
    if (is_u(l))
      runs.push_back({3, u_exp(l)});
    else
      runs.push_back({static_cast<int>(l), 1});
  }
  return merge_runs(std::move(runs));
}

FreeWord runs_to_word(const std::vector<Run>& runs) {
  FreeWord w;
  for (const Run& r : runs) {
    if (r.comp == 3) {
      int e = r.exp % 3;
      if (e == 1) w.letters.push_back(L1::u);
      if (e == 2) w.letters.push_back(L1::u2);
    } else {
      for (int i = 0; i < r.exp; ++i) w.letters.push_back(static_cast<L1>(r.comp));
    }
  }
  return w;
}

long long nc_count(const std::vector<int>& labels, int lo, int hi) {
  if (lo > hi) return 1;
  if ((hi - lo + 1) % 2 != 0) return 0;
  long long total = 0;
  for (int j = lo + 1; j <= hi; j += 2) {
    if (labels[static_cast<size_t>(j)] != labels[static_cast<size_t>(lo)]) continue;
    total += nc_count(labels, lo + 1, j - 1) * nc_count(labels, j + 1, hi);
  }
  return total;
}

void enumerate_matchings(const std::vector<int>& labels, std::vector<int>& partner,
                         long long& count) {
  int first = -1;
  for (int i = 0; i < static_cast<int>(partner.size()); ++i)
    if (partner[static_cast<size_t>(i)] < 0) { first = i; break; }
  if (first < 0) {
    // Complete matching: reject crossings (a < c < b < d with (a,b),(c,d) chords).
    int n = static_cast<int>(partner.size());
    for (int a = 0; a < n; ++a) {
      int b = partner[static_cast<size_t>(a)];
      if (b <= a) continue;
      for (int c = a + 1; c < b; ++c) {
        int d = partner[static_cast<size_t>(c)];
        if (c < d && d > b) return;
      }
    }
    ++count;
    return;
  }
  for (int j = first + 1; j < static_cast<int>(partner.size()); ++j) {
    if (partner[static_cast<size_t>(j)] >= 0) continue;
    if (labels[static_cast<size_t>(j)] != labels[static_cast<size_t>(first)]) continue;
    partner[static_cast<size_t>(first)] = j;
    partner[static_cast<size_t>(j)] = first;
    enumerate_matchings(labels, partner, count);
    partner[static_cast<size_t>(first)] = -1;
    partner[static_cast<size_t>(j)] = -1;
  }
}

Rational marginal(const Run& r) {
  if (r.comp == 3) return Rational(r.exp % 3 == 0 ? 1 : 0);
  if (r.exp % 2 != 0) return Rational(0);
  std::vector<int> labels(static_cast<size_t>(r.exp), r.comp);
  return Rational(static_cast<long>(semicircular_moment(labels)));
}

Rational tau_runs(const std::vector<Run>& runs, MomentCache* cache);

Rational tau_runs_uncached(const std::vector<Run>& runs, MomentCache* cache) {
  if (runs.empty()) return Rational(1);
  if (runs.size() == 1) return marginal(runs[0]);
  // Centering recursion in batched form: with a_i = centered_i + t_i and
  // tau(centered_1 ... centered_n) = 0 on the alternating word,
  //   tau(w) = -sum_{S nonempty} (-1)^|S| prod_{i in S} t_i * tau(w minus S).
  // Runs with t_i = 0 contribute nothing to the sum.
  std::vector<int> nz;
  std::vector<Rational> t(runs.size());
  for (size_t i = 0; i < runs.size(); ++i) {
    t[i] = marginal(runs[i]);
    if (t[i] != 0) nz.push_back(static_cast<int>(i));
  }
  if (nz.empty()) return Rational(0);
  Rational total(0);
  const size_t m = nz.size();
  for (size_t mask = 1; mask < (size_t{1} << m); ++mask) {
    Rational prod(1);
    int bits = 0;
    std::vector<bool> removed(runs.size(), false);
    for (size_t b = 0; b < m; ++b) {
      if (mask & (size_t{1} << b)) {
        ++bits;
        size_t idx = static_cast<size_t>(nz[b]);
        prod *= t[idx];
        removed[idx] = true;
      }
    }
    std::vector<Run> rest;
    rest.reserve(runs.size());
    for (size_t i = 0; i < runs.size(); ++i)
      if (!removed[i]) rest.push_back(runs[i]);
    Rational sub = tau_runs(merge_runs(std::move(rest)), cache);
    if (bits % 2 == 1)
      total += prod * sub;
    else
      total -= prod * sub;
  }
  return total;
}

Rational tau_runs(const std::vector<Run>& runs, MomentCache* cache) {
  if (cache) {
    FreeWord key = runs_to_word(runs);
    Rational v;
    if (cache->lookup(key, &v)) return v;
    v = tau_runs_uncached(runs, cache);
    cache->store(key, v);
    return v;
  }
  return tau_runs_uncached(runs, cache);
}

}  // namespace

FreeWord FreeWord::canonical() const { return runs_to_word(word_to_runs(*this)); }

long long semicircular_moment(const std::vector<int>& labels) {
  if (labels.empty()) return 1;
  return nc_count(labels, 0, static_cast<int>(labels.size()) - 1);
}

long long nc_pairings_bruteforce(const std::vector<int>& labels) {
  if (labels.size() > 16)
    throw std::invalid_argument("nc_pairings_bruteforce: length cap 16 exceeded");
  if (labels.empty()) return 1;
  if (labels.size() % 2 != 0) return 0;
  std::vector<int> partner(labels.size(), -1);
  long long count = 0;
  enumerate_matchings(labels, partner, count);
  return count;
}

bool MomentCache::lookup(const FreeWord& w, Rational* out) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = map_.find(w);
  if (it == map_.end()) return false;
  *out = it->second;
  return true;
}

void MomentCache::store(const FreeWord& w, const Rational& v) {
  std::lock_guard<std::mutex> lk(mu_);
  map_.emplace(w, v);
}

void MomentCache::clear() {
  std::lock_guard<std::mutex> lk(mu_);
  map_.clear();
}

std::size_t MomentCache::size() const {
  std::lock_guard<std::mutex> lk(mu_);
  return map_.size();
}

Rational mixed_moment_rational(const FreeWord& w, MomentCache* cache) {
  return tau_runs(word_to_runs(w), cache);
}

}  // namespace cplab
