#include "oracles.hpp"

#include <stdexcept>

namespace cplab::oracles {

long long catalan(int n) {
  std::vector<long long> c(static_cast<size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 0; m < n; ++m) {
    long long s = 0;
    for (int k = 0; k <= m; ++k) s += c[static_cast<size_t>(k)] * c[static_cast<size_t>(m - k)];
    c[static_cast<size_t>(m) + 1] = s;
  }
  return c[static_cast<size_t>(n)];
}

namespace {

struct Item {
  bool is_x;
  int x_label;  // 1..3 when is_x
  int u_exp;    // mod 3 otherwise
  int x_id;     // index into the pairing when is_x
};

// Contract a non-crossing pairing from the inside out. Each innermost chord
// (only u letters between its feet) closes a face whose u product must have
// zero exponent mod 3 to contribute.
bool faces_contribute(std::vector<Item> items, const std::vector<int>& partner) {
  while (true) {
    int xcount = 0;
    bool contracted = false;
    for (size_t a = 0; a < items.size() && !contracted; ++a) {
      if (!items[a].is_x) continue;
      ++xcount;
      int usum = 0;
      for (size_t b = a + 1; b < items.size(); ++b) {
        if (!items[b].is_x) {
          usum += items[b].u_exp;
          continue;
        }
        if (partner[static_cast<size_t>(items[a].x_id)] == items[b].x_id) {
          if (usum % 3 != 0) return false;  // face trace tau(u^s) = 0
          items.erase(items.begin() + static_cast<long>(a),
                      items.begin() + static_cast<long>(b) + 1);
          contracted = true;
        }
        break;  // some other chord starts first; not innermost here
      }
    }
    if (contracted) continue;
    if (xcount != 0) return false;  // crossing pairing; callers filter these
    int usum = 0;
    for (const Item& it : items) usum += it.u_exp;
    return usum % 3 == 0;
  }
}

bool is_noncrossing(const std::vector<int>& partner) {
  int n = static_cast<int>(partner.size());
  for (int a = 0; a < n; ++a) {
    int b = partner[static_cast<size_t>(a)];
    if (b <= a) continue;
    for (int c = a + 1; c < b; ++c) {
      int d = partner[static_cast<size_t>(c)];
      if (c < d && d > b) return false;
    }
  }
  return true;
}

void enumerate(const std::vector<int>& labels, std::vector<int>& partner,
               const std::vector<Item>& items, Rational& total) {
  int first = -1;
  for (size_t i = 0; i < partner.size(); ++i)
    if (partner[i] < 0) {
      first = static_cast<int>(i);
      break;
    }
  if (first < 0) {
    if (is_noncrossing(partner) && faces_contribute(items, partner)) total += 1;
    return;
  }
  for (size_t j = static_cast<size_t>(first) + 1; j < partner.size(); ++j) {
    if (partner[j] >= 0 || labels[j] != labels[static_cast<size_t>(first)]) continue;
    partner[static_cast<size_t>(first)] = static_cast<int>(j);
    partner[j] = first;
    enumerate(labels, partner, items, total);
    partner[static_cast<size_t>(first)] = -1;
    partner[j] = -1;
  }
}

}  // namespace

Rational pairing_face_moment(const FreeWord& w) {
  std::vector<Item> items;
  std::vector<int> labels;
  for (L1 l : w.letters) {
    Item it{};
    if (l == L1::u || l == L1::u2) {
      it.is_x = false;
      it.u_exp = l == L1::u ? 1 : 2;
    } else {
      it.is_x = true;
      it.x_label = static_cast<int>(l) + 1;
      it.x_id = static_cast<int>(labels.size());
      labels.push_back(it.x_label);
    }
    items.push_back(it);
  }
  if (labels.size() > 12)
    throw std::invalid_argument("pairing_face_moment: too many X letters");
  if (labels.size() % 2 != 0) return Rational(0);
  std::vector<int> partner(labels.size(), -1);
  Rational total(0);
  enumerate(labels, partner, items, total);
  return total;
}

}  // namespace cplab::oracles
