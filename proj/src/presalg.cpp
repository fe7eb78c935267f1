#include "cplab/presalg.hpp"

#include <sstream>
#include <stdexcept>

namespace cplab {

namespace {

bool is_u_letter(L1 l) { return l == L1::u || l == L1::u2; }
int u_letter_exp(L1 l) { return l == L1::u ? 1 : (l == L1::u2 ? 2 : 0); }

void require_same_algebra(const Algebra* a, const Algebra* b) {
  if (a == nullptr || b == nullptr || a != b)
    throw std::invalid_argument("elements belong to different algebra contexts");
}

}  // namespace

std::string GeneratorSymbol::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::X: os << "X" << index; break;
    case Kind::u: os << "u"; break;
    case Kind::g: os << "g"; break;
    case Kind::U: os << "U" << index; break;
    case Kind::v: os << "v"; break;
  }
  return os.str();
}

const char* to_string(WCandidate c) {
  return c == WCandidate::paper ? "paper" : "conjugate";
}

bool Word::operator<(const Word& o) const {
  if (leg1 != o.leg1) return leg1 < o.leg1;
  if (gpow != o.gpow) return gpow < o.gpow;
  if (upow != o.upow) return upow < o.upow;
  return vpow < o.vpow;
}

// ---------------------------------------------------------------------------
// Element basics

void Element::add_term(const Word& w, const CycloNum& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Element::is_scalar() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.is_scalar();
}

CycloNum Element::scalar_value() const {
  if (terms_.empty()) return CycloNum(0);
  if (!is_scalar()) throw std::invalid_argument("element is not a scalar");
  return terms_.begin()->second;
}

Element Element::operator-() const {
  Element r(alg_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

Element& Element::operator+=(const Element& o) {
  require_same_algebra(alg_, o.alg_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_algebra(alg_, o.alg_);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Element Element::operator*(const CycloNum& c) const {
  Element r(alg_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

bool Element::operator==(const Element& o) const {
  require_same_algebra(alg_, o.alg_);
  return terms_ == o.terms_;
}

Element Element::pow(long n) const {
  if (n < 0) throw std::invalid_argument("Element::pow: negative exponent");
  Element acc = alg_->one();
  for (long i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

// ---------------------------------------------------------------------------
// The canonical product of two words. Everything else reduces to this.

namespace {

template <class F>
Element apply_with(const Algebra& alg, F&& img, const Element& e);

}  // namespace

Element Element::word_product(const Algebra& alg, const Word& a, const Word& b) {
  const bool b_has_legs = !(b.leg1.empty() && b.gpow == 0 && b.upow.empty());
  if (a.vpow != 0 && b_has_legs) {
    // v^c m = gamma^c(m) v^c: conjugate b's leg part through a's v power.
    Word b_legs = b;
    b_legs.vpow = 0;
    Element m(&alg);
    m.terms_.emplace(b_legs, CycloNum(1));
    for (int i = 0; i < a.vpow; ++i)
      m = apply_with(alg, [&alg](GeneratorSymbol s) -> const Element& { return alg.gamma_image(s); }, m);
    Word a_legs = a;
    a_legs.vpow = 0;
    Element head(&alg);
    head.terms_.emplace(a_legs, CycloNum(1));
    Element res = head * m;
    Element out(&alg);
    const std::uint8_t vp = static_cast<std::uint8_t>((a.vpow + b.vpow) % 3);
    for (const auto& [w, c] : res.terms_) {
      Word w2 = w;
      w2.vpow = vp;
      out.add_term(w2, c);
    }
    return out;
  }

  Word out;
  CycloNum scalar(1);

  out.leg1 = a.leg1;
  for (L1 l : b.leg1) {
    if (is_u_letter(l) && !out.leg1.empty() && is_u_letter(out.leg1.back())) {
      int e = (u_letter_exp(out.leg1.back()) + u_letter_exp(l)) % 3;
      out.leg1.pop_back();
      if (e == 1) out.leg1.push_back(L1::u);
      if (e == 2) out.leg1.push_back(L1::u2);
    } else {
      out.leg1.push_back(l);
    }
  }

  // b's g power moves left across a's U0 and U(-1) factors: U_k g = eps^-1 g U_k.
  if (b.gpow != 0) {
    long t = 0;
    for (const auto& [k, e] : a.upow)
      if (k == 0 || k == -1) t += e;
    if (t != 0) scalar *= CycloNum::zeta_pow(-3L * b.gpow * t);
  }
  out.gpow = static_cast<std::uint8_t>((a.gpow + b.gpow) % 3);

  // Interleave U factors into ascending order. Only adjacent indices twist:
  // U_{j+1} U_j = delta^-1 U_j U_{j+1}.
  std::map<int, int> merged;
  for (const auto& [k, e] : a.upow) merged[k] += e;
  for (const auto& [j, e] : b.upow) {
    long cross = 0;
    for (const auto& [k, ea] : a.upow)
      if (k == j + 1) cross = ea;
    if (cross != 0) scalar *= CycloNum::zeta_pow(-cross * static_cast<long>(e));
    merged[j] += e;
  }
  for (const auto& [k, e] : merged) {
    int r = e % 9;
    if (r != 0) out.upow.emplace_back(k, static_cast<std::uint8_t>(r));
  }

  out.vpow = static_cast<std::uint8_t>((a.vpow + b.vpow) % 3);

  Element res(&alg);
  res.terms_.emplace(out, scalar);
  return res;
}

Element operator*(const Element& a, const Element& b) {
  require_same_algebra(a.alg_, b.alg_);
  Element res(a.alg_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Element p = Element::word_product(*a.alg_, wa, wb);
      CycloNum k = ca * cb;
      for (const auto& [w, c] : p.terms_) res.add_term(w, c * k);
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Adjoint, trace, scalar ratio

Element adjoint(const Element& a) {
  const Algebra& alg = a.algebra();
  Element res = alg.zero();
  for (const auto& [w, c] : a.terms()) {
    std::vector<std::pair<GeneratorSymbol, long>> raw;
    if (w.vpow != 0) raw.emplace_back(GeneratorSymbol::v(), 3 - w.vpow);
    for (auto it = w.upow.rbegin(); it != w.upow.rend(); ++it)
      raw.emplace_back(GeneratorSymbol::U(it->first), 9 - it->second);
    if (w.gpow != 0) raw.emplace_back(GeneratorSymbol::g(), 3 - w.gpow);
    for (auto it = w.leg1.rbegin(); it != w.leg1.rend(); ++it) {
      switch (*it) {
        case L1::X1: raw.emplace_back(GeneratorSymbol::X(1), 1); break;
        case L1::X2: raw.emplace_back(GeneratorSymbol::X(2), 1); break;
        case L1::X3: raw.emplace_back(GeneratorSymbol::X(3), 1); break;
        case L1::u: raw.emplace_back(GeneratorSymbol::u(), 2); break;
        case L1::u2: raw.emplace_back(GeneratorSymbol::u(), 1); break;
      }
    }
    res += alg.normal_form(raw) * c.conj();
  }
  return res;
}

CycloNum trace(const Element& a) {
  if (a.is_zero()) return CycloNum(0);
  const Algebra& alg = a.algebra();
  CycloNum total(0);
  for (const auto& [w, c] : a.terms()) {
    if (w.vpow != 0 || w.gpow != 0 || !w.upow.empty()) continue;
    FreeWord fw{w.leg1};
    total += c * CycloNum(mixed_moment_rational(fw, &alg.moment_cache()));
  }
  return total;
}

std::optional<CycloNum> scalar_ratio(const Element& a, const Element& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return std::nullopt;
  const auto& [w0, c0] = *b.terms().begin();
  auto it = a.terms().find(w0);
  if (it == a.terms().end()) return std::nullopt;
  CycloNum lambda = it->second * c0.inverse();
  if (lambda.is_zero()) return std::nullopt;
  if (a == b * lambda) return lambda;
  return std::nullopt;
}

bool Element::is_unitary() const {
  Element star = adjoint(*this);
  return (*this * star) == alg_->one() && (star * *this) == alg_->one();
}

// ---------------------------------------------------------------------------
// Algebra basics

void Algebra::check_window(int k) const {
  if (k < -window_ || k > window_) {
    std::ostringstream os;
    os << "U index " << k << " outside window [-" << window_ << "," << window_ << "]";
    throw window_error(os.str());
  }
}

Element Algebra::zero() const { return Element(this); }

Element Algebra::one() const { return scalar(CycloNum(1)); }

Element Algebra::scalar(const CycloNum& c) const {
  Element e(this);
  if (!c.is_zero()) e.terms_.emplace(Word{}, c);
  return e;
}

Element Algebra::gen(GeneratorSymbol s) const { return gen_pow(s, 1); }

Element Algebra::gen_pow(GeneratorSymbol s, long n) const {
  Word w;
  switch (s.kind) {
    case GeneratorSymbol::Kind::X: {
      if (s.index < 1 || s.index > 3)
        throw std::invalid_argument("X index must be 1..3");
      if (n < 0)
        throw std::invalid_argument("X generators are not invertible");
      for (long i = 0; i < n; ++i)
        w.leg1.push_back(static_cast<L1>(s.index - 1));
      break;
    }
    case GeneratorSymbol::Kind::u: {
      int e = static_cast<int>(((n % 3) + 3) % 3);
      if (e == 1) w.leg1.push_back(L1::u);
      if (e == 2) w.leg1.push_back(L1::u2);
      break;
    }
    case GeneratorSymbol::Kind::g: {
      w.gpow = static_cast<std::uint8_t>(((n % 3) + 3) % 3);
      break;
    }
    case GeneratorSymbol::Kind::U: {
      check_window(s.index);
      int e = static_cast<int>(((n % 9) + 9) % 9);
      if (e != 0) w.upow.emplace_back(s.index, static_cast<std::uint8_t>(e));
      break;
    }
    case GeneratorSymbol::Kind::v: {
      w.vpow = static_cast<std::uint8_t>(((n % 3) + 3) % 3);
      break;
    }
  }
  Element e(this);
  e.terms_.emplace(w, CycloNum(1));
  return e;
}

Element Algebra::normal_form(const std::vector<std::pair<GeneratorSymbol, long>>& raw) const {
  Element acc = one();
  for (const auto& [s, n] : raw) acc = acc * gen_pow(s, n);
  return acc;
}

std::vector<GeneratorSymbol> Algebra::all_generators() const {
  std::vector<GeneratorSymbol> out = leg_generators();
  out.push_back(GeneratorSymbol::v());
  return out;
}

std::vector<GeneratorSymbol> Algebra::leg_generators() const {
  std::vector<GeneratorSymbol> out;
  for (int i = 1; i <= 3; ++i) out.push_back(GeneratorSymbol::X(i));
  out.push_back(GeneratorSymbol::u());
  out.push_back(GeneratorSymbol::g());
  for (int k = -window_; k <= window_; ++k) out.push_back(GeneratorSymbol::U(k));
  return out;
}

std::vector<GeneratorSymbol> Algebra::action_generators(bool include_v) const {
  std::vector<GeneratorSymbol> out;
  for (int i = 1; i <= 3; ++i) out.push_back(GeneratorSymbol::X(i));
  out.push_back(GeneratorSymbol::u());
  out.push_back(GeneratorSymbol::g());
  for (int k = 0; k <= window_; ++k) out.push_back(GeneratorSymbol::U(k));
  if (include_v) out.push_back(GeneratorSymbol::v());
  return out;
}

std::vector<Element> Algebra::generator_elements(bool include_v) const {
  std::vector<Element> out;
  for (GeneratorSymbol s : include_v ? all_generators() : leg_generators())
    out.push_back(gen(s));
  return out;
}

std::vector<Element> Algebra::action_generator_elements(bool include_v) const {
  std::vector<Element> out;
  for (GeneratorSymbol s : action_generators(include_v)) out.push_back(gen(s));
  return out;
}

const Element& Algebra::gamma_image(GeneratorSymbol s) const {
  if (!gamma_ready_)
    throw std::logic_error("crossed-product images used before construction finished");
  auto it = gamma_images_.find(s);
  if (it == gamma_images_.end())
    throw std::invalid_argument("no crossed-product image for " + s.str());
  return it->second;
}

// ---------------------------------------------------------------------------
// Substitutions

namespace {

template <class F>
Element apply_with(const Algebra& alg, F&& img, const Element& e) {
  Element res = alg.zero();
  for (const auto& [w, c] : e.terms()) {
    Element acc = alg.scalar(c);
    for (L1 l : w.leg1) {
      switch (l) {
        case L1::X1: acc = acc * img(GeneratorSymbol::X(1)); break;
        case L1::X2: acc = acc * img(GeneratorSymbol::X(2)); break;
        case L1::X3: acc = acc * img(GeneratorSymbol::X(3)); break;
        case L1::u: acc = acc * img(GeneratorSymbol::u()); break;
        case L1::u2: acc = acc * img(GeneratorSymbol::u()).pow(2); break;
      }
    }
    if (w.gpow != 0) acc = acc * img(GeneratorSymbol::g()).pow(w.gpow);
    for (const auto& [k, ex] : w.upow)
      acc = acc * img(GeneratorSymbol::U(k)).pow(ex);
    if (w.vpow != 0) acc = acc * img(GeneratorSymbol::v()).pow(w.vpow);
    res += acc;
  }
  return res;
}

}  // namespace

Substitution::Substitution(const Algebra& alg, std::string name,
                           std::map<GeneratorSymbol, Element> images, bool validate)
    : alg_(&alg), name_(std::move(name)), images_(std::move(images)) {
  if (!validate) return;
  for (const auto& [s, img] : images_) {
    if (s.kind == GeneratorSymbol::Kind::X) continue;
    if (!img.is_unitary())
      throw std::invalid_argument("substitution " + name_ + ": image of " + s.str() +
                                  " is not unitary");
  }
}

const Element& Substitution::image(GeneratorSymbol s) const {
  auto it = images_.find(s);
  if (it == images_.end())
    throw std::invalid_argument("substitution " + name_ + " has no image for " + s.str());
  return it->second;
}

Element Substitution::operator()(const Element& e) const {
  return apply_with(*alg_, [this](GeneratorSymbol s) -> const Element& { return image(s); }, e);
}

Element apply(const Substitution& s, const Element& a) { return s(a); }

Substitution compose(const Substitution& s, const Substitution& t) {
  std::map<GeneratorSymbol, Element> images;
  for (const auto& [sym, img] : t.images()) images.emplace(sym, s(img));
  return Substitution(t.algebra(), "(" + s.name() + " " + t.name() + ")", std::move(images));
}

Substitution power(const Substitution& s, int n) {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  std::map<GeneratorSymbol, Element> images;
  for (const auto& [sym, img] : s.images()) images.emplace(sym, s.algebra().gen(sym));
  Substitution acc(s.algebra(), "id", std::move(images), false);
  if (n == 0) return acc;
  for (int i = 0; i < n; ++i) acc = compose(s, acc);
  std::ostringstream os;
  os << s.name() << "^" << n;
  return Substitution(s.algebra(), os.str(), acc.images(), false);
}

Substitution inner(const Element& w, std::string name) {
  const Algebra& alg = w.algebra();
  if (!w.is_unitary()) throw std::invalid_argument("inner: element is not unitary");
  Element ws = adjoint(w);
  std::map<GeneratorSymbol, Element> images;
  for (GeneratorSymbol s : alg.all_generators()) images.emplace(s, w * alg.gen(s) * ws);
  return Substitution(alg, std::move(name), std::move(images), false);
}

bool substitutions_agree_on(const std::vector<Element>& gens, const Substitution& s,
                            const Substitution& t) {
  for (const Element& e : gens)
    if (!(s(e) == t(e))) return false;
  return true;
}

}  // namespace cplab
