#include <sstream>
#include <stdexcept>

#include "cplab/presalg.hpp"

namespace cplab {

namespace {

CycloNum eps_pow(long k) { return CycloNum::zeta_pow(3 * k); }

}  // namespace

Algebra::Algebra(int window, WCandidate wc) : window_(window), wcand_(wc) {
  if (window_ < 2)
    throw std::invalid_argument("Algebra: window must be at least 2");

  // Images of the crossed-product action gamma = Ad W . (alpha x beta),
  // where alpha cycles the X's with alpha(u) = eps u and beta is conjugation
  // by U(-1). Nothing below involves the v letter, so the products here never
  // consult these images while they are being built.
  const Element W = W_elem(wc);
  const Element Ws = adjoint(W);
  const Element um = U(-1);
  const Element ums = adjoint(um);

  auto beta_of = [&](const Element& e) { return um * e * ums; };

  gamma_images_.emplace(GeneratorSymbol::X(1), W * x(2) * Ws);
  gamma_images_.emplace(GeneratorSymbol::X(2), W * x(3) * Ws);
  gamma_images_.emplace(GeneratorSymbol::X(3), W * (u() * x(1) * gen_pow(GeneratorSymbol::u(), 2)) * Ws);
  gamma_images_.emplace(GeneratorSymbol::u(), u() * CycloNum::eps());
  gamma_images_.emplace(GeneratorSymbol::g(), W * beta_of(g()) * Ws);
  for (int k = -window_; k <= window_; ++k)
    gamma_images_.emplace(GeneratorSymbol::U(k), W * beta_of(U(k)) * Ws);
  gamma_images_.emplace(GeneratorSymbol::v(), v());
  gamma_ready_ = true;
}

const Algebra& Algebra::standard() {
  static const Algebra a(8, WCandidate::paper);
  return a;
}

// ---------------------------------------------------------------------------
// Spectral projections and composite elements

Element Algebra::e_proj(int i) const {
  // u = sum_i eps^i e_i, so e_i = (1/3) sum_m eps^(-im) u^m.
  Element acc = zero();
  CycloNum third{Rational(1, 3)};
  for (long m = 0; m < 3; ++m)
    acc += gen_pow(GeneratorSymbol::u(), m) * (eps_pow(-static_cast<long>(i) * m) * third);
  return acc;
}

Element Algebra::g_proj(int j) const {
  Element acc = zero();
  CycloNum third{Rational(1, 3)};
  for (long m = 0; m < 3; ++m)
    acc += gen_pow(GeneratorSymbol::g(), m) * (eps_pow(-static_cast<long>(j) * m) * third);
  return acc;
}

Element Algebra::U_spectral(int k, int j) const {
  Element acc = zero();
  CycloNum ninth{Rational(1, 9)};
  for (long m = 0; m < 9; ++m)
    acc += gen_pow(GeneratorSymbol::U(k), m) *
           (CycloNum::zeta_pow(-static_cast<long>(j) * m) * ninth);
  return acc;
}

Element Algebra::E_proj(int l) const {
  Element acc = zero();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if ((i + j) % 3 == ((l % 3) + 3) % 3) acc += e_proj(i) * g_proj(j);
  return acc;
}

Element Algebra::W_elem() const { return W_elem(wcand_); }

Element Algebra::W_elem(WCandidate wc) const {
  CycloNum d = CycloNum::delta();
  if (wc == WCandidate::conjugate) d = d.conj();
  return E_proj(1) * d + E_proj(2) * d.pow(2) + E_proj(3);
}

Element Algebra::gU03() const {
  return normal_form({{GeneratorSymbol::g(), 1}, {GeneratorSymbol::U(0), 3}});
}

Element Algebra::make_xn(int n) const {
  if (n < 1) throw std::invalid_argument("make_xn: n must be positive");
  check_window(n);
  std::vector<std::pair<GeneratorSymbol, long>> raw;
  for (int j = 0; j <= n; ++j)
    raw.emplace_back(GeneratorSymbol::U(j), j % 2 == 0 ? 1 : -1);
  return normal_form(raw);
}

Element Algebra::make_un(int n) const {
  return normal_form({{GeneratorSymbol::U(0), -1}}) * make_xn(n);
}

// ---------------------------------------------------------------------------
// Named substitutions

Substitution Algebra::identity_sub() const {
  std::map<GeneratorSymbol, Element> images;
  for (GeneratorSymbol s : all_generators()) images.emplace(s, gen(s));
  return Substitution(*this, "id", std::move(images), false);
}

Substitution Algebra::alpha() const {
  std::map<GeneratorSymbol, Element> images;
  images.emplace(GeneratorSymbol::X(1), x(2));
  images.emplace(GeneratorSymbol::X(2), x(3));
  images.emplace(GeneratorSymbol::X(3), u() * x(1) * gen_pow(GeneratorSymbol::u(), 2));
  images.emplace(GeneratorSymbol::u(), u() * CycloNum::eps());
  return Substitution(*this, "alpha", std::move(images));
}

Substitution Algebra::beta() const {
  const Element um = U(-1);
  const Element ums = adjoint(um);
  std::map<GeneratorSymbol, Element> images;
  images.emplace(GeneratorSymbol::g(), um * g() * ums);
  for (int k = -window_; k <= window_; ++k)
    images.emplace(GeneratorSymbol::U(k), um * U(k) * ums);
  return Substitution(*this, "beta", std::move(images));
}

Substitution Algebra::gamma_sub() const {
  return Substitution(*this, "gamma", gamma_images_);
}

Substitution Algebra::alpha_tensor_beta() const {
  const Substitution a = alpha();
  const Substitution b = beta();
  std::map<GeneratorSymbol, Element> images;
  for (const auto& [s, img] : a.images()) images.emplace(s, img);
  for (const auto& [s, img] : b.images()) images.emplace(s, img);
  images.emplace(GeneratorSymbol::v(), v());
  return Substitution(*this, "alpha*beta", std::move(images));
}

Substitution Algebra::theta() const { return inner(U(0), "theta"); }

Substitution Algebra::phi() const {
  // Id x (Ad U0* . beta) on the tensor-leg generators; no image for v.
  const Element u0 = U(0);
  const Element u0s = adjoint(u0);
  Substitution b = beta();
  std::map<GeneratorSymbol, Element> images;
  for (int i = 1; i <= 3; ++i) images.emplace(GeneratorSymbol::X(i), x(i));
  images.emplace(GeneratorSymbol::u(), u());
  images.emplace(GeneratorSymbol::g(), u0s * b.image(GeneratorSymbol::g()) * u0);
  for (int k = -window_; k <= window_; ++k)
    images.emplace(GeneratorSymbol::U(k), u0s * b.image(GeneratorSymbol::U(k)) * u0);
  return Substitution(*this, "phi", std::move(images));
}

Substitution Algebra::beta_mu() const {
  std::map<GeneratorSymbol, Element> images = phi().images();
  images.emplace(GeneratorSymbol::v(), v());
  return Substitution(*this, "beta_mu", std::move(images));
}

Substitution Algebra::gamma1() const {
  // alpha x Id. Not extendable to the crossed product: no image for v.
  const Substitution a = alpha();
  std::map<GeneratorSymbol, Element> images;
  for (const auto& [s, img] : a.images()) images.emplace(s, img);
  images.emplace(GeneratorSymbol::g(), g());
  for (int k = -window_; k <= window_; ++k) images.emplace(GeneratorSymbol::U(k), U(k));
  return Substitution(*this, "gamma1", std::move(images));
}

Substitution Algebra::gamma2() const {
  // Id x beta. Not extendable to the crossed product: no image for v.
  const Substitution b = beta();
  std::map<GeneratorSymbol, Element> images;
  for (int i = 1; i <= 3; ++i) images.emplace(GeneratorSymbol::X(i), x(i));
  images.emplace(GeneratorSymbol::u(), u());
  for (const auto& [s, img] : b.images()) images.emplace(s, img);
  return Substitution(*this, "gamma2", std::move(images));
}

}  // namespace cplab
