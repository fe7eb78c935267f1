#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cplab/cyclo.hpp"
#include "cplab/freemoments.hpp"

namespace cplab {

/// Raised when a U index leaves the configured window. Exactness policy:
/// results are never silently truncated.
class window_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct GeneratorSymbol {
  enum class Kind : std::uint8_t { X, u, g, U, v };
  Kind kind;
  int index = 0;  // i in 1..3 for X, k for U, unused otherwise

  static GeneratorSymbol X(int i) { return {Kind::X, i}; }
  static GeneratorSymbol u() { return {Kind::u, 0}; }
  static GeneratorSymbol g() { return {Kind::g, 0}; }
  static GeneratorSymbol U(int k) { return {Kind::U, k}; }
  static GeneratorSymbol v() { return {Kind::v, 0}; }

  /// 1 = free tensor leg, 2 = twisted-unitary leg, 3 = crossed-product letter.
  int leg() const {
    switch (kind) {
      case Kind::X:
      case Kind::u: return 1;
      case Kind::g:
      case Kind::U: return 2;
      case Kind::v: return 3;
    }
    return 0;
  }

  std::string str() const;
  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

/// A canonical monomial: free leg-1 letters in written order, then the
/// twisted leg-2 part (g-power first, U factors with ascending index), then
/// the crossed-product power. Reordering scalars live in the coefficient,
/// never in the word.
struct Word {
  std::vector<L1> leg1;
  std::uint8_t gpow = 0;                          // 0..2
  std::vector<std::pair<int, std::uint8_t>> upow; // (k, exp 1..8), ascending k
  std::uint8_t vpow = 0;                          // 0..2

  bool is_scalar() const { return leg1.empty() && gpow == 0 && upow.empty() && vpow == 0; }
  bool operator<(const Word& o) const;
  bool operator==(const Word& o) const {
    return leg1 == o.leg1 && gpow == o.gpow && upow == o.upow && vpow == o.vpow;
  }
};

enum class WCandidate { paper, conjugate };
const char* to_string(WCandidate c);

class Element;
class Substitution;

/// Shared context of the presented algebras: the U-index window, the active
/// W cube-root candidate (which fixes how v conjugates through words), the
/// precomputed images of the crossed-product action, and the moment cache
/// used by the trace. Immutable after construction; Elements keep a pointer
/// to their algebra.
class Algebra {
 public:
  explicit Algebra(int window = 8, WCandidate wc = WCandidate::paper);

  /// Process-wide default context (window 8, paper candidate).
  static const Algebra& standard();

  int window() const { return window_; }
  WCandidate w_candidate() const { return wcand_; }

  Element zero() const;
  Element one() const;
  Element scalar(const CycloNum& c) const;
  Element gen(GeneratorSymbol s) const;
  Element gen_pow(GeneratorSymbol s, long n) const;

  /// Canonicalize a raw product of generator powers.
  Element normal_form(const std::vector<std::pair<GeneratorSymbol, long>>& raw) const;

  // Convenience generators (defined after Element below).
  Element x(int i) const;
  Element u() const;
  Element g() const;
  Element U(int k) const;
  Element v() const;

  // Spectral projections and the composite elements built from them.
  Element e_proj(int i) const;                 // of u, eigenvalue eps^i
  Element g_proj(int j) const;                 // of g, eigenvalue eps^j
  Element U_spectral(int k, int j) const;      // of U_k, eigenvalue delta^j
  Element E_proj(int l) const;                 // sum of e_i g_j with i+j = l mod 3
  Element W_elem() const;                      // active candidate
  Element W_elem(WCandidate wc) const;
  Element gU03() const;                        // g U0^3
  Element make_xn(int n) const;                // U0 U1* U2 ... (alternating stars)
  Element make_un(int n) const;                // U0* x_n

  // Named automorphisms as substitutions.
  Substitution identity_sub() const;
  Substitution alpha() const;              // leg-1 kernel: X cycle, u -> eps u
  Substitution beta() const;               // leg-2 kernel: conjugation by U(-1)
  Substitution gamma_sub() const;          // Ad W . (alpha x beta), plus v -> v
  Substitution alpha_tensor_beta() const;  // alpha x beta, plus v -> v
  Substitution theta() const;              // conjugation by U0
  Substitution phi() const;                // Id x (Ad U0* . beta), leg generators only
  Substitution beta_mu() const;            // phi extended by v -> v
  Substitution gamma1() const;             // alpha x Id (no v image)
  Substitution gamma2() const;             // Id x beta (no v image)

  /// All window generators: X1..X3, u, g, U(-K)..U(K), v.
  std::vector<GeneratorSymbol> all_generators() const;
  /// Same without the crossed-product letter.
  std::vector<GeneratorSymbol> leg_generators() const;
  /// Generators of the algebra the crossed-product action is defined on:
  /// X1..X3, u, g and the nonnegative U(k) only. The negative indices realize
  /// the conjugating unitaries of the tower, where gamma^3 is not inner by g.
  std::vector<GeneratorSymbol> action_generators(bool include_v) const;
  std::vector<Element> generator_elements(bool include_v) const;
  std::vector<Element> action_generator_elements(bool include_v) const;

  /// Image of a generator under the crossed-product action; used to push the
  /// v letter to the right of a word.
  const Element& gamma_image(GeneratorSymbol s) const;

  MomentCache& moment_cache() const { return cache_; }

  void check_window(int k) const;

 private:
  int window_;
  WCandidate wcand_;
  std::map<GeneratorSymbol, Element> gamma_images_;
  mutable MomentCache cache_;
  bool gamma_ready_ = false;
};

/// A finite linear combination of canonical words over Q(zeta9). Value type:
/// all operations are pure, two elements are equal iff their term maps are.
///
/// Products involving the v letter rewrite through the crossed-product
/// action. The rewriting is confluent on words over the action domain
/// (nonnegative U indices) when the active W candidate makes the action cube
/// to the identity; the other candidate still evaluates any single
/// v-conjugation (no mod-3 wraparound) consistently, which is all the
/// pinned-formula checks need.
class Element {
 public:
  Element() : alg_(nullptr) {}

  const Algebra& algebra() const { return *alg_; }
  const std::map<Word, CycloNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  /// Coefficient of the empty word; requires is_scalar() or zero.
  CycloNum scalar_value() const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  Element& operator*=(const Element& o) { return *this = *this * o; }
  Element operator*(const CycloNum& c) const;
  friend Element operator*(const CycloNum& c, const Element& e) { return e * c; }

  Element pow(long n) const;  // n >= 0, or unitary-style negative via adjoint? no: n >= 0 only
  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  friend Element adjoint(const Element& a);
  friend CycloNum trace(const Element& a);
  friend std::optional<CycloNum> scalar_ratio(const Element& a, const Element& b);

  /// true iff a * a^adj == a^adj * a == 1.
  bool is_unitary() const;

 private:
  friend class Algebra;
  friend class Substitution;
  explicit Element(const Algebra* alg) : alg_(alg) {}
  void add_term(const Word& w, const CycloNum& c);
  static Element word_product(const Algebra& alg, const Word& a, const Word& b);

  const Algebra* alg_;
  std::map<Word, CycloNum> terms_;
};

Element adjoint(const Element& a);
CycloNum trace(const Element& a);
/// If a == lambda * b with lambda != 0, returns lambda; absent otherwise.
std::optional<CycloNum> scalar_ratio(const Element& a, const Element& b);

/// An algebra endomorphism given by its action on generators, extended
/// multiplicatively and linearly. Images of unitary generators are validated
/// to be unitary at construction.
class Substitution {
 public:
  Substitution(const Algebra& alg, std::string name,
               std::map<GeneratorSymbol, Element> images, bool validate = true);

  const std::string& name() const { return name_; }
  const Algebra& algebra() const { return *alg_; }
  bool has_image(GeneratorSymbol s) const { return images_.count(s) > 0; }
  const Element& image(GeneratorSymbol s) const;
  const std::map<GeneratorSymbol, Element>& images() const { return images_; }

  Element operator()(const Element& e) const;

 private:
  const Algebra* alg_;
  std::string name_;
  std::map<GeneratorSymbol, Element> images_;
};

Element apply(const Substitution& s, const Element& a);
/// compose(s, t)(x) = s(t(x)).
Substitution compose(const Substitution& s, const Substitution& t);
Substitution power(const Substitution& s, int n);
/// Conjugation x -> w x w* by a unitary element.
Substitution inner(const Element& w, std::string name = "Ad");
bool substitutions_agree_on(const std::vector<Element>& gens, const Substitution& s,
                            const Substitution& t);

inline Element Algebra::x(int i) const { return gen(GeneratorSymbol::X(i)); }
inline Element Algebra::u() const { return gen(GeneratorSymbol::u()); }
inline Element Algebra::g() const { return gen(GeneratorSymbol::g()); }
inline Element Algebra::U(int k) const { return gen(GeneratorSymbol::U(k)); }
inline Element Algebra::v() const { return gen(GeneratorSymbol::v()); }

}  // namespace cplab
