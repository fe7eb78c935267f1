#include <doctest.h>

#include <random>

#include "cplab/parser.hpp"

using namespace cplab;

namespace {
const Algebra& A() { return Algebra::standard(); }
}

TEST_CASE("canonical forms of small words") {
  CHECK(format_element(parse_element("U1 U0", A())) == "delta^-1 U0 U1");
  CHECK(format_element(parse_element("X1 u^3 X2", A())) == "X1 X2");
  CHECK(format_element(parse_element("delta^9", A())) == "1");
  CHECK(format_element(parse_element("U0 g", A())) == "eps^-1 g U0");
  CHECK(format_element(parse_element("v u", A())) == "eps u v");
  CHECK(format_element(parse_element("0", A())) == "0");
  CHECK(format_element(parse_element("u u'", A())) == "1");
  CHECK(format_element(parse_element("U0^-1", A())) == "U0^8");
  CHECK(format_element(parse_element("2/3 X1 - 1/3 X1", A())) == "1/3 X1");
  CHECK(format_element(parse_element("eps * eps^-1 U2", A())) == "U2");
  CHECK(format_element(parse_element("-X1", A())) == "-X1");
}

TEST_CASE("composite atoms expand") {
  CHECK(parse_element("W", A()) == A().W_elem());
  CHECK(parse_element("E2", A()) == A().E_proj(2));
  CHECK(parse_element("e1", A()) == A().e_proj(1));
  CHECK(parse_element("g3", A()) == A().g_proj(3));
  CHECK(parse_element("(X1 + X2)^2", A()) == (A().x(1) + A().x(2)).pow(2));
  CHECK(parse_element("W W'", A()) == A().one());
  CHECK(trace(parse_element("E1", A())) == CycloNum(Rational(1, 3)));
  // W follows the algebra's candidate.
  Algebra conj(8, WCandidate::conjugate);
  CHECK(parse_element("W", conj) == conj.W_elem());
}

TEST_CASE("errors carry positions") {
  auto col_of = [](const std::string& text) {
    try {
      parse_element(text, A());
    } catch (const parse_error& e) {
      return e.column();
    }
    return -1;
  };
  CHECK(col_of("U9") == 1);
  CHECK(col_of("X1 ++ X2") == 5);
  CHECK(col_of("X1^") > 0);
  CHECK(col_of("(X1") == 4);
  CHECK(col_of("X1^-1") == 1);   // X is not invertible
  CHECK(col_of("foo") == 1);
  CHECK(col_of("X4") == 1);
  CHECK(col_of("1/0") == 1);
  CHECK(col_of("") > 0);
}

TEST_CASE("round trip on random elements") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    std::vector<std::pair<GeneratorSymbol, long>> raw;
    int len = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < len; ++i) {
      switch (rng() % 7) {
        case 0: raw.push_back({GeneratorSymbol::X(1 + static_cast<int>(rng() % 3)), 1}); break;
        case 1: raw.push_back({GeneratorSymbol::u(), static_cast<long>(1 + rng() % 2)}); break;
        case 2: raw.push_back({GeneratorSymbol::g(), static_cast<long>(1 + rng() % 2)}); break;
        case 3:
        case 4:
          raw.push_back({GeneratorSymbol::U(static_cast<int>(rng() % 9) - 4),
                         static_cast<long>(1 + rng() % 8)});
          break;
        case 5: raw.push_back({GeneratorSymbol::v(), static_cast<long>(1 + rng() % 2)}); break;
        default: break;
      }
    }
    Element e = A().normal_form(raw);
    CycloNum c = CycloNum::zeta_pow(static_cast<long>(rng() % 9)) *
                 CycloNum(rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4)));
    e = e * c;
    if (rng() % 2) e += A().E_proj(1) * CycloNum(rational(static_cast<long>(rng() % 3), 3));
    CHECK(parse_element(format_element(e), A()) == e);
  }
}

TEST_CASE("format is stable under reparse") {
  for (const char* text : {"W", "E1 v", "delta^-2 (E1 + E2 + eps E3) v", "g U0^3",
                           "1/9 + 2/9 u g^2"}) {
    Element e = parse_element(text, A());
    std::string once = format_element(e);
    std::string twice = format_element(parse_element(once, A()));
    CHECK(once == twice);
  }
}
