#include "cplab/parser.hpp"

#include <cctype>
#include <sstream>

namespace cplab {

namespace {

enum class Tok {
  number,   // digits or digits/digits
  eps,
  delta,
  gen_x,    // index in ival
  gen_u,
  gen_g,
  gen_v,
  gen_U,    // index in ival
  cap_w,
  proj_E,   // index in ival
  proj_e,
  proj_g,
  caret,
  prime,
  lparen,
  rparen,
  plus,
  minus,
  star,
  end,
};

struct Token {
  Tok kind;
  int column;           // 1-based
  long ival = 0;        // U/E/e/g/X index
  Rational number{0};   // for Tok::number
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    int col = static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size()) return {Tok::end, col};
    char c = s_[pos_];
    switch (c) {
      case '^': ++pos_; return {Tok::caret, col};
      case '\'': ++pos_; return {Tok::prime, col};
      case '(': ++pos_; return {Tok::lparen, col};
      case ')': ++pos_; return {Tok::rparen, col};
      case '+': ++pos_; return {Tok::plus, col};
      case '-': ++pos_; return {Tok::minus, col};
      case '*': ++pos_; return {Tok::star, col};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Token t{Tok::number, col};
      t.number = read_rational(col);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return read_word(col);
    throw parse_error(std::string("unexpected character '") + c + "'", col);
  }

 private:
  Rational read_rational(int col) {
    long num = read_digits(col);
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      long den = read_digits(static_cast<int>(pos_) + 1);
      if (den == 0) throw parse_error("zero denominator", col);
      return rational(num, den);
    }
    return Rational(num);
  }

  long read_digits(int col) {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw parse_error("expected digits", col);
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000000L) throw parse_error("number too large", col);
      ++pos_;
    }
    return v;
  }

  Token read_word(int col) {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string w = s_.substr(start, pos_ - start);
    auto digit_follows = [&] {
      return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    };
    if (w == "eps") return {Tok::eps, col};
    if (w == "delta") return {Tok::delta, col};
    if (w == "u") return {Tok::gen_u, col};
    if (w == "v") return {Tok::gen_v, col};
    if (w == "W") return {Tok::cap_w, col};
    if (w == "X") {
      Token t{Tok::gen_x, col};
      t.ival = read_digits(col);
      return t;
    }
    if (w == "U") {
      Token t{Tok::gen_U, col};
      bool neg = pos_ < s_.size() && s_[pos_] == '-';
      if (neg) ++pos_;
      t.ival = read_digits(col);
      if (neg) t.ival = -t.ival;
      return t;
    }
    if (w == "E") {
      Token t{Tok::proj_E, col};
      t.ival = read_digits(col);
      return t;
    }
    if (w == "e" && digit_follows()) {
      Token t{Tok::proj_e, col};
      t.ival = read_digits(col);
      return t;
    }
    if (w == "g") {
      if (digit_follows()) {
        Token t{Tok::proj_g, col};
        t.ival = read_digits(col);
        return t;
      }
      return {Tok::gen_g, col};
    }
    throw parse_error("unknown symbol '" + w + "'", col);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

class Parser {
 public:
  Parser(const std::string& text, const Algebra& alg) : alg_(alg), lex_(text) { advance(); }

  Element parse() {
    Element e = parse_sum();
    if (cur_.kind != Tok::end) throw parse_error("trailing input", cur_.column);
    return e;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  bool at_scalar_atom() const {
    return cur_.kind == Tok::number || cur_.kind == Tok::eps || cur_.kind == Tok::delta;
  }

  bool at_element_atom() const {
    switch (cur_.kind) {
      case Tok::gen_x:
      case Tok::gen_u:
      case Tok::gen_g:
      case Tok::gen_v:
      case Tok::gen_U:
      case Tok::cap_w:
      case Tok::proj_E:
      case Tok::proj_e:
      case Tok::proj_g:
      case Tok::lparen:
        return true;
      default:
        return false;
    }
  }

  long parse_signed_int() {
    bool neg = false;
    if (cur_.kind == Tok::minus) {
      neg = true;
      advance();
    }
    if (cur_.kind != Tok::number) throw parse_error("expected integer", cur_.column);
    if (cur_.number.get_den() != 1) throw parse_error("expected integer exponent", cur_.column);
    long v = static_cast<long>(cur_.number.get_num().get_si());
    advance();
    return neg ? -v : v;
  }

  Element parse_sum() {
    bool neg = false;
    if (cur_.kind == Tok::minus) {
      neg = true;
      advance();
    }
    Element acc = parse_term();
    if (neg) acc = -acc;
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      bool sub = cur_.kind == Tok::minus;
      advance();
      Element t = parse_term();
      if (sub)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  Element parse_term() {
    CycloNum coeff(1);
    bool have_scalar = false;
    while (at_scalar_atom()) {
      coeff *= parse_scalar_atom();
      have_scalar = true;
      if (cur_.kind == Tok::star) advance();
    }
    Element acc = alg_.scalar(coeff);
    bool have_factor = false;
    while (at_element_atom()) {
      acc = acc * parse_factor();
      have_factor = true;
    }
    if (!have_scalar && !have_factor)
      throw parse_error("expected a term", cur_.column);
    return acc;
  }

  CycloNum parse_scalar_atom() {
    CycloNum base(1);
    switch (cur_.kind) {
      case Tok::number: base = CycloNum(cur_.number); break;
      case Tok::eps: base = CycloNum::eps(); break;
      case Tok::delta: base = CycloNum::delta(); break;
      default: throw parse_error("expected scalar", cur_.column);
    }
    advance();
    if (cur_.kind == Tok::caret) {
      advance();
      long n = parse_signed_int();
      base = base.pow(n);
    }
    return base;
  }

  Element parse_factor() {
    int col = cur_.column;
    Element atom = parse_atom();
    if (cur_.kind == Tok::caret) {
      advance();
      long n = parse_signed_int();
      if (n >= 0) {
        atom = atom.pow(n);
      } else {
        if (!atom.is_unitary())
          throw parse_error("negative power of a non-unitary factor", col);
        atom = adjoint(atom).pow(-n);
      }
    }
    if (cur_.kind == Tok::prime) {
      advance();
      atom = adjoint(atom);
    }
    return atom;
  }

  Element parse_atom() {
    int col = cur_.column;
    switch (cur_.kind) {
      case Tok::gen_x: {
        long i = cur_.ival;
        if (i < 1 || i > 3) throw parse_error("X index must be 1..3", col);
        advance();
        return alg_.x(static_cast<int>(i));
      }
      case Tok::gen_u: advance(); return alg_.u();
      case Tok::gen_g: advance(); return alg_.g();
      case Tok::gen_v: advance(); return alg_.v();
      case Tok::gen_U: {
        long k = cur_.ival;
        try {
          alg_.check_window(static_cast<int>(k));
        } catch (const window_error& we) {
          throw parse_error(we.what(), col);
        }
        advance();
        return alg_.U(static_cast<int>(k));
      }
      case Tok::cap_w: advance(); return alg_.W_elem();
      case Tok::proj_E: {
        long l = cur_.ival;
        if (l < 1 || l > 3) throw parse_error("E index must be 1..3", col);
        advance();
        return alg_.E_proj(static_cast<int>(l));
      }
      case Tok::proj_e: {
        long i = cur_.ival;
        if (i < 1 || i > 3) throw parse_error("e index must be 1..3", col);
        advance();
        return alg_.e_proj(static_cast<int>(i));
      }
      case Tok::proj_g: {
        long j = cur_.ival;
        if (j < 1 || j > 3) throw parse_error("g index must be 1..3", col);
        advance();
        return alg_.g_proj(static_cast<int>(j));
      }
      case Tok::lparen: {
        advance();
        Element e = parse_sum();
        if (cur_.kind != Tok::rparen) throw parse_error("expected ')'", cur_.column);
        advance();
        return e;
      }
      default:
        throw parse_error("expected an atom", col);
    }
  }

  const Algebra& alg_;
  Lexer lex_;
  Token cur_;
};

// "" for k=0, "eps"/"eps^-1" for the cube roots, "delta^k" with a symmetric
// exponent otherwise.
std::string root_token(int k) {
  switch (((k % 9) + 9) % 9) {
    case 0: return "";
    case 3: return "eps";
    case 6: return "eps^-1";
    case 1: return "delta";
    case 2: return "delta^2";
    case 4: return "delta^4";
    case 5: return "delta^-4";
    case 7: return "delta^-2";
    case 8: return "delta^-1";
  }
  return "";
}

void append_word(std::ostringstream& os, const Word& w, bool& any) {
  auto emit = [&](const std::string& s) {
    if (any) os << " ";
    os << s;
    any = true;
  };
  for (L1 l : w.leg1) {
    switch (l) {
      case L1::X1: emit("X1"); break;
      case L1::X2: emit("X2"); break;
      case L1::X3: emit("X3"); break;
      case L1::u: emit("u"); break;
      case L1::u2: emit("u^2"); break;
    }
  }
  if (w.gpow == 1) emit("g");
  if (w.gpow == 2) emit("g^2");
  for (const auto& [k, e] : w.upow) {
    std::ostringstream t;
    t << "U" << k;
    if (e != 1) t << "^" << static_cast<int>(e);
    emit(t.str());
  }
  if (w.vpow == 1) emit("v");
  if (w.vpow == 2) emit("v^2");
}

}  // namespace

Element parse_element(const std::string& text, const Algebra& alg) {
  return Parser(text, alg).parse();
}

std::string format_element(const Element& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first_piece = true;
  for (const auto& [w, coeff] : e.terms()) {
    // One output piece per zeta-monomial of the coefficient.
    std::vector<std::pair<Rational, int>> monos;  // (rational, zeta exponent)
    Rational q;
    int k = coeff.monomial_form(&q);
    if (k >= 0) {
      monos.emplace_back(q, k);
    } else {
      for (int i = 0; i < 6; ++i)
        if (coeff.coeff(i) != 0) monos.emplace_back(coeff.coeff(i), i);
    }
    for (const auto& [rat, zexp] : monos) {
      Rational a = rat;
      bool negative = a < 0;
      if (negative) a = -a;
      if (first_piece) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first_piece = false;
      std::ostringstream piece;
      bool any = false;
      std::string root = root_token(zexp);
      if (a != 1 || (root.empty() && w.is_scalar())) {
        piece << to_string(a);
        any = true;
      }
      if (!root.empty()) {
        if (any) piece << " ";
        piece << root;
        any = true;
      }
      append_word(piece, w, any);
      if (!any) piece << "1";
      os << piece.str();
    }
  }
  return os.str();
}

}  // namespace cplab
