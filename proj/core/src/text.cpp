#include "gsv/text.hpp"

#include <cctype>

#include "gsv/error.hpp"

namespace gsv::text {

namespace {

std::string normalize_minus(std::string_view s) {
  static constexpr std::string_view kMinus = "\xE2\x88\x92";
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    if (s.substr(i, kMinus.size()) == kMinus) {
      out.push_back('-');
      i += kMinus.size();
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

void append_term(std::string& out, const Rational& c, const std::string& body) {
  const bool first = out.empty();
  const bool neg = c.sign() < 0;
  if (!first) out += neg ? " - " : " + ";
  else if (neg) out += "-";
  const Rational mag = c.abs();
  if (mag != Rational(1)) out += mag.to_string() + "*";
  out += body;
}

struct RawTerm {
  Rational coeff;
  std::vector<Generator> gens;
  bool verma = false;
};

class Parser {
 public:
  Parser(const Algebra& alg, std::string_view src) : alg_(alg), src_(normalize_minus(src)) {}

  bool at_end() {
    skip_ws();
    return pos_ == src_.size();
  }

  void expect_end() {
    if (!at_end()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Syntax, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Rational rational() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
    skip_ws();
    const std::size_t digits = pos_;
    while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '/')) ++pos_;
    if (pos_ == digits) fail("expected a rational");
    std::string tok = src_.substr(start, pos_ - start);
    std::erase_if(tok, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    try {
      return Rational::parse(tok);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DivisionByZero) throw;
      fail("malformed rational '" + tok + "'");
    }
  }

  bool at_generator() {
    const char c = peek();
    return c == 'L' || c == 'M' || c == 'Y';
  }

  Generator generator() {
    const char c = peek();
    ++pos_;
    const Kind kind = c == 'L' ? Kind::L : c == 'M' ? Kind::M : Kind::Y;
    expect('(');
    Generator g{kind, rational()};
    expect(')');
    alg_.validate(g);
    return g;
  }

  std::vector<RawTerm> expression() {
    std::vector<RawTerm> out;
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = src_[pos_++] == '-';
    for (;;) {
      RawTerm t = term();
      if (negate) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      const char c = peek();
      if (c != '+' && c != '-') break;
      negate = c == '-';
      ++pos_;
    }
    return out;
  }

  std::vector<Generator> word() {
    std::vector<Generator> out;
    while (at_generator()) out.push_back(generator());
    return out;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  std::size_t pos() const { return pos_; }

 private:
  RawTerm term() {
    RawTerm t{Rational(1), {}, false};
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coeff = rational();
      if (!eat('*')) {
        if (t.coeff.is_zero()) return RawTerm{Rational(0), {}, false};
        fail("expected '*' after a coefficient");
      }
    }
    t.gens = word();
    if (eat('v')) t.verma = true;
    else if (t.gens.empty()) fail("expected a generator or 'v'");
    return t;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  const Algebra& alg_;
  std::string src_;
  std::size_t pos_ = 0;
};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

LieElement to_element(const Algebra& alg, Parser& p, const std::vector<RawTerm>& terms) {
  LieElement out = alg.zero();
  for (const RawTerm& t : terms) {
    if (t.coeff.is_zero() && t.gens.empty() && !t.verma) continue;
    if (t.verma) p.fail("a Verma vector is not a Lie algebra element");
    if (t.gens.size() != 1) p.fail("juxtaposed generators form a Verma word and need a trailing 'v'");
    out.add_term(t.gens.front(), t.coeff);
  }
  return out;
}

}  // namespace

std::string format(const Rational& q) { return q.to_string(); }

std::string format(const Generator& g) { return to_string(g); }

std::string format(const LieElement& e) {
  std::string out;
  for (const auto& [g, c] : e.terms()) append_term(out, c, to_string(g));
  return out.empty() ? "0" : out;
}

std::string format(const VermaVector& v) {
  std::string out;
  for (const auto& [m, c] : v.terms()) {
    std::string body;
    for (const Generator& g : m.factors()) body += to_string(g);
    append_term(out, c, body + "v");
  }
  return out.empty() ? "0" : out;
}

std::string format(const Primitive& p) {
  return std::visit(overloaded{
                        [](const Diagonal& d) { return "diag(" + d.chi.t().to_string() + "; " + d.s.to_string() + ")"; },
                        [](const Scale& s) { return "scale(" + s.a.to_string() + ")"; },
                        [](const Cocycle& c) { return "cocycle(" + c.lambda.to_string() + ")"; },
                        [](const Inner& in) { return "inner(" + format(in.x) + ")"; },
                    },
                    p);
}

std::string format(const Automorphism& theta) {
  if (theta.is_identity()) return "id";
  std::string out;
  for (const Primitive& p : theta.chain()) {
    if (!out.empty()) out += " * ";
    out += format(p);
  }
  return out;
}

std::string format_word(std::span<const Generator> word) {
  if (word.empty()) return "1";
  std::string out;
  for (const Generator& g : word) out += to_string(g);
  return out;
}

Rational parse_rational(std::string_view s) {
  const std::string norm = normalize_minus(s);
  std::string_view body = norm;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  return Rational::parse(body);
}

LieElement parse_element(const Algebra& alg, std::string_view s) {
  Parser p(alg, s);
  const auto terms = p.expression();
  p.expect_end();
  return to_element(alg, p, terms);
}

VermaVector parse_vector(const VermaModule& mod, std::string_view s) {
  Parser p(mod.algebra(), s);
  const auto terms = p.expression();
  p.expect_end();
  VermaVector out = mod.zero();
  for (const RawTerm& t : terms) {
    if (t.coeff.is_zero() && t.gens.empty() && !t.verma) continue;
    if (!t.verma) p.fail("expected a Verma word ending in 'v'");
    VermaVector part = mod.act_word(t.gens, mod.highest());
    part *= t.coeff;
    out += part;
  }
  return out;
}

std::vector<Generator> parse_word(const Algebra& alg, std::string_view s) {
  Parser p(alg, s);
  if (p.peek() == '1') {
    p.rational();
    p.expect_end();
    return {};
  }
  auto w = p.word();
  p.expect_end();
  return w;
}

Automorphism parse_automorphism(const Algebra& alg, std::string_view s) {
  Parser p(alg, s);
  Automorphism out = Automorphism::identity(alg);
  std::vector<Automorphism> factors;
  do {
    const std::string name = p.identifier();
    if (name == "id") {
      factors.push_back(Automorphism::identity(alg));
      continue;
    }
    p.expect('(');
    if (name == "diag") {
      const Rational t = p.rational();
      p.expect(';');
      const Rational sc = p.rational();
      factors.push_back(Automorphism::diagonal(alg, t, sc));
    } else if (name == "scale") {
      factors.push_back(Automorphism::scale(alg, p.rational()));
    } else if (name == "cocycle") {
      factors.push_back(Automorphism::cocycle(alg, p.rational()));
    } else if (name == "inner") {
      const auto terms = p.expression();
      factors.push_back(exp_ad(to_element(alg, p, terms)));
    } else {
      p.fail(name.empty() ? "expected an automorphism" : "unknown automorphism '" + name + "'");
    }
    p.expect(')');
  } while (p.eat('*'));
  p.expect_end();
  for (const Automorphism& f : factors) out = compose(out, f);
  return out;
}

}  // namespace gsv::text
