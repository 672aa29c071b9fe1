#include "arbordyn/parse.hpp"

#include <cctype>

#include "arbordyn/error.hpp"

namespace arbordyn {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  bool done() const { return i_ == s_.size(); }
  char peek() const { return done() ? '\0' : s_[i_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::parse, "cannot parse \"" + s_ + "\" at offset " + std::to_string(i_) + ": " + why);
  }

  // Sum of signed terms, stopping at ')' '/' or end.
  std::vector<Rat> poly(std::size_t* terms = nullptr) {
    std::vector<Rat> out;
    std::size_t count = 0;
    bool first = true;
    while (true) {
      int sign = 1;
      if (accept('-')) sign = -1;
      else if (!accept('+') && !first) break;
      add(out, term(sign));
      ++count;
      first = false;
      if (peek() != '+' && peek() != '-') break;
    }
    if (terms) *terms = count;
    return out;
  }

  // One signed term.
  std::vector<Rat> single_term() {
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    std::vector<Rat> out;
    add(out, term(sign));
    return out;
  }

 private:
  struct Term {
    Rat coeff;
    unsigned long exp = 0;
  };

  static void add(std::vector<Rat>& out, const Term& t) {
    if (out.size() <= t.exp) out.resize(t.exp + 1, Rat(0));
    out[t.exp] += t.coeff;
  }

  Int digits() {
    const std::size_t start = i_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    if (start == i_) fail("expected a number");
    return Int(s_.substr(start, i_ - start), 10);
  }

  Term term(int sign) {
    Term t;
    t.coeff = sign;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Int num = digits();
      Int den = 1;
      // a '/' directly followed by a digit belongs to the coefficient
      if (peek() == '/' && i_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
        ++i_;
        den = digits();
        if (den == 0) fail("zero denominator");
      }
      t.coeff *= make_rat(num, den);
      have_coeff = true;
      accept('*');
    }
    if (accept('z')) {
      t.exp = 1;
      if (accept('^')) {
        Int e = digits();
        if (e > 4096) fail("exponent too large");
        t.exp = e.get_ui();
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or z");
    }
    return t;
  }

  std::string s_;
  std::size_t i_ = 0;

};

std::vector<Int> clear(const std::vector<Rat>& c, const Int& L) {
  std::vector<Int> out;
  for (const auto& x : c) out.push_back(Int(x.get_num()) * (L / x.get_den()));
  return out;
}

}  // namespace

std::vector<Rat> parse_rat_poly(std::string_view text) {
  Parser ps(text);
  if (ps.done()) ps.fail("empty polynomial");
  auto out = ps.poly();
  if (!ps.done()) ps.fail("unexpected character");
  return out;
}

RationalMap parse_map(std::string_view text) {
  Parser ps(text);
  if (ps.done()) ps.fail("empty map");
  std::vector<Rat> num, den{Rat(1)};
  if (ps.accept('(')) {
    num = ps.poly();
    ps.expect(')');
  } else {
    std::size_t terms = 0;
    num = ps.poly(&terms);
    if (ps.peek() == '/' && terms > 1) ps.fail("parenthesize a numerator with several terms");
  }
  if (ps.accept('/')) {
    if (ps.accept('(')) {
      den = ps.poly();
      ps.expect(')');
    } else {
      den = ps.single_term();
    }
  }
  if (!ps.done()) ps.fail("unexpected character");

  Int L = 1;
  for (const auto& x : num) L = lcm(L, Int(x.get_den()));
  for (const auto& x : den) L = lcm(L, Int(x.get_den()));
  return RationalMap::create(IntPoly(clear(num, L)), IntPoly(clear(den, L)));
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::string cur;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) cur += ch;
  std::vector<Int> out;
  if (cur.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = cur.find(',', start);
    std::string item = cur.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      if (item.empty()) throw Error(ErrorKind::parse, "empty entry");
      out.push_back(parse_int(item));
    } catch (const Error&) {
      throw Error(ErrorKind::parse, "bad integer list entry \"" + item + "\"");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace arbordyn
