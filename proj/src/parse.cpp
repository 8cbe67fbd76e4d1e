#include "lied/tree.hpp"

#include <cctype>
#include <stdexcept>

namespace lied {

namespace {

class Parser {
 public:
  Parser(const std::string& s, bool units) : s_(s), units_(units) {}

  QExpr run() {
    QExpr e = sum();
    skip();
    if (p_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at offset " + std::to_string(p_) + " in \"" + s_ + "\"");
  }

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }

  char peek() {
    skip();
    return p_ < s_.size() ? s_[p_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++p_;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  // Composition operator at the cursor: returns 0 for "o (...)", N for "oN", -1 otherwise.
  int comp_op(size_t& len) {
    skip();
    static const std::string circ = "∘";
    size_t q = p_;
    if (s_.compare(q, circ.size(), circ) == 0) {
      q += circ.size();
    } else if (q < s_.size() && s_[q] == 'o') {
      ++q;
    } else {
      return -1;
    }
    size_t d = q;
    while (d < s_.size() && std::isdigit(static_cast<unsigned char>(s_[d]))) ++d;
    if (d < s_.size() && ident_char(s_[d])) return -1;
    len = d - p_;
    if (d == q) {
      size_t r = d;
      while (r < s_.size() && std::isspace(static_cast<unsigned char>(s_[r]))) ++r;
      if (r < s_.size() && s_[r] == '(') return 0;
      return -1;
    }
    return std::stoi(s_.substr(q, d - q));
  }

  bool starts_primary() {
    char c = peek();
    if (c == '(') return true;
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) return false;
    size_t len;
    return comp_op(len) < 0;
  }

  QExpr sum() {
    QExpr acc;
    bool first = true;
    while (true) {
      char c = peek();
      Rat sign = 1;
      if (c == '+' || c == '-') {
        ++p_;
        if (c == '-') sign = -1;
      } else if (!first) {
        break;
      }
      acc.add(term(), sign);
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  QExpr term() {
    Rat coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      size_t save = p_;
      std::string num = digits();
      if (eat('/')) {
        std::string den = digits();
        coef = parse_rat(num + "/" + den);
        have_coef = true;
      } else if (eat('*')) {
        coef = parse_rat(num);
        have_coef = true;
      } else if (starts_primary()) {
        coef = parse_rat(num);
        have_coef = true;
      } else {
        p_ = save;
      }
      if (have_coef) eat('*');
    }
    QExpr e = composite();
    while (eat('^')) e = exponent(e);
    return e.scaled(coef);
  }

  std::string digits() {
    skip();
    size_t q = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (q == p_) fail("expected number");
    return s_.substr(q, p_ - q);
  }

  QExpr exponent(const QExpr& e) {
    int n = e.arity();
    char c = peek();
    if (c == '{') {
      ++p_;
      std::string raw = until('}');
      return e.is_zero() ? e : act(e, GroupAlgebraElement::parse(raw, n));
    }
    if (c == '(') {
      size_t q = p_;
      while (p_ < s_.size() && s_[p_] == '(') {
        size_t close = s_.find(')', p_);
        if (close == std::string::npos) fail("unterminated cycle");
        p_ = close + 1;
      }
      return e.is_zero() ? e : act(e, Perm::parse(s_.substr(q, p_ - q), n));
    }
    if (s_.compare(p_, 2, "id") == 0) {
      p_ += 2;
      return e;
    }
    fail("expected permutation");
  }

  std::string until(char close) {
    size_t q = s_.find(close, p_);
    if (q == std::string::npos) fail(std::string("missing '") + close + "'");
    std::string raw = s_.substr(p_, q - p_);
    p_ = q + 1;
    return raw;
  }

  QExpr composite() {
    QExpr left = postfix();
    while (true) {
      size_t len = 0;
      int op = comp_op(len);
      if (op < 0) break;
      p_ += len;
      if (op == 0) {
        expect('(');
        std::vector<QExpr> args;
        do {
          args.push_back(sum());
        } while (eat(','));
        expect(')');
        if (!left.is_zero() && static_cast<int>(args.size()) != left.arity())
          fail("wrong number of arguments in full composition");
        left = full(left, args);
      } else {
        QExpr right = postfix();
        if (!left.is_zero() && op > left.arity()) fail("composition index exceeds arity");
        left = partial(left, op, right);
      }
    }
    return left;
  }

  QExpr postfix() {
    QExpr e = primary();
    if (eat('[')) {
      std::string raw = until(']');
      if (!e.is_zero()) e = act(e, GroupAlgebraElement::parse(raw, e.arity()));
    }
    return e;
  }

  QExpr primary() {
    char c = peek();
    if (c == '(') {
      ++p_;
      QExpr e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (num == "1") return units_ ? QExpr::gen(unit_generator()) : QExpr::leaf();
      if (num == "0") return {};
      fail("unexpected number " + num);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t q = p_;
      while (p_ < s_.size() && ident_char(s_[p_])) ++p_;
      std::string name = s_.substr(q, p_ - q);
      if (name == "alt" && peek() == '(') {
        ++p_;
        QExpr e = sum();
        expect(')');
        return alternate(e);
      }
      auto id = find_generator(name);
      if (!id) {
        p_ = q;
        fail("unknown generator '" + name + "'");
      }
      return QExpr::gen(*id);
    }
    fail("expected expression");
  }

  const std::string& s_;
  bool units_;
  size_t p_ = 0;
};

}  // namespace

QExpr parse_expr(const std::string& text, bool units_as_vertices) {
  return Parser(text, units_as_vertices).run();
}

IExpr parse_iexpr(const std::string& text, bool units_as_vertices) {
  return to_integral(parse_expr(text, units_as_vertices));
}

}  // namespace lied
