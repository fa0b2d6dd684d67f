#pragma once

// Template part of cursor.hpp.

namespace ncp::detail {

inline Scalar pow_suffix(Cursor& c, Scalar s) {
  if (!c.accept('^')) return s;
  long e = c.integer();
  if (e < 0 || e > 64) c.fail("bad exponent");
  Scalar r(1);
  for (long i = 0; i < e; ++i) r *= s;
  return r;
}

inline Rational read_rational(Cursor& c, bool* had_slash = nullptr) {
  std::string num = c.digits();
  if (c.peek_raw() == '.' && std::isdigit(static_cast<unsigned char>(c.peek_at(1)))) c.fail("decimal numbers are not accepted, write p/q");
  Rational q(num);
  if (had_slash) *had_slash = false;
  if (c.peek_raw() == '/' && std::isdigit(static_cast<unsigned char>(c.peek_at(1)))) {
    c.seek(c.pos() + 1);
    std::string den = c.digits();
    if (den.find_first_not_of('0') == std::string::npos) c.fail("zero denominator");
    q = Rational(mpz_class(num), mpz_class(den));
    q.canonicalize();
    if (had_slash) *had_slash = true;
  }
  return q;
}

inline Scalar param_scalar(Cursor& c, const std::string& name, const ParamNames* params) {
  if (params && !params->count(name)) c.fail("undeclared parameter '" + name + "'");
  return Scalar::parameter(name);
}

template <class Key, class Body>
Linear<Key> parse_expr(Cursor& c, const ParamNames* params, Body body, bool allow_scalar_only, const Key& unit_key) {
  Accumulator<Key> acc;
  bool first = true;
  while (true) {
    char ch = c.peek();
    Scalar coef(1);
    if (ch == '+' || ch == '-') {
      c.accept(ch);
      if (ch == '-') coef = Scalar(-1);
    } else if (!first) {
      break;
    }
    first = false;
    bool have_body = false;
    Key key{};
    while (true) {
      char p = c.peek();
      size_t save = c.pos();
      if (p == '(') {
        c.accept('(');
        Scalar s = parse_scalar_sum(c, params);
        c.expect(')');
        coef = coef * pow_suffix(c, s);
        if (c.accept('*')) continue;
        break;
      }
      if (std::isdigit(static_cast<unsigned char>(p))) {
        bool slash = false;
        Rational q = read_rational(c, &slash);
        char nx = c.peek();
        if (nx == '*') {
          c.accept('*');
          coef = coef * Scalar(q);
          continue;
        }
        if (!slash && q == 1 && (nx == '#' || nx == '.')) {
          c.seek(save);
          key = body(c);
          have_body = true;
          break;
        }
        coef = coef * Scalar(q);
        break;
      }
      if (Cursor::ident_start(p)) {
        std::string id = c.ident();
        char nx = c.peek();
        if (nx == '*' || nx == '^') {
          coef = coef * pow_suffix(c, param_scalar(c, id, params));
          if (c.accept('*')) continue;
          break;
        }
        c.seek(save);
        key = body(c);
        have_body = true;
        break;
      }
      if (p == '[') {
        key = body(c);
        have_body = true;
        break;
      }
      c.fail("expected a term");
    }
    if (!have_body) {
      if (!allow_scalar_only) c.fail("term needs a tensor part");
      key = unit_key;
    }
    acc.add(std::move(key), coef);
  }
  return acc.finish();
}

}  // namespace ncp::detail
