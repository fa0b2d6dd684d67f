#include "ncp/parse.hpp"

#include "ncp/wheeled.hpp"

#include "cursor.hpp"

namespace ncp {
namespace detail {

Scalar parse_scalar_atom(Cursor& c, const ParamNames* params) {
  char p = c.peek();
  Scalar s;
  if (p == '-') {
    c.accept('-');
    return -parse_scalar_atom(c, params);
  }
  if (p == '(') {
    c.accept('(');
    s = parse_scalar_sum(c, params);
    c.expect(')');
  } else if (std::isdigit(static_cast<unsigned char>(p))) {
    s = Scalar(read_rational(c));
  } else if (Cursor::ident_start(p)) {
    s = param_scalar(c, c.ident(), params);
  } else {
    c.fail("expected a scalar");
  }
  return pow_suffix(c, s);
}

Scalar parse_scalar_sum(Cursor& c, const ParamNames* params) {
  Scalar total;
  bool first = true;
  while (true) {
    char ch = c.peek();
    bool neg = false;
    if (ch == '+' || ch == '-') {
      c.accept(ch);
      neg = ch == '-';
    } else if (!first) {
      break;
    }
    first = false;
    Scalar prod = parse_scalar_atom(c, params);
    while (true) {
      if (c.accept('*')) {
        prod *= parse_scalar_atom(c, params);
      } else if (c.peek() == '/') {
        c.accept('/');
        Scalar d = parse_scalar_atom(c, params);
        if (!d.is_constant() || d.is_zero()) c.fail("division by a non-constant or zero scalar");
        Rational inv = 1 / d.constant_value();
        prod *= Scalar(inv);
      } else {
        break;
      }
    }
    total += neg ? -prod : prod;
  }
  return total;
}

Word parse_word_token(Cursor& c, const Alphabet& al) {
  c.skip_ws();
  if (c.peek_raw() == '1' && !Cursor::ident_char(c.peek_at(1))) {
    c.seek(c.pos() + 1);
    return {};
  }
  size_t at = c.pos();
  std::string id = c.ident();
  try {
    return al.parse_word(id);
  } catch (const std::invalid_argument& e) {
    c.seek(at);
    c.fail(e.what());
  }
}

SymMonomial parse_necklaces(Cursor& c, const Alphabet& al) {
  std::vector<Necklace> out;
  while (c.peek() == '[') {
    c.accept('[');
    Word w;
    if (c.peek() != ']') w = parse_word_token(c, al);
    c.expect(']');
    out.emplace_back(w);
  }
  if (out.empty()) c.fail("expected a necklace '[...]'");
  return SymMonomial(std::move(out));
}

namespace {

template <class F>
auto run_whole(std::string_view text, F f) {
  Cursor c(text);
  auto r = f(c);
  if (!c.done()) c.fail("unexpected trailing input");
  return r;
}

}  // namespace
}  // namespace detail

using detail::Cursor;

Scalar parse_scalar(std::string_view text, const ParamNames* params) {
  return detail::run_whole(text, [&](Cursor& c) { return detail::parse_scalar_sum(c, params); });
}

NCPoly parse_poly(const AlphabetPtr& al, std::string_view text, const ParamNames* params) {
  return detail::run_whole(text, [&](Cursor& c) {
    auto body = [&](Cursor& cc) { return detail::parse_word_token(cc, *al); };
    return NCPoly(al, detail::parse_expr<Word>(c, params, body, true, Word{}));
  });
}

SymElem parse_sym(const Alphabet& al, std::string_view text, const ParamNames* params) {
  return detail::run_whole(text, [&](Cursor& c) {
    auto body = [&](Cursor& cc) { return detail::parse_necklaces(cc, al); };
    return detail::parse_expr<SymMonomial>(c, params, body, true, SymMonomial{});
  });
}

SweedlerElem parse_sweedler(const Alphabet& al, std::string_view text, const ParamNames* params) {
  return detail::run_whole(text, [&](Cursor& c) {
    auto body = [&](Cursor& cc) {
      SweedlerKey k;
      k.left = detail::parse_word_token(cc, al);
      cc.expect('#');
      k.right = detail::parse_word_token(cc, al);
      if (cc.accept('.')) k.sym = detail::parse_necklaces(cc, al);
      return k;
    };
    return detail::parse_expr<SweedlerKey>(c, params, body, false, SweedlerKey{});
  });
}

TripleElem parse_triple(const Alphabet& al, std::string_view text, const ParamNames* params) {
  return detail::run_whole(text, [&](Cursor& c) {
    auto body = [&](Cursor& cc) {
      TripleKey k;
      for (int i = 0; i < 3; ++i) {
        if (i) cc.expect('#');
        k.w[i] = detail::parse_word_token(cc, al);
      }
      if (cc.accept('.')) k.sym = detail::parse_necklaces(cc, al);
      return k;
    };
    return detail::parse_expr<TripleKey>(c, params, body, false, TripleKey{});
  });
}

Permutation parse_perm(std::string_view text, int size_hint) {
  Cursor c(text);
  c.accept("perm");
  if (c.peek() == '[') {
    c.accept('[');
    std::vector<int> img;
    if (c.peek() != ']') {
      do img.push_back(static_cast<int>(c.integer()));
      while (c.accept(','));
    }
    c.expect(']');
    if (!c.done()) c.fail("unexpected trailing input");
    try {
      return Permutation(img);
    } catch (const std::invalid_argument& e) {
      c.fail(e.what());
    }
  }
  int n = size_hint;
  if (n <= 0) n = 3;
  try {
    return Permutation::from_cycles(std::string(c.rest()), n);
  } catch (const std::exception& e) {
    c.fail(e.what());
  }
}

OElem parse_oelem(const Alphabet& al, std::string_view text, const ParamNames* params) {
  return detail::run_whole(text, [&](Cursor& c) {
    auto body = [&](Cursor& cc) {
      OKey k;
      if (cc.peek() == '[') {
        k.sym = detail::parse_necklaces(cc, al);
        return k;
      }
      do k.words.push_back(detail::parse_word_token(cc, al));
      while (cc.accept('#'));
      if (cc.accept('.')) k.sym = detail::parse_necklaces(cc, al);
      int n = static_cast<int>(k.words.size());
      if (cc.accept('@')) {
        cc.expect('[');
        std::vector<int> img;
        do img.push_back(static_cast<int>(cc.integer()));
        while (cc.accept(','));
        cc.expect(']');
        if (static_cast<int>(img.size()) != n) cc.fail("permutation size differs from the number of words");
        try {
          k.perm = Permutation(img);
        } catch (const std::invalid_argument& e) {
          cc.fail(e.what());
        }
      } else {
        k.perm = Permutation::identity(n);
      }
      return k;
    };
    return detail::parse_expr<OKey>(c, params, body, true, OKey{});
  });
}

}  // namespace ncp
