#include "ncp/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cursor.hpp"

namespace ncp {

using detail::Cursor;

namespace {

template <class Key>
Linear<Key> subst(const Linear<Key>& v, const std::map<std::string, Scalar>& values) {
  if (values.empty()) return v;
  std::vector<std::pair<Key, Scalar>> t;
  for (auto& [k, c] : v) t.emplace_back(k, c.substitute(values));
  return Linear<Key>::from_terms(std::move(t));
}

// Splits off the rest of the current line as its own cursor (positions
// stay file-relative).
Cursor take_line(Cursor& c) {
  size_t b = c.pos();
  auto text = c.text();
  size_t e = text.find('\n', b);
  if (e == std::string_view::npos) e = text.size();
  int line = 1, col = 1;
  for (size_t i = 0; i < b; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  c.seek(e);
  return Cursor(text.substr(b, e - b), line, col);
}

std::string raw_token(Cursor& c) {
  c.skip_ws();
  std::string t;
  while (c.peek_raw() != '\0' && !std::isspace(static_cast<unsigned char>(c.peek_raw())) &&
         !(c.peek_raw() == '/' && c.peek_at(1) == '/')) {
    t += c.peek_raw();
    c.seek(c.pos() + 1);
  }
  return t;
}

bool keyword(Cursor& c, std::string_view w) {
  c.skip_ws();
  size_t p = c.pos();
  if (!c.accept(w)) return false;
  if (Cursor::ident_char(c.peek_raw())) {
    c.seek(p);
    return false;
  }
  return true;
}

int small_digit(Cursor& c, int dim) {
  char ch = c.peek_raw();
  if (ch < '1' || ch > '9' || ch - '0' > dim) c.fail("matrix index out of range 1.." + std::to_string(dim));
  c.seek(c.pos() + 1);
  return ch - '0';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : c_(text) {}

  ProblemFile run() {
    while (!c_.done()) {
      if (keyword(c_, "generators")) {
        generators();
      } else if (keyword(c_, "params")) {
        params();
      } else if (keyword(c_, "bracket")) {
        bracket();
      } else if (keyword(c_, "rmatrix")) {
        rmatrix();
      } else if (keyword(c_, "catalog")) {
        catalog();
      } else if (keyword(c_, "pplie")) {
        pplie();
      } else if (keyword(c_, "run")) {
        run_line();
      } else {
        c_.fail("expected generators:, params:, bracket, rmatrix, catalog, pplie or run");
      }
    }
    return std::move(p_);
  }

 private:
  void generators() {
    c_.expect(':');
    if (al_) c_.fail("generators declared twice");
    std::vector<std::string> names;
    Cursor l = take_line(c_);
    while (!l.done()) {
      l.skip_ws();
      size_t at = l.pos();
      auto n = l.ident();
      for (auto& o : names)
        if (o == n) {
          l.seek(at);
          l.fail("duplicate generator '" + n + "'");
        }
      names.push_back(n);
    }
    if (names.empty()) l.fail("expected generator names");
    p_.generators = names;
    al_ = Alphabet::make(names);
  }

  void params() {
    c_.expect(':');
    Cursor l = take_line(c_);
    while (!l.done()) {
      l.skip_ws();
      size_t at = l.pos();
      auto n = l.ident();
      if (names_.count(n)) {
        l.seek(at);
        l.fail("duplicate parameter '" + n + "'");
      }
      std::optional<Scalar> v;
      if (l.accept('=')) v = detail::parse_scalar_sum(l, &names_);
      names_.insert(n);
      p_.params.emplace_back(n, v);
    }
  }

  const Alphabet& need_alphabet() {
    if (!al_) c_.fail("generators must be declared first");
    return *al_;
  }

  int generator(const Alphabet& al) {
    size_t at = c_.pos();
    auto n = c_.ident();
    int g = al.index(n);
    if (!g) {
      c_.seek(at);
      c_.skip_ws();
      c_.fail("undeclared generator '" + n + "'");
    }
    return g;
  }

  void bracket() {
    const Alphabet& al = need_alphabet();
    Part part;
    if (keyword(c_, "id"))
      part = Part::id;
    else if (keyword(c_, "twelve"))
      part = Part::twelve;
    else
      c_.fail("expected 'id' or 'twelve'");
    if (p_.brackets.count(part)) c_.fail("bracket block declared twice");
    auto& table = p_.brackets[part];
    c_.expect('{');
    while (!c_.accept('}')) {
      if (c_.done()) c_.fail("expected '}'");
      c_.skip_ws();
      size_t at = c_.pos();
      c_.expect('{');
      int i = generator(al);
      c_.expect(',');
      int j = generator(al);
      c_.expect('}');
      c_.expect('=');
      auto body = [&](Cursor& cc) {
        SweedlerKey k;
        k.left = detail::parse_word_token(cc, al);
        cc.expect('#');
        k.right = detail::parse_word_token(cc, al);
        if (cc.accept('.')) k.sym = detail::parse_necklaces(cc, al);
        return k;
      };
      SweedlerElem v = detail::parse_expr<SweedlerKey>(c_, &names_, body, false, SweedlerKey{});
      std::string where = "{" + al.name(i) + "," + al.name(j) + "}";
      if (i > j) {
        std::swap(i, j);
        v = -flip12(v);
      }
      if (i == j && !(v == -flip12(v))) {
        c_.seek(at);
        c_.fail("non-skew table entry " + where);
      }
      auto [it, fresh] = table.emplace(std::pair{i, j}, v);
      if (!fresh && !(it->second == v)) {
        c_.seek(at);
        c_.fail("contradictory duplicate entry " + where);
      }
    }
  }

  void rmatrix() {
    bool big;
    if (keyword(c_, "R"))
      big = true;
    else if (keyword(c_, "r"))
      big = false;
    else
      c_.fail("expected 'R' or 'r'");
    if (big ? p_.R.has_value() : p_.r.has_value()) c_.fail("rmatrix declared twice");
    if (!keyword(c_, "dim")) c_.fail("expected 'dim'");
    long m = c_.integer();
    if (m < 1 || m > 9) c_.fail("rmatrix dim must be in 1..9");
    c_.expect('=');
    int dim = static_cast<int>(m);
    auto body = [&](Cursor& cc) {
      RKey k{};
      for (int leg = 0; leg < 2; ++leg) {
        if (leg) cc.expect('@');
        cc.skip_ws();
        if (cc.peek_raw() != 'E') cc.fail("expected a matrix unit Eab");
        cc.seek(cc.pos() + 1);
        k[2 * leg] = static_cast<std::uint8_t>(small_digit(cc, dim));
        k[2 * leg + 1] = static_cast<std::uint8_t>(small_digit(cc, dim));
      }
      return k;
    };
    bool zero = keyword(c_, "0");
    RMatrix v(dim, zero ? Linear<RKey>{} : detail::parse_expr<RKey>(c_, &names_, body, false, RKey{}));
    (big ? p_.R : p_.r) = v;
  }

  void catalog() {
    if (p_.catalog) c_.fail("catalog declared twice");
    Cursor l = take_line(c_);
    auto name = raw_token(l);
    if (name.empty()) l.fail("expected a catalog name");
    p_.catalog = name;
    while (!l.done()) {
      auto k = l.ident();
      l.expect('=');
      p_.catalog_values[k] = detail::parse_scalar_sum(l, &names_);
    }
  }

  void pplie() {
    if (p_.pplie) c_.fail("pplie declared twice");
    c_.expect('{');
    if (!keyword(c_, "dim")) c_.fail("expected 'dim'");
    long m = c_.integer();
    if (m < 1 || m > 64) c_.fail("pplie dim must be in 1..64");
    int dim = static_cast<int>(m);
    BilinearStruct s(dim);
    std::set<std::pair<int, std::pair<int, int>>> seen;
    auto index = [&](Cursor& cc) {
      long v = cc.integer();
      if (v < 1 || v > dim) cc.fail("basis index out of range 1.." + std::to_string(dim));
      return static_cast<int>(v);
    };
    auto body = [&](Cursor& cc) {
      cc.skip_ws();
      if (cc.peek_raw() != 'e') cc.fail("expected a basis vector e<k>");
      cc.seek(cc.pos() + 1);
      return index(cc);
    };
    while (true) {
      c_.accept(';');
      if (c_.accept('}')) break;
      if (c_.done()) c_.fail("expected '}'");
      size_t at = c_.pos();
      int op;
      if (keyword(c_, "mu"))
        op = 0;
      else if (keyword(c_, "br"))
        op = 1;
      else
        c_.fail("expected mu(i,j) or br(i,j)");
      c_.expect('(');
      int i = index(c_);
      c_.expect(',');
      int j = index(c_);
      c_.expect(')');
      c_.expect('=');
      Vec v = keyword(c_, "0") ? Vec{} : detail::parse_expr<int>(c_, &names_, body, false, 0);
      if (!seen.insert({op, {i, j}}).second) {
        c_.seek(at);
        c_.skip_ws();
        c_.fail("duplicate structure constant");
      }
      (op == 0 ? s.mu_at(i, j) : s.br_at(i, j)) = v;
    }
    p_.pplie = s;
  }

  void run_line() {
    std::vector<std::string> toks;
    Cursor l = take_line(c_);
    while (!l.done()) toks.push_back(raw_token(l));
    if (toks.empty()) l.fail("expected a command after 'run'");
    p_.runs.push_back(toks);
  }

  Cursor c_;
  ProblemFile p_;
  AlphabetPtr al_;
  ParamNames names_;
};

std::string render_vec(const Vec& v) {
  std::vector<std::pair<std::string, Scalar>> t;
  for (auto& [k, c] : v) t.emplace_back("e" + std::to_string(k), c);
  return render_terms(t);
}

}  // namespace

AlphabetPtr ProblemFile::alphabet() const {
  if (generators.empty()) return nullptr;
  return Alphabet::make(generators);
}

std::map<std::string, Scalar> ProblemFile::param_values() const {
  std::map<std::string, Scalar> out;
  for (auto& [n, v] : params)
    if (v) out[n] = v->substitute(out);
  return out;
}

std::optional<RMatrix> ProblemFile::R_value() const {
  if (!R) return std::nullopt;
  return substitute(*R, param_values());
}

std::optional<RMatrix> ProblemFile::r_value() const {
  if (!r) return std::nullopt;
  return substitute(*r, param_values());
}

bool ProblemFile::has_pair() const {
  return !brackets.empty() || catalog || (R && r) || pplie;
}

CoupledPair ProblemFile::pair() const {
  auto vals = param_values();
  if (!brackets.empty()) {
    auto al = alphabet();
    auto make = [&](Part p, BracketKind kind) {
      std::map<std::pair<int, int>, SweedlerElem> e;
      auto it = brackets.find(p);
      if (it != brackets.end())
        for (auto& [ij, v] : it->second) e[ij] = subst(v, vals);
      return BracketSpec::from_upper(kind, al, e);
    };
    return CoupledPair(make(Part::id, BracketKind::RightDouble), make(Part::twelve, BracketKind::Double));
  }
  if (catalog) {
    auto cv = vals;
    for (auto& [k, v] : catalog_values) cv[k] = v.substitute(vals);
    auto e = ncp::catalog(*catalog, cv);
    if (!e.is_pair()) throw std::invalid_argument("catalog entry '" + *catalog + "' is not a coupled pair");
    return spec_from_r(substitute(*e.R, cv), substitute(*e.r, cv), generators.empty() ? nullptr : alphabet());
  }
  if (R && r) return spec_from_r(*R_value(), *r_value(), generators.empty() ? nullptr : alphabet());
  if (pplie) {
    BilinearStruct s = *pplie;
    for (auto* t : {&s.mu_table, &s.br_table})
      for (auto& v : *t) v = subst(v, vals);
    return linear_pair(s, generators.empty() ? nullptr : alphabet());
  }
  throw std::invalid_argument("problem defines no bracket pair");
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  auto same_params = [&] {
    if (a.params.size() != b.params.size()) return false;
    for (size_t i = 0; i < a.params.size(); ++i) {
      if (a.params[i].first != b.params[i].first || a.params[i].second.has_value() != b.params[i].second.has_value()) return false;
      if (a.params[i].second && !(*a.params[i].second == *b.params[i].second)) return false;
    }
    return true;
  };
  auto same_values = [&] {
    if (a.catalog_values.size() != b.catalog_values.size()) return false;
    for (auto& [k, v] : a.catalog_values) {
      auto it = b.catalog_values.find(k);
      if (it == b.catalog_values.end() || !(it->second == v)) return false;
    }
    return true;
  };
  return a.generators == b.generators && same_params() && a.brackets == b.brackets && a.R == b.R && a.r == b.r &&
         a.catalog == b.catalog && same_values() && a.pplie == b.pplie && a.runs == b.runs;
}

ProblemFile parse_problem(std::string_view text) { return Parser(text).run(); }

std::string render(const ProblemFile& p) {
  std::ostringstream o;
  if (!p.generators.empty()) {
    o << "generators:";
    for (auto& g : p.generators) o << ' ' << g;
    o << '\n';
  }
  if (!p.params.empty()) {
    o << "params:";
    for (auto& [n, v] : p.params) {
      o << ' ' << n;
      if (v) o << '=' << v->to_string();
    }
    o << '\n';
  }
  if (p.catalog) {
    o << "catalog " << *p.catalog;
    for (auto& [k, v] : p.catalog_values) o << ' ' << k << '=' << v.to_string();
    o << '\n';
  }
  for (auto [name, m] : {std::pair{"R", &p.R}, std::pair{"r", &p.r}})
    if (*m) o << "rmatrix " << name << " dim " << (*m)->dim << " = " << ((*m)->is_zero() ? "0" : render(**m)) << '\n';
  if (!p.brackets.empty()) {
    auto al = p.alphabet();
    for (auto& [part, table] : p.brackets) {
      o << "bracket " << (part == Part::id ? "id" : "twelve") << " {\n";
      for (auto& [ij, v] : table)
        if (!v.is_zero()) o << "  {" << al->name(ij.first) << ',' << al->name(ij.second) << "} = " << render(*al, v) << '\n';
      o << "}\n";
    }
  }
  if (p.pplie) {
    const auto& s = *p.pplie;
    o << "pplie {\n  dim " << s.dim << ";\n";
    for (auto [name, op] : {std::pair{"mu", Op::mu}, std::pair{"br", Op::br}})
      for (int i = 1; i <= s.dim; ++i)
        for (int j = 1; j <= s.dim; ++j) {
          const Vec& v = op == Op::mu ? s.mu_at(i, j) : s.br_at(i, j);
          if (!v.is_zero()) o << "  " << name << '(' << i << ',' << j << ") = " << render_vec(v) << ";\n";
        }
    o << "}\n";
  }
  for (auto& r : p.runs) {
    o << "run";
    for (auto& t : r) o << ' ' << t;
    o << '\n';
  }
  return o.str();
}

ProblemFile read_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

ProblemFile problem_from_catalog(const CatalogEntry& e) {
  ProblemFile p;
  p.generators = standard_alphabet(e.dim)->names();
  for (auto& n : e.params) p.params.emplace_back(n, std::nullopt);
  p.R = e.R;
  p.r = e.r;
  if (e.is_pair()) {
    auto al = Alphabet::make(p.generators);
    p.brackets[Part::id];
    p.brackets[Part::twelve];
    for (auto& d : e.displayed) {
      auto v = parse_sweedler(*al, d.text);
      if (!v.is_zero()) p.brackets[d.part][{d.i, d.j}] += v;
    }
  }
  return p;
}

}  // namespace ncp
