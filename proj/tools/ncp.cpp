// ncp: command-line verifier for coupled double Poisson brackets.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncp/problem.hpp"
#include "ncp/repn.hpp"
#include "ncp/wheeled.hpp"

using namespace ncp;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2, kUsage = 3, kError = 4 };

struct Check {
  std::string name;
  std::string status;  // pass | fail | info
  size_t residual_terms = 0;
  double elapsed_ms = 0;
  std::vector<std::string> detail;
};

struct Context {
  bool json = false;
  std::uint64_t seed = 1;
  int jobs = 0;
};

class Report {
 public:
  template <class F>
  void timed(const std::string& name, F f) {
    auto t0 = std::chrono::steady_clock::now();
    Check c = f();
    c.name = name;
    c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    checks_.push_back(std::move(c));
  }
  void add(Check c) { checks_.push_back(std::move(c)); }
  void output(const std::string& line) { output_.push_back(line); }
  void merge(Report&& o) {
    for (auto& c : o.checks_) checks_.push_back(std::move(c));
    for (auto& l : o.output_) output_.push_back(std::move(l));
  }
  void prefix(const std::string& p) {
    for (auto& c : checks_) c.name = p + ": " + c.name;
  }
  bool failed() const {
    return std::any_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == "fail"; });
  }

  void emit(const std::string& command, const Context& ctx, int code) {
    std::stable_sort(checks_.begin(), checks_.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
    if (ctx.json) {
      nlohmann::json j;
      j["command"] = command;
      j["exit_code"] = code;
      j["checks"] = nlohmann::json::array();
      for (auto& c : checks_) {
        double ms = std::round(c.elapsed_ms * 1000) / 1000;
        j["checks"].push_back({{"check", c.name}, {"status", c.status}, {"residual_terms", c.residual_terms}, {"elapsed_ms", ms}, {"seed", ctx.seed}});
      }
      j["output"] = output_;
      std::cout << j.dump(2) << "\n";
      return;
    }
    for (auto& l : output_) std::cout << l << "\n";
    for (auto& c : checks_) {
      std::string tag = c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "INFO";
      std::printf("%s %s residual_terms=%zu elapsed_ms=%.3f\n", tag.c_str(), c.name.c_str(), c.residual_terms, c.elapsed_ms);
      for (auto& d : c.detail) std::cout << "    " << d << "\n";
    }
  }

 private:
  std::vector<Check> checks_;
  std::vector<std::string> output_;
};

Check verdict(size_t terms, std::vector<std::string> detail = {}) {
  Check c;
  c.status = terms == 0 ? "pass" : "fail";
  c.residual_terms = terms;
  c.detail = std::move(detail);
  return c;
}

// Thrown for problems with the input (as opposed to failed verification).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CoupledPair load_pair(const ProblemFile& p) {
  if (!p.has_pair()) throw InputError("problem defines no bracket pair");
  try {
    return p.pair();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

const size_t kShow = 5;

void verify_coupled(const CoupledPair& pair, const Context& ctx, Report& rep) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = is_coupled(pair, ctx.jobs);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const auto& al = *pair.alphabet();
  for (int k = 1; k <= 3; ++k) {
    std::vector<std::string> detail;
    size_t terms = 0;
    std::string prefix = "k=" + std::to_string(k) + " ";
    for (auto& res : r.nonzero)
      if (res.label.rfind(prefix, 0) == 0) {
        terms += res.value.size();
        if (detail.size() < kShow) detail.push_back(res.label + ": " + render(al, res.value));
      }
    Check c = verdict(terms, detail);
    c.name = "coupled.identity" + std::to_string(k);
    c.elapsed_ms = ms / 3;
    rep.add(c);
  }
}

void ybe_checks(const std::optional<RMatrix>& R, const std::optional<RMatrix>& r, const Context& ctx, Report& rep,
                const CatalogEntry* entry = nullptr) {
  if (R) rep.timed("ybe.aybe", [&] { return verdict(aybe_residual(*R).size(), {}); });
  if (r) rep.timed("ybe.cybe", [&] { return verdict(cybe_residual(*r).size(), {}); });
  if (!(R && r)) return;
  rep.timed("ybe.skew_R", [&] { return verdict((*R + flip(*R)).terms.size()); });
  rep.timed("ybe.skew_r", [&] { return verdict((*r + flip(*r)).terms.size()); });
  rep.timed("ybe.compat", [&] { return verdict(compat_residual(*R, *r).size()); });
  if (!is_skew(*R) || !is_skew(*r)) return;
  auto pair = spec_from_r(*R, *r);
  verify_coupled(pair, ctx, rep);
  rep.timed("ybe.triple_identities", [&] {
    auto id = prop5_identities(*R, *r);
    std::vector<std::string> d(id.failures.begin(), id.failures.begin() + std::min(kShow, id.failures.size()));
    return verdict(id.failures.size(), d);
  });
  if (entry && !entry->displayed.empty()) {
    rep.timed("ybe.displayed_tables", [&] {
      auto shown = displayed_pair(*entry);
      size_t bad = 0;
      std::vector<std::string> d;
      const auto& al = *pair.alphabet();
      int m = static_cast<int>(al.size());
      for (Part part : {Part::id, Part::twelve})
        for (int i = 1; i <= m; ++i)
          for (int j = i; j <= m; ++j) {
            auto got = render(al, pair.part(part).table(i, j)), want = render(al, shown.part(part).table(i, j));
            if (got != want) {
              ++bad;
              if (d.size() < kShow) d.push_back(to_string(part) + " {" + al.name(i) + "," + al.name(j) + "}: " + got + " vs " + want);
            }
          }
      return verdict(bad, d);
    });
  }
}

Report cmd_ybe_check(const std::string& name, const std::map<std::string, Scalar>& values, const Context& ctx) {
  CatalogEntry e;
  try {
    e = catalog(name, values);
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
  Report rep;
  ybe_checks(e.R, e.r, ctx, rep, &e);
  if (name == "family" || name.rfind("family.", 0) == 0) {
    int n = e.dim;
    std::vector<Rational> lambda;
    for (int i = 1; i <= n; ++i) {
      auto it = values.find("lambda" + std::to_string(i));
      lambda.push_back(it == values.end() ? Rational(i) : it->second.constant_value());
    }
    auto f = family(lambda);
    rep.timed("family.row_sums", [&] {
      size_t bad = 0;
      for (auto& row : f.b) {
        Rational s = 0;
        for (auto& v : row) s += v;
        bad += s != 0;
      }
      return verdict(bad);
    });
    rep.timed("family.commutes_with_X", [&] {
      Op3 x = one_leg(n, f.X, 1) + one_leg(n, f.X, 2);
      return verdict(commutator(embed(f.R, 1, 2), x).size());
    });
  }
  return rep;
}

Report cmd_verify_coupled(const ProblemFile& p, const Context& ctx) {
  Report rep;
  verify_coupled(load_pair(p), ctx, rep);
  return rep;
}

Report cmd_jacobiator(const ProblemFile& p, const std::string& tau_text, const std::vector<std::string>& abc, const Context&) {
  auto pair = load_pair(p);
  auto al = pair.alphabet();
  ParamNames names;
  for (auto& [n, v] : p.params) names.insert(n);
  if (abc.size() != 3) throw InputError("jacobiator needs three elements a b c");
  Permutation tau;
  try {
    tau = parse_perm(tau_text, 3);
  } catch (const ParseError& e) {
    throw InputError(std::string("--tau: ") + e.what());
  }
  if (tau.size() != 3) throw InputError("--tau must be a permutation of 3 points");
  std::vector<NCPoly> v;
  for (auto& t : abc) try {
      v.push_back(parse_poly(al, t, &names));
    } catch (const ParseError& e) {
      throw InputError("argument '" + t + "': " + e.what());
    }
  Report rep;
  rep.timed("jacobiator " + tau.to_string(), [&] {
    auto j = jac_tau(pair, tau, v[0], v[1], v[2]);
    rep.output(j.is_zero() ? "0" : render(*al, j));
    return verdict(j.size());
  });
  return rep;
}

Report cmd_wheeled(const ProblemFile& p, const std::string& a, const std::string& b, const Context&) {
  auto pair = load_pair(p);
  auto al = pair.alphabet();
  ParamNames names;
  for (auto& [n, v] : p.params) names.insert(n);
  auto arg = [&](const std::string& t) {
    try {
      return parse_oelem(*al, t, &names);
    } catch (const ParseError& e) {
      throw InputError("argument '" + t + "': " + e.what());
    }
  };
  OElem x = arg(a), y = arg(b);
  for (auto* e : {&x, &y}) try {
      o_degree(*e);
    } catch (const std::exception& ex) {
      throw InputError(std::string("element is not homogeneous: ") + ex.what());
    }
  Report rep;
  rep.timed("wheeled-bracket", [&] {
    auto r = dt_bracket(pair, x, y);
    rep.output(r.is_zero() ? "0" : render(*al, r));
    Check c;
    c.status = "info";
    c.residual_terms = r.size();
    return c;
  });
  return rep;
}

Report cmd_rep_check(const ProblemFile& p, int n, int deg, size_t samples, const Context& ctx) {
  auto pair = load_pair(p);
  if (n < 1 || n > 16) throw InputError("--n must be in 1..16");
  Report rep;
  rep.timed("rep.jacobi N=" + std::to_string(n), [&] {
    auto r = jacobi_oracle(pair, n, deg, samples, ctx.seed, ctx.jobs);
    std::vector<std::string> d{"checked " + std::to_string(r.checked) + ", nonzero " + std::to_string(r.nonzero)};
    if (!r.ok()) d.push_back("worst " + r.worst + " with " + std::to_string(r.worst_terms) + " terms");
    return verdict(r.total_terms, d);
  });
  return rep;
}

Report cmd_ybe_residual(const ProblemFile& p, const Context& ctx) {
  if (!p.R && !p.r) throw InputError("problem has no rmatrix");
  Report rep;
  ybe_checks(p.R_value(), p.r_value(), ctx, rep);
  return rep;
}

Report cmd_prelie(const ProblemFile& p, const Context& ctx) {
  if (!p.pplie) throw InputError("problem has no pplie block");
  BilinearStruct s = *p.pplie;
  auto vals = p.param_values();
  for (auto* t : {&s.mu_table, &s.br_table})
    for (auto& v : *t) {
      std::vector<std::pair<int, Scalar>> terms;
      for (auto& [k, c] : v) terms.emplace_back(k, c.substitute(vals));
      v = Vec::from_terms(terms);
    }
  auto al = p.generators.empty() ? nullptr : p.alphabet();
  if (al && static_cast<int>(al->size()) != s.dim) throw InputError("generator count differs from pplie dim");
  Report rep;
  auto t0 = std::chrono::steady_clock::now();
  auto r = pplie_residuals(s);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  for (std::string kind : {"assoc", "prelie", "symmetric {ab,c}", "derivation {a,bc}"}) {
    std::vector<std::string> d;
    size_t n = 0;
    for (auto& f : r.failures)
      if (f.rfind(kind + " ", 0) == 0) {
        ++n;
        if (d.size() < kShow) d.push_back(f);
      }
    std::string name = kind.substr(0, kind.find(' '));
    Check c = verdict(n, d);
    c.name = "pplie." + name;
    c.elapsed_ms = ms / 4;
    rep.add(c);
  }
  rep.timed("pplie.linear_pair_coupled", [&] {
    auto c = is_coupled(linear_pair(s, al), ctx.jobs);
    size_t terms = 0;
    for (auto& x : c.nonzero) terms += x.value.size();
    Check ch = verdict(terms);
    // pass/fail must match the axioms; a mismatch is a failure of its own
    if ((terms == 0) != r.ok()) ch.detail.push_back("disagrees with the axiom check");
    return ch;
  });
  return rep;
}

Report cmd_roundtrip(const ProblemFile& p) {
  Report rep;
  rep.timed("roundtrip", [&] {
    auto text = render(p);
    rep.output(text);
    ProblemFile q = parse_problem(text);
    return verdict(q == p ? 0 : 1);
  });
  return rep;
}

std::map<std::string, Scalar> parse_values(const std::vector<std::string>& kv) {
  std::map<std::string, Scalar> out;
  for (auto& s : kv) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects k=v, got '" + s + "'");
    out[s.substr(0, eq)] = parse_scalar(s.substr(eq + 1));
  }
  return out;
}

int default_jobs() {
  if (const char* e = std::getenv("NCP_JOBS")) {
    try {
      return std::max(0, std::stoi(e));
    } catch (...) {
    }
  }
  return 0;
}

struct Invocation {
  std::string file;
  std::string tau;
  std::vector<std::string> elems;
  int n = 2, deg = 2;
  size_t samples = 20;
  std::string catalog_name;
  std::vector<std::string> params;
};

int dispatch(const std::vector<std::string>& args, Context ctx, bool top_level, Report* merged);

// Inserts the problem file into a run directive after its command words.
std::vector<std::string> directive_args(const std::vector<std::string>& toks, const std::string& file) {
  std::vector<std::string> a = toks;
  size_t words = 1;
  if (!a.empty() && (a[0] == "ybe" || a[0] == "prelie")) words = 2;
  bool takes_file = !(a.size() >= 2 && a[0] == "ybe" && a[1] == "check") && a[0] != "catalog" && a[0] != "run";
  if (takes_file) a.insert(a.begin() + std::min(words, a.size()), file);
  return a;
}

int dispatch(const std::vector<std::string>& args, Context ctx, bool top_level, Report* merged) {
  CLI::App app{"Verifier for coupled double Poisson brackets", "ncp"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
  app.add_flag("--json", ctx.json, "Emit a JSON report");
  app.add_option("--seed", seed, "Seed for sampled checks (default 1)");
  app.add_option("--jobs", jobs, "Worker threads (0 = hardware; env NCP_JOBS)");

  Invocation inv;
  auto* vc = app.add_subcommand("verify-coupled", "Check the three coupling identities");
  vc->add_option("FILE", inv.file)->required();
  auto* jac = app.add_subcommand("jacobiator", "Evaluate Jac^tau(a,b,c)");
  jac->add_option("FILE", inv.file)->required();
  jac->add_option("--tau", inv.tau, "Permutation of 3 points, e.g. [2,1,3] or (12)")->required();
  jac->add_option("ELEMS", inv.elems, "Three polynomials a b c")->required()->expected(3);
  auto* wb = app.add_subcommand("wheeled-bracket", "Evaluate the induced bracket on O(A)");
  wb->add_option("FILE", inv.file)->required();
  wb->add_option("ELEMS", inv.elems, "Two elements of O(A)")->required()->expected(2);
  auto* rc = app.add_subcommand("rep-check", "Jacobi identity of the induced bracket on Rep_N");
  rc->add_option("FILE", inv.file)->required();
  rc->add_option("--n", inv.n, "Matrix size N")->required();
  rc->add_option("--deg", inv.deg, "Maximal degree of sampled products (default 2)");
  rc->add_option("--samples", inv.samples, "Sampled product triples (default 20)");
  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter checks");
  ybe->require_subcommand(1);
  auto* yc = ybe->add_subcommand("check", "Check a catalog entry");
  yc->add_option("--catalog", inv.catalog_name, "Catalog name")->required();
  yc->add_option("--param", inv.params, "Parameter value k=v (repeatable)");
  auto* yr = ybe->add_subcommand("residual", "Residuals of the rmatrix declarations of a file");
  yr->add_option("FILE", inv.file)->required();
  auto* pl = app.add_subcommand("prelie", "Linear structures");
  pl->require_subcommand(1);
  auto* pv = pl->add_subcommand("verify", "Check a pplie block");
  pv->add_option("FILE", inv.file)->required();
  auto* rt = app.add_subcommand("roundtrip", "Render and re-parse a problem file");
  rt->add_option("FILE", inv.file);
  rt->add_option("--catalog", inv.catalog_name, "Use a catalog entry instead of a file");
  auto* run = app.add_subcommand("run", "Execute the run directives of a file");
  run->add_option("FILE", inv.file)->required();
  auto* cat = app.add_subcommand("catalog", "List catalog names, or print one entry as a problem file");
  cat->add_option("NAME", inv.catalog_name);
  cat->add_option("--param", inv.params, "Parameter value k=v (repeatable)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  if (seed) ctx.seed = *seed;
  if (jobs) ctx.jobs = *jobs;

  std::string command;
  for (auto* s = app.get_subcommands().front(); s; s = s->get_subcommands().empty() ? nullptr : s->get_subcommands().front())
    command += (command.empty() ? "" : " ") + s->get_name();

  Report rep;
  int code = kPass;
  try {
    auto load = [&] {
      std::ifstream in(inv.file);
      if (!in) throw InputError("cannot open " + inv.file);
      return read_problem_file(inv.file);
    };
    if (vc->parsed()) {
      rep = cmd_verify_coupled(load(), ctx);
    } else if (jac->parsed()) {
      rep = cmd_jacobiator(load(), inv.tau, inv.elems, ctx);
    } else if (wb->parsed()) {
      rep = cmd_wheeled(load(), inv.elems[0], inv.elems[1], ctx);
    } else if (rc->parsed()) {
      rep = cmd_rep_check(load(), inv.n, inv.deg, inv.samples, ctx);
    } else if (yc->parsed()) {
      rep = cmd_ybe_check(inv.catalog_name, parse_values(inv.params), ctx);
    } else if (yr->parsed()) {
      rep = cmd_ybe_residual(load(), ctx);
    } else if (pv->parsed()) {
      rep = cmd_prelie(load(), ctx);
    } else if (rt->parsed()) {
      if (inv.file.empty() == inv.catalog_name.empty()) throw InputError("roundtrip needs exactly one of FILE or --catalog");
      if (!inv.file.empty()) {
        rep = cmd_roundtrip(load());
      } else {
        try {
          rep = cmd_roundtrip(problem_from_catalog(catalog(inv.catalog_name)));
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
      }
    } else if (run->parsed()) {
      auto p = load();
      if (p.runs.empty()) throw InputError("no run directives in " + inv.file);
      for (auto& toks : p.runs) {
        if (toks[0] == "run") throw InputError("run directives cannot nest");
        Report sub;
        int c = dispatch(directive_args(toks, inv.file), ctx, false, &sub);
        if (c != kPass && c != kFail) return c;
        std::string label;
        for (auto& t : toks) label += (label.empty() ? "" : " ") + t;
        sub.prefix(label);
        rep.merge(std::move(sub));
      }
    } else if (cat->parsed()) {
      if (inv.catalog_name.empty()) {
        for (auto& n : catalog_names()) rep.output(n);
      } else {
        try {
          auto e = catalog(inv.catalog_name, parse_values(inv.params));
          auto text = render(problem_from_catalog(e));
          text.pop_back();
          rep.output(text);
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
      }
    }
    code = rep.failed() ? kFail : kPass;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << (inv.file.empty() ? "" : inv.file + ": ") << e.what() << "\n";
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  if (top_level)
    rep.emit(command, ctx, code);
  else
    merged->merge(std::move(rep));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Context ctx;
  ctx.jobs = default_jobs();
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, ctx, true, nullptr);
}
