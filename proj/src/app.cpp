#include "ffgamma/app.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "ffgamma/acceptance.hpp"
#include "ffgamma/brackets.hpp"
#include "ffgamma/carlitz.hpp"
#include "ffgamma/coleman.hpp"
#include "ffgamma/distribution.hpp"
#include "ffgamma/errors.hpp"
#include "ffgamma/gammaeval.hpp"
#include "ffgamma/motive.hpp"
#include "ffgamma/parse.hpp"

namespace ffgamma {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

template <class T>
T parse_number(const std::string& key, const std::string& v) {
  T out{};
  std::istringstream in(v);
  in >> out;
  if (in.fail() || !in.eof()) throw UsageError("bad value '" + v + "' for " + key);
  return out;
}

}  // namespace

void Config::validate() const {
  if (q > GaloisField::kMaxOrder || !GaloisField::is_prime_power(q))
    throw UsageError("q must be a prime power at most 512");
  if (effective_prec() < 16) throw UsageError("prec must be at least 16");
  if (trunc_t <= 0 || deg_f_cap <= 0 || ell_cap <= 0 || tol < 0) throw UsageError("caps must be positive");
  if (static_cast<std::size_t>(ell_cap) > kMaxEll)
    throw UsageError("ell_cap must be at most " + std::to_string(kMaxEll));
}

void Config::apply_text(std::string_view text, const std::set<std::string>& keep) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '-', '_');
    const std::string v = trim(line.substr(eq + 1));
    if (keep.count(key)) continue;
    if (key == "q")
      q = parse_number<unsigned>(key, v);
    else if (key == "prec")
      prec = parse_number<long>(key, v);
    else if (key == "trunc_t")
      trunc_t = parse_number<int>(key, v);
    else if (key == "deg_f_cap")
      deg_f_cap = parse_number<int>(key, v);
    else if (key == "ell_cap")
      ell_cap = parse_number<int>(key, v);
    else if (key == "seed")
      seed = parse_number<std::uint64_t>(key, v);
    else if (key == "tol")
      tol = parse_number<long>(key, v);
    else
      throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

void Config::apply_file(const std::string& path, const std::set<std::string>& keep) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  apply_text(ss.str(), keep);
}

json laurent_to_json(const LaurentNum& x) {
  return json{{"q", x.q()}, {"val", x.val()}, {"prec", x.prec()}, {"coeffs", x.coeffs()}};
}

LaurentNum laurent_from_json(const json& j) {
  try {
    const GaloisField& f = GaloisField::get(j.at("q").get<unsigned>());
    const long val = j.at("val").get<long>(), prec = j.at("prec").get<long>();
    std::vector<GaloisField::Raw> c;
    for (const json& v : j.at("coeffs")) {
      const auto r = v.get<long long>();
      if (r < 0 || r >= static_cast<long long>(f.q())) throw UsageError("coefficient out of range");
      c.push_back(static_cast<GaloisField::Raw>(r));
    }
    if (val > prec) throw UsageError("val exceeds prec");
    return LaurentNum(f, val, prec, std::move(c));
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed LaurentNum: ") + e.what());
  }
}

CycleElement parse_cycle(std::string_view text, const Poly& f) {
  const GaloisField& F = f.field();
  if (text.find('[') == std::string_view::npos) return CycleElement::symbol(f, parse_elem(text, F));
  CycleElement c(f);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  skip();
  while (i < text.size()) {
    long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", i);
    }
    long k = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      k = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) k = 10 * k + (text[i++] - '0');
      skip();
      if (i >= text.size() || text[i] != '*') throw ParseError("expected '*'", i);
      ++i;
      skip();
    }
    if (i >= text.size() || text[i] != '[') throw ParseError("expected '['", i);
    const std::size_t close = text.find(']', i);
    if (close == std::string_view::npos) throw ParseError("unclosed '['", i);
    RationalK x(F);
    try {
      x = parse_elem(text.substr(i + 1, close - i - 1), F);
    } catch (const ParseError& e) {
      throw ParseError("bad element", i + 1 + e.position());
    }
    c.add(x, sign * k);
    i = close + 1;
    first = false;
    skip();
  }
  if (first) throw ParseError("empty cycle", 0);
  return c;
}

namespace {

struct Ctx {
  Config cfg;
  const GaloisField* F = nullptr;
  long prec = 0;
  std::string f, x, a;
  int N = -1;
  std::vector<std::string> args;
  std::ostream* out = nullptr;
  std::string op;
  int records = 0;
  bool failed = false;

  const GaloisField& field() const { return *F; }

  Poly level() const {
    if (f.empty()) throw UsageError(op + " needs --f");
    return checked(parse_poly(f, *F));
  }
  Poly checked(const Poly& g) const {
    if (!g.is_monic() || g.degree() < 1) throw DomainError("f must be monic of positive degree");
    if (g.degree() > cfg.deg_f_cap)
      throw DomainError("deg f = " + std::to_string(g.degree()) + " exceeds deg_f_cap " +
                        std::to_string(cfg.deg_f_cap));
    return g;
  }
  RationalK elem() const {
    if (!x.empty()) return parse_elem(x, *F);
    if (args.size() == 1) return parse_elem(args[0], *F);
    throw UsageError(op + " needs --x or one element argument");
  }
  /// Level from --f, or the denominator of x.
  Poly level_or_den(const RationalK& v) const { return f.empty() ? checked(v.den()) : level(); }
  int sweep(int dflt) const { return N >= 0 ? N : dflt; }

  void emit(json inputs, const char* key, json value) {
    json rec;
    rec["op"] = op;
    rec["inputs"] = std::move(inputs);
    rec[key] = std::move(value);
    rec["q"] = F->q();
    rec["prec"] = prec;
    *out << rec.dump() << '\n';
    ++records;
  }
  /// A verification record: residual plus pass flag against tol.
  void verdict(json inputs, long residual) {
    const bool pass = residual >= cfg.effective_tol();
    inputs["tol"] = cfg.effective_tol();
    json rec;
    rec["op"] = op;
    rec["inputs"] = std::move(inputs);
    rec["residual"] = residual;
    rec["pass"] = pass;
    rec["q"] = F->q();
    rec["prec"] = prec;
    *out << rec.dump() << '\n';
    ++records;
    failed = failed || !pass;
  }
};

json poly_list(const std::vector<Poly>& ps, char var) {
  json a = json::array();
  for (const Poly& p : ps) a.push_back(p.to_string(var));
  return a;
}

void v_period(Ctx& c) { c.emit(json::object(), "result", laurent_to_json(period(c.field(), c.prec))); }

void v_omega_at(Ctx& c) {
  const RationalK t0 = c.x.empty() && c.args.empty() ? RationalK(Poly::variable(c.field())) : c.elem();
  const long loss = static_cast<long>(c.field().q() - 1) * std::max(0, t0.degree()) * c.cfg.trunc_t;
  const LaurentNum v =
      ts_eval(omega(c.field(), c.cfg.trunc_t, c.prec + loss + 16), LaurentNum::from_rational(t0, c.prec + loss + 16),
              c.prec)
          .truncated(c.prec);
  c.emit({{"t", t0.to_string()}, {"trunc_t", c.cfg.trunc_t}}, "result", laurent_to_json(v));
}

void v_exp(Ctx& c) {
  const RationalK z = c.elem();
  c.emit({{"x", z.to_string()}}, "result",
         laurent_to_json(carlitz_exp(LaurentNum::from_rational(z, 2 * c.prec + 64), c.prec)));
}

void v_e(Ctx& c) {
  const RationalK z = c.elem();
  c.emit({{"x", z.to_string()}}, "result", laurent_to_json(e_torsion(z, c.prec)));
}

void v_estar(Ctx& c) {
  const RationalK z = c.elem();
  c.emit({{"x", z.to_string()}}, "result", laurent_to_json(e_star(z, c.prec)));
}

json twisted_json(const TwistedPoly& p) {
  return json{{"coeffs", poly_list(p.coeffs(), 't')}, {"text", p.to_string()}};
}

void v_divpoly(Ctx& c) {
  std::string src = c.a.empty() ? (c.args.size() == 1 ? c.args[0] : "") : c.a;
  if (src.empty()) throw UsageError("divpoly needs --a");
  const Poly a = parse_poly(src, c.field());
  if (a.degree() > c.cfg.deg_f_cap) throw DomainError("deg a exceeds deg_f_cap");
  c.emit({{"a", a.to_string()}}, "result", twisted_json(div_poly(a)));
}

void v_adjpoly(Ctx& c) {
  const Poly f = c.level();
  c.emit({{"f", f.to_string()}}, "result", twisted_json(adj_div_poly(f)));
}

void v_cyclo(Ctx& c) {
  const Poly f = c.level();
  const BiPoly p = cyclotomic(f);
  c.emit({{"f", f.to_string()}}, "result",
         json{{"coeffs", poly_list(p.coeffs(), 't')}, {"z_degree", p.z_degree()}, {"text", p.to_string()}});
}

void v_psi(Ctx& c) {
  const RationalK z = c.elem();
  const int upto = c.sweep(3);
  const std::vector<LaurentNum> v = psi_values(z, static_cast<unsigned>(upto), c.prec);
  for (int n = 0; n <= upto; ++n)
    c.emit({{"x", z.to_string()}, {"N", n}}, "result", laurent_to_json(v[static_cast<std::size_t>(n)]));
}

void v_pi(Ctx& c) {
  const RationalK z = c.elem();
  c.emit({{"x", z.to_string()}}, "result", laurent_to_json(pi_value(z, c.prec)));
}

void v_gamma(Ctx& c) {
  const RationalK z = c.elem();
  c.emit({{"x", z.to_string()}}, "result", laurent_to_json(gamma_value(z, c.prec)));
}

void v_verify_fe(Ctx& c) {
  const RationalK z = c.elem();
  const Poly a0 = c.a.empty() ? Poly::constant(c.field(), 1) : parse_poly(c.a, c.field());
  const Poly g = c.f.empty() ? Poly::variable(c.field()) : c.level();
  c.verdict({{"relation", "gauss"}, {"x", z.to_string()}, {"f", g.to_string()}}, verify_gauss(z, g, c.prec));
  if (!z.is_poly())
    c.verdict({{"relation", "reflection"}, {"x", z.to_string()}}, verify_reflection(z, c.prec));
  c.verdict({{"relation", "translation"}, {"x", z.to_string()}, {"a", a0.to_string()}},
            verify_translation(z, a0, c.prec));
}

/// Cycle from --x or the single positional argument, at level --f (or the
/// denominator of a bare element).
CycleElement cycle_arg(Ctx& c) {
  std::string src = !c.x.empty() ? c.x : (c.args.size() == 1 ? c.args[0] : "");
  if (src.empty()) throw UsageError(c.op + " needs --x or one cycle argument");
  if (c.f.empty() && src.find('[') == std::string::npos) {
    const RationalK v = parse_elem(src, c.field());
    return CycleElement::symbol(c.checked(v.den()), v);
  }
  return parse_cycle(src, c.level());
}

void v_bracket(Ctx& c) {
  const std::string src = !c.x.empty() ? c.x : (c.args.size() == 1 ? c.args[0] : "");
  if (c.f.empty() && src.find('[') == std::string::npos) {
    const RationalK v = c.elem();
    const int b = c.N >= 0 ? bracket_N(v, static_cast<unsigned>(c.N)) : bracket(v);
    json in{{"x", v.to_string()}};
    if (c.N >= 0) in["N"] = c.N;
    c.emit(in, "result", b);
    return;
  }
  const CycleElement a = cycle_arg(c);
  json in{{"cycle", a.to_string()}, {"f", a.level().to_string()}};
  if (c.N >= 0) in["N"] = c.N;
  c.emit(in, "result", c.N >= 0 ? bracket_of_cycle_N(a, static_cast<unsigned>(c.N)) : bracket_of_cycle(a));
}

void v_bracket_vec(Ctx& c) {
  const CycleElement a = cycle_arg(c);
  const std::vector<Poly> units = units_mod(a.level());
  const std::vector<long> v = bracket_vector(a);
  json m = json::array();
  for (std::size_t i = 0; i < units.size(); ++i) m.push_back(json{{"unit", units[i].to_string()}, {"value", v[i]}});
  c.emit({{"cycle", a.to_string()}, {"f", a.level().to_string()}}, "result", m);
}

void v_equiv(Ctx& c) {
  if (c.args.size() != 2) throw UsageError("equiv needs two cycle arguments");
  const Poly f = c.level();
  const CycleElement a = parse_cycle(c.args[0], f), b = parse_cycle(c.args[1], f);
  const bool e1 = equiv_f(a, b), e2 = equiv_lattice(a, b);
  c.emit({{"a", a.to_string()}, {"b", b.to_string()}, {"f", f.to_string()}}, "result",
         json{{"equiv", e1}, {"lattice", e2}});
  if (e1 != e2) c.failed = true;
}

void v_rank(Ctx& c) {
  const Poly f = c.level();
  c.emit({{"f", f.to_string()}}, "result", json{{"rank", quotient_rank(f)}, {"nu_f", nu_f(f)}});
}

void v_decide(Ctx& c) {
  if (c.args.empty()) throw UsageError("decide needs at least one element");
  const Poly f = c.level();
  std::vector<CycleElement> fam;
  json names = json::array();
  for (const std::string& s : c.args) {
    fam.push_back(parse_cycle(s, f));
    names.push_back(fam.back().to_string());
  }
  const DependenceReport rep = decide_dependence(fam);
  json w = json::array();
  bool agree = true;
  for (const DependenceWitness& d : rep.witnesses) {
    json coords = json::array();
    for (const auto& v : d.coords) coords.push_back(v.get_str());
    w.push_back(json{{"pair", {d.i, d.j}}, {"diff", d.diff}, {"coords", coords}, {"multiplier", d.multiplier},
                     {"lattice_agrees", d.lattice_agrees}});
    agree = agree && d.lattice_agrees;
  }
  c.emit({{"f", f.to_string()}, {"family", names}}, "result",
         json{{"verdict", rep.independent ? "independent" : "dependent-pair"}, {"classes", rep.classes},
              {"witnesses", w}});
  if (!agree) c.failed = true;
}

void v_basis(Ctx& c) {
  const Poly f = c.level();
  const BasisBf b = basis_Bf(f);
  json r = json::array();
  for (const RationalK& v : b.residues) r.push_back(v.to_string());
  c.emit({{"f", f.to_string()}}, "result",
         json{{"residues", r}, {"period_slot", b.period_slot}, {"size", b.size()}});
}

void v_coleman_verify(Ctx& c) {
  const RationalK z = c.elem();
  const Poly f = c.level_or_den(z);
  std::vector<Poly> units = units_mod(f);
  if (!c.a.empty()) units = {parse_poly(c.a, c.field())};
  const int upto = c.sweep(5);
  for (const Poly& a : units) {
    for (int n = 0; n <= upto; ++n) {
      const unsigned N = static_cast<unsigned>(n);
      const json base{{"x", z.to_string()}, {"f", f.to_string()}, {"a", a.to_string()}, {"N", n}};
      json in = base;
      in["kind"] = "interpolation";
      c.verdict(in, verify_interp(z, f, a, N, c.prec));
      if (bracket_N(RationalK(a) * z, N) == 1) {
        in["kind"] = "zero";
        c.verdict(in, verify_zero(z, f, a, N, c.prec));
      }
    }
  }
}

void v_motive_verify(Ctx& c) {
  const CycleElement a = cycle_arg(c);
  if (unit_count(a.level()) > static_cast<std::uint64_t>(c.cfg.ell_cap))
    throw DomainError("#(A/f)^x exceeds ell_cap " + std::to_string(c.cfg.ell_cap));
  const int tr = c.cfg.trunc_t;
  const long wp = 3 * c.prec + 16;
  const ConvergentProduct psi = psi_matrix(a, tr, wp);
  const long fe = std::min(psi.value.twist(-1).residual(phi_matrix(a, tr, wp) * psi.value), c.prec);
  const json base{{"cycle", a.to_string()}, {"f", a.level().to_string()}, {"trunc_t", tr}};
  json in = base;
  in["check"] = "functional-equation";
  c.verdict(in, fe);
  const SpecializeReport rep = specialize_check(a, tr, c.prec);
  in = base;
  in["check"] = "off-diagonal";
  c.verdict(in, rep.offdiag);
  for (std::size_t i = 0; i < rep.units.size(); ++i) {
    in = base;
    in["unit"] = rep.units[i].to_string();
    in["check"] = "diagonal-vs-pi";
    c.verdict(in, rep.pi_residual[i]);
    in["check"] = "diagonal-vs-coleman";
    c.verdict(in, rep.coleman_residual[i]);
  }
}

void v_selftest(Ctx& c) {
  for (const CriterionResult& r : run_acceptance(c.cfg.seed)) {
    c.emit({{"criterion", r.id}, {"title", r.title}, {"seed", c.cfg.seed}}, "result",
           json{{"pass", r.pass}, {"seconds", r.seconds}, {"budget", r.budget}, {"detail", r.detail}});
    c.failed = c.failed || !r.pass;
  }
}

const std::map<std::string, std::function<void(Ctx&)>>& verbs() {
  static const std::map<std::string, std::function<void(Ctx&)>> m = {
      {"period", v_period},       {"omega-at", v_omega_at},
      {"exp", v_exp},             {"e", v_e},
      {"estar", v_estar},         {"divpoly", v_divpoly},
      {"adjpoly", v_adjpoly},     {"cyclo", v_cyclo},
      {"psi", v_psi},             {"pi", v_pi},
      {"gamma", v_gamma},         {"verify-fe", v_verify_fe},
      {"bracket", v_bracket},     {"bracket-vec", v_bracket_vec},
      {"equiv", v_equiv},         {"rank", v_rank},
      {"decide", v_decide},       {"basis", v_basis},
      {"coleman-verify", v_coleman_verify}, {"motive-verify", v_motive_verify},
      {"selftest", v_selftest},
  };
  return m;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gamma values, brackets and Coleman functions over F_q[T]", "ffgamma"};
  Ctx c;
  c.out = &out;
  std::string verb, config_path;
  bool json_only = false;
  Config flags;
  app.add_option("verb", verb, "subcommand")->required();
  app.add_option("args", c.args, "elements or cycles");
  app.add_option("--q", flags.q, "field size");
  app.add_option("--prec", flags.prec, "u-adic precision");
  app.add_option("--trunc-t", flags.trunc_t, "t-degree truncation");
  app.add_option("--deg-f-cap", flags.deg_f_cap, "largest deg f");
  app.add_option("--ell-cap", flags.ell_cap, "largest motive rank");
  app.add_option("--tol", flags.tol, "minimum residual for verifications");
  app.add_option("--seed", flags.seed, "seed for randomized suites");
  app.add_option("--f", c.f, "level f");
  app.add_option("--x", c.x, "element or cycle");
  app.add_option("--a", c.a, "polynomial a");
  app.add_option("--N", c.N, "index N, or the top of a sweep");
  app.add_flag("--json", json_only, "no summary on stderr");
  app.add_option("--config", config_path, "key=value config file");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 3;
  }

  try {
    c.cfg = flags;
    if (!config_path.empty()) {
      std::set<std::string> keep;
      const std::pair<const char*, const char*> names[] = {{"--q", "q"},
                                                           {"--prec", "prec"},
                                                           {"--trunc-t", "trunc_t"},
                                                           {"--deg-f-cap", "deg_f_cap"},
                                                           {"--ell-cap", "ell_cap"},
                                                           {"--tol", "tol"},
                                                           {"--seed", "seed"}};
      for (const auto& [flag, key] : names)
        if (app.count(flag)) keep.insert(key);
      c.cfg.apply_file(config_path, keep);
    }
    c.cfg.validate();
    const auto it = verbs().find(verb);
    if (it == verbs().end()) throw UsageError("unknown subcommand '" + verb + "'");
    c.op = verb;
    c.F = &GaloisField::get(c.cfg.q);
    c.prec = c.cfg.effective_prec();
    it->second(c);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 3;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << '\n';
    return 1;
  }
  if (!json_only)
    err << verb << ": " << c.records << " record(s), q=" << c.cfg.q << ", prec=" << c.prec
        << (c.failed ? ", verification FAILED" : ", ok") << '\n';
  return c.failed ? 2 : 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace ffgamma
