// arcpow: construct and evaluate arcsine-moment closed forms, sum the
// associated central-binomial series, tabulate pi-limit sequences, and run
// the verification suites.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "arcpow/closed_form.hpp"
#include "arcpow/harmonic.hpp"
#include "arcpow/series.hpp"
#include "arcpow/verify.hpp"

using json = nlohmann::ordered_json;
using namespace arcpow;

namespace {

struct GlobalOpts {
  long prec = 128;
  int digits = 30;
  std::string format = "plain";
};

PrecisionContext make_ctx(const GlobalOpts& g) {
  return PrecisionContext{static_cast<mpfr_prec_t>(g.prec), 32};
}

// "1" and "sqrt2/2" select the exact specialization points; anything else
// is parsed as a decimal.
struct XValue {
  Real value;
  std::optional<PiPoint> exact_point;
};

XValue parse_x(const std::string& text, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.working());
  if (text == "1" || text == "1.0") return {Real(1L), PiPoint::one};
  if (text == "sqrt2/2" || text == "sqrt2_over_2")
    return {ldexp(sqrt(Real(2L)), -1), PiPoint::sqrt2_over_2};
  Real v(text);
  if (abs(v) > 1L) throw std::domain_error("x must satisfy |x| <= 1");
  return {v, std::nullopt};
}

json series_result_json(const SeriesResult& r, int digits) {
  json j;
  j["partial_sum"] = r.partial_sum.str(digits);
  j["terms_used"] = r.terms_used;
  j["tail_estimate"] = r.tail_estimate.str(6);
  j["converged"] = r.converged;
  return j;
}

int cmd_integral(const GlobalOpts& g, unsigned n, unsigned q,
                 const std::optional<std::string>& xtext) {
  PrecisionContext ctx = make_ctx(g);
  ClosedForm form = arcsine_power_integral(n, q);
  std::optional<XValue> x;
  if (xtext) x = parse_x(*xtext, ctx);

  if (g.format == "json") {
    json j;
    j["n"] = n;
    j["q"] = q;
    j["form"] = json::parse(form.to_json());
    j["plain"] = form.str_plain();
    j["latex"] = form.str_latex();
    if (x) {
      j["x"] = x->value.str(g.digits);
      j["value"] = eval_closed_form(form, x->value, ctx).str(g.digits);
      if (x->exact_point)
        j["exact"] = specialize_pi(form, *x->exact_point).str();
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (g.format == "latex") {
    std::cout << form.str_latex() << "\n";
  } else {
    std::cout << form.str_plain() << "\n";
  }
  if (x) {
    std::cout << "value at x: " << eval_closed_form(form, x->value, ctx).str(g.digits)
              << "\n";
    if (x->exact_point)
      std::cout << "exact: " << specialize_pi(form, *x->exact_point).str() << "\n";
  }
  return 0;
}

int cmd_series(const GlobalOpts& g, const std::string& id, IdentityParams pr,
               const std::optional<std::string>& xtext, long terms,
               const std::string& tol_text) {
  PrecisionContext ctx = make_ctx(g);
  PrecisionScope scope(ctx.working());
  if (xtext) pr.x = parse_x(*xtext, ctx).value;
  Real tol(tol_text);
  IdentityEval ev = evaluate_identity(id, pr, tol, terms, ctx);

  if (g.format == "json") {
    json j;
    j["id"] = id;
    json params;
    params["p"] = pr.p;
    params["ell"] = pr.ell;
    params["n"] = pr.n;
    params["m"] = pr.m;
    params["s"] = pr.s;
    if (pr.x) params["x"] = pr.x->str(g.digits);
    j["params"] = params;
    j["lhs"] = series_result_json(ev.lhs, g.digits);
    json rhs;
    if (ev.rhs.exact) rhs["exact"] = ev.rhs.exact->str();
    rhs["value"] = ev.rhs.value.str(g.digits);
    j["rhs"] = rhs;
    j["abs_diff"] = ev.abs_diff.str(6);
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (g.format == "csv") {
    std::cout << "id,partial_sum,terms_used,tail_estimate,converged,rhs,abs_diff\n"
              << id << ',' << ev.lhs.partial_sum.str(g.digits) << ','
              << ev.lhs.terms_used << ',' << ev.lhs.tail_estimate.str(6) << ','
              << (ev.lhs.converged ? 1 : 0) << ',' << ev.rhs.value.str(g.digits)
              << ',' << ev.abs_diff.str(6) << "\n";
    return 0;
  }
  std::cout << "lhs partial sum: " << ev.lhs.partial_sum.str(g.digits) << "  ("
            << ev.lhs.terms_used << " terms, tail <= " << ev.lhs.tail_estimate.str(6)
            << ", " << (ev.lhs.converged ? "converged" : "not converged") << ")\n";
  if (ev.rhs.exact) std::cout << "rhs exact: " << ev.rhs.exact->str() << "\n";
  std::cout << "rhs value: " << ev.rhs.value.str(g.digits) << "\n";
  std::cout << "abs diff:  " << ev.abs_diff.str(6) << "\n";
  return 0;
}

int cmd_series_list() {
  for (const auto& info : identity_catalog())
    std::cout << info.id << "  [" << info.params << "]  " << info.description << "\n";
  return 0;
}

int cmd_pi(const GlobalOpts& g, const std::string& family, unsigned p,
           const std::vector<long>& ns) {
  PrecisionContext ctx = make_ctx(g);
  PrecisionScope scope(ctx.working());
  const bool odd = family == "odd";
  if (!odd && family != "even") throw CLI::ValidationError("--family must be odd or even");
  if (!odd && p < 1) throw CLI::ValidationError("even family needs --p >= 1");
  Real target = pow_ui(const_pi(ctx.working()), odd ? 2 * p + 1 : 2 * p);

  json rows = json::array();
  std::ostringstream csv;
  csv << "n,value,abs_error\n";
  for (long n : ns) {
    Real v = odd ? pi_limit_value_odd_family(p, n, ctx)
                 : pi_limit_value_even_family(p, n, ctx);
    Real err = abs(v.promoted(ctx.working()) - target);
    if (g.format == "json") {
      json row;
      row["n"] = n;
      row["value"] = v.str(g.digits);
      row["abs_error"] = err.str(6);
      rows.push_back(row);
    } else {
      csv << n << ',' << v.str(g.digits) << ',' << err.str(6) << "\n";
    }
  }
  if (g.format == "json") {
    json j;
    j["family"] = family;
    j["p"] = p;
    j["target"] = target.str(g.digits);
    j["rows"] = rows;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << csv.str();
  }
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, SuiteParams sp) {
  sp.ctx = make_ctx(g);
  SuiteReport rep = run_suite(suite, sp);
  if (g.format == "json") {
    json j;
    j["suite"] = rep.suite;
    j["all_pass"] = rep.all_pass;
    json cases = json::array();
    for (const auto& c : rep.cases) {
      json cj;
      cj["name"] = c.name;
      cj["detail"] = c.detail;
      cj["pass"] = c.pass;
      cases.push_back(cj);
    }
    j["cases"] = cases;
    std::cout << j.dump() << "\n";
  } else {
    rep.print_table(std::cout);
  }
  return rep.all_pass ? 0 : 1;
}

int cmd_table(const std::string& kind, unsigned pmax, unsigned kmax) {
  if (kind == "G") {
    g_table(pmax, kmax).write_csv(std::cout);
  } else if (kind == "H") {
    h_table(pmax, kmax).write_csv(std::cout);
  } else {
    throw CLI::ValidationError("--kind must be G or H");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arcsine-moment closed forms, series identities, and pi-limit tables"};
  app.require_subcommand(1);

  GlobalOpts g;
  if (const char* env = std::getenv("ARCPOW_PREC")) g.prec = std::atol(env);
  app.add_option("--prec", g.prec, "working precision in bits (>= 53)")
      ->check(CLI::Range(53L, 1L << 20));
  app.add_option("--digits", g.digits, "decimal digits to display")
      ->check(CLI::Range(1, 100000));
  app.add_option("--format", g.format, "plain | latex | json | csv")
      ->check(CLI::IsMember({"plain", "latex", "json", "csv"}));

  auto* integral = app.add_subcommand("integral", "closed form of the arcsine moment");
  unsigned n = 0, q = 1;
  std::optional<std::string> xtext;
  integral->add_option("--n", n, "power of t")->required();
  integral->add_option("--q", q, "power of arcsin t (>= 1)")->required();
  integral->add_option("--x", xtext, "evaluation point; 1 and sqrt2/2 are exact");

  auto* series = app.add_subcommand("series", "evaluate a catalogued series identity");
  std::string id;
  IdentityParams pr;
  long terms = 1000000;
  std::string tol = "1e-30";
  bool list = false;
  series->add_option("--id", id, "identity tag (see --list)");
  series->add_flag("--list", list, "list the identity catalog");
  series->add_option("--p", pr.p, "harmonic depth parameter");
  series->add_option("--ell", pr.ell, "offset index for the x=1 families");
  series->add_option("--n", pr.n, "first offset");
  series->add_option("--m", pr.m, "second offset");
  series->add_option("--s", pr.s, "exponent for the finite zeta/beta sums");
  std::optional<std::string> sx;
  series->add_option("--x", sx, "evaluation point; 1 and sqrt2/2 are exact");
  series->add_option("--terms", terms, "maximum number of terms");
  series->add_option("--tol", tol, "tail tolerance");

  auto* pi_cmd = app.add_subcommand("pi", "pi-limit sequence table");
  std::string family = "odd";
  unsigned pp = 0;
  std::string ns_text = "16,64,256";
  pi_cmd->add_option("--family", family, "odd | even")->required();
  pi_cmd->add_option("--p", pp, "depth parameter");
  pi_cmd->add_option("--n", ns_text, "comma-separated sequence indices");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  SuiteParams sp;
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--pmax", sp.pmax, "depth limit");
  verify->add_option("--lmax", sp.lmax, "index limit");
  verify->add_option("--nmax", sp.nmax, "moment power limit");
  verify->add_option("--qmax", sp.qmax, "arcsine power limit");
  verify->add_option("--terms", sp.max_terms, "series term budget");

  auto* table = app.add_subcommand("table", "dump a harmonic-sum table as CSV");
  std::string kind = "G";
  unsigned tpmax = 2, tkmax = 10;
  table->add_option("--kind", kind, "G | H")->required();
  table->add_option("--pmax", tpmax, "max depth");
  table->add_option("--kmax", tkmax, "max index");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*integral) return cmd_integral(g, n, q, xtext);
    if (*series) {
      if (list) return cmd_series_list();
      if (id.empty()) throw CLI::ValidationError("series: --id or --list required");
      return cmd_series(g, id, pr, sx, terms, tol);
    }
    if (*pi_cmd) {
      std::vector<long> ns;
      std::stringstream ss(ns_text);
      std::string tok;
      while (std::getline(ss, tok, ',')) ns.push_back(std::stol(tok));
      return cmd_pi(g, family, pp, ns);
    }
    if (*verify) return cmd_verify(g, suite, sp);
    if (*table) return cmd_table(kind, tpmax, tkmax);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
