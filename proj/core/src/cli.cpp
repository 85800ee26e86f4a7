#include "stablecoh/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stablecoh/conf.hpp"
#include "stablecoh/emit.hpp"
#include "stablecoh/intpoly.hpp"
#include "stablecoh/liegroups.hpp"
#include "stablecoh/report.hpp"
#include "stablecoh/schubert.hpp"
#include "stablecoh/stablering.hpp"
#include "stablecoh/vassiliev.hpp"
#include "stablecoh/verify.hpp"

namespace stablecoh {
namespace {

using Row = std::map<std::string, Value>;

long long ll(long long v) { return v; }

std::vector<Row> degree_rank_rows(const IntPoly& poly) {
  std::vector<Row> rows;
  for (const auto& [deg, coeff] : poly.terms())
    rows.push_back({{"degree", ll(deg)}, {"rank", coeff}});
  return rows;
}

std::string symbol_str(const SchubertSymbol& s) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < s.a.size(); ++i) os << (i ? "," : "") << s.a[i];
  os << ")";
  return os.str();
}

std::string presentation_str(const GradedRingPresentation& pres) {
  std::vector<std::string> exterior;
  std::ostringstream tail;
  for (const RingGenerator& g : pres.generators) {
    if (g.kind == GenKind::exterior)
      exterior.push_back(g.name);
    else
      tail << " * Q[" << g.name << "]/(" << g.name << "^" << g.truncation << ")";
  }
  std::ostringstream os;
  if (!exterior.empty()) {
    os << "Lambda(";
    for (size_t i = 0; i < exterior.size(); ++i) os << (i ? ", " : "") << exterior[i];
    os << ")";
  } else if (tail.str().empty()) {
    os << "Q";
  }
  std::string t = tail.str();
  if (!t.empty()) os << (exterior.empty() ? t.substr(3) : t);  // drop the leading " * "
  return os.str();
}

Payload gr_payload(int p, int m, bool symbols) {
  Payload out;
  out.check = "gr";
  out.params = {{"m", ll(m)}, {"p", ll(p)}, {"symbols", symbols}};
  out.status = "ok";
  if (symbols) {
    out.columns = {"cell_dimension", "degree", "symbol"};
    for (const SchubertSymbol& s : enumerate_symbols(p, m)) {
      int dim = cell_dimension(s);
      out.data.push_back(
          {{"cell_dimension", ll(dim)}, {"degree", ll(2 * dim)}, {"symbol", symbol_str(s)}});
    }
  } else {
    out.columns = {"degree", "rank"};
    out.data = degree_rank_rows(grassmannian_poincare(p, m));
  }
  IntPoly poincare = grassmannian_poincare(p, m);
  out.notes.push_back("poincare: " + poincare.str());
  out.notes.push_back("total rank: " + poincare.sum_of_coeffs().str());
  return out;
}

Payload conf_payload(int j, int n, bool punctured) {
  Payload out;
  out.check = "conf";
  out.params = {{"j", ll(j)}, {"n", ll(n)}, {"punctured", punctured}};
  out.status = "ok";
  out.columns = {"degree", "rank"};
  GradedDims dims = conf_bm_poincare({j, n, punctured});
  out.data = degree_rank_rows(dims.poincare());
  out.notes.push_back("space: " + dims.space);
  out.notes.push_back("twist: " + dims.twist);
  out.notes.push_back("poincare: " + dims.poincare().str());
  out.notes.push_back("total rank: " + dims.total().str());
  return out;
}

Payload e1_payload(int d, int n, PageVariant variant) {
  Payload out;
  SpectralSequencePage page = build_e1_page(d, n, variant);
  out.check = "e1_page";
  out.params = {{"d", ll(d)},
                {"e", ll(page.e)},
                {"n", ll(n)},
                {"stability_degree", ll(page.stability_degree)},
                {"truncation_column", ll(page.truncation_column)},
                {"variant", std::string(variant_name(variant))}};
  out.status = "ok";
  out.columns = {"column", "conf_degree", "dual_k", "rank", "total_degree"};
  for (const PageEntry& entry : page.entries)
    out.data.push_back({{"column", ll(entry.column)},
                        {"conf_degree", ll(entry.conf_degree)},
                        {"dual_k", ll(entry.dual_k)},
                        {"rank", entry.rank},
                        {"total_degree", ll(entry.total_degree)}});
  out.window = StableWindow{page.params.stable_bound, d >= 4 * n + 1};
  std::ostringstream note;
  note << "entries below total degree " << page.stability_degree << " are stable";
  out.notes.push_back(note.str());
  return out;
}

Payload diagonal_payload(int n, int kmax, PageVariant variant, int* exit_code) {
  Payload out;
  out.check = "diagonal";
  out.params = {{"kmax", ll(kmax)}, {"n", ll(n)}, {"variant", std::string(variant_name(variant))}};
  out.columns = {"degree", "equal", "lhs", "rhs"};
  bool all_equal = true;
  std::optional<int> first_bad;
  for (int k = 0; k <= kmax; ++k) {
    DiagonalSum diag = diagonal_sum(n, k, variant);
    out.data.push_back(
        {{"degree", ll(k)}, {"equal", diag.equal}, {"lhs", diag.lhs}, {"rhs", diag.rhs}});
    if (!diag.equal && all_equal) {
      all_equal = false;
      first_bad = k;
    }
  }
  out.status = all_equal ? "pass" : "fail";
  if (first_bad) out.notes.push_back("first mismatch at degree " + std::to_string(*first_bad));
  *exit_code = all_equal ? 0 : 1;
  return out;
}

Payload ring_payload(Space space, int d, int n, bool truncate) {
  Payload out;
  GradedRingPresentation pres = ring_presentation(space, d, n);
  out.check = "ring";
  out.params = {{"d", ll(d)},
                {"n", ll(n)},
                {"presentation", presentation_str(pres)},
                {"space", std::string(space_name(space))},
                {"truncate", truncate}};
  out.status = "ok";
  out.columns = {"degree", "rank"};
  IntPoly poincare = ring_poincare(pres, truncate);
  out.data = degree_rank_rows(poincare);
  out.window = pres.window;
  for (const RingGenerator& g : pres.generators) {
    std::ostringstream note;
    note << "generator " << g.name << ": degree " << g.degree;
    if (g.kind == GenKind::exterior)
      note << ", exterior";
    else
      note << ", " << g.name << "^" << g.truncation << " = 0";
    out.notes.push_back(note.str());
  }
  out.notes.push_back("poincare: " + poincare.str());
  return out;
}

Payload serre_payload(int n, bool transgression, int* exit_code) {
  Payload out;
  SerreCheck check = serre_einfty(n, transgression);
  out.check = "serre_einfty";
  out.params = {{"n", ll(n)}, {"transgression", transgression}};
  out.status = check.matches ? "pass" : "fail";
  out.columns = {"degree", "einfty_rank", "target_rank"};
  int top = std::max(check.einfty.max_degree(), check.target.max_degree());
  for (int deg = 0; deg <= top; ++deg) {
    Coeff lhs = check.einfty.coeff(deg), rhs = check.target.coeff(deg);
    if (lhs == 0 && rhs == 0) continue;
    out.data.push_back({{"degree", ll(deg)}, {"einfty_rank", lhs}, {"target_rank", rhs}});
  }
  out.notes.push_back("einfty: " + check.einfty.str());
  out.notes.push_back("target: " + check.target.str());
  if (!check.matches) out.notes.push_back("surviving classes do not assemble to the target tower");
  *exit_code = check.matches ? 0 : 1;
  return out;
}

Payload contradiction_payload(int n, int bound) {
  Payload out;
  ContradictionCheck check = degenerate_contradiction(n, bound);
  out.check = "contradiction";
  out.params = {{"bound", ll(bound)},
                {"first_negative",
                 check.first_negative ? Value(ll(*check.first_negative)) : Value(std::string("none"))},
                {"n", ll(n)}};
  out.status = "ok";
  out.columns = {"coefficient", "degree"};
  for (const auto& [deg, coeff] : check.series.terms())
    out.data.push_back({{"coefficient", coeff}, {"degree", ll(deg)}});
  out.notes.push_back("series: " + check.series.str());
  out.notes.push_back(
      check.first_negative
          ? "a counting series cannot go negative; degree " + std::to_string(*check.first_negative)
                + " refutes the degenerate answer"
          : "no negative coefficient visible below the bound");
  return out;
}

Payload twisted_payload(int d, int n, int kmax) {
  Payload out;
  out.check = "twisted";
  out.params = {{"d", ll(d)}, {"kmax", ll(kmax)}, {"n", ll(n)}};
  out.status = "ok";
  out.columns = {"degree", "rank", "verified"};
  StableWindow window{0, false};
  for (int k = 0; k <= kmax; ++k) {
    TwistedRank tw = twisted_coefficients(d, n, k);
    window = StableWindow{(d - 1) / 2, d >= 4 * n + 1};
    out.data.push_back({{"degree", ll(k)}, {"rank", tw.rank}, {"verified", tw.verified}});
  }
  out.window = window;
  out.notes.push_back("ranks are certified only where verified is true");
  return out;
}

Payload verify_payload(int nmax, int dmax, int* exit_code) {
  Payload out;
  std::vector<VerificationReport> reports = verify_all({nmax, dmax, 0});
  out.check = "verify_all";
  out.params = {{"dmax", ll(dmax)}, {"nmax", ll(nmax)}};
  out.columns = {"check", "params", "status", "witness"};
  int failures = 0, unsupported = 0;
  for (const VerificationReport& r : reports) {
    if (r.status == CheckStatus::fail) ++failures;
    if (r.status == CheckStatus::unsupported) ++unsupported;
    out.data.push_back({{"check", r.check},
                        {"params", params_str(r.params)},
                        {"status", std::string(status_name(r.status))},
                        {"witness", r.witness.value_or("")}});
  }
  out.status = failures ? "fail" : "pass";
  std::ostringstream note;
  note << reports.size() << " checks, " << failures << " failed, " << unsupported
       << " unsupported";
  out.notes.push_back(note.str());
  *exit_code = exit_code_for(reports);
  return out;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact calculator for stable cohomology tables of families of smooth hypersurfaces",
               "stablecoh"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "stablecoh 0.1.0");
  std::string format_name = "text", out_path;
  app.add_option("--format", format_name, "output format: text, json, csv, latex")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
  app.add_option("--out", out_path, "write the result to this file instead of stdout");

  struct {
    int p = 0, m = 0;
    bool symbols = false;
  } gr;
  CLI::App* gr_cmd = app.add_subcommand("gr", "Betti table of the Grassmannian Gr(p, C^m)");
  gr_cmd->add_option("--p", gr.p, "plane dimension")->required()->check(CLI::NonNegativeNumber);
  gr_cmd->add_option("--m", gr.m, "ambient dimension")->required()->check(CLI::NonNegativeNumber);
  gr_cmd->add_flag("--symbols", gr.symbols, "list the cells instead of the rank table");

  struct {
    int j = 0, n = 0;
    bool punctured = false;
  } conf;
  CLI::App* conf_cmd = app.add_subcommand(
      "conf", "twisted Borel-Moore ranks of unordered configurations in projective space");
  conf_cmd->add_option("--j", conf.j, "number of points")->required()->check(CLI::NonNegativeNumber);
  conf_cmd->add_option("--n", conf.n, "projective dimension")
      ->required()
      ->check(CLI::NonNegativeNumber);
  conf_cmd->add_flag("--punctured", conf.punctured, "remove one point from the ambient space");

  struct {
    int d = 0, n = 0;
    std::string variant = "full";
  } e1;
  CLI::App* e1_cmd = app.add_subcommand("e1-page", "nonzero first-page entries with degrees");
  e1_cmd->add_option("--d", e1.d, "hypersurface degree (>= 3)")->required();
  e1_cmd->add_option("--n", e1.n, "projective dimension")->required()->check(CLI::PositiveNumber);
  e1_cmd->add_option("--variant", e1.variant, "full or marked")
      ->check(CLI::IsMember({"full", "marked"}));

  struct {
    int n = 0, kmax = 0;
    std::string variant = "full";
  } diag;
  CLI::App* diag_cmd =
      app.add_subcommand("diagonal", "column sums against the exterior tower, degree by degree");
  diag_cmd->add_option("--n", diag.n, "projective dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  diag_cmd->add_option("--kmax", diag.kmax, "largest degree to check")
      ->required()
      ->check(CLI::NonNegativeNumber);
  diag_cmd->add_option("--variant", diag.variant, "full or marked")
      ->check(CLI::IsMember({"full", "marked"}));

  struct {
    std::string space;
    int d = 0, n = 0;
    bool truncate = false;
  } ring;
  CLI::App* ring_cmd =
      app.add_subcommand("ring", "stable cohomology ring presentation and its rank table");
  ring_cmd->add_option("--space", ring.space, "X, Xp, Xv, Xstar, Ustar or Mstar")
      ->required()
      ->check(CLI::IsMember({"X", "Xp", "X^p", "Xv", "X_v", "Xstar", "Ustar", "Mstar"}));
  ring_cmd->add_option("--d", ring.d, "hypersurface degree")
      ->required()
      ->check(CLI::PositiveNumber);
  ring_cmd->add_option("--n", ring.n, "projective dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  ring_cmd->add_flag("--truncate", ring.truncate, "reduce mod t^bound of the certified window");

  struct {
    int n = 0;
    bool no_transgression = false;
  } serre;
  CLI::App* serre_cmd = app.add_subcommand(
      "serre", "two-column page survivors against the quotient tower");
  serre_cmd->add_option("--n", serre.n, "projective dimension (>= 2)")->required();
  serre_cmd->add_flag("--no-transgression", serre.no_transgression,
                      "keep every class (shows the failing comparison)");

  struct {
    int n = 0, bound = 0;
  } contra;
  CLI::App* contra_cmd = app.add_subcommand(
      "contradiction", "counting series a degenerate answer would need, with its first negative");
  contra_cmd->add_option("--n", contra.n, "projective dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  contra_cmd->add_option("--bound", contra.bound, "compute the series mod t^bound")
      ->required()
      ->check(CLI::PositiveNumber);

  struct {
    int d = 0, n = 0, kmax = 0;
  } twisted;
  CLI::App* twisted_cmd =
      app.add_subcommand("twisted", "ranks of the sign-twisted summand, degree by degree");
  twisted_cmd->add_option("--d", twisted.d, "hypersurface degree")
      ->required()
      ->check(CLI::PositiveNumber);
  twisted_cmd->add_option("--n", twisted.n, "projective dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  twisted_cmd->add_option("--kmax", twisted.kmax, "largest degree to print")
      ->required()
      ->check(CLI::NonNegativeNumber);

  struct {
    int nmax = 4, dmax = 17;
  } verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify-all", "run every invariant sweep and report pass/fail per check");
  verify_cmd->add_option("--nmax", verify.nmax, "sweep projective dimensions up to this")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--dmax", verify.dmax, "sweep hypersurface degrees up to this")
      ->check(CLI::NonNegativeNumber);

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("stablecoh");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForHelp&) {
    std::vector<CLI::App*> parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run 'stablecoh --help' for usage\n";
    return 2;
  }

  Format format = format_from_string(format_name).value_or(Format::text);
  Payload payload;
  int code = 0;
  try {
    if (gr_cmd->parsed()) {
      payload = gr_payload(gr.p, gr.m, gr.symbols);
    } else if (conf_cmd->parsed()) {
      payload = conf_payload(conf.j, conf.n, conf.punctured);
    } else if (e1_cmd->parsed()) {
      PageVariant v = e1.variant == "marked" ? PageVariant::marked : PageVariant::full;
      payload = e1_payload(e1.d, e1.n, v);
    } else if (diag_cmd->parsed()) {
      PageVariant v = diag.variant == "marked" ? PageVariant::marked : PageVariant::full;
      payload = diagonal_payload(diag.n, diag.kmax, v, &code);
    } else if (ring_cmd->parsed()) {
      payload = ring_payload(*space_from_string(ring.space), ring.d, ring.n, ring.truncate);
    } else if (serre_cmd->parsed()) {
      payload = serre_payload(serre.n, !serre.no_transgression, &code);
    } else if (contra_cmd->parsed()) {
      payload = contradiction_payload(contra.n, contra.bound);
    } else if (twisted_cmd->parsed()) {
      payload = twisted_payload(twisted.d, twisted.n, twisted.kmax);
    } else if (verify_cmd->parsed()) {
      payload = verify_payload(verify.nmax, verify.dmax, &code);
    }
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }

  std::string rendered = emit(format, payload);
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return 2;
    }
    file << rendered;
  } else {
    out << rendered;
  }
  return code;
}

}  // namespace stablecoh
