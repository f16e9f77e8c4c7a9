// ekrbound: exact spectral and linear-programming upper bounds for
// Erdos-Ko-Rado sets of generators in Hermitian polar spaces H(2d-1, q^2).
//
// Exit codes: 0 all checks passed, 1 a mathematical property failed,
// 2 usage or parameter error, 3 resource-guard refusal.

#include <CLI11.hpp>

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ekr/equality.hpp"
#include "ekr/hoffman.hpp"
#include "ekr/lp.hpp"
#include "ekr/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace ekr;
using num::Integer;
using num::Rational;
using scheme::SchemeParams;

namespace {

enum class Format { text, records, csv };

struct Options {
  std::vector<int> ds;
  std::vector<int> qs;
  std::string format = "text";
  std::string output = "-";
  std::string weights;
  std::string size;
  std::string dump_path;
  int grid_size = 200;
  bool allow_q3 = false;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "records") return Format::records;
  if (s == "csv") return Format::csv;
  throw DomainError("unknown format '" + s + "' (text|records|csv)");
}

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Output(const std::string& path) {
    if (path != "-") {
      file.open(path);
      if (!file) throw DomainError("cannot open output file '" + path + "'");
      os = &file;
    }
  }
  std::ostream& stream() { return *os; }
};

std::vector<SchemeParams> param_grid(const Options& opt, bool need_odd) {
  if (opt.ds.empty() || opt.qs.empty())
    throw DomainError("at least one --d and one --q value are required");
  std::vector<SchemeParams> grid;
  for (int d : opt.ds)
    for (int q : opt.qs) {
      SchemeParams p{d, q};
      if (need_odd)
        scheme::validate_odd_rank(p);
      else
        scheme::validate(p);
      grid.push_back(p);
    }
  return grid;
}

std::string rs(const Rational& r) { return num::to_string(r); }

json spectrum_json(const std::vector<Rational>& spec) {
  json a = json::array();
  for (const auto& s : spec) a.push_back(rs(s));
  return a;
}

// ---- bound ---------------------------------------------------------------

json bound_record(const hoffman::BoundReport& rep) {
  json j;
  j["record"] = "bound";
  j["d"] = rep.params.d;
  j["q"] = rep.params.q;
  if (rep.f) {
    j["f"] = rs(rep.f->value);
    j["f_printed_num"] = rep.f->printed_num.str();
    j["f_printed_den"] = rep.f->printed_den.str();
  }
  j["K"] = rs(rep.K);
  j["lambda"] = rs(rep.lambda);
  j["spectrum"] = spectrum_json(rep.spectrum);
  j["N"] = scheme::generator_count(rep.params).str();
  j["ratio_bound"] = rs(rep.ratio);
  j["ratio_bound_floor"] = num::floor_rat(rep.ratio).str();
  if (rep.closed_form) j["closed_form_bound"] = rep.closed_form->str();
  j["bounds_match"] = rep.bounds_match;
  j["in_theorem_range"] = rep.in_theorem_range;
  return j;
}

void bound_text(std::ostream& os, const hoffman::BoundReport& rep) {
  os << "H(" << 2 * rep.params.d - 1 << ", " << rep.params.q * rep.params.q
     << ")  d=" << rep.params.d << " q=" << rep.params.q << "\n";
  if (!rep.in_theorem_range)
    os << "  [outside Theorem range d >= 5; cross-check values]\n";
  if (rep.f)
    os << "  f      = " << rs(rep.f->value) << "  (printed "
       << rep.f->printed_num.str() << " / " << rep.f->printed_den.str()
       << ")\n";
  os << "  K      = " << rs(rep.K) << "\n";
  os << "  lambda = " << rs(rep.lambda) << "\n";
  os << "  spectrum =";
  for (const auto& s : rep.spectrum) os << " " << rs(s);
  os << "\n";
  os << "  ratio bound = " << rs(rep.ratio)
     << "  floor = " << num::floor_rat(rep.ratio).str() << "\n";
  if (rep.closed_form)
    os << "  closed-form bound = " << rep.closed_form->str() << "  ("
       << (rep.bounds_match ? "matches ratio bound exactly"
                            : "MISMATCH with ratio bound")
       << ")\n";
}

hoffman::WeightVector parse_weights(const std::string& s, int d) {
  hoffman::WeightVector w;
  w.c.assign(d + 1, Rational(0));
  std::stringstream ss(s);
  std::string item;
  int j = 1;
  while (std::getline(ss, item, ',')) {
    if (j > d) throw DomainError("too many weights, expected d = " +
                                 std::to_string(d));
    w.c[j++] = num::rational_from_string(item);
  }
  if (j != d + 1)
    throw DomainError("expected d = " + std::to_string(d) +
                      " comma-separated weights c_1..c_d");
  return w;
}

int cmd_bound(const Options& opt) {
  const Format fmt = parse_format(opt.format);
  Output out(opt.output);
  const auto grid = param_grid(opt, true);
  if (fmt == Format::csv) {
    if (!opt.weights.empty())
      throw DomainError("csv output is defined for the optimal weighting "
                        "only; use text or records with --weights");
    out.stream() << "d,q,f_num,f_den,K_num,K_den,lambda_num,lambda_den,"
                    "ratio_bound,closed_form_bound,match\n";
  }
  for (const auto& p : grid) {
    if (!opt.weights.empty()) {
      const auto w = parse_weights(opt.weights, p.d);
      const auto rep = hoffman::generic_ratio_bound(p, w);
      if (fmt == Format::records) {
        json j = bound_record(rep);
        j["record"] = "generic_bound";
        json ws = json::array();
        for (int k = 1; k <= p.d; ++k) ws.push_back(rs(w.c[k]));
        j["weights"] = ws;
        out.stream() << j.dump() << "\n";
      } else {
        bound_text(out.stream(), rep);
      }
      continue;
    }
    const auto rep = hoffman::bound_report(p);
    switch (fmt) {
      case Format::text:
        bound_text(out.stream(), rep);
        break;
      case Format::records:
        out.stream() << bound_record(rep).dump() << "\n";
        break;
      case Format::csv: {
        const auto& f = rep.f->value;
        out.stream() << p.d << "," << p.q << "," << numerator(f) << ","
                     << denominator(f) << "," << numerator(rep.K) << ","
                     << denominator(rep.K) << "," << numerator(rep.lambda)
                     << "," << denominator(rep.lambda) << ","
                     << num::floor_rat(rep.ratio).str() << ","
                     << rep.closed_form->str() << ","
                     << (rep.bounds_match ? "true" : "false") << "\n";
        break;
      }
    }
  }
  return 0;
}

// ---- spectrum ------------------------------------------------------------

int cmd_spectrum(const Options& opt) {
  const Format fmt = parse_format(opt.format);
  if (fmt == Format::csv)
    throw DomainError("csv output is not defined for spectrum");
  Output out(opt.output);
  for (const auto& p : param_grid(opt, false)) {
    const auto em = scheme::eigenmatrix(p);
    if (fmt == Format::text) {
      out.stream() << scheme::to_text(em) << "\n";
      continue;
    }
    json j;
    j["record"] = "eigenmatrix";
    j["d"] = p.d;
    j["q"] = p.q;
    j["N"] = em.N.str();
    json theta = json::array(), k = json::array(), m = json::array();
    for (const auto& t : em.theta) theta.push_back(t.str());
    for (const auto& v : em.k) k.push_back(v.str());
    for (const auto& v : em.m) m.push_back(rs(v));
    j["theta"] = theta;
    j["valencies"] = k;
    j["multiplicities"] = m;
    json P = json::array();
    for (const auto& row : em.P) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x.str());
      P.push_back(r);
    }
    j["P"] = P;
    out.stream() << j.dump() << "\n";
  }
  return 0;
}

// ---- lp ------------------------------------------------------------------

int cmd_lp(const Options& opt) {
  const Format fmt = parse_format(opt.format);
  if (fmt == Format::csv) throw DomainError("csv output is not defined for lp");
  Output out(opt.output);
  for (const auto& p : param_grid(opt, true)) {
    const auto inst = lp::build_lp(p);
    const auto cmp = lp::lp_vs_ratio(p);
    if (fmt == Format::text) {
      out.stream() << "Delsarte LP for d=" << p.d << " q=" << p.q << "\n"
                   << lp::to_text(inst) << lp::to_text(cmp.certificate, inst)
                   << "ratio bound: " << rs(cmp.ratio) << "\n"
                   << "lp optimum equals ratio bound: "
                   << (cmp.equal ? "yes" : "no") << "\n\n";
      continue;
    }
    json j;
    j["record"] = "lp";
    j["d"] = p.d;
    j["q"] = p.q;
    j["status"] = lp::to_string(cmp.certificate.status);
    j["optimum"] = rs(cmp.certificate.optimum);
    j["ratio_bound"] = rs(cmp.ratio);
    j["equals_ratio_bound"] = cmp.equal;
    json primal = json::object();
    for (std::size_t v = 0; v < cmp.certificate.primal.size(); ++v)
      primal[inst.var_names[v]] = rs(cmp.certificate.primal[v]);
    j["primal"] = primal;
    json dual = json::array();
    for (const auto& y : cmp.certificate.dual) dual.push_back(rs(y));
    j["dual"] = dual;
    j["certificate_verified"] = cmp.certificate.verified;
    out.stream() << j.dump() << "\n";
  }
  return 0;
}

// ---- oracle ----------------------------------------------------------

int cmd_oracle(const Options& opt) {
  const Format fmt = parse_format(opt.format);
  if (fmt == Format::csv)
    throw DomainError("csv output is not defined for oracle");
  Output out(opt.output);
  oracle::EnumerationGuard guard;
  guard.allow_q3 = opt.allow_q3;
  for (const auto& p : param_grid(opt, false)) {
    const auto ps = oracle::enumerate_generators(p, guard);
    const auto dist = oracle::distance_distribution(ps);
    if (!dist.matches_valencies)
      throw PropertyError("distance distribution does not match valencies");
    const auto em = scheme::eigenmatrix(p);
    const auto mats = oracle::verify_scheme_matrices(ps, em);
    // every isotropic point carries a pencil of the right size
    std::size_t pencil_size = 0;
    for (const auto& pt : ps.isotropic_points)
      pencil_size = oracle::point_pencil(ps, pt).members.size();
    if (!opt.dump_path.empty()) {
      std::ofstream df(opt.dump_path);
      if (!df) throw DomainError("cannot open dump file '" + opt.dump_path + "'");
      oracle::dump(ps, df);
    }
    if (fmt == Format::text) {
      out.stream() << "H(" << 2 * p.d - 1 << ", " << p.q * p.q
                   << "): N = " << ps.vertex_count() << "\n"
                   << "  distance distribution matches valencies: yes\n"
                   << "  annihilation of A_1 by its eigenvalues: "
                   << (mats.annihilation ? "yes" : "no") << "\n"
                   << "  A_j = v_j(A_1) for all j: "
                   << (mats.polynomial_identities ? "yes" : "no") << "\n";
      if (mats.row_sums_checked)
        out.stream() << "  row sums of A_d - f A_{d-2} equal K: "
                     << (mats.row_sums ? "yes" : "no") << "\n";
      out.stream() << "  point pencils: " << ps.isotropic_points.size()
                   << " points, " << pencil_size << " generators each\n\n";
      continue;
    }
    json j;
    j["record"] = "oracle";
    j["d"] = p.d;
    j["q"] = p.q;
    j["N"] = static_cast<std::uint64_t>(ps.vertex_count());
    j["valencies_match"] = dist.matches_valencies;
    j["annihilation"] = mats.annihilation;
    j["polynomial_identities"] = mats.polynomial_identities;
    j["row_sums_checked"] = mats.row_sums_checked;
    j["row_sums"] = mats.row_sums;
    j["isotropic_points"] = static_cast<std::uint64_t>(ps.isotropic_points.size());
    j["pencil_size"] = static_cast<std::uint64_t>(pencil_size);
    out.stream() << j.dump() << "\n";
  }
  return 0;
}

// ---- equality --------------------------------------------------------

int cmd_equality(const Options& opt) {
  const Format fmt = parse_format(opt.format);
  if (fmt == Format::csv)
    throw DomainError("csv output is not defined for equality");
  Output out(opt.output);
  for (const auto& p : param_grid(opt, true)) {
    const auto rep =
        opt.size.empty()
            ? equality::intersection_distribution(p)
            : equality::intersection_distribution(p, Integer(opt.size));
    if (fmt == Format::text) {
      out.stream() << "equality exclusion at d=" << p.d << " q=" << p.q
                   << ", size = " << rep.size.str() << "\n"
                   << "  a_1 = " << rs(rep.a1) << ", a_d = " << rs(rep.ad)
                   << "\n";
      for (std::size_t i = 0; i < rep.n.size(); ++i)
        out.stream() << "  n_" << i << " = " << rs(rep.n[i])
                     << (rep.integral[i] ? "" : "  [not an integer]")
                     << (rep.nonnegative[i] ? "" : "  [negative]") << "\n";
      out.stream() << "  verdict: " << equality::to_string(rep.verdict)
                   << "\n\n";
      continue;
    }
    json j;
    j["record"] = "equality";
    j["d"] = p.d;
    j["q"] = p.q;
    j["size"] = rep.size.str();
    j["a1"] = rs(rep.a1);
    j["ad"] = rs(rep.ad);
    json n = json::array(), integral = json::array(), nonneg = json::array(),
         wit = json::array();
    for (std::size_t i = 0; i < rep.n.size(); ++i) {
      n.push_back(rs(rep.n[i]));
      integral.push_back(static_cast<bool>(rep.integral[i]));
      nonneg.push_back(static_cast<bool>(rep.nonnegative[i]));
    }
    for (int w : rep.witnesses) wit.push_back(w);
    j["n"] = n;
    j["integral"] = integral;
    j["nonnegative"] = nonneg;
    j["witnesses"] = wit;
    j["verdict"] = equality::to_string(rep.verdict);
    out.stream() << j.dump() << "\n";
  }
  return 0;
}

// ---- sweep -----------------------------------------------------------

int cmd_sweep(const Options& opt) {
  const Format fmt = parse_format(opt.format);
  if (fmt == Format::csv)
    throw DomainError("csv output is not defined for sweep");
  Output out(opt.output);
  for (const auto& p : param_grid(opt, true)) {
    const auto sw = hoffman::f_sweep(p, opt.grid_size);
    // best grid sample by min-eigenvalue (first among ties)
    std::size_t best = 0;
    for (std::size_t i = 1; i < sw.samples.size(); ++i)
      if (sw.samples[i].min_eigenvalue > sw.samples[best].min_eigenvalue)
        best = i;
    if (fmt == Format::text) {
      out.stream() << "f sweep at d=" << p.d << " q=" << p.q << " ("
                   << sw.grid_size << " samples on [0, q^2-1])\n"
                   << "  optimal f = " << rs(sw.optimal_f)
                   << ", min eigenvalue " << rs(sw.min_at_optimal) << "\n"
                   << "  best grid f = " << rs(sw.samples[best].f)
                   << ", min eigenvalue "
                   << rs(sw.samples[best].min_eigenvalue) << "\n"
                   << "  optimal f wins: " << (sw.optimal_wins ? "yes" : "no")
                   << "\n\n";
      continue;
    }
    json j;
    j["record"] = "sweep";
    j["d"] = p.d;
    j["q"] = p.q;
    j["grid_size"] = sw.grid_size;
    j["optimal_f"] = rs(sw.optimal_f);
    j["lambda_at_optimal"] = rs(sw.min_at_optimal);
    j["best_grid_f"] = rs(sw.samples[best].f);
    j["lambda_at_best_grid"] = rs(sw.samples[best].min_eigenvalue);
    j["optimal_wins"] = sw.optimal_wins;
    out.stream() << j.dump() << "\n";
  }
  return 0;
}

// ---- verify ----------------------------------------------------------

int cmd_verify(Options opt) {
  const Format fmt = parse_format(opt.format);
  if (fmt == Format::csv)
    throw DomainError("csv output is not defined for verify");
  if (opt.ds.empty()) opt.ds = {3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25};
  if (opt.qs.empty()) opt.qs = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
  Output out(opt.output);
  bool all_ok = true;
  for (const auto& p : param_grid(opt, true)) {
    std::string failure;
    try {
      const auto em = scheme::eigenmatrix(p);
      const auto cd = scheme::closed_form_column(p, p.d);
      const auto cd2 = scheme::closed_form_column(p, p.d - 2);
      for (int i = 0; i <= p.d; ++i)
        if (em.P[i][p.d] != cd[i] || em.P[i][p.d - 2] != cd2[i])
          throw PropertyError("closed-form column mismatch at row " +
                              std::to_string(i));
      hoffman::bound_report(em);
      hoffman::sign_analysis(em).require();
      const auto chain = hoffman::verify_lemma3_chain(p);
      if (!chain.all_ok())
        throw PropertyError("identity chain link '" + chain.first_failure() +
                            "' fails");
    } catch (const PropertyError& e) {
      failure = e.what();
      all_ok = false;
    }
    if (fmt == Format::text) {
      out.stream() << "d=" << p.d << " q=" << p.q << " "
                   << (failure.empty() ? "PASS" : "FAIL: " + failure) << "\n";
    } else {
      json j;
      j["record"] = "verify";
      j["d"] = p.d;
      j["q"] = p.q;
      j["ok"] = failure.empty();
      if (!failure.empty()) j["failure"] = failure;
      out.stream() << j.dump() << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact spectral and LP upper bounds for Erdos-Ko-Rado sets of "
      "generators of the Hermitian polar space H(2d-1, q^2)"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* sub, bool need_params) {
    auto* d = sub->add_option("--d", opt.ds, "rank values d");
    auto* q = sub->add_option("--q", opt.qs, "field parameter values q");
    if (need_params) {
      d->required();
      q->required();
    }
    sub->add_option("--format", opt.format, "text | records | csv");
    sub->add_option("--output", opt.output, "output path ('-' = stdout)");
  };

  auto* bound = app.add_subcommand(
      "bound", "spectral ratio bound and closed-form bound per (d, q)");
  add_common(bound, true);
  bound->add_option("--weights", opt.weights,
                    "comma-separated weights c_1..c_d for a generic "
                    "weighting (rationals like -8/5)");

  auto* spectrum =
      app.add_subcommand("spectrum", "exact eigenmatrix dump per (d, q)");
  add_common(spectrum, true);

  auto* lpcmd = app.add_subcommand(
      "lp", "exact Delsarte LP optimum with certificates, vs ratio bound");
  add_common(lpcmd, true);

  auto* oraclecmd = app.add_subcommand(
      "oracle",
      "explicit desk-scale construction with all matrix identity checks");
  add_common(oraclecmd, true);
  oraclecmd->add_flag("--allow-q3", opt.allow_q3,
                      "also allow the (q=3, d<=2) construction");
  oraclecmd->add_option("--dump", opt.dump_path,
                        "write generators + codimension table to a file");

  auto* equalitycmd = app.add_subcommand(
      "equality", "equality-case intersection distribution and verdict");
  add_common(equalitycmd, true);
  equalitycmd->add_option(
      "--size", opt.size, "hypothesized |S| (default: the closed-form bound)");

  auto* sweep = app.add_subcommand(
      "sweep", "min-eigenvalue sweep over f in [0, q^2-1]");
  add_common(sweep, true);
  sweep->add_option("--grid-size", opt.grid_size, "number of grid samples")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand(
      "verify", "full identity suite over a (d, q) grid (defaults to the "
                "standard grid)");
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bound->parsed()) return cmd_bound(opt);
    if (spectrum->parsed()) return cmd_spectrum(opt);
    if (lpcmd->parsed()) return cmd_lp(opt);
    if (oraclecmd->parsed()) return cmd_oracle(opt);
    if (equalitycmd->parsed()) return cmd_equality(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const PropertyError& e) {
    std::cerr << "property failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
