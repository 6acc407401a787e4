#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "casorati/casorati.hpp"
#include "manifest.hpp"
#include "report.hpp"

namespace casorati::cli {

enum ExitCode { kOk = 0, kUsage = 1, kNumeric = 2, kVerificationFailed = 3 };

namespace detail {

struct Io {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
};

inline std::string read_source(const std::string& path, Io& io) {
  if (path == "-") return std::string((std::istreambuf_iterator<char>(io.in)), std::istreambuf_iterator<char>());
  std::ifstream f(path);
  if (!f) throw argument_error("cannot open '" + path + "'");
  return std::string((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
}

inline Manifest load_manifest(const std::string& path, Io& io) {
  std::istringstream s(read_source(path, io));
  return parse_manifest(s);
}

template <Field F>
F parse_scalar(const std::string& s) {
  if constexpr (field_traits<F>::exact) {
    return parse_rational(s);
  } else {
    return parse_complex(s);
  }
}

template <Field F>
void put_family(Report& r, const FunctionFamily<F>& fam) {
  r.put("field", std::string(fam.field_tag()));
  r.put("members", std::to_string(fam.size()));
  for (std::size_t i = 0; i < fam.size(); ++i) r.put("member." + std::to_string(i + 1), fam[i].str());
}

inline std::vector<std::vector<std::string>> read_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream ls(line);
    std::vector<std::string> row;
    for (std::string t; ls >> t;) row.push_back(t);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

template <Field F>
std::vector<F> grid_for(const Manifest& m, const std::string& start, const std::string& stop, std::size_t count) {
  GridSpec g;
  if (!start.empty() || !stop.empty() || count) {
    if (start.empty() || stop.empty() || !count) throw argument_error("--start, --stop and --count go together");
    g.start = parse_rational(start);
    g.stop = parse_rational(stop);
    g.count = count;
  } else if (m.grid) {
    g = *m.grid;
  } else {
    throw argument_error("no grid: add a 'grid' line to the manifest or pass --start/--stop/--count");
  }
  return g.template points<F>();
}

template <Field F>
void sweep_table(Report& r, const RatioReport<F>& s) {
  auto& t = r.table("sweep", {"x", "W", "C", "ratio"});
  for (std::size_t i = 0; i < s.grid.size(); ++i)
    t.rows.push_back({fmt(s.grid[i]), fmt(s.w_values[i]), fmt(s.c_values[i]),
                      s.ratios[i] ? fmt(*s.ratios[i]) : std::string("excluded")});
  for (auto i : s.excluded) r.warn("grid point x = " + fmt(s.grid[i]) + " excluded: Casoratian under the degeneracy floor");
}

/// Runs `body.template operator()<F>()` with F chosen by the manifest field tag.
template <class Body>
int with_field(const Manifest& m, Body&& body) {
  if (m.exact()) return body.template operator()<Rational>();
  return body.template operator()<Complex>();
}

}  // namespace detail

/// Parses `args` (without the program name), runs one subcommand and writes
/// its report. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  detail::Io io{out, err, in};
  CLI::App app{"Wronskians, Casoratians and (E - lambda I)^m y = 0", "casorati"};
  app.set_help_flag("--help", "print this help and exit");  // -h would clash with the step option --h
  app.require_subcommand(1);

  std::uint64_t seed = default_seed();
  bool csv = false, timing = false;
  app.add_option("--seed", seed, "sample seed (default: $CASORATI_SEED or 20240917)");
  app.add_flag("--csv", csv, "print tables as CSV blocks");
  app.add_flag("--timing", timing, "append elapsed_ms to the report");

  std::string manifest_path, x_text = "0", h_text = "1";
  std::string start, stop;
  std::size_t count = 0;
  auto add_manifest = [&](CLI::App* c) {
    c->add_option("-f,--manifest", manifest_path, "family manifest ('-' for stdin)")->required();
  };
  auto add_grid = [&](CLI::App* c) {
    c->add_option("--start", start, "grid start (overrides the manifest grid)");
    c->add_option("--stop", stop, "grid stop");
    c->add_option("--count", count, "grid point count");
  };

  auto* wr = app.add_subcommand("wronskian", "W(x) of a family");
  add_manifest(wr);
  wr->add_option("-x,--x", x_text, "evaluation point");

  auto* ca = app.add_subcommand("casoratian", "C(x) of a family with step h");
  add_manifest(ca);
  ca->add_option("-x,--x", x_text, "evaluation point");
  ca->add_option("--h", h_text, "shift step");

  auto* dc = app.add_subcommand("delta-casoratian", "C(x) from forward differences, checked against the shift form");
  add_manifest(dc);
  dc->add_option("-x,--x", x_text, "evaluation point");

  auto* ra = app.add_subcommand("ratio", "W/C over a grid with a constancy verdict");
  add_manifest(ra);
  add_grid(ra);

  unsigned n_arg = 0;
  std::size_t samples = 5;
  auto* vp = app.add_subcommand("verify-powers", "W = C = sf(n) on {1, x, ..., x^n}");
  vp->add_option("n", n_arg, "highest power")->required();
  vp->add_option("--samples", samples, "random rational sample points");

  std::string matrix_path;
  auto* vb = app.add_subcommand("verify-basis", "W = C = det(A) sf(n) for the basis with coefficient matrix A");
  vb->add_option("--matrix", matrix_path, "file with the rows of A ('-' for stdin)")->required();
  vb->add_option("--samples", samples, "random rational sample points");

  std::vector<std::string> polys;
  auto* cl = app.add_subcommand("classify", "classify a list of polynomials");
  cl->add_option("polynomials", polys, "polynomials such as 'x^2 + 1'")->required();

  auto* iv = app.add_subcommand("invariance", "differentiation/shift invariance and kappa");
  add_manifest(iv);
  add_grid(iv);

  std::string kind, a_text = "2", m_text = "1", omega_text = "1";
  std::vector<std::string> blocks;
  auto* pr = app.add_subcommand("proportionality", "W/C for a structured family against its closed form");
  pr->add_option("--kind", kind, "binomexp | exptrig | hyperbolic | exppoly")
      ->required()
      ->check(CLI::IsMember({"binomexp", "exptrig", "hyperbolic", "exppoly"}));
  pr->add_option("--n", n_arg, "highest power n");
  pr->add_option("--a", a_text, "binomial-exponential base");
  pr->add_option("--m", m_text, "rate m");
  pr->add_option("--omega", omega_text, "frequency");
  pr->add_option("--block", blocks, "exppoly block m:n (repeatable)");

  int lo = 2, hi = 12;
  int deriv = -1;
  auto* lc = app.add_subcommand("limit-check", "scaled Casoratian (or difference quotient) as h -> 0");
  add_manifest(lc);
  lc->add_option("-x,--x", x_text, "evaluation point (real)");
  lc->add_option("--from", lo, "first step 2^-from");
  lc->add_option("--to", hi, "last step 2^-to");
  lc->add_option("--derivative", deriv, "check Delta_h^N f / h^N -> f^(N) for the first member instead");

  double lambda = 1.0, x0 = 0.0;
  unsigned m_power = 1;
  std::size_t q = 1, horizon = 10;
  std::string samples_path;
  auto* so = app.add_subcommand("solve", "recover the periodic profiles of a solution of (E - lambda)^m y = 0");
  so->add_option("--lambda", lambda, "nonzero real lambda")->required();
  so->add_option("--m", m_power, "operator power")->required();
  so->add_option("--q", q, "samples per unit period");
  so->add_option("--x0", x0, "grid origin");
  so->add_option("--horizon", horizon, "unit steps to synthesize");
  so->add_option("--samples", samples_path, "q rows of y(x0 + t/q + k), k = 0..K-1 ('-' for stdin)")->required();

  auto* fu = app.add_subcommand("fundamental", "nonvanishing Casoratian over a grid");
  add_manifest(fu);
  add_grid(fu);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto* sub = app.get_subcommands().front();
  Report rep(sub->get_name());
  rep.put("seed", std::to_string(seed));
  int code = kOk;

  try {
    if (sub == wr || sub == ca || sub == dc) {
      auto m = detail::load_manifest(manifest_path, io);
      code = detail::with_field(m, [&]<Field F>() {
        auto fam = m.family<F>();
        detail::put_family(rep, fam);
        F x = detail::parse_scalar<F>(x_text);
        rep.put("x", x);
        if (sub == wr) {
          rep.put("value", wronskian(fam, x));
        } else if (sub == ca) {
          F h = detail::parse_scalar<F>(h_text);
          rep.put("h", h);
          rep.put("value", casoratian(fam, x, h));
        } else {
          F d = casoratian_delta_form(fam, x);
          F c = casoratian(fam, x);
          bool agree;
          if constexpr (field_traits<F>::exact) {
            agree = d == c;
          } else {
            agree = std::abs(d - c) <= 1e-10 * std::max(std::abs(c), 1e-300);
          }
          rep.put("value", d);
          rep.put("shift_form", c);
          rep.put("agrees", agree);
          if (!agree) return static_cast<int>(kVerificationFailed);
        }
        return static_cast<int>(kOk);
      });
    } else if (sub == ra || sub == iv || sub == fu) {
      auto m = detail::load_manifest(manifest_path, io);
      code = detail::with_field(m, [&]<Field F>() {
        auto fam = m.family<F>();
        detail::put_family(rep, fam);
        if (sub == ra) {
          auto grid = detail::grid_for<F>(m, start, stop, count);
          auto s = ratio_sweep<F>(fam, grid);
          rep.put("grid_points", std::to_string(grid.size()));
          rep.put("excluded", std::to_string(s.excluded.size()));
          rep.put("ratio_mean", s.ratio_mean);
          rep.put("relative_spread", s.ratio_relative_spread);
          rep.put("constant", s.constant_verdict);
          detail::sweep_table(rep, s);
        } else if (sub == iv) {
          std::vector<F> grid;
          if (!start.empty() || m.grid) grid = detail::grid_for<F>(m, start, stop, count);
          auto r = check_invariance<F>(fam, grid);
          rep.put("d_invariant", r.d_invariant);
          rep.put("shift_invariant", r.shift_invariant);
          if constexpr (!field_traits<F>::exact) {
            rep.put("d_residual", r.d_residual);
            rep.put("shift_residual", r.shift_residual);
          }
          rep.put("kappa", r.kappa ? fmt(*r.kappa) : std::string("none"));
          rep.put("kappa_is_constant", r.kappa_is_constant);
          if (r.sweep) {
            rep.put("relative_spread", r.sweep->ratio_relative_spread);
            detail::sweep_table(rep, *r.sweep);
          }
        } else {
          auto grid = detail::grid_for<F>(m, start, stop, count);
          auto r = is_fundamental_set<F>(fam, grid);
          rep.put("grid_points", std::to_string(grid.size()));
          rep.put("fundamental", r.fundamental);
          rep.put("witness_x", r.witness_x);
          rep.put("witness_c", r.witness_c);
        }
        return static_cast<int>(kOk);
      });
    } else if (sub == vp) {
      auto r = verify_power_equality(n_arg, seed, samples);
      rep.put("n", std::to_string(n_arg));
      rep.put("value", r.expected);
      rep.put("holds", r.holds);
      auto& t = rep.table("samples", {"x", "W", "C"});
      for (std::size_t i = 0; i < r.xs.size(); ++i)
        t.rows.push_back({fmt(r.xs[i]), fmt(r.wronskians[i]), fmt(r.casoratians[i])});
      if (!r.holds) code = kVerificationFailed;
    } else if (sub == vb) {
      auto rows = detail::read_rows(detail::read_source(matrix_path, io));
      if (rows.empty()) throw argument_error("matrix file is empty");
      Matrix<Rational> a(rows.size(), rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
          throw argument_error("matrix row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                               " entries, expected " + std::to_string(rows.size()));
        for (std::size_t j = 0; j < rows.size(); ++j) {
          try {
            a(i, j) = parse_rational(rows[i][j]);
          } catch (const std::exception& e) {
            throw argument_error("matrix row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1) + ": " +
                                 e.what());
          }
        }
      }
      unsigned n = static_cast<unsigned>(rows.size() - 1);
      auto r = verify_basis_equality(a, n, seed, samples);
      rep.put("n", std::to_string(n));
      rep.put("det_a", r.det_a);
      rep.put("value", r.value);
      rep.put("holds", r.holds);
      auto& t = rep.table("samples", {"x", "W", "C"});
      for (std::size_t i = 0; i < r.xs.size(); ++i)
        t.rows.push_back({fmt(r.xs[i]), fmt(r.wronskians[i]), fmt(r.casoratians[i])});
      if (!r.holds) code = kVerificationFailed;
    } else if (sub == cl) {
      std::vector<Polynomial> s;
      for (const auto& p : polys) s.push_back(Polynomial::parse(p));
      auto v = classify_subset(s);
      for (std::size_t i = 0; i < s.size(); ++i) rep.put("member." + std::to_string(i + 1), s[i].str());
      rep.put("case_tag", std::string(to_string(v.case_tag)));
      rep.put("rank", std::to_string(v.rank));
      rep.put("span_is_full_Pm", v.span_is_full_Pm);
      rep.put("W", v.w.str());
      rep.put("C", v.c.str());
    } else if (sub == pr) {
      ProportionalityParams p;
      p.n = n_arg;
      p.kind = kind == "binomexp"     ? FamilyKind::binomial_exponential
               : kind == "exptrig"    ? FamilyKind::exp_trig
               : kind == "hyperbolic" ? FamilyKind::hyperbolic
                                      : FamilyKind::exp_poly;
      p.a = parse_complex(a_text);
      p.m = parse_complex(m_text);
      p.omega = parse_real(omega_text);
      for (const auto& b : blocks) {
        auto colon = b.rfind(':');
        if (colon == std::string::npos) throw argument_error("--block expects m:n, got '" + b + "'");
        unsigned bn = 0;
        try {
          bn = static_cast<unsigned>(std::stoul(b.substr(colon + 1)));
        } catch (const std::exception&) {
          throw argument_error("--block expects m:n, got '" + b + "'");
        }
        p.blocks.push_back({parse_complex(b.substr(0, colon)), bn});
      }
      auto r = proportionality_constant(p);
      rep.put("kind", kind);
      if (p.kind != FamilyKind::exp_poly) rep.put("n", std::to_string(p.n));
      if (p.kind == FamilyKind::binomial_exponential) rep.put("a", p.a);
      if (p.kind == FamilyKind::exp_trig || p.kind == FamilyKind::hyperbolic) rep.put("m", p.m);
      if (p.kind == FamilyKind::exp_trig) rep.put("omega", p.omega);
      for (std::size_t i = 0; i < p.blocks.size(); ++i)
        rep.put("block." + std::to_string(i + 1), fmt(p.blocks[i].m) + ":" + std::to_string(p.blocks[i].n));
      rep.put("measured", r.measured);
      rep.put("relative_spread", r.spread);
      rep.put("x_independent", r.x_independent);
      rep.put("predicted", r.predicted ? fmt(*r.predicted) : std::string("none"));
      rep.put("agrees", r.agrees ? fmt(*r.agrees) : std::string("n/a"));
      if (r.stated) rep.put("stated", *r.stated);
      if (r.stated_prefactor) rep.put("stated_prefactor", *r.stated_prefactor);
      if (r.implied_k) rep.put("implied_k", *r.implied_k);
      if (r.asymptotic_ratio) rep.put("asymptotic_ratio", *r.asymptotic_ratio);
      for (const auto& w : r.warnings) rep.warn(w);
      detail::sweep_table(rep, r.sweep);
      if (!r.x_independent || (r.agrees && !*r.agrees)) code = kVerificationFailed;
    } else if (sub == lc) {
      auto m = detail::load_manifest(manifest_path, io);
      auto fam = FunctionFamily<Complex>(m.members);
      detail::put_family(rep, fam);
      double x = parse_real(x_text);
      rep.put("x", x);
      if (lo > hi) throw argument_error("--from must not exceed --to");
      auto hs = dyadic_steps(lo, hi);
      LimitReport r;
      bool ok;
      if (deriv >= 0) {
        if (fam.size() > 1) rep.warn("--derivative uses the first member only");
        r = derivative_limit(m.members.front(), x, static_cast<unsigned>(deriv), hs);
        rep.put("derivative_order", std::to_string(deriv));
        rep.put("target", r.target);
        rep.put("fitted_order", r.order);
        bool exact = std::all_of(r.errors.begin(), r.errors.end(), [](double e) { return e == 0.0; });
        ok = exact || r.order >= 0.9;
      } else {
        r = casoratian_limit(fam, x, hs);
        rep.put("target", r.target);
        rep.put("fitted_order", r.order);
        bool exact = std::all_of(r.errors.begin(), r.errors.end(),
                                 [&](double e) { return e <= 1e-12 * std::max(std::abs(r.target), 1.0); });
        ok = exact || r.order >= 0.9;
        if (r.target.imag() == 0.0) {
          auto s = sign_corollary(fam, x);
          rep.put("sign_corollary", s.wronskian_sign == 0 ? std::string("n/a") : fmt(s.holds));
          if (s.wronskian_sign != 0) {
            rep.put("sign_h", s.h_matched);
            if (!s.holds) ok = false;
          }
        }
      }
      rep.put("converges", ok);
      auto& t = rep.table("steps", {"h", "value", "error"});
      for (std::size_t i = 0; i < r.hs.size(); ++i) t.rows.push_back({fmt(r.hs[i]), fmt(r.values[i]), fmt(r.errors[i])});
      if (!ok) code = kVerificationFailed;
    } else if (sub == so) {
      SolverProblem p{lambda, m_power, x0, q, horizon};
      p.validate();
      auto rows = detail::read_rows(detail::read_source(samples_path, io));
      if (rows.size() != q)
        throw argument_error("samples file has " + std::to_string(rows.size()) + " rows, expected q = " + std::to_string(q));
      Matrix<double> y(q, rows[0].size());
      for (std::size_t t = 0; t < q; ++t) {
        if (rows[t].size() != rows[0].size()) throw argument_error("samples row " + std::to_string(t + 1) + " is ragged");
        for (std::size_t k = 0; k < rows[t].size(); ++k) y(t, k) = parse_real(rows[t][k]);
      }
      auto profiles = recover_profiles(p, y);
      auto s = synthesize(p, profiles);
      double fit = 0.0, scale = 0.0;
      for (std::size_t t = 0; t < q; ++t)
        for (std::size_t k = 0; k < y.cols() && k < horizon; ++k) {
          fit = std::max(fit, std::abs(s.values(t, k) - y(t, k)));
          scale = std::max(scale, std::abs(y(t, k)));
        }
      rep.put("lambda", lambda);
      rep.put("m", std::to_string(m_power));
      rep.put("q", std::to_string(q));
      rep.put("x0", x0);
      rep.put("horizon", std::to_string(horizon));
      rep.put("parity", std::string(to_string(parity_for(lambda))));
      rep.put("det_M_at_x0", det_float(build_M(lambda, m_power, x0)));
      rep.put("det_M_closed_form", det_M_closed_form(lambda, m_power, x0));
      rep.put("max_residual", s.max_residual);
      rep.put("max_abs", s.max_abs);
      rep.put("sample_misfit", fit);
      rep.put("accepted", s.accepted);
      rep.put("det_M_convention", std::string("|lambda|^{m x0} lambda^{m(m-1)/2} prod_{k=0}^{m-1} k!"));
      std::vector<std::string> cols{"t", "x"};
      for (unsigned i = 1; i <= m_power; ++i) cols.push_back("mu_" + std::to_string(i));
      auto& pt = rep.table("profiles", cols);
      for (std::size_t t = 0; t < q; ++t) {
        std::vector<std::string> row{std::to_string(t), fmt(p.point(t, 0))};
        for (const auto& pf : profiles) row.push_back(fmt(pf.samples[t]));
        pt.rows.push_back(std::move(row));
      }
      auto& vt = rep.table("solution", {"t", "k", "x", "y"});
      for (std::size_t t = 0; t < q; ++t)
        for (std::size_t k = 0; k < horizon; ++k)
          vt.rows.push_back({std::to_string(t), std::to_string(k), fmt(p.point(t, k)), fmt(s.values(t, k))});
      if (!s.accepted) code = kVerificationFailed;
    }
  } catch (const argument_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const numeric_error& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const unsupported_operation& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const degenerate_sweep& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const inconsistent_input& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  }

  if (timing) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.put("elapsed_ms", ms);
  }
  rep.write(out, csv);
  return code;
}

}  // namespace casorati::cli
