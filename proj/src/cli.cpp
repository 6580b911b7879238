#include "kfull/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kfull/core_arith.hpp"
#include "kfull/density.hpp"
#include "kfull/empirical.hpp"
#include "kfull/lambda_set.hpp"
#include "kfull/power_sums.hpp"
#include "kfull/reference_tables.hpp"
#include "kfull/zeta.hpp"

namespace kfull::cli {
namespace {

using json = nlohmann::ordered_json;
using density::DensityEngine;
using density::Method;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string value_string(const Real& x) { return format_sci(x, 25); }

// Printed radii are rounded away from zero so they never understate the bound.
std::string radius_string(const Real& r) {
  if (r == 0) return "0";
  return format_sci(r * Real(1.01), 3);
}

std::uint64_t empirical_N(const RunConfig& c) {
  if (c.N) return c.N;
  if (c.quick) return 10'000;
  return c.k == 2 ? 1'000'000 : 100'000;
}

double tolerance(const RunConfig& c, const std::string& name, double fallback) {
  auto it = c.tolerance.find(name);
  return it == c.tolerance.end() ? fallback : it->second;
}

double empirical_tolerance(const RunConfig& c) {
  double t = c.k == 2 ? 0.005 : 0.02;
  if (c.quick) t *= 4;
  return tolerance(c, "empirical", t);
}

density::EngineConfig engine_config(const RunConfig& c, unsigned max_index) {
  density::EngineConfig e;
  e.digits = c.digits;
  e.prime_cutoff = c.prime_cutoff;
  e.r_max = c.r_max;
  e.max_index = std::max(10u, max_index);
  return e;
}

density::SubsetSpec parse_subset(unsigned k, const std::vector<std::string>& tuples) {
  density::SubsetSpec s{k, {}};
  for (const auto& t : tuples) s.elements.push_back(dirichlet::LambdaElement::parse(k, t));
  return s;
}

std::string tuple_string(const std::vector<u64>& b) {
  std::ostringstream os;
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  return os.str();
}

std::string csv_quote(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

// ---- table -------------------------------------------------------------

void cmd_table(const RunConfig& c, std::ostream& out) {
  const unsigned L = c.max_index;
  const DensityEngine engine(c.k, engine_config(c, 2 * L));
  const Method method = density::parse_method(c.method);
  const auto t = engine.table(L, method);
  switch (c.format) {
    case Format::text: {
      out << "d(A_{l,m}) for k = " << c.k << " (method " << c.method << ")\n";
      out << std::setw(4) << "l\\m";
      for (unsigned m = 0; m <= L; ++m) out << std::setw(10) << m;
      out << "\n";
      for (unsigned l = 0; l <= L; ++l) {
        out << std::setw(4) << l;
        for (unsigned m = 0; m <= L; ++m)
          out << std::setw(10) << (m < l ? std::string() : round_decimal(t.entry(l, m).value(), 6, c.rounding));
        out << "\n";
      }
      break;
    }
    case Format::csv:
      out << "k,l,m,value,radius,method\n";
      for (unsigned l = 0; l <= L; ++l)
        for (unsigned m = l; m <= L; ++m)
          out << c.k << "," << l << "," << m << "," << value_string(t.entry(l, m).value()) << ","
              << radius_string(t.entry(l, m).radius()) << "," << c.method << "\n";
      break;
    case Format::json: {
      json j{{"k", c.k}, {"L", L}, {"method", c.method}, {"entries", json::array()}};
      for (unsigned l = 0; l <= L; ++l)
        for (unsigned m = l; m <= L; ++m)
          j["entries"].push_back({{"l", l},
                                  {"m", m},
                                  {"value", value_string(t.entry(l, m).value())},
                                  {"radius", radius_string(t.entry(l, m).radius())}});
      out << j.dump(2) << "\n";
      break;
    }
  }
}

// ---- constants ---------------------------------------------------------

void emit_named(const RunConfig& c, const std::vector<std::pair<std::string, BoundedReal>>& rows,
                std::ostream& out) {
  switch (c.format) {
    case Format::text:
      for (const auto& [name, v] : rows)
        out << std::left << std::setw(10) << name << std::right << " " << value_string(v.value()) << " +/- "
            << radius_string(v.radius()) << "\n";
      break;
    case Format::csv:
      out << "k,name,value,radius\n";
      for (const auto& [name, v] : rows)
        out << c.k << "," << name << "," << value_string(v.value()) << "," << radius_string(v.radius()) << "\n";
      break;
    case Format::json: {
      json j{{"k", c.k}, {"constants", json::array()}};
      for (const auto& [name, v] : rows)
        j["constants"].push_back(
            {{"name", name}, {"value", value_string(v.value())}, {"radius", radius_string(v.radius())}});
      out << j.dump(2) << "\n";
      break;
    }
  }
}

void cmd_constants(const RunConfig& c, std::ostream& out) {
  const unsigned L = c.max_index;
  const DensityEngine engine(c.k, engine_config(c, L));
  std::vector<std::pair<std::string, BoundedReal>> rows;
  rows.emplace_back("C_" + std::to_string(c.k), engine.C());
  if (c.k == 2) rows.emplace_back("c_2", dirichlet::zeta(Real(3) / 2, c.digits) / dirichlet::zeta(Real(3), c.digits));
  for (unsigned l = 0; l <= L; ++l) rows.emplace_back("d_" + std::to_string(l), engine.density_shiu(static_cast<int>(l)));
  for (unsigned m = 1; m <= std::max(1u, L); ++m) rows.emplace_back("P(" + std::to_string(m) + ")", engine.power_sums()(m));
  emit_named(c, rows, out);
}

// ---- enumerate ---------------------------------------------------------

void cmd_enumerate(const RunConfig& c, const std::string& what, std::ostream& out) {
  if (what == "lambda") {
    const double bound = c.bound > 0 ? c.bound : 30;
    const auto elems = dirichlet::enumerate_lambda(c.k, bound);
    json j = json::array();
    if (c.format == Format::csv) out << "index,b,lambda,lambda_pow_k\n";
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const auto& e = elems[i];
      const std::string lam = format_sci(dirichlet::lambda_value(e).value(), 20);
      switch (c.format) {
        case Format::text: out << e.to_string() << "  " << lam << "  " << to_string(e.kth_power()) << "\n"; break;
        case Format::csv:
          out << i << "," << csv_quote(e.to_string()) << "," << lam << "," << to_string(e.kth_power()) << "\n";
          break;
        case Format::json:
          j.push_back({{"b", e.b()}, {"lambda", lam}, {"lambda_pow_k", to_string(e.kth_power())}});
          break;
      }
    }
    if (c.format == Format::json) out << json{{"k", c.k}, {"bound", bound}, {"lambda", j}}.dump(2) << "\n";
  } else if (what == "kfull") {
    const double bound = c.bound > 0 ? c.bound : 100;
    if (bound >= 1e30) throw UsageError("kfull bound too large");
    const u128 X = parse_u128(format_fixed(floor(Real(bound)), 0));
    arith::KFullStream stream(c.k, 1, X, c.proper);
    json j = json::array();
    if (c.format == Format::csv) out << "value,a,b\n";
    while (auto item = stream.next()) {
      const auto& b = stream.shape(item->shape).b;
      const std::string bs = b.empty() ? tuple_string(std::vector<u64>(c.k - 1, 1)) : tuple_string(b);
      switch (c.format) {
        case Format::text: out << to_string(item->value) << "\n"; break;
        case Format::csv: out << to_string(item->value) << "," << item->a << "," << csv_quote(bs) << "\n"; break;
        case Format::json: j.push_back({{"value", to_string(item->value)}, {"a", item->a}, {"b", bs}}); break;
      }
    }
    if (c.format == Format::json) out << json{{"k", c.k}, {"proper", c.proper}, {"kfull", j}}.dump(2) << "\n";
  } else if (what == "members_B") {
    const auto I = parse_subset(c.k, c.I);
    const auto J = parse_subset(c.k, c.J);
    const u64 N = c.N ? c.N : 100;
    const auto ns = empirical::members_B(c.k, I, J, N);
    switch (c.format) {
      case Format::text:
        for (u64 n : ns) out << n << "\n";
        break;
      case Format::csv:
        out << "n\n";
        for (u64 n : ns) out << n << "\n";
        break;
      case Format::json:
        out << json{{"k", c.k}, {"I", c.I}, {"J", c.J}, {"N", N}, {"members", ns}}.dump(2) << "\n";
        break;
    }
  } else {
    throw UsageError("enumerate expects lambda, kfull or members_B");
  }
}

// ---- empirical ---------------------------------------------------------

bool cmd_empirical(const RunConfig& c, std::ostream& out) {
  const u64 N = empirical_N(c);
  const auto counts = empirical::empirical_table(c.k, N, c.threads);
  const unsigned L = std::max(c.max_index, counts.max_index());
  const DensityEngine engine(c.k, engine_config(c, 2 * L));
  const auto report = empirical::compare_tables(counts, engine.table(L));
  const double tol = empirical_tolerance(c);
  const bool ok = report.max_abs_deviation <= tol;
  switch (c.format) {
    case Format::text:
      out << "k = " << c.k << ", N = " << N << "\n";
      out << "   l   m      count   frequency    analytic   deviation\n";
      for (const auto& d : report.cells) {
        const u64 n = counts.count(d.l, d.m);
        if (n == 0 && d.expected < 1e-6) continue;
        out << std::setw(4) << d.l << std::setw(4) << d.m << std::setw(11) << n << std::fixed
            << std::setprecision(6) << std::setw(12) << d.observed << std::setw(12) << d.expected
            << std::setw(12) << d.deviation << "\n";
      }
      out << std::defaultfloat << std::setprecision(6);
      out << "max deviation " << report.max_abs_deviation << ", tolerance " << tol << ": "
          << (ok ? "within tolerance" : "OUTSIDE tolerance") << "\n";
      break;
    case Format::csv:
      out << "k,N,l,m,count,frequency,analytic,deviation\n";
      out << std::setprecision(17);
      for (const auto& d : report.cells)
        out << c.k << "," << N << "," << d.l << "," << d.m << "," << counts.count(d.l, d.m) << ","
            << d.observed << "," << d.expected << "," << d.deviation << "\n";
      break;
    case Format::json: {
      json j{{"k", c.k}, {"N", N}, {"tolerance", tol}, {"max_deviation", report.max_abs_deviation},
             {"within_tolerance", ok}, {"cells", json::array()}};
      for (const auto& d : report.cells)
        j["cells"].push_back({{"l", d.l}, {"m", d.m}, {"count", counts.count(d.l, d.m)},
                              {"frequency", d.observed}, {"analytic", d.expected}, {"deviation", d.deviation}});
      out << j.dump(2) << "\n";
      break;
    }
  }
  return ok;
}

// ---- verify ------------------------------------------------------------

bool cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto checks = run_checks(c);
  bool ok = true;
  for (const auto& ch : checks) ok = ok && ch.passed;
  switch (c.format) {
    case Format::text:
      for (const auto& ch : checks)
        out << (ch.passed ? "PASS " : "FAIL ") << std::left << std::setw(22) << ch.name << std::right
            << " observed " << std::setprecision(3) << std::scientific << ch.observed << "  tolerance "
            << ch.tolerance << std::defaultfloat << "  " << ch.detail << "\n";
      out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
      break;
    case Format::csv:
      out << "k,check,passed,observed,tolerance\n" << std::setprecision(6);
      for (const auto& ch : checks)
        out << c.k << "," << ch.name << "," << (ch.passed ? 1 : 0) << "," << ch.observed << "," << ch.tolerance << "\n";
      break;
    case Format::json: {
      json j{{"k", c.k}, {"passed", ok}, {"checks", json::array()}};
      for (const auto& ch : checks)
        j["checks"].push_back({{"name", ch.name}, {"passed", ch.passed}, {"observed", ch.observed},
                               {"tolerance", ch.tolerance}, {"detail", ch.detail}});
      out << j.dump(2) << "\n";
      break;
    }
  }
  return ok;
}

void add_check(std::vector<Check>& checks, const RunConfig& c, const std::string& name, double observed,
               double fallback, std::string detail = {}) {
  const double tol = tolerance(c, name, fallback);
  checks.push_back({name, observed, tol, observed <= tol, std::move(detail)});
}

double to_d(const Real& x) { return x.convert_to<double>(); }

}  // namespace

void RunConfig::validate() const {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (k > 8) throw std::invalid_argument("k above 8 is not supported");
  if (digits < 6 || digits > 70) throw std::invalid_argument("digits must lie in [6, 70]");
  if (trunc_B < 2) throw std::invalid_argument("trunc-B must be at least 2");
  if (prime_cutoff < 2) throw std::invalid_argument("prime-cutoff must be at least 2");
  if (threads < 1) throw std::invalid_argument("threads must be positive");
  if (bound < 0) throw std::invalid_argument("bound must be positive");
}

std::string round_decimal(const Real& x, int decimals, Rounding mode) {
  const bool negative = x < 0;
  const Real y = abs(x) * pow(Real(10), decimals);
  Real whole = floor(y);
  const Real frac = y - whole;
  if (mode == Rounding::half_even && (frac > Real(0.5) || (frac == Real(0.5) && fmod(whole, Real(2)) == 1)))
    whole += 1;
  std::string digits = whole.str(0, std::ios_base::fixed);
  digits = digits.substr(0, digits.find('.'));
  if (digits.size() <= static_cast<std::size_t>(decimals))
    digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
  if (decimals > 0) digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  return (negative && whole != 0 ? "-" : "") + digits;
}

std::vector<Check> run_checks(const RunConfig& c) {
  c.validate();
  std::vector<Check> checks;
  const unsigned L = c.max_index;
  const DensityEngine engine(c.k, engine_config(c, 2 * L));

  {  // direct, inversion and xi routes
    double worst = 0;
    const Method ms[] = {Method::direct, Method::inversion, Method::xi};
    for (unsigned l = 0; l <= L; ++l)
      for (unsigned m = 0; m <= L; ++m)
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j) {
            const Real d = abs(engine.density_A(static_cast<int>(l), static_cast<int>(m), ms[i]).value() -
                               engine.density_A(static_cast<int>(l), static_cast<int>(m), ms[j]).value());
            worst = std::max(worst, to_d(d));
          }
    add_check(checks, c, "three_route", worst, 1e-9, "max pairwise difference, l,m <= " + std::to_string(L));
  }
  {
    double worst = 0;
    bool contains = true;
    for (Method m : {Method::direct, Method::inversion, Method::xi}) {
      const auto n = engine.normalization_check(m);
      worst = std::max(worst, to_d(abs(n.value() - 1) + n.radius()));
      contains = contains && n.contains(Real(1));
    }
    add_check(checks, c, "normalization", contains ? worst : 1.0, 1e-9, "|F(2) - 1| + radius over all routes");
  }
  {
    double worst = 0;
    for (unsigned l = 0; l <= L; ++l) {
      const auto a = engine.density_shiu(static_cast<int>(l), density::ShiuMethod::xi_alternating);
      const auto b = engine.density_shiu(static_cast<int>(l), density::ShiuMethod::row_sum);
      worst = std::max(worst, to_d(abs(a.value() - b.value())));
    }
    add_check(checks, c, "row_sum", worst, 1e-9, "Shiu densities vs row sums, l <= " + std::to_string(L));
  }
  {
    double asym = 0, multi = 0;
    unsigned nonpositive = 0;
    for (unsigned l = 0; l <= L; ++l)
      for (unsigned m = 0; m <= L; ++m) {
        const auto v = engine.density_A(static_cast<int>(l), static_cast<int>(m));
        const auto w = engine.density_A(static_cast<int>(m), static_cast<int>(l));
        if (v.value() != w.value()) asym += 1;
        const auto base = engine.density_A(0, static_cast<int>(l + m));
        multi = std::max(multi, to_d(abs(v.value() - base.value() * binomial(l + m, l)) / v.value()));
        if (!v.strictly_positive()) ++nonpositive;
      }
    add_check(checks, c, "symmetry", asym, 0, "cells with A(l,m) != A(m,l)");
    add_check(checks, c, "multinomial", multi, 1e-60, "relative gap to C(l+m,l) A(0,l+m)");
    add_check(checks, c, "positivity", nonpositive, 0, "cells whose lower bound is <= 0");
  }
  if (auto table = reference::published_table(c.k)) {
    double worst = 0;
    for (const auto& cell : *table)
      worst = std::max(worst, std::abs(engine.density_A(static_cast<int>(cell.l), static_cast<int>(cell.m)).to_double() -
                                       cell.value));
    add_check(checks, c, "golden_table", worst, reference::kTableTolerance, "published six-decimal table");
  }
  {
    const unsigned triples = c.quick ? 1000 : 10000;
    const auto lambdas = dirichlet::first_lambdas(c.k, 50);
    std::mt19937_64 rng(c.seed);
    unsigned disagreements = 0, non_unique = 0;
    for (unsigned t = 0; t < triples; ++t) {
      const u64 n = 1 + rng() % 100000;
      const auto& e = lambdas[rng() % lambdas.size()];
      const unsigned j = 1 + static_cast<unsigned>(rng() % 2);
      const auto r = empirical::lemma_check(n, e, j);
      if (r.criterion != r.direct) ++disagreements;
      if (r.direct && r.witnesses != 1) ++non_unique;
    }
    add_check(checks, c, "lemma_equivalence", disagreements, 0, std::to_string(triples) + " random triples");
    add_check(checks, c, "lemma_uniqueness", non_unique, 0, "positive cases without a unique witness");
  }
  {
    const u64 N = empirical_N(c);
    const auto counts = empirical::empirical_table(c.k, N, c.threads);
    const unsigned Le = std::max(L, counts.max_index());
    const DensityEngine wide(c.k, engine_config(c, 2 * Le));
    const auto rep = empirical::compare_tables(counts, wide.table(Le));
    add_check(checks, c, "empirical", rep.max_abs_deviation, empirical_tolerance(c), "N = " + std::to_string(N));
  }
  {
    const u64 B = c.quick ? std::min<u64>(c.trunc_B, 2000) : c.trunc_B;
    const auto direct = dirichlet::power_sums_direct(c.k, 8, B);
    double excess = -1;
    for (unsigned m = 1; m <= 8; ++m) {
      const auto& e = engine.power_sums()(m);
      const auto& d = direct[m - 1];
      excess = std::max(excess, to_d(abs(e.value() - d.value()) - e.radius() - d.radius()));
    }
    add_check(checks, c, "power_sum_cross", excess, 0, "|direct - Euler| - radii, B = " + std::to_string(B));
    if (c.k == 2) {
      double ex = -1;
      for (unsigned m = 1; m <= 8; ++m) {
        const auto closed = dirichlet::zeta(Real(3 * m) / 2, c.digits) / dirichlet::zeta(Real(3 * m), c.digits) -
                            BoundedReal::exact(1);
        const auto& e = engine.power_sums()(m);
        ex = std::max(ex, to_d(abs(e.value() - closed.value()) - e.radius() - closed.radius()));
      }
      add_check(checks, c, "power_sum_closed_form", ex, 0, "zeta(3m/2)/zeta(3m) - 1 vs Euler");
    }
  }
  {
    const auto elems = dirichlet::first_lambdas(c.k, 200);
    const auto finite = density::xi_direct(elems, 10);
    Real head = 0;
    for (const auto& e : elems) head += dirichlet::lambda_inverse_power(e, 1).value();
    // Omitted subsets contain a tail element: 0 <= xi_r - finite_r <= T xi_{r-1}.
    const Real T = std::max(Real(0), engine.power_sums()(1).upper() - head);
    double excess = -1;
    for (unsigned r = 1; r <= 10; ++r) {
      const auto& x = engine.xi()[r];
      const Real diff = x.value() - finite[r];
      const Real slack = x.radius() + pow10_neg(50);
      const Real over = diff - T * engine.xi()[r - 1].upper() - slack;
      const Real under = -diff - slack;
      excess = std::max(excess, to_d(std::max(over, under)));
    }
    add_check(checks, c, "newton_xi", excess, 0, "Newton xi vs first 200 elements plus tail");
  }
  return checks;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "text", rounding = "half_even", what;
  std::vector<std::string> tolerances;

  CLI::App app{"Densities of k-full integers between consecutive k-th powers", "kfull"};
  app.set_config("--config", "", "TOML or INI file with option defaults");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--k", cfg.k, "k >= 2");
  app.add_option("--max-index", cfg.max_index, "largest l, m in tables (L)");
  app.add_option("--digits", cfg.digits, "working precision of the power sums");
  app.add_option("--trunc-B", cfg.trunc_B, "coordinate bound for direct power sums");
  app.add_option("--r-max", cfg.r_max, "xi guard order (0 = automatic)");
  app.add_option("--prime-cutoff", cfg.prime_cutoff, "primes multiplied explicitly in the Euler product");
  app.add_option("--N", cfg.N, "range bound for empirical runs and members_B");
  app.add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--out", cfg.out, "output path (default stdout)");
  app.add_option("--threads", cfg.threads, "worker threads for empirical sweeps");
  app.add_flag("--quick", cfg.quick, "smaller N and trial counts with widened tolerances");
  app.add_option("--method", cfg.method)->check(CLI::IsMember({"direct", "inversion", "xi"}));
  app.add_option("--rounding", rounding, "text table rounding")->check(CLI::IsMember({"half_even", "truncate"}));
  app.add_option("--bound", cfg.bound, "bound for enumerate lambda / kfull");
  app.add_flag("--proper", cfg.proper, "enumerate kfull: exclude perfect k-th powers");
  app.add_option("--I", cfg.I, "b-tuples of the left set, e.g. 2 or 2,1");
  app.add_option("--J", cfg.J, "b-tuples of the right set");
  app.add_option("--tolerance", tolerances, "override a check tolerance, name=value");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");

  auto* table = app.add_subcommand("table", "density table d(A_{l,m})");
  auto* constants = app.add_subcommand("constants", "C_k, c_2, Shiu densities, power sums");
  auto* verify = app.add_subcommand("verify", "run the cross-check suite");
  auto* enumerate = app.add_subcommand("enumerate", "list lambda, kfull or members_B");
  enumerate->add_option("what", what, "lambda | kfull | members_B")->required()->check(
      CLI::IsMember({"lambda", "kfull", "members_B"}));
  auto* emp = app.add_subcommand("empirical", "exact counts against the analytic table");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    cfg.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::text;
    cfg.rounding = rounding == "truncate" ? Rounding::truncate : Rounding::half_even;
    for (const auto& t : tolerances) {
      const auto eq = t.find('=');
      if (eq == std::string::npos) throw UsageError("tolerance must be name=value: " + t);
      cfg.tolerance[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
    }
    cfg.validate();

    std::ofstream file;
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file) throw UsageError("cannot open " + cfg.out);
    }
    std::ostream& sink = cfg.out.empty() ? out : file;

    if (table->parsed()) cmd_table(cfg, sink);
    if (constants->parsed()) cmd_constants(cfg, sink);
    if (enumerate->parsed()) cmd_enumerate(cfg, what, sink);
    if (emp->parsed() && !cmd_empirical(cfg, sink)) return 1;
    if (verify->parsed() && !cmd_verify(cfg, sink)) return 1;
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace kfull::cli
