#include "cli.hpp"

#include "options.hpp"
#include "report.hpp"
#include "suites.hpp"
#include "tables.hpp"

#include <chieuler/chi_eulerian.hpp>
#include <chieuler/error.hpp>
#include <chieuler/eulerian.hpp>
#include <chieuler/lfunction.hpp>
#include <chieuler/padic_verify.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>

namespace chieuler::cli {

namespace {

using Json = nlohmann::ordered_json;

enum Flag : unsigned {
  f_n = 1U << 0,
  f_range = 1U << 1,
  f_modulus = 1U << 2,
  f_char = 1U << 3,
  f_q = 1U << 4,
  f_p = 1U << 5,
  f_precision = 1U << 6,
  f_bits = 1U << 7,
  f_levels = 1U << 8,
  f_variant = 1U << 9,
  f_format = 1U << 10,
  f_out = 1U << 11,
};

void add_flags(CLI::App* app, Options& o, unsigned flags) {
  if (flags & f_n) app->add_option("--n", o.n, "Single index n");
  if (flags & f_range) {
    app->add_option("--min-n", o.min_n, "Smallest n (default 0)");
    app->add_option("--max-n", o.max_n, "Largest n (default 4)");
  }
  if (flags & f_modulus) app->add_option("--modulus", o.moduli_text, "Odd modulus d, or a comma list");
  if (flags & f_char) app->add_option("--char", o.character, "Character index from `chars list`");
  if (flags & f_q) app->add_option("--q", o.q_text, "Comma list of rationals a/b");
  if (flags & f_p) app->add_option("--p", o.p_text, "Odd prime, or a comma list");
  if (flags & f_precision) app->add_option("--precision", o.precision, "p-adic precision k (default 3)");
  if (flags & f_bits) app->add_option("--bits", o.bits, "Binary precision (default 128)")->check(CLI::Range(64L, 100000L));
  if (flags & f_levels) app->add_option("--levels", o.levels_text, "Comma list of truncation levels N");
  if (flags & f_variant) {
    app->add_option("--variant", o.variant_text, "printed|corrected (default corrected)")
        ->check(CLI::IsMember({"printed", "corrected"}));
  }
  if (flags & f_format) app->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  if (flags & f_out) app->add_option("--out", o.out, "Write to PATH instead of stdout");
}

// Routes output to --out when given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open --out path '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

int exit_for(const std::vector<VerificationReport>& reports) {
  const auto count = [&](Status s) {
    return std::count_if(reports.begin(), reports.end(), [s](const VerificationReport& r) { return r.status == s; });
  };
  if (count(Status::fail) > 0) return exit_identity;
  if (count(Status::inconclusive) > 0) return exit_precision;
  return exit_ok;
}

std::string render_q(const Rational& q) { return q.to_string(); }

int cmd_eulerian_classical(const Options& o, std::ostream& out) {
  for (unsigned n : o.n_range(4)) {
    const PolyQ p = eulerian_poly(n).poly;
    std::string line;
    for (long i = 0; i <= p.degree(); ++i) {
      if (i > 0) line += ',';
      line += p.coeff(static_cast<std::size_t>(i)).numerator().get_str();
    }
    if (o.n) {
      out << line << '\n';
    } else {
      out << "n=" << n << ": " << line << '\n';
    }
  }
  return exit_ok;
}

int cmd_eulerian_chi(const Options& o, std::ostream& out) {
  for (long d : o.moduli({3})) {
    const auto all = enumerate_characters(d);
    for (const auto& chi : o.characters(d)) {
      const auto idx = static_cast<std::size_t>(std::find(all.begin(), all.end(), chi) - all.begin());
      for (const auto& q : o.qs({2})) {
        for (unsigned n : o.n_range(4)) {
          Json j;
          j["n"] = n;
          j["d"] = d;
          j["char"] = idx;
          j["exponents"] = chi.exponents_string();
          j["q"] = render_q(q);
          j["value"] = render(chi_eulerian(n, chi, q));
          out << j.dump() << '\n';
        }
      }
    }
  }
  return exit_ok;
}

int cmd_chars_list(const Options& o, std::ostream& out) {
  for (long d : o.moduli({3})) {
    const auto all = enumerate_characters(d);
    const auto group = unit_group(d);
    for (std::size_t i = 0; i < all.size(); ++i) {
      Json j;
      j["d"] = d;
      j["char"] = i;
      j["exponents"] = all[i].exponents_string();
      j["generators"] = group->generators();
      j["order"] = all[i].order();
      j["principal"] = all[i].is_principal();
      j["conductor"] = conductor(all[i]);
      out << j.dump() << '\n';
    }
  }
  return exit_ok;
}

int cmd_chars_conductor(const Options& o, std::ostream& out) {
  if (o.moduli_text.empty() || !o.character) throw UsageError("chars conductor needs --modulus and --char");
  for (long d : o.moduli()) {
    for (const auto& chi : o.characters(d)) out << conductor(chi) << '\n';
  }
  return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.name.empty()) throw UsageError("verify suite needs --name");
  const auto reports = run_suite(o.name, o);
  Sink sink(o.out, out);
  for (const auto& r : reports) sink.stream() << r.to_json().dump() << '\n';
  return exit_for(reports);
}

int cmd_lfunction(const Options& o, std::ostream& out) {
  if (o.s_text.empty()) throw UsageError("lfunction eval needs --s");
  const auto ss = parse_rationals(o.s_text);
  const auto ts = parse_rationals(o.t_text);
  if (ts.size() != 1) throw UsageError("--t takes a single rational");
  for (long d : o.moduli({1})) {
    const auto all = enumerate_characters(d);
    for (const auto& chi : o.characters(d)) {
      const auto idx = static_cast<std::size_t>(std::find(all.begin(), all.end(), chi) - all.begin());
      for (const auto& q : o.qs({2})) {
        for (const auto& s : ss) {
          const auto v = l_eulerian(s, ts.front(), chi, q, o.bits);
          Json j;
          j["s"] = s.to_string();
          j["t"] = ts.front().to_string();
          j["d"] = d;
          j["char"] = idx;
          j["exponents"] = chi.exponents_string();
          j["q"] = q.to_string();
          j["bits"] = o.bits;
          j["value_re"] = render(v.value.re, o.bits);
          j["value_im"] = render(v.value.im, o.bits);
          j["terms"] = v.terms;
          j["tail_bound"] = render(v.tail_bound, 64);
          j["rounding_bound"] = render(v.rounding_bound, 64);
          out << j.dump() << '\n';
        }
      }
    }
  }
  return exit_ok;
}

Measure parse_measure(const std::string& text, unsigned long d) {
  if (text == "q") return {MeasureKind::q, 1};
  if (text == "-q") return {MeasureKind::neg_q, 1};
  if (text == "-q^-1") return {MeasureKind::neg_q_inv, 1};
  if (text == "-q^-d") return {MeasureKind::neg_q_inv_pow, d};
  throw UsageError("--measure must be one of q, -q, -q^-1, -q^-d");
}

int cmd_padic_integral(const Options& o, std::ostream& out) {
  const auto primes = o.primes();
  if (primes.size() != 1) throw UsageError("padic integral takes a single --p");
  const std::uint64_t p = primes.front();
  const auto qs = o.qs({Rational(static_cast<long>(p + 1))});
  const unsigned n = o.n.value_or(1);
  IntegrandSpec f{Monomial{n}, 0};
  unsigned long d = 1;
  if (!o.moduli_text.empty()) {
    const auto ms = o.moduli();
    if (ms.size() != 1) throw UsageError("padic integral takes a single --modulus");
    const auto chars = o.characters(ms.front());
    if (chars.size() != 1) throw UsageError("padic integral with --modulus needs --char");
    f.kind = ChiMonomial{chars.front(), n};
    d = static_cast<unsigned long>(ms.front());
  } else if (!o.x0_text.empty()) {
    const auto x0 = parse_rationals(o.x0_text);
    if (x0.size() != 1) throw UsageError("--x0 takes a single rational");
    f.kind = ShiftedMonomial{x0.front(), n};
  }
  const Measure measure = parse_measure(o.measure, d);
  for (const auto& q : qs) {
    for (unsigned N : o.levels()) {
      const auto v = truncated_integral(f, p, q, measure, N, o.k());
      Json j;
      j["f"] = f.describe();
      j["measure"] = measure.describe();
      j["p"] = p;
      j["q"] = q.to_string();
      j["k"] = o.k();
      j["N"] = N;
      j["value"] = v.to_string();
      j["residue"] = v.residue();
      out << j.dump() << '\n';
    }
  }
  return exit_ok;
}

int cmd_emit_table(const Options& o, std::ostream& out) {
  if (o.kind.empty()) throw UsageError("emit table needs --kind");
  const Table t = build_table(o.kind, o);
  Sink sink(o.out, out);
  if (o.format == "csv") {
    write_csv(t, sink.stream());
  } else {
    write_json(t, sink.stream());
  }
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dirichlet-type Eulerian polynomials, fermionic p-adic q-integrals and the Eulerian L-function",
               "chieuler"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, unsigned flags,
                  int (*fn)(const Options&, std::ostream&)) {
    auto* cmd = parent->add_subcommand(name, help);
    add_flags(cmd, o, flags);
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };

  auto* eulerian = app.add_subcommand("eulerian", "Eulerian polynomials")->require_subcommand(1);
  leaf(eulerian, "classical", "Coefficients of A_n(t)", f_n | f_range, cmd_eulerian_classical);
  leaf(eulerian, "chi", "A_{n,chi}(-q) as exact values", f_n | f_range | f_modulus | f_char | f_q, cmd_eulerian_chi);

  auto* chars = app.add_subcommand("chars", "Dirichlet characters")->require_subcommand(1);
  leaf(chars, "list", "Enumerate characters mod d", f_modulus, cmd_chars_list);
  leaf(chars, "conductor", "Conductor of one character", f_modulus | f_char, cmd_chars_conductor);

  auto* verify = app.add_subcommand("verify", "Verification suites")->require_subcommand(1);
  auto* suite = leaf(verify, "suite", "Run one verification suite",
                     f_n | f_range | f_modulus | f_char | f_q | f_p | f_precision | f_bits | f_levels | f_variant |
                         f_out,
                     cmd_verify);
  suite->add_option("--name", o.name, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  suite->add_option("--s", o.s_text, "mellin-term: comma list of real s > 0");
  suite->add_option("--m", o.m_text, "mellin-term: comma list of m >= 1");

  auto* lfunction = app.add_subcommand("lfunction", "Eulerian L-function")->require_subcommand(1);
  auto* eval = leaf(lfunction, "eval", "L_E(s|chi) by the certified series", f_modulus | f_char | f_q | f_bits,
                    cmd_lfunction);
  eval->add_option("--s", o.s_text, "Comma list of real parts")->required();
  eval->add_option("--t", o.t_text, "Imaginary part (default 0)");

  auto* padic = app.add_subcommand("padic", "Fermionic p-adic q-integrals")->require_subcommand(1);
  auto* integral = leaf(padic, "integral", "Truncated integral mod p^k",
                        f_n | f_modulus | f_char | f_q | f_p | f_precision | f_levels, cmd_padic_integral);
  integral->add_option("--x0", o.x0_text, "Integrate (x0 + x)^n");
  integral->add_option("--measure", o.measure, "q | -q | -q^-1 | -q^-d (default -q^-1)");

  auto* emit = app.add_subcommand("emit", "Tables")->require_subcommand(1);
  auto* table = leaf(emit, "table", "Write a table", f_n | f_range | f_modulus | f_char | f_q | f_bits | f_format | f_out,
                     cmd_emit_table);
  table->add_option("--kind", o.kind, "classical | chi-eulerian | weight-zero-euler | l-values")
      ->required()
      ->check(CLI::IsMember(table_kinds()));
  table->add_option("--x", o.x_text, "weight-zero-euler: comma list of x");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  if (!action) {
    err << "error: no command\n";
    return exit_usage;
  }
  try {
    return action(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ConvergenceDomain ? exit_precision : exit_usage;
  }
}

}  // namespace chieuler::cli
