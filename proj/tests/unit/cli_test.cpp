#include "cli.hpp"
#include "tables.hpp"

#include <chieuler/chi_eulerian.hpp>
#include <chieuler/eulerian.hpp>
#include <chieuler/lfunction.hpp>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace chieuler;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

std::string strip_timing(const std::string& text) {
  std::string out;
  for (auto j : lines(text)) {
    j.erase("elapsed_ms");
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("eulerian classical") {
  const auto r = run({"eulerian", "classical", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,4,1\n");
}

TEST_CASE("interpolation suite example") {
  const auto r = run({"verify", "suite", "--name", "interpolation", "--max-n", "4", "--modulus", "3", "--q", "2"});
  CHECK(r.code == 0);
  const auto reports = lines(r.out);
  CHECK(reports.size() == 10);
  for (const auto& j : reports) CHECK(j["status"] == "pass");
  // The exponent tuple is echoed next to the index.
  CHECK(reports.front()["params"]["exponents"] == "(0)");
}

TEST_CASE("printed distribution identity fails with ratio q^2") {
  const auto r = run({"verify", "suite", "--name", "eq16-distribution", "--variant", "printed", "--max-n", "2",
                      "--modulus", "3", "--q", "2"});
  CHECK(r.code == 1);
  const auto reports = lines(r.out);
  REQUIRE(!reports.empty());
  for (const auto& j : reports) {
    CHECK(j["status"] == "fail");
    CHECK(j["variant"] == "printed");
    if (!j["ratio"].is_null()) CHECK(j["ratio"] == "4/1");
  }
  const auto c = run({"verify", "suite", "--name", "eq16-distribution", "--max-n", "2", "--modulus", "3", "--q", "2"});
  CHECK(c.code == 0);
}

TEST_CASE("exit code matrix") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"verify", "suite"}).code == 2);
  CHECK(run({"verify", "suite", "--name", "nope"}).code == 2);
  CHECK(run({"verify", "suite", "--name", "witt", "--p", "4"}).code == 2);
  CHECK(run({"verify", "suite", "--name", "witt", "--p", "5", "--q", "2"}).code == 2);
  CHECK(run({"verify", "suite", "--name", "interpolation", "--modulus", "4"}).code == 2);
  CHECK(run({"verify", "suite", "--name", "interpolation", "--modulus", "3", "--char", "7"}).code == 2);
  CHECK(run({"verify", "suite", "--name", "interpolation", "--q", "x/2"}).code == 2);
  CHECK(run({"verify", "suite", "--name", "interpolation", "--variant", "other"}).code == 2);
  CHECK(run({"verify", "suite", "--name", "witt-chi", "--modulus", "5", "--p", "3"}).code == 2);
  // q <= 1 leaves the convergence domain of the series.
  CHECK(run({"verify", "suite", "--name", "interpolation", "--modulus", "3", "--q", "1/2"}).code == 3);
  CHECK(run({"lfunction", "eval", "--s", "0", "--q", "1"}).code == 3);
  // Too few levels: Corollary 4 cannot report convergence.
  CHECK(run({"verify", "suite", "--name", "corollary4-probe", "--modulus", "3", "--p", "3", "--levels", "2",
             "--max-n", "1"})
            .code == 3);
  // Modulus 1 at n = 0 is a genuine identity failure.
  CHECK(run({"verify", "suite", "--name", "interpolation", "--modulus", "1", "--n", "0"}).code == 1);
  CHECK(run({"verify", "suite", "--name", "witt", "--max-n", "3"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("every suite runs on the default grid") {
  for (const std::string name : {"eq19-vs-eq20", "eq12-series", "eq13-series", "eq16-distribution", "witt",
                                 "witt-chi", "integral-eq", "corollary4-probe", "mellin-term"}) {
    const auto r = run({"verify", "suite", "--name", name});
    INFO(name << ": " << r.err);
    CHECK(r.code == 0);
    CHECK(!lines(r.out).empty());
  }
  // Interpolation fails only at modulus 1, n = 0.
  const auto r = run({"verify", "suite", "--name", "interpolation"});
  CHECK(r.code == 1);
  for (const auto& j : lines(r.out)) {
    const bool degenerate = j["params"]["d"] == "1" && j["params"]["n"] == "0";
    CHECK((j["status"] == "fail") == degenerate);
  }
}

TEST_CASE("reports are deterministic and sorted") {
  const std::vector<std::string> args = {"verify", "suite", "--name", "witt-chi", "--max-n", "2"};
  const auto a = run(args), b = run(args);
  CHECK(strip_timing(a.out) == strip_timing(b.out));
  const auto reports = lines(a.out);
  for (const auto& j : reports) {
    CHECK(j["variant"] == "corrected");
    CHECK(j.contains("printed_form"));
    CHECK(j.contains("corrected_form"));
    CHECK(j["metric"]["kind"] == "padic-valuation");
  }
  const auto n = lines(run({"verify", "suite", "--name", "eq13-series", "--modulus", "3", "--q", "2", "--max-n",
                            "11"})
                           .out);
  // Numeric params sort numerically: n = 10 comes after n = 9.
  CHECK(n[10]["params"]["n"] == "10");
}

TEST_CASE("corollary 4 reports state both candidates") {
  const auto r = run({"verify", "suite", "--name", "corollary4-probe", "--modulus", "3", "--p", "3", "--max-n", "2"});
  CHECK(r.code == 0);
  for (const auto& j : lines(r.out)) {
    CHECK(j.contains("candidate_2SA"));
    CHECK(j.contains("candidate_2q2SA"));
    CHECK(j["converged"] == true);
  }
}

TEST_CASE("classical table as csv") {
  const auto r = run({"emit", "table", "--kind", "classical", "--max-n", "5", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  const auto t = cli::read_csv(is);
  CHECK(t.header == std::vector<std::string>{"n", "coefficients"});
  REQUIRE(t.rows.size() == 6);
  CHECK(t.rows[5].back() == "1,26,66,26,1");
  CHECK(r.out.find("\"1,26,66,26,1\"\r\n") != std::string::npos);
}

TEST_CASE("chi-eulerian table as json") {
  const auto r =
      run({"emit", "table", "--kind", "chi-eulerian", "--modulus", "3", "--max-n", "1", "--q", "2", "--format", "json"});
  CHECK(r.code == 0);
  const auto rows = nlohmann::json::parse(r.out);
  bool saw0 = false, saw1 = false;
  for (const auto& row : rows) {
    if (row["char"] == 1 && row["n"] == 0) saw0 = row["value"] == "-4/1";
    if (row["char"] == 1 && row["n"] == 1) saw1 = row["value"] == "12/1";
  }
  CHECK(saw0);
  CHECK(saw1);
}

TEST_CASE("empty range gives a header-only table") {
  const auto r = run({"emit", "table", "--kind", "l-values", "--min-n", "3", "--max-n", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,d,char,exponents,q,bits,value_re,value_im\r\n");
  CHECK(run({"emit", "table", "--kind", "l-values", "--min-n", "3", "--max-n", "2"}).out == "[]\n");
  CHECK(run({"emit", "table", "--kind", "classical", "--max-n", "5000"}).code == 2);
  CHECK(run({"emit", "table", "--kind", "classical", "--max-n", "-1"}).code == 2);
  CHECK(run({"emit", "table", "--kind", "nope"}).code == 2);
}

TEST_CASE("table round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "chieuler_cli_test";
  std::filesystem::create_directories(dir);
  for (const std::string fmt : {"csv", "json"}) {
    for (const std::string kind : {"classical", "chi-eulerian", "weight-zero-euler", "l-values"}) {
      const auto path = (dir / (kind + "." + fmt)).string();
      std::vector<std::string> args = {"emit", "table", "--kind", kind, "--max-n", "3", "--format", fmt, "--out", path};
      if (kind == "chi-eulerian" || kind == "l-values") {
        args.insert(args.end(), {"--modulus", "5", "--q", "2,7/2"});
      }
      if (kind == "weight-zero-euler") args.insert(args.end(), {"--q", "1,2", "--x", "0,1/3"});
      const auto r = run(args);
      REQUIRE(r.code == 0);
      CHECK(r.out.empty());
      std::ifstream is(path, std::ios::binary);
      const auto t = fmt == "csv" ? cli::read_csv(is) : cli::read_json(is);
      REQUIRE(!t.rows.empty());
      const auto col = [&](const std::string& name) {
        return static_cast<std::size_t>(std::find(t.header.begin(), t.header.end(), name) - t.header.begin());
      };
      for (const auto& row : t.rows) {
        const unsigned n = static_cast<unsigned>(std::stoul(row[col("n")]));
        if (kind == "classical") {
          std::string expected;
          const PolyQ p = eulerian_poly(n).poly;
          for (long i = 0; i <= p.degree(); ++i) {
            expected += (i ? "," : "") + p.coeff(static_cast<std::size_t>(i)).numerator().get_str();
          }
          REQUIRE(row[col("coefficients")] == expected);
        } else if (kind == "chi-eulerian") {
          const auto chi = enumerate_characters(std::stol(row[col("d")]))[std::stoul(row[col("char")])];
          REQUIRE(row[col("exponents")] == chi.exponents_string());
          const auto v = chi_eulerian(n, chi, Rational::parse(row[col("q")]));
          const auto& text = row[col("value")];
          const CycElem parsed = text.front() == '[' ? CycElem::parse(text) : CycElem::rational(Rational::parse(text));
          REQUIRE(parsed == v);
        } else if (kind == "weight-zero-euler") {
          const auto v = weight_zero_euler(n, Rational::parse(row[col("q")]), Rational::parse(row[col("x")]));
          REQUIRE(Rational::parse(row[col("value")]) == v);
        } else {
          const auto chi = enumerate_characters(std::stol(row[col("d")]))[std::stoul(row[col("char")])];
          const long bits = std::stol(row[col("bits")]);
          const auto v = l_eulerian(Rational(-static_cast<long>(n)), 0, chi, Rational::parse(row[col("q")]), bits);
          Real re(bits + 16), im(bits + 16);
          mpfr_set_str(re.get(), row[col("value_re")].c_str(), 10, MPFR_RNDN);
          mpfr_set_str(im.get(), row[col("value_im")].c_str(), 10, MPFR_RNDN);
          // Decimal rendering keeps a few digits beyond `bits`.
          const Real scale = max(abs(v.value.re), Real(1, 64));
          REQUIRE(abs(re - v.value.re) <= scale * Real::exp2(4 - bits, 64));
          REQUIRE(abs(im - v.value.im) <= scale * Real::exp2(4 - bits, 64));
        }
      }
    }
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("other commands") {
  const auto chars = run({"chars", "list", "--modulus", "5"});
  CHECK(chars.code == 0);
  CHECK(lines(chars.out).size() == 4);
  const auto cond = run({"chars", "conductor", "--modulus", "9", "--char", "3"});
  CHECK(cond.code == 0);
  CHECK(cond.out == "3\n");
  const auto chi = run({"eulerian", "chi", "--modulus", "3", "--char", "1", "--q", "2", "--n", "1"});
  CHECK(lines(chi.out).front()["value"] == "12/1");
  const auto integral = run({"padic", "integral", "--p", "5", "--q", "6", "--n", "1", "--levels", "6"});
  CHECK(integral.code == 0);
  CHECK(lines(integral.out).front()["residue"] == 107);
  const auto l = run({"lfunction", "eval", "--s", "0", "--modulus", "3", "--char", "1", "--q", "2"});
  CHECK(l.code == 0);
  CHECK(lines(l.out).front()["value_re"].get<std::string>().rfind("-4.000", 0) == 0);
}
