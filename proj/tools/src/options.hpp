#pragma once

#include <chieuler/chi_eulerian.hpp>
#include <chieuler/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chieuler::cli {

enum ExitCode : int { exit_ok = 0, exit_identity = 1, exit_usage = 2, exit_precision = 3 };

/// Bad flag values or combinations; maps to exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw flag values as typed on the command line, plus the parsed forms.
struct Options {
  std::optional<unsigned> n;
  std::optional<unsigned> min_n;
  std::optional<unsigned> max_n;
  std::string moduli_text;
  std::optional<std::size_t> character;
  std::string q_text;
  std::string p_text;
  std::optional<unsigned> precision;
  long bits = 128;
  std::string levels_text;
  std::string variant_text = "corrected";
  std::string format = "json";
  std::string out;
  std::string name;
  std::string kind;
  std::string s_text;
  std::string t_text = "0";
  std::string x_text;
  std::string x0_text;
  std::string m_text;
  std::string measure = "-q^-1";

  // Grid accessors; each applies the documented default when the flag is absent.
  std::vector<unsigned> n_range(unsigned default_max = 4) const;
  std::vector<long> moduli(std::vector<long> fallback = {1, 3, 5}) const;
  std::vector<DirichletCharacter> characters(long d) const;
  std::vector<Rational> qs(std::vector<Rational> fallback = {2, 3}) const;
  bool has_q() const { return !q_text.empty(); }
  std::vector<std::uint64_t> primes() const;
  unsigned k() const { return precision.value_or(3); }
  std::vector<unsigned> levels() const;
  Variant variant() const;
};

std::vector<std::string> split_list(const std::string& text);
std::vector<Rational> parse_rationals(const std::string& text);

}  // namespace chieuler::cli
