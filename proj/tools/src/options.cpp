#include "options.hpp"

#include <chieuler/error.hpp>
#include <chieuler/padic.hpp>

#include <algorithm>
#include <charconv>

namespace chieuler::cli {

namespace {

template <typename T>
T parse_integer(const std::string& s, const char* flag) {
  T v{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError(std::string(flag) + ": not an integer: '" + s + "'");
  return v;
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string::npos ? text.size() : comma;
    out.push_back(text.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split_list(text)) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const Error& e) {
      throw UsageError("not a rational: '" + item + "'");
    }
  }
  return out;
}

std::vector<unsigned> Options::n_range(unsigned default_max) const {
  if (n) return {*n};
  const unsigned lo = min_n.value_or(0);
  const unsigned hi = max_n.value_or(default_max);
  std::vector<unsigned> out;
  for (unsigned i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<long> Options::moduli(std::vector<long> fallback) const {
  if (moduli_text.empty()) return fallback;
  std::vector<long> out;
  for (const auto& item : split_list(moduli_text)) {
    const long d = parse_integer<long>(item, "--modulus");
    if (d < 1 || d % 2 == 0) throw UsageError("--modulus must be odd and >= 1, got " + item);
    out.push_back(d);
  }
  return out;
}

std::vector<DirichletCharacter> Options::characters(long d) const {
  auto all = enumerate_characters(d);
  if (!character) return all;
  if (*character >= all.size()) {
    throw UsageError("--char " + std::to_string(*character) + " out of range: modulus " + std::to_string(d) +
                     " has " + std::to_string(all.size()) + " characters");
  }
  return {all[*character]};
}

std::vector<Rational> Options::qs(std::vector<Rational> fallback) const {
  return q_text.empty() ? fallback : parse_rationals(q_text);
}

std::vector<std::uint64_t> Options::primes() const {
  if (p_text.empty()) return {3, 5};
  std::vector<std::uint64_t> out;
  for (const auto& item : split_list(p_text)) {
    const auto p = parse_integer<std::uint64_t>(item, "--p");
    if (p < 3 || !is_prime(p)) throw UsageError("--p must be an odd prime, got " + item);
    out.push_back(p);
  }
  return out;
}

std::vector<unsigned> Options::levels() const {
  if (levels_text.empty()) return {k() + 1, k() + 2, k() + 3};
  std::vector<unsigned> out;
  for (const auto& item : split_list(levels_text)) {
    const auto N = parse_integer<unsigned>(item, "--levels");
    if (N < 1) throw UsageError("--levels entries must be >= 1");
    out.push_back(N);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Variant Options::variant() const {
  try {
    return parse_variant(variant_text);
  } catch (const Error&) {
    throw UsageError("--variant must be printed or corrected");
  }
}

}  // namespace chieuler::cli
