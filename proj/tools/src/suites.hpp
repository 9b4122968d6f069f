#pragma once

#include "options.hpp"
#include "report.hpp"

#include <string>
#include <vector>

namespace chieuler::cli {

const std::vector<std::string>& suite_names();

/// Runs every case of the named suite over the grid described by `o`.
/// Reports come back sorted by case key.
std::vector<VerificationReport> run_suite(const std::string& name, const Options& o);

/// Exact values as canonical strings: "a/b" when rational, otherwise the
/// cyclotomic coefficient vector.
std::string render(const CycElem& e);
std::string render(const Real& x, long bits);
std::string render(const Complex& z, long bits);

}  // namespace chieuler::cli
