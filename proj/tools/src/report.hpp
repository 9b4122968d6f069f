#pragma once

#include <nlohmann/json.hpp>

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chieuler::cli {

enum class Status { pass, fail, inconclusive };

std::string to_string(Status s);

struct AbsoluteMetric {
  std::string error;
  std::string bound;
};

struct PadicMetric {
  unsigned valuation = 0;
  unsigned target = 0;
};

/// One verified case. `params` keeps insertion order; the case key is built
/// from identity and params so sorted output is stable.
struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::inconclusive;
  std::string lhs;
  std::string rhs;
  std::optional<AbsoluteMetric> absolute;
  std::optional<PadicMetric> padic;
  std::string variant = "n/a";
  long elapsed_ms = 0;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  VerificationReport& param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  std::string case_key() const;
  nlohmann::ordered_json to_json() const;
};

/// Stopwatch for elapsed_ms.
class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long ms() const {
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count());
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace chieuler::cli
