#include "tables.hpp"

#include "suites.hpp"

#include <chieuler/chi_eulerian.hpp>
#include <chieuler/eulerian.hpp>
#include <chieuler/lfunction.hpp>

#include <nlohmann/json.hpp>

#include <istream>
#include <ostream>

namespace chieuler::cli {

namespace {

constexpr unsigned max_table_n = 200;

std::string coefficient_list(const PolyQ& p) {
  std::string s;
  for (long i = 0; i <= p.degree(); ++i) {
    if (i > 0) s += ',';
    s += p.coeff(static_cast<std::size_t>(i)).numerator().get_str();
  }
  return s;
}

bool integer_column(const std::string& name) { return name == "n" || name == "d" || name == "char" || name == "bits"; }

}  // namespace

const std::vector<std::string>& table_kinds() {
  static const std::vector<std::string> kinds = {"classical", "chi-eulerian", "weight-zero-euler", "l-values"};
  return kinds;
}

Table build_table(const std::string& kind, const Options& o) {
  if (o.max_n && *o.max_n > max_table_n) throw UsageError("--max-n above " + std::to_string(max_table_n));
  if (o.n && *o.n > max_table_n) throw UsageError("--n above " + std::to_string(max_table_n));
  // An empty n-range (min > max) is a valid zero-length table.
  const auto ns = o.n_range();
  Table t;
  if (kind == "classical") {
    t.header = {"n", "coefficients"};
    for (unsigned n : ns) t.rows.push_back({std::to_string(n), coefficient_list(eulerian_poly(n).poly)});
  } else if (kind == "chi-eulerian") {
    t.header = {"n", "d", "char", "exponents", "q", "value"};
    for (long d : o.moduli()) {
      const auto all = enumerate_characters(d);
      for (std::size_t idx = 0; idx < all.size(); ++idx) {
        if (o.character && *o.character != idx) continue;
        for (const auto& q : o.qs()) {
          for (unsigned n : ns) {
            t.rows.push_back({std::to_string(n), std::to_string(d), std::to_string(idx), all[idx].exponents_string(),
                              q.to_string(), render(chi_eulerian(n, all[idx], q))});
          }
        }
      }
      if (o.character && *o.character >= all.size()) throw UsageError("--char out of range");
    }
  } else if (kind == "weight-zero-euler") {
    t.header = {"n", "q", "x", "value"};
    const auto xs = o.x_text.empty() ? std::vector<Rational>{0} : parse_rationals(o.x_text);
    for (const auto& q : o.qs()) {
      for (const auto& x : xs) {
        for (unsigned n : ns) {
          t.rows.push_back({std::to_string(n), q.to_string(), x.to_string(), weight_zero_euler(n, q, x).to_string()});
        }
      }
    }
  } else if (kind == "l-values") {
    t.header = {"n", "d", "char", "exponents", "q", "bits", "value_re", "value_im"};
    for (long d : o.moduli()) {
      const auto chars = o.characters(d);
      const auto all = enumerate_characters(d);
      for (const auto& chi : chars) {
        const auto idx = static_cast<std::size_t>(std::find(all.begin(), all.end(), chi) - all.begin());
        for (const auto& q : o.qs()) {
          for (unsigned n : ns) {
            const auto v = l_eulerian(Rational(-static_cast<long>(n)), Rational(0), chi, q, o.bits);
            t.rows.push_back({std::to_string(n), std::to_string(d), std::to_string(idx), chi.exponents_string(),
                              q.to_string(), std::to_string(o.bits), render(v.value.re, o.bits),
                              render(v.value.im, o.bits)});
          }
        }
      }
    }
  } else {
    throw UsageError("unknown table kind '" + kind + "'");
  }
  return t;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void csv_row(const std::vector<std::string>& row, std::ostream& os) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) os << ',';
    os << csv_field(row[i]);
  }
  os << "\r\n";
}

}  // namespace

void write_csv(const Table& t, std::ostream& os) {
  csv_row(t.header, os);
  for (const auto& r : t.rows) csv_row(r, os);
}

void write_json(const Table& t, std::ostream& os) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < t.header.size(); ++i) {
      if (integer_column(t.header[i])) {
        obj[t.header[i]] = std::stol(r[i]);
      } else {
        obj[t.header[i]] = r[i];
      }
    }
    arr.push_back(obj);
  }
  os << arr.dump(2) << '\n';
}

Table read_csv(std::istream& is) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  char c;
  while (is.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (is.peek() == '"') {
          is.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\r') {
      continue;
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (any) {
    row.push_back(std::move(field));
    records.push_back(std::move(row));
  }
  Table t;
  if (records.empty()) return t;
  t.header = records.front();
  t.rows.assign(records.begin() + 1, records.end());
  return t;
}

Table read_json(std::istream& is) {
  const auto doc = nlohmann::ordered_json::parse(is);
  Table t;
  if (doc.empty()) return t;
  for (const auto& item : doc.front().items()) t.header.push_back(item.key());
  for (const auto& obj : doc) {
    std::vector<std::string> r;
    for (const auto& name : t.header) {
      const auto& v = obj.at(name);
      r.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    t.rows.push_back(std::move(r));
  }
  return t;
}

}  // namespace chieuler::cli
