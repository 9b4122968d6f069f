#pragma once

#include "options.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace chieuler::cli {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

const std::vector<std::string>& table_kinds();
Table build_table(const std::string& kind, const Options& o);

void write_csv(const Table& t, std::ostream& os);
void write_json(const Table& t, std::ostream& os);
/// RFC 4180 reader for the writer above.
Table read_csv(std::istream& is);
Table read_json(std::istream& is);

}  // namespace chieuler::cli
