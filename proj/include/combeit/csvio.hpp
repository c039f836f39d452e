#pragma once

#include <string>
#include <vector>

namespace combeit {

// Shortest representation that round-trips a double exactly (17 significant
// digits). All exported numbers go through this so reruns are byte-identical.
std::string fmt17(double v);

// Writes via a temp file in the same directory followed by an atomic rename.
void write_file_atomic(const std::string& path, const std::string& content);

struct CsvTable {
  std::vector<std::string> comments;  // lines beginning with '#', kept verbatim
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// columns.size() doubles per row, fixed order, fmt17 formatting.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows,
               const std::vector<std::string>& comments = {});

CsvTable read_csv(const std::string& path);

}  // namespace combeit
