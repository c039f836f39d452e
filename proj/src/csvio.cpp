#include "combeit/csvio.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace combeit {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows,
               const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const auto& c : comments) os << c << "\n";
  for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& r : rows) {
    if (r.size() != header.size())
      throw std::invalid_argument("csv row width does not match header");
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << fmt17(r[i]);
    os << "\n";
  }
  write_file_atomic(path, os.str());
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open csv: " + path);
  CsvTable t;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      t.comments.push_back(line);
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!have_header) {
      t.header = cells;
      have_header = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) {
      size_t pos = 0;
      double v;
      try {
        v = std::stod(c, &pos);
      } catch (const std::exception&) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad number '" + c + "'");
      }
      if (pos != c.size())
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad number '" + c + "'");
      row.push_back(v);
    }
    if (row.size() != t.header.size())
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": row width mismatch");
    t.rows.push_back(std::move(row));
  }
  if (!have_header) throw std::runtime_error(path + ": empty csv");
  return t;
}

}  // namespace combeit
