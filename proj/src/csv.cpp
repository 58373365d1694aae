#include "dimred/csv.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace dimred {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

double parse_real(const std::string& cell, std::size_t row, const std::string& col) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  while (end && *end && std::isspace(static_cast<unsigned char>(*end))) ++end;
  if (end == begin || (end && *end != '\0'))
    fail(ErrorCode::parse, "non-numeric value \"" + cell + "\" at row " + std::to_string(row) +
                               ", column " + col);
  if (!std::isfinite(v))
    fail(ErrorCode::parse, "non-finite value \"" + cell + "\" at row " + std::to_string(row) +
                               ", column " + col);
  return v;
}

int parse_label(const std::string& cell, std::size_t row, const std::string& col) {
  std::string t = cell;
  t.erase(std::remove_if(t.begin(), t.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          t.end());
  std::size_t pos = (!t.empty() && (t[0] == '+' || t[0] == '-')) ? 1 : 0;
  if (pos >= t.size() ||
      !std::all_of(t.begin() + static_cast<long>(pos), t.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    fail(ErrorCode::parse, "label column must hold integers, got \"" + cell + "\" at row " +
                               std::to_string(row) + ", column " + col);
  return std::stoi(t);
}

}  // namespace

CsvTable read_csv_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open " + path);
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::parse, path + ": missing header row");
  table.header = split_line(line);
  for (auto& name : table.header)
    if (blank(name)) fail(ErrorCode::parse, path + ": blank header name");
  std::set<std::string> seen;
  for (const auto& name : table.header)
    if (!seen.insert(name).second)
      fail(ErrorCode::parse, path + ": duplicate header name \"" + name + "\"");
  while (std::getline(in, line)) {
    if (line.empty() && in.eof()) break;
    auto cells = split_line(line);
    if (cells.size() != table.header.size())
      fail(ErrorCode::parse, path + ": row " + std::to_string(table.rows.size() + 1) + " has " +
                                 std::to_string(cells.size()) + " cells, expected " +
                                 std::to_string(table.header.size()));
    table.rows.push_back(std::move(cells));
  }
  return table;
}

namespace {

std::size_t find_column(const CsvTable& table, const std::string& name,
                        const std::string& path) {
  auto it = std::find(table.header.begin(), table.header.end(), name);
  if (it == table.header.end())
    fail(ErrorCode::parse, path + ": missing column \"" + name + "\"");
  return static_cast<std::size_t>(it - table.header.begin());
}

void check_missing(const CsvTable& table) {
  for (std::size_t i = 0; i < table.rows.size(); ++i)
    for (std::size_t j = 0; j < table.header.size(); ++j)
      if (blank(table.rows[i][j]))
        fail(ErrorCode::parse, "missing value at row " + std::to_string(i + 1) + ", column " +
                                   table.header[j]);
}

}  // namespace

Dataset load_csv(const std::string& path, const std::string& label_column) {
  auto multi = load_csv_multi(path, {label_column});
  return Dataset::create(std::move(multi.features), std::move(multi.labels[0].second),
                         std::move(multi.feature_names));
}

MultiLabelData load_csv_multi(const std::string& path,
                              const std::vector<std::string>& label_columns) {
  CsvTable table = read_csv_table(path);
  if (table.rows.size() < 2)
    fail(ErrorCode::parse, path + ": needs at least 2 data rows, got " +
                               std::to_string(table.rows.size()));
  check_missing(table);

  std::vector<std::size_t> label_idx;
  for (const auto& name : label_columns) label_idx.push_back(find_column(table, name, path));

  MultiLabelData out;
  for (std::size_t j = 0; j < table.header.size(); ++j)
    if (std::find(label_idx.begin(), label_idx.end(), j) == label_idx.end())
      out.feature_names.push_back(table.header[j]);
  if (out.feature_names.empty()) fail(ErrorCode::parse, path + ": no feature columns");

  out.features = FeatureMatrix(table.rows.size(), out.feature_names.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    std::size_t f = 0;
    for (std::size_t j = 0; j < table.header.size(); ++j) {
      if (std::find(label_idx.begin(), label_idx.end(), j) != label_idx.end()) continue;
      out.features.at(i, f++) = parse_real(table.rows[i][j], i + 1, table.header[j]);
    }
  }

  for (std::size_t k = 0; k < label_columns.size(); ++k) {
    std::vector<int> ys(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i)
      ys[i] = parse_label(table.rows[i][label_idx[k]], i + 1, label_columns[k]);
    out.labels.emplace_back(label_columns[k], LabelVector::from_labels(std::move(ys)));
  }
  return out;
}

std::string format_csv(const Dataset& ds, const std::string& label_column) {
  std::ostringstream os;
  for (const auto& name : ds.feature_names) os << name << ',';
  os << label_column << '\n';
  char buf[64];
  for (std::size_t i = 0; i < ds.n_samples(); ++i) {
    for (std::size_t j = 0; j < ds.n_features(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", ds.features.at(i, j));
      os << buf << ',';
    }
    os << ds.labels.labels[i] << '\n';
  }
  return os.str();
}

void save_csv(const Dataset& ds, const std::string& path, const std::string& label_column) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::io, "cannot write " + path);
  out << format_csv(ds, label_column);
  if (!out) fail(ErrorCode::io, "write failed for " + path);
}

}  // namespace dimred
