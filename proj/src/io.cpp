#include "tsc/io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

namespace tsc {

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

double parse_field(const std::string& field, std::size_t lineno, std::size_t column) {
  const char* begin = field.c_str();
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  while (end && *end == ' ') ++end;
  if (end == begin || (end && *end != '\0') || errno == ERANGE) {
    std::ostringstream msg;
    msg << "line " << lineno << ", column " << column << ": cannot parse '" << field
        << "' as a number";
    throw parse_error(msg.str());
  }
  return value;
}

}  // namespace

DataMatrix load_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path.string());

  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string field;
    std::size_t column = 0;
    while (std::getline(ss, field, ',')) {
      ++column;
      const double value = parse_field(field, lineno, column);
      if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << "line " << lineno << ", column " << column << ": non-finite value";
        throw parse_error(msg.str());
      }
      row.push_back(value);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      std::ostringstream msg;
      msg << "line " << lineno << ": expected " << rows.front().size() << " fields, got "
          << row.size();
      throw parse_error(msg.str());
    }
    if (row.empty()) throw parse_error("line " + std::to_string(lineno) + ": empty row");
    rows.push_back(std::move(row));
  }
  if (rows.size() < 2)
    throw parse_error(path.string() + ": need at least 2 samples");

  // rows on disk are samples; columns in memory are samples
  const Index n = static_cast<Index>(rows.size());
  const Index d = static_cast<Index>(rows.front().size());
  Matrix x(d, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < d; ++j) x(j, i) = rows[i][j];
  return DataMatrix(std::move(x));
}

Labeling load_labels(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path.string());
  std::vector<int> labels;
  std::string line;
  std::size_t lineno = 0;
  int max_label = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    const char* begin = line.c_str();
    char* end = nullptr;
    errno = 0;
    const long value = std::strtol(begin, &end, 10);
    while (end && (*end == ' ' || *end == '\r')) ++end;
    if (end == begin || (end && *end != '\0') || errno == ERANGE || value < 0) {
      throw parse_error("line " + std::to_string(lineno) +
                        ": expected a nonnegative integer label");
    }
    labels.push_back(static_cast<int>(value));
    max_label = std::max(max_label, static_cast<int>(value));
  }
  if (labels.empty()) throw parse_error(path.string() + ": no labels found");
  return Labeling{std::move(labels), max_label + 1, false};
}

std::filesystem::path labels_path_for(const std::filesystem::path& data_path) {
  std::filesystem::path p = data_path;
  p.replace_extension(".labels");
  return p;
}

std::pair<DataMatrix, std::optional<Labeling>> load_dataset(const std::filesystem::path& path) {
  DataMatrix x = load_matrix_csv(path);
  std::optional<Labeling> labels;
  const auto lp = labels_path_for(path);
  if (std::filesystem::exists(lp)) {
    Labeling lab = load_labels(lp);
    if (static_cast<Index>(lab.labels.size()) != x.samples())
      throw parse_error(lp.string() + ": label count does not match sample count");
    labels = std::move(lab);
  }
  return {std::move(x), std::move(labels)};
}

void save_matrix_csv(const std::filesystem::path& path, const DataMatrix& x) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write " + path.string());
  out << std::setprecision(17);
  for (Index i = 0; i < x.samples(); ++i) {
    for (Index j = 0; j < x.dim(); ++j) {
      if (j) out << ',';
      out << x.values(j, i);
    }
    out << '\n';
  }
}

void save_labels(const std::filesystem::path& path, const Labeling& labels) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write " + path.string());
  for (int label : labels.labels) out << label << '\n';
}

void save_trace_csv(const std::filesystem::path& path, const std::vector<TracePoint>& trace) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write " + path.string());
  out << "iter,normalized_objective\n" << std::setprecision(17);
  for (const auto& point : trace) out << point.iter << ',' << point.value << '\n';
}

}  // namespace tsc
