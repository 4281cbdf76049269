#include "umd/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace umd {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_field(const std::string& field, int line, int column) {
  const std::string t = trim(field);
  if (t.empty()) {
    throw ParseError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": empty field");
  }
  size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(t, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != t.size()) {
    throw ParseError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": not a number: '" + t + "'");
  }
  return value;
}

std::vector<std::vector<double>> read_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path);
  }
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) {
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string field;
    int column = 0;
    while (std::getline(ss, field, ',')) {
      ++column;
      row.push_back(parse_field(field, lineno, column));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(rows.front().size()) +
                       " fields, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError(path + ": no data rows");
  }
  return rows;
}

}  // namespace

Dataset ingest_csv(const std::string& path, CsvFormat format,
                   const std::string& labels_path, double feature_scale) {
  const std::vector<std::vector<double>> rows = read_rows(path);
  const Eigen::Index samples = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(rows.front().size());

  Dataset data;
  if (format == CsvFormat::LastColumnTarget) {
    if (cols < 2) {
      throw DimensionError(path + ": need at least one feature column plus "
                                  "the target column");
    }
    data.features.resize(samples, cols - 1);
    data.targets.resize(samples);
    for (Eigen::Index i = 0; i < samples; ++i) {
      for (Eigen::Index j = 0; j + 1 < cols; ++j) {
        data.features(i, j) =
            feature_scale *
            rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
      }
      data.targets(i) =
          rows[static_cast<size_t>(i)][static_cast<size_t>(cols - 1)];
    }
  } else {
    const std::vector<std::vector<double>> label_rows = read_rows(labels_path);
    if (static_cast<Eigen::Index>(label_rows.size()) != samples) {
      throw DimensionError(labels_path + ": " +
                           std::to_string(label_rows.size()) +
                           " labels for " + std::to_string(samples) +
                           " feature rows");
    }
    data.features.resize(samples, cols);
    data.targets.resize(samples);
    for (Eigen::Index i = 0; i < samples; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) {
        data.features(i, j) =
            feature_scale *
            rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
      }
      if (label_rows[static_cast<size_t>(i)].size() != 1) {
        throw DimensionError(labels_path + ": line " + std::to_string(i + 1) +
                             " must hold exactly one label");
      }
      data.targets(i) = label_rows[static_cast<size_t>(i)][0];
    }
  }
  return data;
}

void write_trace_csv(const std::string& path, const Trace& trace,
                     double f_star) {
  std::FILE* out = std::fopen(path.c_str(), "w");
  if (out == nullptr) {
    throw IoError("cannot write " + path);
  }
  std::fputs("t,f,gap,theta_norm,branch,res_I,res_II\n", out);
  for (size_t i = 0; i < trace.size(); ++i) {
    const double f = trace.f_value[i];
    std::fprintf(out, "%d,%.17g,%.17g,%.17g,%s,%.17g,%.17g\n", trace.t[i], f,
                 f - f_star, trace.theta[i].norm(),
                 branch_name(trace.branch[i]).c_str(), trace.res_I[i],
                 trace.res_II[i]);
  }
  std::fclose(out);
}

}  // namespace umd
