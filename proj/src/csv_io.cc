// Copyright 2026 The FairNoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairnoise/csv_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "fairnoise/error.h"

namespace fairnoise {
namespace {

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool ParseNumber(std::string_view text, double& value) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && end == text.data() + text.size() &&
         std::isfinite(value);
}

}  // namespace

CsvTable read_csv(std::istream& in, const CsvOptions& options) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kSchemaError, "missing header row");
  }
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
    line.erase(0, 3);
  }
  std::vector<std::string> header;
  for (const auto& name : SplitFields(line)) {
    header.emplace_back(Trim(name));
  }
  int sensitive_col = -1;
  int label_col = -1;
  std::vector<int> feature_cols;
  CsvTable table;
  for (int c = 0; c < static_cast<int>(header.size()); ++c) {
    const auto& name = header[static_cast<std::size_t>(c)];
    if (name == "sensitive" || name == "label") {
      int& slot = name == "sensitive" ? sensitive_col : label_col;
      if (slot >= 0) {
        throw Error(ErrorCode::kSchemaError, "duplicate column '" + name + "'");
      }
      slot = c;
    } else {
      feature_cols.push_back(c);
      table.feature_names.push_back(name);
    }
  }
  if (sensitive_col < 0 || label_col < 0) {
    throw Error(ErrorCode::kSchemaError,
                "header must contain 'sensitive' and 'label' columns");
  }
  if (feature_cols.empty()) {
    throw Error(ErrorCode::kSchemaError, "no feature columns");
  }

  std::vector<double> values;
  BitVector sensitive;
  BitVector label;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(header.size()) + " fields, found " +
                      std::to_string(fields.size()));
    }
    bool missing = false;
    for (const auto& f : fields) missing = missing || Trim(f).empty();
    if (missing) {
      if (options.drop_missing) {
        ++table.dropped_rows;
        continue;
      }
      for (std::size_t c = 0; c < fields.size(); ++c) {
        if (Trim(fields[c]).empty()) {
          throw Error(ErrorCode::kParseError,
                      "line " + std::to_string(line_no) + ", column '" +
                          header[c] + "': missing value");
        }
      }
    }
    auto cell = [&](int c) {
      double v = 0.0;
      if (!ParseNumber(Trim(fields[static_cast<std::size_t>(c)]), v)) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + ", column '" +
                        header[static_cast<std::size_t>(c)] +
                        "': not a number");
      }
      return v;
    };
    for (const int c : feature_cols) values.push_back(cell(c));
    for (const int c : {sensitive_col, label_col}) {
      const double bit = cell(c);
      if (bit != 0.0 && bit != 1.0) {
        throw Error(ErrorCode::kSchemaError,
                    "line " + std::to_string(line_no) + ", column '" +
                        header[static_cast<std::size_t>(c)] +
                        "': value must be 0 or 1");
      }
      (c == sensitive_col ? sensitive : label)
          .push_back(static_cast<std::uint8_t>(bit));
    }
  }
  const auto d = static_cast<Eigen::Index>(feature_cols.size());
  const auto n = static_cast<Eigen::Index>(sensitive.size());
  FeatureMatrix x = Eigen::Map<const FeatureMatrix>(values.data(), n, d);
  table.data = Dataset(std::move(x), std::move(sensitive), std::move(label));
  return table;
}

CsvTable load_csv(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return read_csv(in, options);
}

void write_csv(std::ostream& out, const Dataset& data,
               const std::vector<std::string>& feature_names) {
  if (static_cast<Eigen::Index>(feature_names.size()) != data.dimension()) {
    throw Error(ErrorCode::kInvalidArgument,
                "feature name count does not match dimension");
  }
  for (const auto& name : feature_names) out << name << ",";
  out << "sensitive,label\n";
  char buffer[32];
  for (Eigen::Index i = 0; i < data.size(); ++i) {
    for (Eigen::Index j = 0; j < data.dimension(); ++j) {
      std::snprintf(buffer, sizeof(buffer), "%.17g", data.features()(i, j));
      out << buffer << ",";
    }
    const auto k = static_cast<std::size_t>(i);
    out << int{data.sensitive()[k]} << "," << int{data.target()[k]} << "\n";
  }
  if (!out) throw Error(ErrorCode::kIoError, "failed writing CSV");
}

void write_csv(const std::string& path, const Dataset& data,
               const std::vector<std::string>& feature_names) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path);
  write_csv(out, data, feature_names);
}

std::vector<std::string> DefaultFeatureNames(Eigen::Index dimension) {
  std::vector<std::string> names;
  for (Eigen::Index j = 0; j < dimension; ++j) {
    names.push_back("x" + std::to_string(j));
  }
  return names;
}

}  // namespace fairnoise
