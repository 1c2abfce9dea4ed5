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

#ifndef FAIRNOISE_CSV_IO_H_
#define FAIRNOISE_CSV_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "fairnoise/dataset.h"

namespace fairnoise {

// Input schema: a header row naming numeric feature columns plus exactly one
// `sensitive` and one `label` column, each holding 0 or 1.
struct CsvOptions {
  // Drop rows with an empty cell instead of failing.
  bool drop_missing = false;
};

struct CsvTable {
  Dataset data;
  std::vector<std::string> feature_names;
  long dropped_rows = 0;
};

// Errors: kIoError, kParseError (bad number, wrong field count, missing cell;
// the message carries the 1-based line and the column name), kSchemaError
// (header lacks `sensitive`/`label`, no feature columns, or a bit outside
// {0, 1}).
CsvTable load_csv(const std::string& path, const CsvOptions& options = {});
CsvTable read_csv(std::istream& in, const CsvOptions& options = {});

// Writes features with 17 significant digits, then `sensitive`, `label`.
void write_csv(const std::string& path, const Dataset& data,
               const std::vector<std::string>& feature_names);
void write_csv(std::ostream& out, const Dataset& data,
               const std::vector<std::string>& feature_names);

// "x0", "x1", ...
std::vector<std::string> DefaultFeatureNames(Eigen::Index dimension);

}  // namespace fairnoise

#endif  // FAIRNOISE_CSV_IO_H_
