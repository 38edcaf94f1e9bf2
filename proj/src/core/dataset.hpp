// Copyright 2026 The gateprune authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace gateprune {

/// Row-major dense matrix of doubles.
struct DataMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
  std::span<const double> row(std::size_t r) const {
    return {values.data() + r * cols, cols};
  }
};

/// Features min-max normalized per column to [0,1] (constant columns map to
/// 0.5); labels mapped to {-1,+1} by sorted distinct value order.
struct Dataset {
  DataMatrix features;
  std::vector<int> labels;
  std::vector<std::string> feature_names;
  std::string label_name;
  // Raw label values in sorted order; index 0 maps to -1, index 1 to +1.
  std::vector<std::string> label_values;
};

/// Parses a headered CSV. label_column selects the label by header name;
/// empty or "last" takes the final column. Throws DataError on a missing
/// file, a non-numeric feature cell (with row/column context), or a label
/// column with anything but exactly two distinct values.
Dataset ingest_csv(const std::string& path, const std::string& label_column = "last");
Dataset ingest_csv_stream(std::istream& in, const std::string& label_column,
                          const std::string& origin);

/// 60/20/20 split after a seeded shuffle: train = floor(0.6 m),
/// validation = round(0.2 m), test = remainder.
struct DatasetSplit {
  DataMatrix train_x, val_x, test_x;
  std::vector<int> train_y, val_y, test_y;
  std::uint64_t seed = 0;
};

DatasetSplit split_dataset(const DataMatrix& features,
                           std::span<const int> labels, std::uint64_t seed);

/// Element-wise mean of the rows; the default GSI binding vector.
std::vector<double> column_mean(const DataMatrix& m);

}  // namespace gateprune
