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

#include "core/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace gateprune {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    // Trim surrounding whitespace and an optional CR.
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stod(s, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == s.size() && std::isfinite(out);
}

}  // namespace

Dataset ingest_csv_stream(std::istream& in, const std::string& label_column,
                          const std::string& origin) {
  std::string line;
  if (!std::getline(in, line)) {
    throw DataError(origin + ": empty file");
  }
  const std::vector<std::string> header = split_line(line);
  if (header.size() < 2) {
    throw DataError(origin + ": need at least one feature and a label column");
  }

  std::size_t label_idx;
  if (label_column.empty() || label_column == "last") {
    label_idx = header.size() - 1;
  } else {
    const auto it = std::find(header.begin(), header.end(), label_column);
    if (it == header.end()) {
      throw DataError(origin + ": no column named '" + label_column + "'");
    }
    label_idx = static_cast<std::size_t>(it - header.begin());
  }

  Dataset ds;
  ds.label_name = header[label_idx];
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c != label_idx) ds.feature_names.push_back(header[c]);
  }
  const std::size_t n_features = ds.feature_names.size();

  std::vector<double> raw;
  std::vector<std::string> raw_labels;
  std::size_t row_no = 1;
  while (std::getline(in, line)) {
    ++row_no;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size()) {
      throw DataError(origin + ": row " + std::to_string(row_no) + " has " +
                      std::to_string(cells.size()) + " cells, header has " +
                      std::to_string(header.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c == label_idx) {
        raw_labels.push_back(cells[c]);
        continue;
      }
      double v;
      if (!parse_double(cells[c], v)) {
        throw DataError(origin + ": non-numeric cell at row " +
                        std::to_string(row_no) + ", column '" + header[c] +
                        "'");
      }
      raw.push_back(v);
    }
  }
  if (raw_labels.empty()) throw DataError(origin + ": no data rows");

  // Label mapping: two distinct values, sorted (numerically when both parse
  // as numbers), smaller -> -1.
  std::set<std::string> distinct(raw_labels.begin(), raw_labels.end());
  if (distinct.size() != 2) {
    throw DataError(origin + ": expected exactly 2 distinct label values, found " +
                    std::to_string(distinct.size()));
  }
  std::vector<std::string> ordered(distinct.begin(), distinct.end());
  double l0, l1;
  if (parse_double(ordered[0], l0) && parse_double(ordered[1], l1) && l1 < l0) {
    std::swap(ordered[0], ordered[1]);
  }
  ds.label_values = ordered;
  ds.labels.reserve(raw_labels.size());
  for (const std::string& s : raw_labels) {
    ds.labels.push_back(s == ordered[0] ? -1 : +1);
  }

  // Min-max normalize each feature column to [0,1].
  const std::size_t rows = raw_labels.size();
  ds.features.rows = rows;
  ds.features.cols = n_features;
  ds.features.values.resize(rows * n_features);
  for (std::size_t c = 0; c < n_features; ++c) {
    double lo = raw[c], hi = raw[c];
    for (std::size_t r = 0; r < rows; ++r) {
      lo = std::min(lo, raw[r * n_features + c]);
      hi = std::max(hi, raw[r * n_features + c]);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      const double v = raw[r * n_features + c];
      ds.features.values[r * n_features + c] =
          hi > lo ? (v - lo) / (hi - lo) : 0.5;
    }
  }
  return ds;
}

Dataset ingest_csv(const std::string& path, const std::string& label_column) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset '" + path + "'");
  return ingest_csv_stream(in, label_column, path);
}

DatasetSplit split_dataset(const DataMatrix& features,
                           std::span<const int> labels, std::uint64_t seed) {
  const std::size_t m = features.rows;
  if (m != labels.size()) {
    throw std::invalid_argument("features and labels disagree on sample count");
  }
  if (m < 5) throw DataError("need at least 5 samples to split 60/20/20");
  for (int y : labels) {
    if (y != -1 && y != 1) {
      throw std::invalid_argument("labels must be in {-1,+1}");
    }
  }

  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  // Fisher-Yates with our own bounded draws; std::shuffle's sequence is
  // implementation-defined and would break cross-toolchain reproducibility.
  Rng rng(derive_seed(seed, 0x5914du));
  for (std::size_t i = m - 1; i > 0; --i) {
    std::swap(order[i], order[rng.uniform_index(i + 1)]);
  }

  const std::size_t n_train = static_cast<std::size_t>(std::floor(0.6 * m));
  const std::size_t n_val =
      static_cast<std::size_t>(std::floor(0.2 * m + 0.5));
  if (n_train + n_val >= m || n_train == 0 || n_val == 0) {
    throw DataError("dataset too small for a 60/20/20 split");
  }

  auto take = [&](std::size_t begin, std::size_t end, DataMatrix& x,
                  std::vector<int>& y) {
    x.rows = end - begin;
    x.cols = features.cols;
    x.values.reserve(x.rows * x.cols);
    for (std::size_t i = begin; i < end; ++i) {
      const auto row = features.row(order[i]);
      x.values.insert(x.values.end(), row.begin(), row.end());
      y.push_back(labels[order[i]]);
    }
  };

  DatasetSplit split;
  split.seed = seed;
  take(0, n_train, split.train_x, split.train_y);
  take(n_train, n_train + n_val, split.val_x, split.val_y);
  take(n_train + n_val, m, split.test_x, split.test_y);
  return split;
}

std::vector<double> column_mean(const DataMatrix& m) {
  std::vector<double> mean(m.cols, 0.0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) mean[c] += m.at(r, c);
  }
  for (double& v : mean) v /= static_cast<double>(m.rows);
  return mean;
}

}  // namespace gateprune
