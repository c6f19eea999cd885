// Copyright 2026 The Authors.
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

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <string>

#include "ksub/data_io.h"
#include "ksub/error.h"
#include "ksub/text.h"

namespace ksub {

SensorParseResult ParseSensorReadings(std::istream& in,
                                      const SensorParseOptions& options) {
  SensorParseResult result;
  ParseStats& stats = result.stats;
  std::vector<std::string> type_names;
  bool header_seen = false;

  // First pass: keep the data lines. Without a header the number of types is
  // the widest row, since missing fields only ever shorten a row.
  struct Row {
    std::size_t line_no;
    std::string text;
  };
  std::vector<Row> data;
  std::size_t types = 0;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t line_no = ++stats.total_lines;
    const std::string_view body = StripComment(line);
    if (body.empty()) {
      ++stats.accepted_lines;
      continue;
    }
    const auto fields = SplitFields(body);
    if (!header_seen && data.empty() && fields.size() >= 3 &&
        !ParseInt(fields[1])) {
      for (std::size_t f = 2; f < fields.size(); ++f) {
        type_names.emplace_back(fields[f]);
      }
      header_seen = true;
      ++stats.accepted_lines;
      continue;
    }
    if (!header_seen && fields.size() >= 2) {
      types = std::max(types, fields.size() - 2);
    }
    data.push_back({line_no, std::string(body)});
  }
  if (header_seen) types = type_names.size();

  // sensor id -> readings, row-major (row * types + type).
  std::map<ElementId, std::vector<double>> rows;
  for (const Row& row : data) {
    const auto fields = SplitFields(row.text);
    const auto id = fields.size() >= 2 ? ParseInt(fields[1]) : std::nullopt;
    bool ok = types > 0 && id && *id >= 0 &&
              *id <= std::numeric_limits<ElementId>::max() &&
              fields.size() == types + 2;
    std::vector<double> values;
    for (std::size_t f = 2; ok && f < fields.size(); ++f) {
      auto v = ParseDouble(fields[f]);
      ok = v && std::isfinite(*v);
      if (ok) values.push_back(*v);
    }
    if (!ok) {
      ++result.dropped_rows;
      ++stats.rejected_lines;
      stats.rejected_line_numbers.push_back(row.line_no);
      continue;
    }
    auto& dest = rows[static_cast<ElementId>(*id)];
    dest.insert(dest.end(), values.begin(), values.end());
    ++stats.accepted_lines;
  }

  if (!header_seen) {
    for (std::size_t t = 0; t < types; ++t) {
      type_names.push_back("type" + std::to_string(t + 1));
    }
  }
  const std::size_t min_samples = std::max<std::size_t>(options.min_samples, 1);
  std::size_t samples = std::numeric_limits<std::size_t>::max();
  std::vector<ElementId> kept;
  for (const auto& [id, values] : rows) {
    const std::size_t count = values.size() / types;
    if (count < min_samples) {
      ++result.dropped_sensors;
      continue;
    }
    kept.push_back(id);
    samples = std::min(samples, count);
  }
  if (kept.empty()) {
    throw Error(ErrorCode::kNoUsableRows,
                "no sensor has " + std::to_string(min_samples) +
                    " complete rows");
  }

  SensorTable& table = result.table;
  table.locations = kept;
  table.type_names = type_names;
  table.samples = samples;
  table.values.resize(kept.size() * types * samples);
  for (std::size_t loc = 0; loc < kept.size(); ++loc) {
    const auto& values = rows[kept[loc]];
    for (std::size_t type = 0; type < types; ++type) {
      for (std::size_t t = 0; t < samples; ++t) {
        table.values[(loc * types + type) * samples + t] =
            values[t * types + type];
      }
    }
  }
  return result;
}

SensorTable SelectTypes(const SensorTable& table, std::size_t types) {
  if (types == 0 || types > table.types()) {
    throw Error(ErrorCode::kInvalidConfig,
                "table has " + std::to_string(table.types()) +
                    " measurement types, asked for " + std::to_string(types));
  }
  SensorTable out;
  out.locations = table.locations;
  out.type_names.assign(table.type_names.begin(),
                        table.type_names.begin() + types);
  out.samples = table.samples;
  out.values.reserve(table.locations.size() * types * table.samples);
  for (std::size_t loc = 0; loc < table.locations.size(); ++loc) {
    for (std::size_t type = 0; type < types; ++type) {
      for (std::size_t t = 0; t < table.samples; ++t) {
        out.values.push_back(table.at(loc, type, t));
      }
    }
  }
  return out;
}

}  // namespace ksub
