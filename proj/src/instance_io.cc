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

#include <istream>
#include <ostream>
#include <string>

#include "ksub/data_io.h"
#include "ksub/error.h"
#include "ksub/text.h"

namespace ksub {
namespace {

[[noreturn]] void Malformed(std::size_t line_no, const std::string& why) {
  throw Error(ErrorCode::kMalformedLine,
              "line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

void WriteInstance(std::ostream& out, const InstanceBundle& bundle) {
  const KnapsackInstance& inst = bundle.instance;
  if (!bundle.provenance.empty()) {
    out << "provenance " << bundle.provenance << "\n";
  }
  out << "k " << inst.k() << "\n";
  out << "budget " << FormatDouble(inst.budget()) << "\n";
  out << "# e id cost items w_1..w_k\n";
  for (std::size_t j = 0; j < inst.n(); ++j) {
    const ElementId e = inst.universe()[j];
    out << "e " << e << " " << FormatDouble(inst.costs()[j]) << " ";
    const auto cov = bundle.spec.coverage.find(e);
    if (cov == bundle.spec.coverage.end() || cov->second.empty()) {
      out << "-";
    } else {
      for (std::size_t q = 0; q < cov->second.size(); ++q) {
        out << (q ? ";" : "") << cov->second[q];
      }
    }
    for (double w : bundle.spec.bonus.at(e)) out << " " << FormatDouble(w);
    out << "\n";
  }
  if (!out) throw Error(ErrorCode::kIo, "failed writing instance");
}

InstanceBundle ReadInstance(std::istream& in) {
  std::string provenance;
  int k = 0;
  std::optional<double> budget;
  std::vector<ElementId> universe;
  std::vector<double> costs;
  std::map<ElementId, std::vector<ItemId>> coverage;
  std::map<ElementId, std::vector<double>> bonus;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body(line);
    while (!body.empty() && (body.back() == '\r' || body.back() == '\n')) {
      body.remove_suffix(1);
    }
    if (body.rfind("provenance ", 0) == 0) {
      provenance = std::string(body.substr(11));
      continue;
    }
    body = StripComment(body);
    if (body.empty()) continue;
    const auto fields = SplitFields(body);
    if (fields[0] == "k") {
      auto v = fields.size() == 2 ? ParseInt(fields[1]) : std::nullopt;
      if (!v || *v < 2 || *v > 1000) Malformed(line_no, "bad k");
      k = static_cast<int>(*v);
    } else if (fields[0] == "budget") {
      budget = fields.size() == 2 ? ParseDouble(fields[1]) : std::nullopt;
      if (!budget) Malformed(line_no, "bad budget");
    } else if (fields[0] == "e") {
      if (k == 0) Malformed(line_no, "element before k");
      if (fields.size() != 4 + static_cast<std::size_t>(k)) {
        Malformed(line_no, "expected e <id> <cost> <items> and " +
                               std::to_string(k) + " bonuses");
      }
      auto id = ParseInt(fields[1]);
      auto cost = ParseDouble(fields[2]);
      if (!id || *id < 0 || *id > std::numeric_limits<ElementId>::max() ||
          !cost) {
        Malformed(line_no, "bad element id or cost");
      }
      const auto e = static_cast<ElementId>(*id);
      std::vector<ItemId> items;
      if (fields[3] != "-") {
        std::string_view rest = fields[3];
        while (true) {
          const auto semi = rest.find(';');
          auto item = ParseInt(rest.substr(0, semi));
          if (!item || *item < 0 || *item > std::numeric_limits<ItemId>::max()) {
            Malformed(line_no, "bad coverage item");
          }
          items.push_back(static_cast<ItemId>(*item));
          if (semi == std::string_view::npos) break;
          rest.remove_prefix(semi + 1);
        }
      }
      std::vector<double> w;
      for (int i = 0; i < k; ++i) {
        auto v = ParseDouble(fields[4 + i]);
        if (!v) Malformed(line_no, "bad bonus");
        w.push_back(*v);
      }
      if (bonus.count(e)) Malformed(line_no, "duplicate element");
      universe.push_back(e);
      costs.push_back(*cost);
      coverage[e] = std::move(items);
      bonus[e] = std::move(w);
    } else {
      Malformed(line_no, "unknown record '" + std::string(fields[0]) + "'");
    }
  }
  if (k == 0 || !budget) {
    throw Error(ErrorCode::kMalformedLine, "instance needs k and budget lines");
  }
  CoverageBonusSpec spec{k, std::move(coverage), std::move(bonus)};
  // Validate the objective now rather than at first use.
  CoverageBonusObjective check(spec);
  return InstanceBundle{
      KnapsackInstance(std::move(universe), k, std::move(costs), *budget),
      std::move(spec), std::move(provenance)};
}

}  // namespace ksub
