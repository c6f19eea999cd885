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

#include "ksub/verify.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "ksub/error.h"
#include "ksub/text.h"

namespace ksub {
namespace {

// Tabulated f over all (k+1)^n k-sets of a small universe. Index
// sum_j pos_j (k+1)^j, pos_j being the position of universe[j].
class ValueTable {
 public:
  ValueTable(const Objective& f, std::span<const ElementId> universe,
             std::uint64_t size)
      : universe_(universe.begin(), universe.end()),
        k_(f.k()),
        base_(f.k() + 1),
        values_(size) {
    stride_.resize(universe_.size());
    std::uint64_t s = 1;
    for (std::size_t j = 0; j < universe_.size(); ++j) {
      stride_[j] = s;
      s *= base_;
    }
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      values_[idx] = f.Evaluate(Decode(idx));
      scale_ = std::max(scale_, std::abs(values_[idx]));
    }
  }

  double operator[](std::uint64_t idx) const { return values_[idx]; }
  std::uint64_t size() const { return values_.size(); }
  std::size_t n() const { return universe_.size(); }
  int k() const { return k_; }
  std::uint64_t stride(std::size_t j) const { return stride_[j]; }
  ElementId element(std::size_t j) const { return universe_[j]; }
  double scale() const { return scale_; }

  int Digit(std::uint64_t idx, std::size_t j) const {
    return static_cast<int>((idx / stride_[j]) % base_);
  }

  KSet Decode(std::uint64_t idx) const {
    KSet x(k_);
    for (std::size_t j = 0; j < universe_.size(); ++j) {
      int d = static_cast<int>(idx % base_);
      idx /= base_;
      if (d != 0) x.Insert(universe_[j], d);
    }
    return x;
  }

 private:
  std::vector<ElementId> universe_;
  int k_;
  std::uint64_t base_;
  std::vector<double> values_;
  std::vector<std::uint64_t> stride_;
  double scale_ = 0.0;
};

std::uint64_t PowSaturating(std::uint64_t base, std::size_t exp,
                            std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < exp; ++j) {
    if (total > cap / base) return cap + 1;
    total *= base;
  }
  return total;
}

void CheckExhaustive(const Objective& f, std::span<const ElementId> universe,
                     const CheckOptions& options, KSubReport& report) {
  const int k = f.k();
  const std::size_t n = universe.size();
  const std::uint64_t count =
      PowSaturating(static_cast<std::uint64_t>(k + 1), n, options.max_enum);
  if (count > options.max_enum) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "(k+1)^n exceeds the enumeration cap " +
                    std::to_string(options.max_enum));
  }
  const ValueTable table(f, universe, count);
  const double tol = options.tolerance * std::max(1.0, table.scale());

  // Pairwise monotonicity and the non-monotonicity witness.
  std::vector<double> gains(k + 1);
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table.Digit(x, j) != 0) continue;
      for (int i = 1; i <= k; ++i) {
        gains[i] = table[x + i * table.stride(j)] - table[x];
        if (gains[i] < -tol && !report.nonmonotone_witness) {
          report.nonmonotone_witness = NonMonotoneWitness{
              table.Decode(x), table.element(j), i, gains[i]};
        }
      }
      for (int i = 1; i <= k; ++i) {
        for (int l = 1; l <= k; ++l) {
          if (i == l) continue;
          ++report.pairwise_checked;
          if (gains[i] + gains[l] < -tol && report.pairwise_ok) {
            report.pairwise_ok = false;
            report.pairwise_counterexample = PairwiseCounterexample{
                table.Decode(x), table.element(j), i, l, gains[i], gains[l]};
          }
        }
      }
    }
  }

  // Orthant submodularity over all x ⊑ y. Each element is in one of 2k+1
  // joint states: unassigned in both, assigned in y only, or assigned to the
  // same position in both.
  const int states = 2 * k + 1;
  std::vector<int> state(n, 0);
  while (true) {
    std::uint64_t x = 0, y = 0;
    for (std::size_t j = 0; j < n; ++j) {
      int s = state[j];
      if (s >= 1 && s <= k) {
        y += s * table.stride(j);
      } else if (s > k) {
        x += (s - k) * table.stride(j);
        y += (s - k) * table.stride(j);
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (state[j] != 0) continue;
      for (int i = 1; i <= k; ++i) {
        ++report.orthant_checked;
        const double gx = table[x + i * table.stride(j)] - table[x];
        const double gy = table[y + i * table.stride(j)] - table[y];
        if (gx < gy - tol && report.orthant_ok) {
          report.orthant_ok = false;
          report.orthant_counterexample = OrthantCounterexample{
              table.Decode(x), table.Decode(y), table.element(j), i, gx, gy};
        }
      }
    }
    std::size_t j = 0;
    while (j < n && ++state[j] == states) state[j++] = 0;
    if (j == n) break;
  }

  // The join/meet inequality over all ordered pairs, when affordable.
  const std::uint64_t pairs = PowSaturating(static_cast<std::uint64_t>(k + 1),
                                            2 * n, options.max_pairs);
  if (pairs > options.max_pairs) return;
  report.definition_checked = true;
  std::vector<int> dx(n);
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::size_t j = 0; j < n; ++j) dx[j] = table.Digit(x, j);
    for (std::uint64_t y = 0; y < count; ++y) {
      std::uint64_t meet = 0, join = 0, rest = y;
      for (std::size_t j = 0; j < n; ++j) {
        const int a = dx[j];
        const int b = static_cast<int>(rest % (k + 1));
        rest /= (k + 1);
        if (a == b) {
          meet += a * table.stride(j);
          join += a * table.stride(j);
        } else if (a == 0) {
          join += b * table.stride(j);
        } else if (b == 0) {
          join += a * table.stride(j);
        }
      }
      ++report.definition_pairs_checked;
      const double lhs = table[x] + table[y];
      const double rhs = table[meet] + table[join];
      if (lhs < rhs - tol && report.definition_ok) {
        report.definition_ok = false;
        report.definition_counterexample = DefinitionCounterexample{
            table.Decode(x), table.Decode(y), lhs, rhs};
      }
    }
  }
}

void CheckSampled(const Objective& f, std::span<const ElementId> universe,
                  const CheckOptions& options, KSubReport& report) {
  const int k = f.k();
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> any_pos(0, k);
  std::uniform_int_distribution<int> real_pos(1, k);
  std::bernoulli_distribution coin(0.5);
  report.definition_checked = true;

  auto draw = [&]() {
    KSet x(k);
    for (ElementId e : universe) {
      int p = any_pos(rng);
      if (p != 0) x.Insert(e, p);
    }
    return x;
  };

  for (std::uint64_t t = 0; t < options.trials; ++t) {
    const KSet x = draw();
    KSet y = x;
    for (ElementId e : universe) {
      if (!x.contains(e) && coin(rng)) y.Insert(e, real_pos(rng));
    }
    const KSet z = draw();

    const double fx = f.Evaluate(x);
    const double fy = f.Evaluate(y);
    const double fz = f.Evaluate(z);
    double scale = std::max({1.0, std::abs(fx), std::abs(fy), std::abs(fz)});
    const double tol = options.tolerance * scale;

    std::vector<double> gx(k + 1);
    for (ElementId e : universe) {
      if (x.contains(e)) continue;
      for (int i = 1; i <= k; ++i) {
        gx[i] = f.Evaluate(Assign(x, e, i)) - fx;
        if (gx[i] < -tol && !report.nonmonotone_witness) {
          report.nonmonotone_witness = NonMonotoneWitness{x, e, i, gx[i]};
        }
        if (!y.contains(e)) {
          const double gy = f.Evaluate(Assign(y, e, i)) - fy;
          ++report.orthant_checked;
          if (gx[i] < gy - tol && report.orthant_ok) {
            report.orthant_ok = false;
            report.orthant_counterexample =
                OrthantCounterexample{x, y, e, i, gx[i], gy};
          }
        }
      }
      for (int i = 1; i <= k; ++i) {
        for (int l = 1; l <= k; ++l) {
          if (i == l) continue;
          ++report.pairwise_checked;
          if (gx[i] + gx[l] < -tol && report.pairwise_ok) {
            report.pairwise_ok = false;
            report.pairwise_counterexample =
                PairwiseCounterexample{x, e, i, l, gx[i], gx[l]};
          }
        }
      }
    }

    const double lhs = fx + fz;
    const double rhs = f.Evaluate(Meet(x, z)) + f.Evaluate(Join(x, z));
    ++report.definition_pairs_checked;
    if (lhs < rhs - tol && report.definition_ok) {
      report.definition_ok = false;
      report.definition_counterexample =
          DefinitionCounterexample{x, z, lhs, rhs};
    }
  }
}

}  // namespace

KSubReport CheckKSubmodularity(const Objective& f,
                               std::span<const ElementId> universe,
                               const CheckOptions& options) {
  KSubReport report;
  report.mode = options.mode;
  if (options.mode == CheckMode::kExhaustive) {
    CheckExhaustive(f, universe, options, report);
  } else {
    report.seed = options.seed;
    report.trials = options.trials;
    CheckSampled(f, universe, options, report);
  }
  return report;
}

KSubReport CheckKSubmodularity(const Objective& f, const KnapsackInstance& inst,
                               const CheckOptions& options) {
  return CheckKSubmodularity(f, std::span<const ElementId>(inst.universe()),
                             options);
}

std::string ReportToText(const KSubReport& r) {
  std::ostringstream os;
  os << "mode: "
     << (r.mode == CheckMode::kExhaustive
             ? std::string("exhaustive")
             : "sampled(seed=" + std::to_string(r.seed) +
                   ", trials=" + std::to_string(r.trials) + ")")
     << "\n";
  os << "orthant submodular: " << (r.orthant_ok ? "yes" : "NO") << " ("
     << r.orthant_checked << " predicates)\n";
  if (r.orthant_counterexample) {
    const auto& c = *r.orthant_counterexample;
    os << "  counterexample: x=" << c.x.ToString() << " y=" << c.y.ToString()
       << " e=" << c.e << " i=" << c.i << " gain_x=" << FormatDouble(c.gain_x)
       << " gain_y=" << FormatDouble(c.gain_y) << "\n";
  }
  os << "pairwise monotone: " << (r.pairwise_ok ? "yes" : "NO") << " ("
     << r.pairwise_checked << " predicates)\n";
  if (r.pairwise_counterexample) {
    const auto& c = *r.pairwise_counterexample;
    os << "  counterexample: x=" << c.x.ToString() << " e=" << c.e
       << " i=" << c.i << " j=" << c.j << " gain_i=" << FormatDouble(c.gain_i)
       << " gain_j=" << FormatDouble(c.gain_j) << "\n";
  }
  if (r.definition_checked) {
    os << "join/meet inequality: " << (r.definition_ok ? "yes" : "NO") << " ("
       << r.definition_pairs_checked << " pairs)\n";
  } else {
    os << "join/meet inequality: skipped (pair cap)\n";
  }
  if (r.definition_counterexample) {
    const auto& c = *r.definition_counterexample;
    os << "  counterexample: x=" << c.x.ToString() << " y=" << c.y.ToString()
       << " f(x)+f(y)=" << FormatDouble(c.lhs)
       << " f(meet)+f(join)=" << FormatDouble(c.rhs) << "\n";
  }
  if (r.nonmonotone_witness) {
    const auto& w = *r.nonmonotone_witness;
    os << "non-monotone: x=" << w.x.ToString() << " e=" << w.e << " i=" << w.i
       << " gain=" << FormatDouble(w.gain) << "\n";
  } else {
    os << "non-monotone: no witness found\n";
  }
  os << "k-submodular: " << (r.ksubmodular() ? "yes" : "NO") << "\n";
  return os.str();
}

std::string ReportToKeyValues(const KSubReport& r) {
  std::ostringstream os;
  os << "mode=" << (r.mode == CheckMode::kExhaustive ? "exhaustive" : "sampled")
     << "\n";
  os << "seed=" << r.seed << "\n";
  os << "trials=" << r.trials << "\n";
  os << "orthant_ok=" << r.orthant_ok << "\n";
  os << "orthant_checked=" << r.orthant_checked << "\n";
  os << "pairwise_ok=" << r.pairwise_ok << "\n";
  os << "pairwise_checked=" << r.pairwise_checked << "\n";
  os << "definition_checked=" << r.definition_checked << "\n";
  os << "definition_ok=" << r.definition_ok << "\n";
  os << "definition_pairs_checked=" << r.definition_pairs_checked << "\n";
  os << "nonmonotone_witness=" << (r.nonmonotone_witness ? 1 : 0) << "\n";
  os << "ksubmodular=" << r.ksubmodular() << "\n";
  return os.str();
}

}  // namespace ksub
