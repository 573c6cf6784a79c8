/*
 * Copyright 2026 the claimkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CLAIMKIT_EVAL_HPP
#define CLAIMKIT_EVAL_HPP

#include <map>
#include <string>
#include <vector>

#include "claimkit/aida.hpp"
#include "claimkit/corpus.hpp"

namespace claimkit::eval {

/// Normalized character edit-distance similarity in [0, 1].
double similarity(const std::string& a, const std::string& b);

struct ExtractionMatch {
  std::string article_id;
  double similarity = 0.0;
  bool matched = false;
};

struct ExtractionReport {
  std::vector<ExtractionMatch> per_article;
  std::size_t matched = 0;
  std::size_t total = 0;
  double fraction = 0.0;
};

ExtractionReport evaluate_extraction(
    const std::vector<std::pair<std::string, std::string>>& extracted,
    const std::vector<corpus::GoldCoreSentence>& gold, double threshold = 0.85);

struct ConfusionCounts {
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
};

struct Metrics {
  ConfusionCounts counts;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  double accuracy = 0.0;
  bool degenerate = false;  // some denominator was zero

  static Metrics from_counts(const ConfusionCounts& counts);
};

/// Per-requirement metrics; keys: atomic, independent, declarative, absolute,
/// aida. Positive class = compliant.
struct MetricReport {
  std::map<std::string, Metrics> per_requirement;
};

struct FlagVector {
  bool atomic = false;
  bool independent = false;
  bool declarative = false;
  bool absolute = false;
  bool aida = false;

  static FlagVector from_verdict(const aida::AidaVerdict& v);
  static FlagVector from_labeled(const corpus::LabeledAidaSentence& s);
};

MetricReport evaluate_checks(const std::vector<FlagVector>& predicted,
                             const std::vector<FlagVector>& gold);

/// Compliance percentages (0..100) before and after rewriting, per
/// requirement plus overall.
struct ComplianceTable {
  struct Row {
    std::string requirement;
    double before_pct = 0.0;
    double after_pct = 0.0;
  };
  std::vector<Row> rows;  // aida, atomic, independent, declarative, absolute
};

ComplianceTable evaluate_rewrites(const std::vector<FlagVector>& before,
                                  const std::vector<FlagVector>& after);

}  // namespace claimkit::eval

#endif  // CLAIMKIT_EVAL_HPP
