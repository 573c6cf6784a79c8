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

#include "claimkit/eval.hpp"

#include <algorithm>
#include <unordered_map>

#include "claimkit/error.hpp"
#include "textutil.hpp"

namespace claimkit::eval {

namespace tu = claimkit::textutil;

namespace {

std::string normalize(const std::string& s) {
  return tu::to_lower(tu::collapse_whitespace(corpus::strip_formatting(s)));
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

double similarity(const std::string& a, const std::string& b) {
  std::string na = normalize(a);
  std::string nb = normalize(b);
  std::size_t longest = std::max(na.size(), nb.size());
  if (longest == 0) return 1.0;
  std::size_t dist = edit_distance(na, nb);
  return 1.0 - static_cast<double>(dist) / static_cast<double>(longest);
}

ExtractionReport evaluate_extraction(
    const std::vector<std::pair<std::string, std::string>>& extracted,
    const std::vector<corpus::GoldCoreSentence>& gold, double threshold) {
  std::unordered_map<std::string, std::string> gold_by_id;
  for (const auto& rec : gold) gold_by_id[rec.article_id] = rec.sentence_text;

  ExtractionReport report;
  for (const auto& [id, sentence] : extracted) {
    auto it = gold_by_id.find(id);
    if (it == gold_by_id.end()) {
      throw Error(ErrorCode::MissingGold, "no gold sentence for article: " + id);
    }
    ExtractionMatch m;
    m.article_id = id;
    m.similarity = similarity(sentence, it->second);
    m.matched = m.similarity >= threshold;
    if (m.matched) ++report.matched;
    report.per_article.push_back(std::move(m));
  }
  report.total = extracted.size();
  report.fraction = report.total == 0
                        ? 0.0
                        : static_cast<double>(report.matched) /
                              static_cast<double>(report.total);
  return report;
}

Metrics Metrics::from_counts(const ConfusionCounts& c) {
  Metrics m;
  m.counts = c;
  const auto ratio = [&m](std::size_t num, std::size_t den) {
    if (den == 0) {
      m.degenerate = true;
      return 0.0;
    }
    return static_cast<double>(num) / static_cast<double>(den);
  };
  m.precision = ratio(c.tp, c.tp + c.fp);
  m.recall = ratio(c.tp, c.tp + c.fn);
  double pr = m.precision + m.recall;
  m.f_measure = pr == 0.0 ? 0.0 : 2.0 * m.precision * m.recall / pr;
  m.accuracy = ratio(c.tp + c.tn, c.total());
  return m;
}

FlagVector FlagVector::from_verdict(const aida::AidaVerdict& v) {
  return {v.atomic, v.independent, v.declarative, v.absolute, v.aida};
}

FlagVector FlagVector::from_labeled(const corpus::LabeledAidaSentence& s) {
  return {s.atomic, s.independent, s.declarative, s.absolute, s.aida()};
}

namespace {

const std::vector<std::pair<std::string, bool FlagVector::*>>& requirements() {
  static const std::vector<std::pair<std::string, bool FlagVector::*>> reqs = {
      {"atomic", &FlagVector::atomic},
      {"independent", &FlagVector::independent},
      {"declarative", &FlagVector::declarative},
      {"absolute", &FlagVector::absolute},
      {"aida", &FlagVector::aida},
  };
  return reqs;
}

}  // namespace

MetricReport evaluate_checks(const std::vector<FlagVector>& predicted,
                             const std::vector<FlagVector>& gold) {
  if (predicted.size() != gold.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "predicted and gold collections differ in length");
  }
  MetricReport report;
  for (const auto& [name, member] : requirements()) {
    ConfusionCounts c;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
      bool p = predicted[i].*member;
      bool g = gold[i].*member;
      if (p && g) ++c.tp;
      else if (p && !g) ++c.fp;
      else if (!p && g) ++c.fn;
      else ++c.tn;
    }
    report.per_requirement[name] = Metrics::from_counts(c);
  }
  return report;
}

ComplianceTable evaluate_rewrites(const std::vector<FlagVector>& before,
                                  const std::vector<FlagVector>& after) {
  if (before.size() != after.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "before and after collections differ in length");
  }
  ComplianceTable table;
  const auto pct = [&](const std::vector<FlagVector>& v,
                       bool FlagVector::* member) {
    if (v.empty()) return 0.0;
    std::size_t n = std::count_if(v.begin(), v.end(),
                                  [&](const FlagVector& f) { return f.*member; });
    return 100.0 * static_cast<double>(n) / static_cast<double>(v.size());
  };
  static const std::vector<std::pair<std::string, bool FlagVector::*>> order = {
      {"aida", &FlagVector::aida},
      {"atomic", &FlagVector::atomic},
      {"independent", &FlagVector::independent},
      {"declarative", &FlagVector::declarative},
      {"absolute", &FlagVector::absolute},
  };
  for (const auto& [name, member] : order) {
    table.rows.push_back({name, pct(before, member), pct(after, member)});
  }
  return table;
}

}  // namespace claimkit::eval
