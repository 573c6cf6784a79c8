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

#ifndef CLAIMKIT_PIPELINE_HPP
#define CLAIMKIT_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "claimkit/aida.hpp"
#include "claimkit/corpus.hpp"
#include "claimkit/extractor.hpp"
#include "claimkit/eval.hpp"
#include "claimkit/rewriter.hpp"

namespace claimkit::pipeline {

inline constexpr int kSchemaVersion = 1;

using json = nlohmann::ordered_json;

/// One article's trip through extract -> check -> rewrite.
struct PipelineRecord {
  std::string article_id;
  std::optional<std::string> core_sentence;
  std::optional<extractor::ScoreBreakdown> score;
  std::optional<aida::AidaVerdict> verdict;
  std::optional<std::string> rewritten;
  std::vector<rewriter::Edit> edits;
  std::optional<aida::AidaVerdict> post_verdict;
  bool rewrite_attempted = false;
  std::vector<std::string> warnings;
  std::optional<std::string> error;  // per-article failure reason
};

json to_json(const extractor::ScoreBreakdown& b);
json to_json(const aida::AidaVerdict& v);
json to_json(const rewriter::Edit& e);
json to_json(const PipelineRecord& r);

PipelineRecord record_from_json(const json& j);
aida::AidaVerdict verdict_from_json(const json& j);

/// Shared immutable analysis context: tagger, morphology, lexicons, cue
/// patterns, scoring config.
struct Context {
  lingkit::Tagger tagger;
  lingkit::Morphology morphology;
  lexicons::LexiconSet lex;
  lexicons::CuePatternSet patterns;
  extractor::ScoringConfig config;

  static Context load(const std::string& lexicon_dir,
                      const extractor::ScoringConfig& config = {});

  rewriter::RewriteDeps rewrite_deps() const;
};

/// Per-article stages. Each fills in more of the record; errors are recorded
/// on the record, never thrown past the batch loop.
PipelineRecord run_extract(const corpus::Article& article, const Context& ctx);
void run_check(PipelineRecord& record, const Context& ctx);
void run_rewrite(PipelineRecord& record, const Context& ctx);
PipelineRecord run_pipeline(const corpus::Article& article, const Context& ctx);

/// Ordered parallel map: applies `run_pipeline` per article on up to `jobs`
/// threads, output kept in input order.
std::vector<PipelineRecord> run_pipeline_batch(
    const std::vector<corpus::Article>& articles, const Context& ctx,
    unsigned jobs = 1);

}  // namespace claimkit::pipeline

#endif  // CLAIMKIT_PIPELINE_HPP
