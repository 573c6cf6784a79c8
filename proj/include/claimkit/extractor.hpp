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

#ifndef CLAIMKIT_EXTRACTOR_HPP
#define CLAIMKIT_EXTRACTOR_HPP

#include <string>
#include <vector>

#include "claimkit/corpus.hpp"
#include "claimkit/lexicons.hpp"
#include "claimkit/lingkit.hpp"

namespace claimkit::extractor {

/// Sentence scoring weights, all in points within [-50, +50].
struct ScoringConfig {
  int pattern_bonus = 50;
  int core_word_points = 10;
  int non_core_penalty = -10;
  int tf_points = 5;
  int length_penalty = -30;
  int max_length_tokens = 60;
  int top_k_terms = 10;

  void validate() const;  // throws on out-of-range values
};

struct ScoreBreakdown {
  int pattern = 0;
  int core_words = 0;
  int non_core = 0;
  int term_frequency = 0;
  int length = 0;
  int total = 0;
  std::vector<std::string> evidence;  // "factor:item" entries
};

struct TermRanking {
  std::vector<std::pair<std::string, std::size_t>> terms;

  bool contains(const std::string& lower) const;
};

struct ScoredSentence {
  lingkit::Sentence sentence;
  ScoreBreakdown breakdown;
};

struct ExtractionResult {
  lingkit::Sentence core;
  ScoreBreakdown breakdown;
  std::vector<ScoredSentence> ranked;  // abstract order
};

/// Top-k most frequent terms over the entire article text, stop words and
/// number/punctuation tokens excluded; ties break alphabetically.
TermRanking top_terms(const corpus::Article& article, const ScoringConfig& config,
                      const lexicons::LexiconSet& lex);

ScoreBreakdown score_sentence(const lingkit::Sentence& sentence,
                              const TermRanking& ranking,
                              const lexicons::LexiconSet& lex,
                              const lexicons::CuePatternSet& patterns,
                              const ScoringConfig& config);

/// Highest-scoring abstract sentence; ties go to the later sentence.
ExtractionResult extract_core(const corpus::Article& article,
                              const lingkit::Tagger& tagger,
                              const ScoringConfig& config,
                              const lexicons::LexiconSet& lex,
                              const lexicons::CuePatternSet& patterns);

/// Length threshold from gold data: longest gold sentence plus ten percent.
int max_length_from_gold(const std::vector<corpus::GoldCoreSentence>& gold);

}  // namespace claimkit::extractor

#endif  // CLAIMKIT_EXTRACTOR_HPP
