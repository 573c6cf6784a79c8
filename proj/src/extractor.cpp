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

#include "claimkit/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "claimkit/error.hpp"
#include "textutil.hpp"

namespace claimkit::extractor {

namespace tu = claimkit::textutil;

void ScoringConfig::validate() const {
  const auto in_range = [](int v) { return v >= -50 && v <= 50; };
  if (!in_range(pattern_bonus) || !in_range(core_word_points) ||
      !in_range(non_core_penalty) || !in_range(tf_points) ||
      !in_range(length_penalty)) {
    throw Error(ErrorCode::MalformedRecord,
                "scoring weights must lie within [-50, 50]");
  }
  if (top_k_terms < 1) {
    throw Error(ErrorCode::MalformedRecord, "top_k_terms must be >= 1");
  }
  if (max_length_tokens < 1) {
    throw Error(ErrorCode::MalformedRecord, "max_length_tokens must be >= 1");
  }
}

bool TermRanking::contains(const std::string& lower) const {
  return std::any_of(terms.begin(), terms.end(),
                     [&](const auto& t) { return t.first == lower; });
}

TermRanking top_terms(const corpus::Article& article,
                      const ScoringConfig& config,
                      const lexicons::LexiconSet& lex) {
  // ordered map gives the alphabetical tie-break for free
  std::map<std::string, std::size_t> counts;
  for (const auto& tok : lingkit::tokenize(article.full_text)) {
    if (tok.is_punct()) continue;
    std::string lower = tu::to_lower(tok.text);
    bool has_alpha = std::any_of(lower.begin(), lower.end(),
                                 [](char c) { return tu::is_alpha(c); });
    if (!has_alpha) continue;  // pure numbers
    if (lex.stop_words.contains(lower)) continue;
    counts[lower] += 1;
  }
  std::vector<std::pair<std::string, std::size_t>> all(counts.begin(),
                                                       counts.end());
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  TermRanking ranking;
  std::size_t k = static_cast<std::size_t>(config.top_k_terms);
  for (std::size_t i = 0; i < all.size() && i < k; ++i) {
    ranking.terms.push_back(all[i]);
  }
  return ranking;
}

ScoreBreakdown score_sentence(const lingkit::Sentence& sentence,
                              const TermRanking& ranking,
                              const lexicons::LexiconSet& lex,
                              const lexicons::CuePatternSet& patterns,
                              const ScoringConfig& config) {
  if (!sentence.tagged()) {
    throw Error(ErrorCode::UntaggedInput, "sentence is not POS-tagged");
  }
  ScoreBreakdown b;

  if (auto m = lexicons::match_cue(sentence, patterns)) {
    b.pattern = config.pattern_bonus;
    b.evidence.push_back("pattern:" + m->pattern_id);
  }

  for (const auto& hit : lex.core_words.find_phrases(sentence.tokens)) {
    b.core_words += config.core_word_points;
    b.evidence.push_back("core:" + hit.entry);
  }
  for (const auto& hit : lex.non_core_words.find_phrases(sentence.tokens)) {
    b.non_core += config.non_core_penalty;
    b.evidence.push_back("non_core:" + hit.entry);
  }

  std::size_t word_count = 0;
  for (const auto& tok : sentence.tokens) {
    if (tok.is_punct()) continue;
    ++word_count;
    std::string lower = tu::to_lower(tok.text);
    if (ranking.contains(lower)) {
      b.term_frequency += config.tf_points;
      b.evidence.push_back("tf:" + lower);
    }
  }

  if (word_count > static_cast<std::size_t>(config.max_length_tokens)) {
    b.length = config.length_penalty;
    b.evidence.push_back("length:" + std::to_string(word_count));
  }

  b.total = b.pattern + b.core_words + b.non_core + b.term_frequency + b.length;
  return b;
}

ExtractionResult extract_core(const corpus::Article& article,
                              const lingkit::Tagger& tagger,
                              const ScoringConfig& config,
                              const lexicons::LexiconSet& lex,
                              const lexicons::CuePatternSet& patterns) {
  config.validate();
  if (!article.abstract_span) {
    throw Error(ErrorCode::NoAbstract, "no abstract located: " + article.id);
  }
  auto sentences = lingkit::split_sentences(article.abstract_text());
  if (sentences.empty()) {
    throw Error(ErrorCode::EmptyAbstract, "abstract has no sentences: " + article.id);
  }

  TermRanking ranking = top_terms(article, config, lex);
  ExtractionResult result;
  std::size_t best = 0;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    tagger.tag(sentences[i]);
    ScoreBreakdown b =
        score_sentence(sentences[i], ranking, lex, patterns, config);
    result.ranked.push_back({sentences[i], b});
    // ties go to the later sentence
    if (i == 0 || b.total >= result.ranked[best].breakdown.total) best = i;
  }
  result.core = result.ranked[best].sentence;
  result.breakdown = result.ranked[best].breakdown;
  return result;
}

int max_length_from_gold(const std::vector<corpus::GoldCoreSentence>& gold) {
  std::size_t longest = 0;
  for (const auto& rec : gold) {
    std::size_t words = 0;
    for (const auto& tok : lingkit::tokenize(rec.sentence_text)) {
      if (!tok.is_punct()) ++words;
    }
    longest = std::max(longest, words);
  }
  return static_cast<int>(std::ceil(static_cast<double>(longest) * 1.1));
}

}  // namespace claimkit::extractor
