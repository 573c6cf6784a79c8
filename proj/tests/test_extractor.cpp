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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "claimkit/error.hpp"
#include "claimkit/extractor.hpp"
#include "test_support.hpp"
#include "textutil.hpp"

using namespace claimkit;
using namespace claimkit::extractor;
namespace ts = testsupport;
namespace tu = claimkit::textutil;

namespace {

corpus::Article article_from(const std::string& body) {
  corpus::Article a;
  a.id = "T";
  a.full_text = body;
  a.abstract_span = lingkit::Span{0, body.size()};
  return a;
}

// word pool for random documents; mixes core, non-core, stop, and plain words
const std::vector<std::string>& pool() {
  static const std::vector<std::string> words = {
      "malaria",  "mosquitos", "nets",    "drug",   "reveal", "suggest",
      "study",    "overall",   "sample",  "survey", "the",    "of",
      "and",      "patients",  "cells",   "growth", "fever",  "risk",
      "protein",  "binding",   "virus",   "rates",  "confirm"};
  return words;
}

std::string random_sentence(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> len(3, 12);
  std::uniform_int_distribution<std::size_t> pick(0, pool().size() - 1);
  std::size_t n = len(rng);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    std::string w = pool()[pick(rng)];
    if (i == 0) w[0] = tu::upper(w[0]);
    s += w;
    s += (i + 1 == n) ? "." : " ";
  }
  return s;
}

}  // namespace

TEST_CASE("ScoringConfig validation") {
  ScoringConfig ok;
  CHECK_NOTHROW(ok.validate());
  ScoringConfig bad = ok;
  bad.pattern_bonus = 51;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = ok;
  bad.length_penalty = -51;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = ok;
  bad.top_k_terms = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("top_terms agrees with a brute-force counter") {
  const auto& ctx = ts::context();
  std::mt19937 rng(7);
  for (int doc = 0; doc < 50; ++doc) {
    std::string body;
    std::uniform_int_distribution<int> n_sent(2, 10);
    int n = n_sent(rng);
    for (int i = 0; i < n; ++i) body += random_sentence(rng) + " ";
    auto article = article_from(body);
    auto ranking = top_terms(article, ctx.config, ctx.lex);

    // independent count
    std::map<std::string, std::size_t> oracle;
    for (const auto& tok : lingkit::tokenize(body)) {
      if (tok.is_punct()) continue;
      std::string lower = tu::to_lower(tok.text);
      if (ctx.lex.stop_words.contains(lower)) continue;
      bool alpha = std::any_of(lower.begin(), lower.end(),
                               [](char c) { return tu::is_alpha(c); });
      if (!alpha) continue;
      oracle[lower] += 1;
    }

    CHECK(ranking.terms.size() <=
          static_cast<std::size_t>(ctx.config.top_k_terms));
    CHECK(ranking.terms.size() == std::min<std::size_t>(
        oracle.size(), static_cast<std::size_t>(ctx.config.top_k_terms)));
    std::size_t prev = SIZE_MAX;
    std::string prev_term;
    for (const auto& [term, count] : ranking.terms) {
      CHECK(oracle.at(term) == count);
      CHECK(count <= prev);
      if (count == prev) CHECK(term > prev_term);  // alphabetical tie-break
      prev = count;
      prev_term = term;
    }
    // nothing outside the ranking outranks anything inside it
    if (!ranking.terms.empty()) {
      std::size_t worst = ranking.terms.back().second;
      for (const auto& [term, count] : oracle) {
        if (!ranking.contains(term)) CHECK(count <= worst);
      }
    }
  }
}

TEST_CASE("score_sentence worked example") {
  const auto& ctx = ts::context();
  TermRanking empty;
  auto s = ts::tagged(
      "Overall, this study reveals that malaria is transmitted by mosquitos.");
  auto b = score_sentence(s, empty, ctx.lex, ctx.patterns, ctx.config);
  CHECK(b.pattern == 50);
  CHECK(b.core_words == 30);  // overall, study, reveals
  CHECK(b.non_core == 0);
  CHECK(b.term_frequency == 0);
  CHECK(b.length == 0);
  CHECK(b.total == 80);
}

TEST_CASE("score_sentence total is the component sum with sound evidence") {
  const auto& ctx = ts::context();
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    std::string raw = random_sentence(rng);
    auto s = ts::tagged(raw);
    auto article = article_from(raw);
    auto ranking = top_terms(article, ctx.config, ctx.lex);
    auto b = score_sentence(s, ranking, ctx.lex, ctx.patterns, ctx.config);
    CHECK(b.total ==
          b.pattern + b.core_words + b.non_core + b.term_frequency + b.length);
    std::string lower = tu::to_lower(raw);
    for (const auto& ev : b.evidence) {
      auto colon = ev.find(':');
      REQUIRE(colon != std::string::npos);
      std::string kind = ev.substr(0, colon);
      std::string item = ev.substr(colon + 1);
      if (kind == "core" || kind == "non_core" || kind == "tf") {
        CHECK(lower.find(item) != std::string::npos);
      }
    }
  }
}

TEST_CASE("score_sentence scales linearly in the core weight") {
  const auto& ctx = ts::context();
  TermRanking empty;
  auto s = ts::tagged("Overall, the findings confirm the model.");
  auto base = score_sentence(s, empty, ctx.lex, ctx.patterns, ctx.config);
  ScoringConfig doubled = ctx.config;
  doubled.core_word_points *= 2;
  auto twice = score_sentence(s, empty, ctx.lex, ctx.patterns, doubled);
  CHECK(twice.core_words == 2 * base.core_words);
  CHECK(twice.pattern == base.pattern);
}

TEST_CASE("adding a core word never lowers the score") {
  const auto& ctx = ts::context();
  TermRanking empty;
  auto plain = score_sentence(ts::tagged("Nets help patients."), empty, ctx.lex,
                              ctx.patterns, ctx.config);
  auto cored = score_sentence(ts::tagged("Overall nets help patients."), empty,
                              ctx.lex, ctx.patterns, ctx.config);
  CHECK(cored.total >= plain.total + ctx.config.core_word_points);
}

TEST_CASE("length penalty applies past the token limit") {
  const auto& ctx = ts::context();
  TermRanking empty;
  std::string longsent = "Patients";
  for (int i = 0; i < 65; ++i) longsent += " recover";
  longsent += ".";
  auto b = score_sentence(ts::tagged(longsent), empty, ctx.lex, ctx.patterns,
                          ctx.config);
  CHECK(b.length == ctx.config.length_penalty);
}

TEST_CASE("extract_core picks the argmax, ties to the later sentence") {
  const auto& ctx = ts::context();
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> n_sent(1, 8);
  for (int doc = 0; doc < 60; ++doc) {
    std::vector<std::string> sents;
    std::string body;
    int n = n_sent(rng);
    for (int i = 0; i < n; ++i) {
      sents.push_back(random_sentence(rng));
      body += sents.back();
      if (i + 1 < n) body += " ";
    }
    auto article = article_from(body);
    auto result = extract_core(article, ctx.tagger, ctx.config, ctx.lex,
                               ctx.patterns);
    REQUIRE(result.ranked.size() == sents.size());
    // oracle: last index attaining the max total
    int best = 0;
    for (std::size_t i = 0; i < result.ranked.size(); ++i) {
      if (result.ranked[i].breakdown.total >=
          result.ranked[best].breakdown.total) {
        best = static_cast<int>(i);
      }
    }
    CHECK(result.core.raw == result.ranked[best].sentence.raw);
    CHECK(result.breakdown.total == result.ranked[best].breakdown.total);
    for (const auto& ranked : result.ranked) {
      CHECK(ranked.breakdown.total <= result.breakdown.total);
    }
  }
}

TEST_CASE("extract_core explicit tie goes to the later sentence") {
  const auto& ctx = ts::context();
  auto article = article_from("Patients recover. Patients recover.");
  auto result = extract_core(article, ctx.tagger, ctx.config, ctx.lex,
                             ctx.patterns);
  REQUIRE(result.ranked.size() == 2);
  CHECK(result.ranked[0].breakdown.total == result.ranked[1].breakdown.total);
  CHECK(result.core.span.begin == result.ranked[1].sentence.span.begin);
}

TEST_CASE("extract_core error cases") {
  const auto& ctx = ts::context();
  corpus::Article no_abs;
  no_abs.id = "none";
  no_abs.full_text = "text without located abstract";
  try {
    extract_core(no_abs, ctx.tagger, ctx.config, ctx.lex, ctx.patterns);
    FAIL("expected NoAbstract");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoAbstract);
  }
  auto empty = article_from("   ");
  try {
    extract_core(empty, ctx.tagger, ctx.config, ctx.lex, ctx.patterns);
    FAIL("expected EmptyAbstract");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyAbstract);
  }
}

TEST_CASE("max_length_from_gold is longest gold length plus ten percent") {
  std::vector<corpus::GoldCoreSentence> gold = {
      {"A", "Malaria is common."},              // 3 words
      {"B", "Bed nets help a lot."},            // 5 words
  };
  CHECK(max_length_from_gold(gold) == 6);  // ceil(5 * 1.1)
  gold.push_back({"C",
      "Overall, this study reveals that malaria is transmitted by mosquitos."});
  CHECK(max_length_from_gold(gold) == 11);  // ceil(10 * 1.1)
}
