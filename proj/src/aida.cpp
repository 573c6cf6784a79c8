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

#include "claimkit/aida.hpp"

#include "claimkit/error.hpp"
#include "textutil.hpp"

namespace claimkit::aida {

namespace tu = claimkit::textutil;

namespace {

void require_tagged(const lingkit::Sentence& sentence) {
  if (!sentence.tagged()) {
    throw Error(ErrorCode::UntaggedInput, "sentence is not POS-tagged");
  }
}

std::string text_at(const lingkit::Sentence& s, std::size_t begin,
                    std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (!out.empty()) out += ' ';
    out += s.tokens[i].text;
  }
  return out;
}

Evidence make_evidence(const lingkit::Sentence& s, std::string rule_id,
                       std::size_t begin, std::size_t end) {
  return {std::move(rule_id), text_at(s, begin, end), begin, end};
}

}  // namespace

CheckResult check_atomic(const lingkit::Sentence& sentence,
                         const lexicons::LexiconSet& lex) {
  require_tagged(sentence);
  std::vector<Evidence> evidence;
  for (const auto& hit : lex.atomicity_markers.find_phrases(sentence.tokens)) {
    evidence.push_back(
        make_evidence(sentence, "atomic.marker", hit.begin, hit.end));
  }
  auto clauses = lingkit::count_finite_clauses(sentence);
  if (clauses.finite_clause_count > 1) {
    for (std::size_t b : clauses.boundaries) {
      evidence.push_back(
          make_evidence(sentence, "atomic.clause_boundary", b, b + 1));
    }
  }
  return {evidence.empty(), std::move(evidence)};
}

CheckResult check_independent(const lingkit::Sentence& sentence,
                              const lexicons::LexiconSet& lex) {
  require_tagged(sentence);
  std::vector<Evidence> evidence;
  for (const auto& hit : lex.external_refs.find_phrases(sentence.tokens)) {
    evidence.push_back(
        make_evidence(sentence, "independent.external_ref", hit.begin, hit.end));
  }
  return {evidence.empty(), std::move(evidence)};
}

CheckResult check_declarative(const lingkit::Sentence& sentence) {
  require_tagged(sentence);
  std::vector<Evidence> evidence;
  const auto& tokens = sentence.tokens;

  char first_alpha = '\0';
  for (char c : sentence.raw) {
    if (tu::is_alpha(c)) {
      first_alpha = c;
      break;
    }
  }
  if (first_alpha == '\0' || !tu::is_upper(first_alpha)) {
    evidence.push_back(make_evidence(sentence, "declarative.initial_lowercase",
                                     0, tokens.empty() ? 0 : 1));
  }
  if (tokens.empty() || tokens.back().text != ".") {
    std::size_t n = tokens.size();
    evidence.push_back(make_evidence(sentence, "declarative.no_full_stop",
                                     n == 0 ? 0 : n - 1, n));
  }
  bool has_verb = false, has_noun = false;
  for (const auto& tok : tokens) {
    if (tok.pos.is_verb() || tok.pos.tag == "MD") has_verb = true;
    if (tok.pos.is_noun() || tok.pos.tag == "PRP") has_noun = true;
  }
  if (!has_verb) {
    evidence.push_back(make_evidence(sentence, "declarative.no_verb", 0, 0));
  }
  if (!has_noun) {
    evidence.push_back(make_evidence(sentence, "declarative.no_noun", 0, 0));
  }
  return {evidence.empty(), std::move(evidence)};
}

CheckResult check_absolute(const lingkit::Sentence& sentence,
                           const lexicons::LexiconSet& lex) {
  require_tagged(sentence);
  std::vector<Evidence> evidence;
  // hedge words, with suffix-tolerant matching for listed lemmas
  for (const auto& hit :
       lex.hedges.find_phrases(sentence.tokens, /*inflected=*/true)) {
    evidence.push_back(
        make_evidence(sentence, "absolute.hedge", hit.begin, hit.end));
  }
  for (const auto& tok : sentence.tokens) {
    if (tok.pos.tag == "MD") {
      evidence.push_back(
          make_evidence(sentence, "absolute.modal", tok.index, tok.index + 1));
    } else if (tok.pos.tag == "VBD") {
      // past participles (VBN) do not trigger: "is transmitted" is fine
      evidence.push_back(make_evidence(sentence, "absolute.past_tense",
                                       tok.index, tok.index + 1));
    }
  }
  return {evidence.empty(), std::move(evidence)};
}

AidaVerdict check_aida(const lingkit::Sentence& sentence,
                       const lexicons::LexiconSet& lex) {
  AidaVerdict v;
  auto [a, ae] = check_atomic(sentence, lex);
  auto [i, ie] = check_independent(sentence, lex);
  auto [d, de] = check_declarative(sentence);
  auto [ab, abe] = check_absolute(sentence, lex);
  v.atomic = a;
  v.independent = i;
  v.declarative = d;
  v.absolute = ab;
  v.aida = a && i && d && ab;
  for (auto* src : {&ae, &ie, &de, &abe}) {
    for (auto& e : *src) v.evidence.push_back(std::move(e));
  }
  return v;
}

}  // namespace claimkit::aida
