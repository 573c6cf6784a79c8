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

#include "claimkit/lexicons.hpp"

#include <algorithm>
#include <filesystem>

#include "claimkit/error.hpp"
#include "textutil.hpp"

namespace claimkit::lexicons {

namespace tu = claimkit::textutil;
namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// WordList

WordList::WordList(std::vector<std::string> entries) {
  for (std::string& e : entries) {
    std::string norm = tu::to_lower(tu::collapse_whitespace(tu::trim(e)));
    if (norm.empty()) continue;
    if (set_.insert(norm).second) {
      std::size_t words = 1 + std::count(norm.begin(), norm.end(), ' ');
      max_phrase_words_ = std::max(max_phrase_words_, words);
      entries_.push_back(std::move(norm));
    }
  }
  std::sort(entries_.begin(), entries_.end());
}

bool WordList::contains(const std::string& lower) const {
  return set_.count(lower) > 0;
}

bool WordList::contains_inflected(const std::string& lower) const {
  if (set_.count(lower)) return true;
  static const char* suffixes[] = {"s", "es", "d", "ed", "ing"};
  for (const char* suf : suffixes) {
    std::size_t n = std::char_traits<char>::length(suf);
    if (lower.size() > n && lower.ends_with(suf) &&
        set_.count(lower.substr(0, lower.size() - n))) {
      return true;
    }
  }
  return false;
}

std::vector<WordList::PhraseMatch> WordList::find_phrases(
    const std::vector<lingkit::Token>& tokens, bool inflected) const {
  std::vector<PhraseMatch> out;
  std::vector<std::string> lowers;
  lowers.reserve(tokens.size());
  for (const auto& t : tokens) lowers.push_back(tu::to_lower(t.text));
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    // longest phrase first so multi-word entries win over their prefixes
    for (std::size_t len = std::min(max_phrase_words_, tokens.size() - i);
         len >= 1; --len) {
      std::string phrase = lowers[i];
      for (std::size_t k = 1; k < len; ++k) phrase += " " + lowers[i + k];
      bool hit = len == 1 && inflected ? contains_inflected(phrase)
                                       : contains(phrase);
      if (hit) {
        std::string entry = phrase;
        if (!contains(phrase)) {
          // inflected single-word hit: report the list entry
          for (const auto& e : entries_) {
            if (phrase.starts_with(e) && phrase.size() > e.size()) {
              entry = e;
              break;
            }
          }
        }
        out.push_back({i, i + len, entry});
        i += len - 1;
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Loading

namespace {

std::vector<std::string> read_list(const fs::path& path) {
  if (!fs::exists(path)) {
    throw Error(ErrorCode::MissingList, "missing list file: " + path.string());
  }
  std::vector<std::string> entries;
  for (const std::string& line : tu::split(tu::read_file(path.string()), '\n')) {
    std::string t = tu::trim(line);
    if (t.empty() || t[0] == '#') continue;
    entries.push_back(t);
  }
  return entries;
}

}  // namespace

LexiconSet load_lexicons(const std::string& directory) {
  fs::path dir(directory);
  LexiconSet set;
  set.core_words = WordList(read_list(dir / "core_words.txt"));
  set.non_core_words = WordList(read_list(dir / "non_core_words.txt"));
  set.external_refs = WordList(read_list(dir / "external_refs.txt"));
  set.hedges = WordList(read_list(dir / "hedges.txt"));
  set.atomicity_markers = WordList(read_list(dir / "atomicity_markers.txt"));
  set.modal_verbs = WordList(read_list(dir / "modal_verbs.txt"));
  set.stop_words = WordList(read_list(dir / "stop_words.txt"));

  for (const auto& w : set.core_words.entries()) {
    if (set.non_core_words.contains(w)) {
      throw Error(ErrorCode::OverlapError,
                  "word in both core and non-core lists: " + w);
    }
  }
  static const char* required_modals[] = {"can",   "could",  "may",
                                          "might", "shall",  "should",
                                          "will",  "would",  "must"};
  for (const char* m : required_modals) {
    if (!set.modal_verbs.contains(m)) {
      throw Error(ErrorCode::MissingList,
                  std::string("modal verb list lacks: ") + m);
    }
  }
  return set;
}

// ---------------------------------------------------------------------------
// Cue patterns

namespace {

std::string past_of(const std::string& base) {
  // reporting verbs are regular apart from "show"
  if (base == "show") return "showed";
  if (base.ends_with("e")) return base + "d";
  if (base.size() >= 2 && base.ends_with("y") &&
      std::string("aeiou").find(base[base.size() - 2]) == std::string::npos) {
    return base.substr(0, base.size() - 1) + "ied";
  }
  return base + "ed";
}

}  // namespace

void CuePatternSet::compile() {
  verb_forms_.clear();
  for (const auto& v : reporting_verbs_) {
    verb_forms_.insert(v);
    verb_forms_.insert(lingkit::Morphology::third_singular_of(v));
    verb_forms_.insert(past_of(v));
    if (v == "show") verb_forms_.insert("shown");
  }
}

CuePatternSet CuePatternSet::builtin() {
  CuePatternSet set;
  set.adverbials_ = {"overall",        "in conclusion", "altogether",
                     "collectively",   "taken together", "in summary"};
  set.determiners_ = {"this", "these", "the", "our"};
  set.subject_nouns_ = {"study",   "studies", "experiment", "research",
                        "results", "findings", "data",      "analysis",
                        "observations"};
  set.reporting_verbs_ = {"reveal",  "show",    "demonstrate", "indicate",
                          "suggest", "confirm", "conclude",    "highlight"};
  set.compile();
  return set;
}

CuePatternSet CuePatternSet::load(const std::string& grammar_path) {
  CuePatternSet set;
  std::string section;
  for (const std::string& line :
       tu::split(tu::read_file(grammar_path), '\n')) {
    std::string t = tu::trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = tu::to_lower(t.substr(1, t.size() - 2));
      continue;
    }
    std::string entry = tu::to_lower(tu::collapse_whitespace(t));
    if (section == "adverbials") set.adverbials_.push_back(entry);
    else if (section == "determiners") set.determiners_.push_back(entry);
    else if (section == "subject_nouns") set.subject_nouns_.push_back(entry);
    else if (section == "reporting_verbs") set.reporting_verbs_.push_back(entry);
    else
      throw Error(ErrorCode::MalformedRecord,
                  "cue grammar entry outside a known section: " + t);
  }
  if (set.reporting_verbs_.empty()) {
    throw Error(ErrorCode::MissingList,
                "cue grammar has no reporting verbs: " + grammar_path);
  }
  set.compile();
  return set;
}

std::optional<CuePatternSet::Match> CuePatternSet::match(
    const lingkit::Sentence& sentence) const {
  const auto& tokens = sentence.tokens;
  if (tokens.empty()) return std::nullopt;

  std::vector<std::string> lowers;
  lowers.reserve(tokens.size());
  for (const auto& t : tokens) lowers.push_back(tu::to_lower(t.text));

  const auto match_phrase_list =
      [&](std::size_t at, const std::vector<std::string>& list) -> std::size_t {
    // returns number of tokens consumed by the longest matching phrase, 0 if none
    std::size_t best = 0;
    for (const auto& phrase : list) {
      auto words = tu::split(phrase, ' ');
      if (at + words.size() > tokens.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < words.size(); ++k) {
        if (lowers[at + k] != words[k]) {
          ok = false;
          break;
        }
      }
      if (ok) best = std::max(best, words.size());
    }
    return best;
  };

  std::size_t pos = 0;
  bool has_adv = false;
  if (std::size_t n = match_phrase_list(pos, adverbials_); n > 0) {
    pos += n;
    has_adv = true;
    if (pos < tokens.size() && tokens[pos].text == ",") ++pos;
  }
  bool has_subj = false;
  std::size_t det = match_phrase_list(pos, determiners_);
  if (det > 0 && pos + det < tokens.size()) {
    if (match_phrase_list(pos + det, subject_nouns_) > 0) {
      pos += det + 1;
      has_subj = true;
    }
  }
  if (!has_adv && !has_subj) return std::nullopt;
  if (pos >= tokens.size() || !verb_forms_.count(lowers[pos])) {
    return std::nullopt;
  }
  ++pos;
  bool has_that = pos < tokens.size() && lowers[pos] == "that";
  if (has_that) ++pos;
  if (pos >= tokens.size()) return std::nullopt;  // nothing left after the cue

  Match m;
  m.token_begin = 0;
  m.token_end = pos;
  m.span = {tokens.front().span.begin, tokens[pos - 1].span.end};
  m.pattern_id = std::string(has_adv ? "adv+" : "") +
                 (has_subj ? "subj+" : "") + "verb" + (has_that ? "+that" : "");
  return m;
}

std::vector<std::string> CuePatternSet::pattern_ids() const {
  return {"adv+verb", "adv+verb+that", "subj+verb", "subj+verb+that",
          "adv+subj+verb", "adv+subj+verb+that"};
}

std::vector<std::pair<std::string, std::string>>
CuePatternSet::canonical_examples() const {
  // one example sentence per pattern id; the trailing clause keeps the match
  // from consuming the whole sentence
  return {
      {"adv+verb", "Altogether, confirmed the effect."},
      {"adv+verb+that", "Overall, shown that treatment works."},
      {"subj+verb", "These findings indicate improved survival."},
      {"subj+verb+that", "The data suggest that treatment works."},
      {"adv+subj+verb", "In conclusion, these findings confirm the effect."},
      {"adv+subj+verb+that",
       "Overall, this study reveals that malaria is transmitted by mosquitos."},
  };
}

std::optional<CuePatternSet::Match> match_cue(const lingkit::Sentence& sentence,
                                              const CuePatternSet& patterns) {
  return patterns.match(sentence);
}

}  // namespace claimkit::lexicons
