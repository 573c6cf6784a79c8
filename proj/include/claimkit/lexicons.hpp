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

#ifndef CLAIMKIT_LEXICONS_HPP
#define CLAIMKIT_LEXICONS_HPP

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "claimkit/lingkit.hpp"

namespace claimkit::lexicons {

/// Case-insensitive word/phrase set; entries are stored lowercase.
/// Multi-word entries match as contiguous token subsequences.
class WordList {
 public:
  WordList() = default;
  explicit WordList(std::vector<std::string> entries);

  bool contains(const std::string& lower) const;
  /// Suffix-tolerant lookup: also matches entry + {s, es, d, ed, ing}.
  bool contains_inflected(const std::string& lower) const;

  const std::vector<std::string>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Token index ranges [begin, end) where an entry matches as a contiguous
  /// subsequence. Returns the matched entry with each range.
  struct PhraseMatch {
    std::size_t begin;
    std::size_t end;
    std::string entry;
  };
  std::vector<PhraseMatch> find_phrases(
      const std::vector<lingkit::Token>& tokens, bool inflected = false) const;

 private:
  std::vector<std::string> entries_;
  std::unordered_set<std::string> set_;
  std::size_t max_phrase_words_ = 1;
};

struct LexiconSet {
  WordList core_words;
  WordList non_core_words;
  WordList external_refs;
  WordList hedges;
  WordList atomicity_markers;
  WordList modal_verbs;
  WordList stop_words;
};

/// One slot-driven cue pattern family: [adverbial,] [det noun] verb [that].
/// Slot alternation lists come from the grammar file; the reporting verb
/// matches any inflection. At least one of the adverbial or subject slots
/// must be present.
class CuePatternSet {
 public:
  struct Match {
    lingkit::Span span;        // character span in the sentence raw text
    std::string pattern_id;    // which optional slots matched, e.g. "adv+subj+verb+that"
    std::size_t token_begin;
    std::size_t token_end;     // token range [begin, end)
  };

  static CuePatternSet load(const std::string& grammar_path);
  static CuePatternSet builtin();

  std::optional<Match> match(const lingkit::Sentence& sentence) const;

  /// One canonical example string per pattern id, for self-tests.
  std::vector<std::pair<std::string, std::string>> canonical_examples() const;
  std::vector<std::string> pattern_ids() const;

  const std::vector<std::string>& adverbials() const { return adverbials_; }
  const std::vector<std::string>& determiners() const { return determiners_; }
  const std::vector<std::string>& subject_nouns() const { return subject_nouns_; }
  const std::vector<std::string>& reporting_verbs() const { return reporting_verbs_; }

 private:
  std::vector<std::string> adverbials_;      // may be multi-word
  std::vector<std::string> determiners_;
  std::vector<std::string> subject_nouns_;
  std::vector<std::string> reporting_verbs_; // base forms
  std::unordered_set<std::string> verb_forms_;

  void compile();
};

/// Loads every list file from `directory` and validates the set.
LexiconSet load_lexicons(const std::string& directory);

std::optional<CuePatternSet::Match> match_cue(const lingkit::Sentence& sentence,
                                              const CuePatternSet& patterns);

}  // namespace claimkit::lexicons

#endif  // CLAIMKIT_LEXICONS_HPP
