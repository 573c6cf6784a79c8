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

#ifndef CLAIMKIT_LINGKIT_HPP
#define CLAIMKIT_LINGKIT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace claimkit::lingkit {

/// Character range [begin, end) into a parent string.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - begin; }
  bool operator==(const Span&) const = default;
};

/// Penn Treebank style part-of-speech tag. Empty string means "not yet
/// tagged".
struct PosTag {
  std::string tag;

  bool assigned() const { return !tag.empty(); }
  bool is_verb() const;    // VB, VBD, VBG, VBN, VBP, VBZ
  bool is_finite() const;  // VBD, VBP, VBZ (MD handled separately)
  bool is_noun() const;    // NN, NNS, NNP, NNPS
  bool operator==(const PosTag&) const = default;
};

struct Token {
  std::string text;
  PosTag pos;
  Span span;           // character range in the parent sentence raw text
  std::size_t index = 0;

  bool is_punct() const;
};

struct Sentence {
  std::string raw;
  std::vector<Token> tokens;
  Span span;  // character range in the parent document

  bool tagged() const;
};

enum class Tense { Past, Present, Participle, Modal, Infinitive, Gerund };

enum class Number { Singular, Plural };

struct ClauseAnalysis {
  std::size_t finite_clause_count = 0;
  std::vector<std::size_t> boundaries;  // token indices starting a new clause
};

/// Sentence splitting with an abbreviation guard. Returns sentences with raw
/// text and document spans only; call tokenize/pos_tag afterwards.
std::vector<Sentence> split_sentences(const std::string& text);

/// Whitespace tokenization with punctuation separation. Hyphenated words stay
/// single tokens. Spans index into `raw`.
std::vector<Token> tokenize(const std::string& raw);

/// Convenience: split + tokenize one string that is already a single sentence.
Sentence make_sentence(const std::string& raw);

class Tagger;

/// English verb/noun morphology backed by the bundled irregular-verb table.
class Morphology {
 public:
  struct IrregularVerb {
    std::string past;
    std::string base;
    std::string third_singular;
  };

  /// Parses `<past>\t<base>\t<third-person-singular>` lines.
  static Morphology load(const std::string& path);
  static Morphology from_rows(std::vector<IrregularVerb> rows);

  /// Present-tense form of a past-tense or base verb, agreeing in number.
  std::string to_present(const std::string& verb_text, Number number) const;

  /// Third-person singular of a base form (-s / -es / -ies rules).
  static std::string third_singular_of(const std::string& base);

  /// Past -> base via the irregular table, falling back to regular -ed
  /// stripping. `known_word` tells the stripper whether stem+e is a word.
  std::string past_to_base(
      const std::string& past,
      const std::unordered_set<std::string>& known_words) const;

  const std::vector<IrregularVerb>& table() const { return table_; }

  void set_known_words(std::unordered_set<std::string> words) {
    known_words_ = std::move(words);
  }

 private:
  std::vector<IrregularVerb> table_;
  std::unordered_map<std::string, std::size_t> by_past_;
  std::unordered_map<std::string, std::size_t> by_base_;
  std::unordered_set<std::string> known_words_;
};

/// Rule-based tagger: closed-class table, open-class lexicon file, suffix
/// rules, one contextual repair pass.
class Tagger {
 public:
  /// `lexicon_path` holds `<word>\t<TAG>` lines (lowercase words).
  static Tagger load(const std::string& lexicon_path);
  static Tagger from_entries(
      const std::vector<std::pair<std::string, std::string>>& entries);

  void tag(Sentence& sentence) const;
  Sentence tag_copy(const std::string& raw) const;

  bool known_verb_stem(const std::string& lower) const;
  const std::unordered_set<std::string>& known_words() const {
    return known_words_;
  }

 private:
  bool known_verb_stem_strict(const std::string& lower) const;

  std::unordered_map<std::string, std::string> open_class_;
  std::unordered_set<std::string> verb_stems_;
  std::unordered_set<std::string> known_words_;
};

Tense detect_tense(const Token& verb);
Number noun_number(const Token& noun);

/// Finite-verb-group clause counter. Subordinators, wh-pronouns, semicolons
/// and coordinations followed by a fresh subject+finite verb each open a new
/// clause.
ClauseAnalysis count_finite_clauses(const Sentence& sentence);

}  // namespace claimkit::lingkit

#endif  // CLAIMKIT_LINGKIT_HPP
