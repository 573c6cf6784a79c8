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

#include "claimkit/lingkit.hpp"

#include <algorithm>
#include <array>

#include "claimkit/error.hpp"
#include "textutil.hpp"

namespace claimkit::lingkit {

namespace tu = claimkit::textutil;

bool PosTag::is_verb() const {
  return tag == "VB" || tag == "VBD" || tag == "VBG" || tag == "VBN" ||
         tag == "VBP" || tag == "VBZ";
}

bool PosTag::is_finite() const {
  return tag == "VBD" || tag == "VBP" || tag == "VBZ";
}

bool PosTag::is_noun() const {
  return tag == "NN" || tag == "NNS" || tag == "NNP" || tag == "NNPS";
}

bool Token::is_punct() const {
  return !text.empty() &&
         std::none_of(text.begin(), text.end(), [](char c) {
           return tu::is_alpha(c) || tu::is_digit(c);
         });
}

bool Sentence::tagged() const {
  return std::all_of(tokens.begin(), tokens.end(),
                     [](const Token& t) { return t.pos.assigned(); });
}

// ---------------------------------------------------------------------------
// Sentence splitting

namespace {

const std::unordered_set<std::string>& abbreviation_guards() {
  static const std::unordered_set<std::string> guards = {
      "e.g.", "i.e.", "al.",  "vs.",  "fig.", "dr.",
      "approx.", "cf.", "no.", "vol.",
  };
  return guards;
}

// Word (maximal non-space run) ending at and including position `end`.
std::string word_ending_at(const std::string& text, std::size_t end) {
  std::size_t b = end;
  while (b > 0 && !tu::is_space(text[b - 1])) --b;
  return text.substr(b, end - b + 1);
}

bool guarded_abbreviation(const std::string& text, std::size_t dot) {
  std::string word = tu::to_lower(word_ending_at(text, dot));
  if (abbreviation_guards().count(word)) return true;
  // Single capital initial, as in "J. Smith".
  if (word.size() == 2 && tu::is_alpha(word[0])) return true;
  return false;
}

}  // namespace

std::vector<Sentence> split_sentences(const std::string& text) {
  std::vector<Sentence> out;
  std::size_t start = 0;
  const auto flush = [&](std::size_t end) {
    // Trim surrounding whitespace from the span.
    std::size_t b = start, e = end;
    while (b < e && tu::is_space(text[b])) ++b;
    while (e > b && tu::is_space(text[e - 1])) --e;
    if (b < e) {
      Sentence s;
      s.span = {b, e};
      s.raw = text.substr(b, e - b);
      out.push_back(std::move(s));
    }
    start = end;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '.' && c != '?' && c != '!') continue;
    if (c == '.' && guarded_abbreviation(text, i)) continue;
    std::size_t j = i + 1;
    // Closing quotes/brackets may sit between the stop and the whitespace.
    while (j < text.size() && (text[j] == ')' || text[j] == '"' ||
                               text[j] == '\'' || text[j] == ']')) {
      ++j;
    }
    std::size_t ws = j;
    while (ws < text.size() && tu::is_space(text[ws])) ++ws;
    if (ws > j && ws < text.size() && tu::is_upper(text[ws])) flush(j);
  }
  flush(text.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto toks = tokenize(out[i].raw);
    out[i].tokens = std::move(toks);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tokenization

namespace {

bool splittable_punct(char c) {
  switch (c) {
    case '.': case ',': case ';': case ':': case '(': case ')':
    case '[': case ']': case '{': case '}': case '"': case '?':
    case '!':
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<Token> tokenize(const std::string& raw) {
  std::vector<Token> out;
  const auto emit = [&](std::size_t b, std::size_t e) {
    if (b >= e) return;
    Token t;
    t.text = raw.substr(b, e - b);
    t.span = {b, e};
    t.index = out.size();
    out.push_back(std::move(t));
  };
  std::size_t i = 0;
  while (i < raw.size()) {
    if (tu::is_space(raw[i])) {
      ++i;
      continue;
    }
    std::size_t b = i;
    while (i < raw.size() && !tu::is_space(raw[i])) ++i;
    std::size_t e = i;
    // Peel leading punctuation.
    while (b < e && splittable_punct(raw[b])) {
      emit(b, b + 1);
      ++b;
    }
    // Find trailing punctuation run (kept intra-word otherwise, so "e.g."
    // loses only its final dot and "state-of-the-art" stays whole).
    std::size_t core_end = e;
    while (core_end > b && splittable_punct(raw[core_end - 1])) --core_end;
    emit(b, core_end);
    for (std::size_t p = core_end; p < e; ++p) emit(p, p + 1);
  }
  return out;
}

Sentence make_sentence(const std::string& raw) {
  Sentence s;
  s.raw = raw;
  s.span = {0, raw.size()};
  s.tokens = tokenize(raw);
  return s;
}

// ---------------------------------------------------------------------------
// Tagger

namespace {

const std::unordered_map<std::string, std::string>& closed_class() {
  static const std::unordered_map<std::string, std::string> table = {
      // determiners
      {"the", "DT"}, {"a", "DT"}, {"an", "DT"}, {"this", "DT"},
      {"these", "DT"}, {"those", "DT"}, {"each", "DT"}, {"every", "DT"},
      {"some", "DT"}, {"any", "DT"}, {"no", "DT"}, {"another", "DT"},
      {"either", "DT"}, {"neither", "DT"}, {"both", "DT"}, {"all", "DT"},
      // prepositions and subordinating conjunctions
      {"of", "IN"}, {"in", "IN"}, {"on", "IN"}, {"by", "IN"}, {"with", "IN"},
      {"without", "IN"}, {"for", "IN"}, {"from", "IN"}, {"at", "IN"},
      {"as", "IN"}, {"into", "IN"}, {"between", "IN"}, {"among", "IN"},
      {"during", "IN"}, {"against", "IN"}, {"within", "IN"}, {"under", "IN"},
      {"over", "IN"}, {"through", "IN"}, {"after", "IN"}, {"before", "IN"},
      {"about", "IN"}, {"per", "IN"}, {"via", "IN"}, {"despite", "IN"},
      {"toward", "IN"}, {"towards", "IN"}, {"upon", "IN"}, {"since", "IN"},
      {"because", "IN"}, {"although", "IN"}, {"though", "IN"},
      {"while", "IN"}, {"whereas", "IN"}, {"if", "IN"}, {"unless", "IN"},
      {"until", "IN"}, {"once", "IN"}, {"than", "IN"}, {"that", "IN"},
      // pronouns
      {"i", "PRP"}, {"you", "PRP"}, {"he", "PRP"}, {"she", "PRP"},
      {"it", "PRP"}, {"we", "PRP"}, {"they", "PRP"}, {"them", "PRP"},
      {"him", "PRP"}, {"her", "PRP"}, {"us", "PRP"}, {"me", "PRP"},
      {"one", "PRP"},
      {"my", "PRP$"}, {"your", "PRP$"}, {"his", "PRP$"}, {"its", "PRP$"},
      {"our", "PRP$"}, {"their", "PRP$"},
      // modals
      {"can", "MD"}, {"could", "MD"}, {"may", "MD"}, {"might", "MD"},
      {"shall", "MD"}, {"should", "MD"}, {"will", "MD"}, {"would", "MD"},
      {"must", "MD"},
      // coordination
      {"and", "CC"}, {"or", "CC"}, {"but", "CC"}, {"nor", "CC"},
      // wh words
      {"which", "WDT"}, {"who", "WP"}, {"whom", "WP"}, {"whose", "WP$"},
      {"what", "WP"}, {"when", "WRB"}, {"where", "WRB"}, {"why", "WRB"},
      {"how", "WRB"},
      // be / do / have
      {"be", "VB"}, {"is", "VBZ"}, {"are", "VBP"}, {"am", "VBP"},
      {"was", "VBD"}, {"were", "VBD"}, {"been", "VBN"}, {"being", "VBG"},
      {"do", "VBP"}, {"does", "VBZ"}, {"did", "VBD"}, {"done", "VBN"},
      {"doing", "VBG"},
      {"have", "VBP"}, {"has", "VBZ"}, {"had", "VBD"}, {"having", "VBG"},
      // misc
      {"not", "RB"}, {"to", "TO"}, {"there", "EX"},
  };
  return table;
}

bool be_or_have_form(const std::string& lower) {
  static const std::unordered_set<std::string> forms = {
      "be", "is", "are", "am", "was", "were", "been", "being",
      "have", "has", "had", "having",
  };
  return forms.count(lower) > 0;
}

bool numeric_token(const std::string& text) {
  bool any_digit = false;
  for (char c : text) {
    if (tu::is_digit(c)) {
      any_digit = true;
    } else if (tu::is_alpha(c)) {
      return false;
    }
  }
  return any_digit;
}

}  // namespace

Tagger Tagger::load(const std::string& lexicon_path) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::string content = tu::read_file(lexicon_path);
  for (const std::string& line : tu::split(content, '\n')) {
    std::string trimmed = tu::trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    auto fields = tu::split(trimmed, '\t');
    if (fields.size() != 2) {
      throw Error(ErrorCode::MalformedRecord,
                  "bad tag lexicon line: " + trimmed);
    }
    entries.emplace_back(tu::to_lower(tu::trim(fields[0])),
                         tu::trim(fields[1]));
  }
  return from_entries(entries);
}

Tagger Tagger::from_entries(
    const std::vector<std::pair<std::string, std::string>>& entries) {
  Tagger t;
  for (const auto& [word, tag] : entries) {
    t.open_class_[word] = tag;
    t.known_words_.insert(word);
    if (tag == "VB" || tag == "VBP") t.verb_stems_.insert(word);
  }
  return t;
}

bool Tagger::known_verb_stem(const std::string& lower) const {
  return verb_stems_.count(lower) > 0;
}

void Tagger::tag(Sentence& sentence) const {
  auto& tokens = sentence.tokens;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Token& tok = tokens[i];
    const std::string lower = tu::to_lower(tok.text);
    // punctuation keeps its own symbol as tag
    if (tok.is_punct()) {
      tok.pos.tag = tok.text.size() == 1 ? tok.text : "SYM";
      continue;
    }
    if (numeric_token(tok.text)) {
      tok.pos.tag = "CD";
      continue;
    }
    if (auto it = closed_class().find(lower); it != closed_class().end()) {
      tok.pos.tag = it->second;
      continue;
    }
    if (auto it = open_class_.find(lower); it != open_class_.end()) {
      tok.pos.tag = it->second;
      continue;
    }
    // suffix rules
    if (lower.size() > 3 && lower.ends_with("ly")) {
      tok.pos.tag = "RB";
    } else if (lower.size() > 3 && lower.ends_with("ing")) {
      tok.pos.tag = "VBG";
    } else if (lower.size() > 3 && lower.ends_with("ed")) {
      tok.pos.tag = "VBD";
    } else if (lower.size() > 2 && lower.ends_with("s") &&
               !lower.ends_with("ss")) {
      std::string stem = lower.substr(0, lower.size() - 1);
      std::string es_stem = lower.size() > 3 && lower.ends_with("es")
                                ? lower.substr(0, lower.size() - 2)
                                : "";
      std::string ies_stem = lower.size() > 4 && lower.ends_with("ies")
                                 ? lower.substr(0, lower.size() - 3) + "y"
                                 : "";
      if (known_verb_stem(stem) || known_verb_stem(es_stem) ||
          known_verb_stem(ies_stem)) {
        tok.pos.tag = "VBZ";
      } else {
        tok.pos.tag = "NNS";
      }
    } else if (i > 0 && tu::is_upper(tok.text[0])) {
      tok.pos.tag = "NNP";
    } else {
      tok.pos.tag = "NN";
    }
  }

  // contextual repair pass
  const auto prev_word = [&](std::size_t i) -> const Token* {
    // previous token skipping adverbs and "not"
    for (std::size_t j = i; j-- > 0;) {
      if (tokens[j].pos.tag == "RB") continue;
      return &tokens[j];
    }
    return nullptr;
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Token& tok = tokens[i];
    const Token* prev = prev_word(i);
    if (!prev) continue;
    const std::string lower = tu::to_lower(tok.text);
    // passive / perfect participles: "is transmitted", "has shown"
    if (tok.pos.tag == "VBD" && be_or_have_form(tu::to_lower(prev->text))) {
      tok.pos.tag = "VBN";
      continue;
    }
    // after a determiner an ambiguous verb reading is a noun
    if (prev->pos.tag == "DT") {
      if (tok.pos.tag == "VB" || tok.pos.tag == "VBP") tok.pos.tag = "NN";
      else if (tok.pos.tag == "VBZ" && !known_verb_stem_strict(lower))
        tok.pos.tag = "NNS";
      continue;
    }
    // plural or pronoun subject directly before a base verb: finite present
    if (tok.pos.tag == "VB" &&
        (prev->pos.tag == "NNS" || prev->pos.tag == "NNPS" ||
         prev->pos.tag == "PRP")) {
      tok.pos.tag = "VBP";
      continue;
    }
    // unknown -s form after a pronoun is a finite verb: "it persists"
    if (tok.pos.tag == "NNS" && prev->pos.tag == "PRP" &&
        open_class_.find(lower) == open_class_.end()) {
      tok.pos.tag = "VBZ";
    }
  }
}

bool Tagger::known_verb_stem_strict(const std::string& lower) const {
  // -s form whose stem the lexicon lists as a verb
  if (lower.size() < 2 || !lower.ends_with("s")) return false;
  if (known_verb_stem(lower.substr(0, lower.size() - 1))) return true;
  if (lower.ends_with("es") &&
      known_verb_stem(lower.substr(0, lower.size() - 2)))
    return true;
  if (lower.ends_with("ies") &&
      known_verb_stem(lower.substr(0, lower.size() - 3) + "y"))
    return true;
  return false;
}

Sentence Tagger::tag_copy(const std::string& raw) const {
  Sentence s = make_sentence(raw);
  tag(s);
  return s;
}

// ---------------------------------------------------------------------------
// Tense / number

Tense detect_tense(const Token& verb) {
  const std::string& t = verb.pos.tag;
  if (t == "VBD") return Tense::Past;
  if (t == "VBZ" || t == "VBP") return Tense::Present;
  if (t == "VBN") return Tense::Participle;
  if (t == "MD") return Tense::Modal;
  if (t == "VB") return Tense::Infinitive;
  if (t == "VBG") return Tense::Gerund;
  throw Error(ErrorCode::NotAVerb, "not a verb token: " + verb.text);
}

Number noun_number(const Token& noun) {
  const std::string& t = noun.pos.tag;
  if (t == "NNS" || t == "NNPS") return Number::Plural;
  if (t == "NN" || t == "NNP") return Number::Singular;
  if (t == "PRP") {
    static const std::unordered_set<std::string> singular = {"it", "he", "she",
                                                             "one"};
    std::string lower = tu::to_lower(noun.text);
    return singular.count(lower) ? Number::Singular : Number::Plural;
  }
  throw Error(ErrorCode::NotANoun, "not a noun token: " + noun.text);
}

// ---------------------------------------------------------------------------
// Morphology

namespace {

bool is_vowel(char c) {
  switch (tu::lower(c)) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return true;
    default:
      return false;
  }
}

// Verbs that double their final consonant before -ed.
const std::unordered_set<std::string>& doubling_verbs() {
  static const std::unordered_set<std::string> set = {
      "stop", "drop", "plan", "ban", "scan", "stir", "slip", "trim",
      "grab", "equip", "occur", "refer", "prefer", "infer", "defer",
      "transmit", "admit", "commit", "emit", "permit", "submit", "omit",
      "control", "compel", "propel", "expel", "regret", "fit", "map",
      "tap", "step", "wrap", "rub", "plug", "pin", "spot", "chop",
  };
  return set;
}

}  // namespace

Morphology Morphology::load(const std::string& path) {
  std::vector<IrregularVerb> rows;
  std::string content = tu::read_file(path);
  for (const std::string& line : tu::split(content, '\n')) {
    std::string trimmed = tu::trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    auto fields = tu::split(trimmed, '\t');
    if (fields.size() != 3) {
      throw Error(ErrorCode::MalformedRecord,
                  "bad irregular verb line: " + trimmed);
    }
    rows.push_back({tu::to_lower(tu::trim(fields[0])),
                    tu::to_lower(tu::trim(fields[1])),
                    tu::to_lower(tu::trim(fields[2]))});
  }
  return from_rows(std::move(rows));
}

Morphology Morphology::from_rows(std::vector<IrregularVerb> rows) {
  Morphology m;
  m.table_ = std::move(rows);
  for (std::size_t i = 0; i < m.table_.size(); ++i) {
    m.by_past_.emplace(m.table_[i].past, i);
    m.by_base_.emplace(m.table_[i].base, i);
  }
  return m;
}

std::string Morphology::third_singular_of(const std::string& base) {
  if (base.empty()) return base;
  if (base.ends_with("s") || base.ends_with("x") || base.ends_with("z") ||
      base.ends_with("ch") || base.ends_with("sh") || base.ends_with("o")) {
    return base + "es";
  }
  if (base.size() >= 2 && base.ends_with("y") &&
      !is_vowel(base[base.size() - 2])) {
    return base.substr(0, base.size() - 1) + "ies";
  }
  return base + "s";
}

std::string Morphology::past_to_base(
    const std::string& past,
    const std::unordered_set<std::string>& known_words) const {
  if (auto it = by_past_.find(past); it != by_past_.end()) {
    return table_[it->second].base;
  }
  if (past.size() > 3 && past.ends_with("ied")) {
    return past.substr(0, past.size() - 3) + "y";
  }
  if (past.size() > 2 && past.ends_with("ed")) {
    std::string stem = past.substr(0, past.size() - 2);
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        !is_vowel(stem.back())) {
      std::string undoubled = stem.substr(0, stem.size() - 1);
      if (doubling_verbs().count(undoubled)) return undoubled;
    }
    if (known_words.count(stem + "e")) return stem + "e";
    return stem;
  }
  return past;
}

std::string Morphology::to_present(const std::string& verb_text,
                                   Number number) const {
  std::string lower = tu::to_lower(verb_text);
  if (lower == "was" || lower == "were" || lower == "is" || lower == "are" ||
      lower == "be") {
    return number == Number::Singular ? "is" : "are";
  }
  std::string base;
  if (auto it = by_past_.find(lower); it != by_past_.end()) {
    base = table_[it->second].base;
  } else if (by_base_.count(lower)) {
    base = lower;
  } else if (lower.ends_with("ed") || lower.ends_with("ied")) {
    base = past_to_base(lower, known_words_);
  } else {
    base = lower;
  }
  if (number == Number::Plural) return base;
  if (auto it = by_base_.find(base); it != by_base_.end()) {
    return table_[it->second].third_singular;
  }
  return third_singular_of(base);
}

// ---------------------------------------------------------------------------
// Clause counting

namespace {

const std::unordered_set<std::string>& subordinators() {
  static const std::unordered_set<std::string> set = {
      "because", "since",    "although", "though",   "while",
      "whereas", "if",       "unless",   "until",    "once",
      "when",    "whenever", "where",    "wherever",
  };
  return set;
}

}  // namespace

ClauseAnalysis count_finite_clauses(const Sentence& sentence) {
  if (!sentence.tagged()) {
    throw Error(ErrorCode::UntaggedInput, "sentence is not POS-tagged");
  }
  const auto& tokens = sentence.tokens;

  // Start indices of maximal finite verb groups. A group is a run of
  // verb/modal tags (adverbs and "not" allowed inside) containing at least
  // one finite tag or a modal.
  std::vector<std::size_t> group_starts;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const std::string& t = tokens[i].pos.tag;
    bool verbish = tokens[i].pos.is_verb() || t == "MD" || t == "TO";
    if (!verbish) {
      ++i;
      continue;
    }
    std::size_t start = i;
    bool finite = false;
    while (i < tokens.size()) {
      const std::string& tg = tokens[i].pos.tag;
      if (tokens[i].pos.is_verb() || tg == "MD" || tg == "TO") {
        if (tokens[i].pos.is_finite() || tg == "MD") finite = true;
        ++i;
      } else if (tg == "RB") {
        // adverb inside the group only if a verb follows
        std::size_t j = i;
        while (j < tokens.size() && tokens[j].pos.tag == "RB") ++j;
        if (j < tokens.size() &&
            (tokens[j].pos.is_verb() || tokens[j].pos.tag == "MD")) {
          i = j;
        } else {
          break;
        }
      } else {
        break;
      }
    }
    if (finite) group_starts.push_back(start);
  }

  ClauseAnalysis result;
  if (group_starts.empty()) return result;
  result.finite_clause_count = 1;

  const auto finite_group_after = [&](std::size_t pos, std::size_t within) {
    for (std::size_t s : group_starts) {
      if (s > pos && s - pos <= within) return true;
    }
    return false;
  };
  const auto noun_between = [&](std::size_t pos, std::size_t limit) {
    for (std::size_t j = pos + 1; j < tokens.size() && j <= pos + limit; ++j) {
      const std::string& t = tokens[j].pos.tag;
      if (tokens[j].pos.is_noun() || t == "PRP") {
        // the noun must come before the next finite group start
        for (std::size_t s : group_starts) {
          if (s > pos && s <= pos + limit && j < s) return true;
        }
        return false;
      }
    }
    return false;
  };

  constexpr std::size_t kNoLimit = 1000000;
  for (std::size_t p = 0; p < tokens.size(); ++p) {
    const Token& tok = tokens[p];
    const std::string lower = tu::to_lower(tok.text);
    const std::string& tag = tok.pos.tag;
    bool trigger = false;
    if (tok.text == ";") {
      trigger = finite_group_after(p, kNoLimit);
    } else if (subordinators().count(lower) || tag == "WDT" || tag == "WP") {
      trigger = finite_group_after(p, kNoLimit);
    } else if (lower == "that" && p > 0) {
      // complementizer / relative "that": a finite verb group must follow
      // close by, otherwise it is a plain determiner
      trigger = finite_group_after(p, 6);
    } else if (tag == "CC") {
      // coordination opens a clause only with a fresh subject before the
      // next finite verb group
      trigger = finite_group_after(p, 6) && noun_between(p, 6);
    }
    if (trigger) {
      result.finite_clause_count += 1;
      result.boundaries.push_back(p);
    }
  }
  return result;
}

}  // namespace claimkit::lingkit
