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

#include "claimkit/rewriter.hpp"

#include <algorithm>
#include <optional>

#include "claimkit/corpus.hpp"
#include "claimkit/error.hpp"
#include "textutil.hpp"

namespace claimkit::rewriter {

namespace tu = claimkit::textutil;
using lingkit::Number;

const char* edit_kind_name(EditKind kind) {
  switch (kind) {
    case EditKind::StripFraming: return "strip_framing";
    case EditKind::Demodalize: return "demodalize";
    case EditKind::TenseShift: return "tense_shift";
    case EditKind::RemoveHedge: return "remove_hedge";
    case EditKind::StripHeader: return "strip_header";
    case EditKind::Capitalize: return "capitalize";
    case EditKind::TerminalStop: return "terminal_stop";
    case EditKind::Whitespace: return "whitespace";
  }
  return "unknown";
}

namespace {

std::size_t non_punct_count(const std::string& text) {
  std::size_t n = 0;
  for (const auto& t : lingkit::tokenize(text)) {
    if (!t.is_punct()) ++n;
  }
  return n;
}

// Replaces [begin, end) in `text` and records the edit.
std::string apply_edit(const std::string& text, EditKind kind,
                       std::size_t begin, std::size_t end,
                       const std::string& after, std::vector<Edit>& edits) {
  Edit e;
  e.kind = kind;
  e.before = text.substr(begin, end - begin);
  e.after = after;
  e.span_begin = begin;
  e.span_end = end;
  edits.push_back(e);
  return text.substr(0, begin) + after + text.substr(end);
}

// Nearest noun or pronoun head before token `i`, skipping parentheticals.
std::optional<Number> preceding_number(const lingkit::Sentence& s,
                                       std::size_t i) {
  int depth = 0;
  std::vector<int> depths(s.tokens.size(), 0);
  for (std::size_t k = 0; k < s.tokens.size(); ++k) {
    if (s.tokens[k].text == "(") ++depth;
    depths[k] = depth;
    if (s.tokens[k].text == ")") --depth;
  }
  for (std::size_t k = i; k-- > 0;) {
    if (depths[k] > 0) continue;
    const auto& tok = s.tokens[k];
    if (tok.pos.is_noun() || tok.pos.tag == "PRP") {
      return lingkit::noun_number(tok);
    }
  }
  return std::nullopt;
}

std::string match_case(const std::string& replacement,
                       const std::string& original) {
  if (replacement.empty() || original.empty()) return replacement;
  if (tu::is_upper(original[0])) {
    std::string out = replacement;
    out[0] = tu::upper(out[0]);
    return out;
  }
  return replacement;
}

}  // namespace

// ---------------------------------------------------------------------------
// strip_framing

StepResult strip_framing(const std::string& text, const RewriteDeps& deps) {
  StepResult r{text, {}, {}};
  for (int round = 0; round < 2; ++round) {
    lingkit::Sentence s = deps.tagger->tag_copy(r.text);
    auto m = lexicons::match_cue(s, *deps.patterns);
    if (!m) break;
    std::size_t cut = m->span.end;
    while (cut < r.text.size() && tu::is_space(r.text[cut])) ++cut;
    std::string candidate = r.text.substr(0, m->span.begin) + r.text.substr(cut);
    if (non_punct_count(candidate) < 2) {
      r.warnings.push_back("strip_framing: degenerate result, cue kept");
      break;
    }
    r.text = apply_edit(r.text, EditKind::StripFraming, m->span.begin, cut, "",
                        r.edits);
    // re-capitalize the new first word
    for (std::size_t k = 0; k < r.text.size(); ++k) {
      if (tu::is_alpha(r.text[k])) {
        if (!tu::is_upper(r.text[k])) {
          r.text = apply_edit(r.text, EditKind::Capitalize, k, k + 1,
                              std::string(1, tu::upper(r.text[k])), r.edits);
        }
        break;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// demodalize

StepResult demodalize(const std::string& text, const RewriteDeps& deps) {
  StepResult r{text, {}, {}};
  for (int round = 0; round < 5; ++round) {
    lingkit::Sentence s = deps.tagger->tag_copy(r.text);
    bool changed = false;
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (s.tokens[i].pos.tag != "MD") continue;
      // find the verb that comes with the modal, allowing "not" and adverbs
      std::size_t j = i + 1;
      bool negated = false;
      while (j < s.tokens.size() && s.tokens[j].pos.tag == "RB") {
        if (tu::to_lower(s.tokens[j].text) == "not") negated = true;
        ++j;
      }
      if (j >= s.tokens.size() || s.tokens[j].pos.tag != "VB") continue;

      auto number = preceding_number(s, i);
      Number n = number.value_or(Number::Plural);
      std::string verb_lower = tu::to_lower(s.tokens[j].text);
      std::string conjugated;
      if (!number) {
        r.warnings.push_back("demodalize: no agreement head before '" +
                             s.tokens[i].text + "', base form kept");
        conjugated = verb_lower;
      } else {
        conjugated = deps.morphology->to_present(verb_lower, n);
      }
      std::string replacement;
      if (verb_lower == "be") {
        // "may not be" -> "is not"
        replacement = conjugated;
        for (std::size_t k = i + 1; k < j; ++k) {
          replacement += " " + s.tokens[k].text;
        }
      } else if (negated) {
        // do-support keeps the negation grammatical
        replacement = (n == Number::Singular ? "does not " : "do not ") +
                      verb_lower;
      } else {
        replacement.clear();
        for (std::size_t k = i + 1; k < j; ++k) {
          replacement += s.tokens[k].text + " ";
        }
        replacement += conjugated;
      }
      replacement = match_case(replacement, s.tokens[i].text);
      r.text = apply_edit(r.text, EditKind::Demodalize, s.tokens[i].span.begin,
                          s.tokens[j].span.end, replacement, r.edits);
      changed = true;
      break;  // re-tag before the next modal
    }
    if (!changed) break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// shift_to_present

StepResult shift_to_present(const std::string& text, const RewriteDeps& deps) {
  StepResult r{text, {}, {}};
  for (int round = 0; round < 10; ++round) {
    lingkit::Sentence s = deps.tagger->tag_copy(r.text);
    bool changed = false;
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (s.tokens[i].pos.tag != "VBD") continue;
      auto number = preceding_number(s, i);
      if (!number) {
        r.warnings.push_back("shift_to_present: no agreement head before '" +
                             s.tokens[i].text + "', plural assumed");
      }
      Number n = number.value_or(Number::Plural);
      std::string present =
          deps.morphology->to_present(tu::to_lower(s.tokens[i].text), n);
      present = match_case(present, s.tokens[i].text);
      if (present == s.tokens[i].text) continue;  // tagger artifact; leave it
      r.text = apply_edit(r.text, EditKind::TenseShift, s.tokens[i].span.begin,
                          s.tokens[i].span.end, present, r.edits);
      changed = true;
      break;
    }
    if (!changed) break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// remove_hedges

StepResult remove_hedges(const std::string& text, const RewriteDeps& deps) {
  StepResult r{text, {}, {}};
  for (int round = 0; round < 10; ++round) {
    lingkit::Sentence s = deps.tagger->tag_copy(r.text);
    bool changed = false;
    auto hits = deps.lex->hedges.find_phrases(s.tokens, /*inflected=*/true);
    for (const auto& hit : hits) {
      if (hit.end != hit.begin + 1) continue;
      const auto& tok = s.tokens[hit.begin];
      // only adverb/adjective hedges are deleted; hedge verbs stay so the
      // clause frame survives
      if (tok.pos.tag != "RB" && tok.pos.tag != "JJ") continue;
      std::size_t begin = tok.span.begin;
      std::size_t end = tok.span.end;
      while (end < r.text.size() && tu::is_space(r.text[end])) ++end;
      if (end == tok.span.end) {
        // token at end of string: absorb the space before it instead
        while (begin > 0 && tu::is_space(r.text[begin - 1])) --begin;
      }
      r.text = apply_edit(r.text, EditKind::RemoveHedge, begin, end, "",
                          r.edits);
      changed = true;
      break;
    }
    if (!changed) break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// finalize_syntax

StepResult finalize_syntax(const std::string& text) {
  StepResult r{text, {}, {}};

  // whitespace runs -> single spaces
  std::string collapsed = tu::collapse_whitespace(tu::trim(r.text));
  if (collapsed != r.text) {
    r.text = apply_edit(r.text, EditKind::Whitespace, 0, r.text.size(),
                        collapsed, r.edits);
  }
  // no space before closing punctuation
  for (std::size_t i = 0; i + 1 < r.text.size();) {
    char next = r.text[i + 1];
    if (r.text[i] == ' ' && (next == '.' || next == ',' || next == ';' ||
                             next == ':' || next == ')' || next == '?' ||
                             next == '!')) {
      r.text = apply_edit(r.text, EditKind::Whitespace, i, i + 1, "", r.edits);
    } else {
      ++i;
    }
  }
  // leading header artifact
  std::string stripped = corpus::strip_formatting(r.text);
  if (stripped != r.text && r.text.ends_with(stripped)) {
    r.text = apply_edit(r.text, EditKind::StripHeader, 0,
                        r.text.size() - stripped.size(), "", r.edits);
  }
  // initial capital
  for (std::size_t k = 0; k < r.text.size(); ++k) {
    if (tu::is_alpha(r.text[k])) {
      if (!tu::is_upper(r.text[k])) {
        r.text = apply_edit(r.text, EditKind::Capitalize, k, k + 1,
                            std::string(1, tu::upper(r.text[k])), r.edits);
      }
      break;
    }
  }
  // exactly one terminal full stop
  std::size_t stops = 0;
  while (stops < r.text.size() && r.text[r.text.size() - 1 - stops] == '.') {
    ++stops;
  }
  if (stops == 0) {
    if (!r.text.empty() && (r.text.back() == '!' || r.text.back() == '?' ||
                            r.text.back() == ';' || r.text.back() == ',' ||
                            r.text.back() == ':')) {
      r.text = apply_edit(r.text, EditKind::TerminalStop, r.text.size() - 1,
                          r.text.size(), ".", r.edits);
    } else {
      r.text = apply_edit(r.text, EditKind::TerminalStop, r.text.size(),
                          r.text.size(), ".", r.edits);
    }
  } else if (stops > 1) {
    r.text = apply_edit(r.text, EditKind::TerminalStop, r.text.size() - stops,
                        r.text.size(), ".", r.edits);
  }
  return r;
}

// ---------------------------------------------------------------------------
// full sequence

namespace {

void absorb(RewriteResult& result, StepResult&& step) {
  result.rewritten = step.text;
  for (auto& e : step.edits) result.edits.push_back(std::move(e));
  for (auto& w : step.warnings) result.warnings.push_back(std::move(w));
}

}  // namespace

RewriteResult rewrite(const lingkit::Sentence& sentence,
                      const aida::AidaVerdict& verdict,
                      const RewriteDeps& deps) {
  RewriteResult result;
  result.original = sentence.raw;
  result.rewritten = sentence.raw;
  result.pre_verdict = verdict;

  const bool atomic_only_failure = !verdict.atomic && verdict.independent &&
                                   verdict.declarative && verdict.absolute;
  if (verdict.aida || atomic_only_failure) {
    result.attempted = false;
    result.post_verdict = verdict;
    if (atomic_only_failure) {
      result.warnings.push_back("not atomic: rewriting not attempted");
    }
    return result;
  }

  result.attempted = true;
  if (!verdict.absolute) {
    absorb(result, strip_framing(result.rewritten, deps));
    absorb(result, demodalize(result.rewritten, deps));
    absorb(result, shift_to_present(result.rewritten, deps));
    absorb(result, remove_hedges(result.rewritten, deps));
  }
  absorb(result, finalize_syntax(result.rewritten));

  lingkit::Sentence post = deps.tagger->tag_copy(result.rewritten);
  result.post_verdict = aida::check_aida(post, *deps.lex);
  return result;
}

std::string replay_edits(const std::string& original,
                         const std::vector<Edit>& edits) {
  std::string s = original;
  for (const auto& e : edits) {
    if (e.span_begin > s.size() || e.span_end > s.size() ||
        e.span_begin > e.span_end) {
      throw Error(ErrorCode::MalformedRecord, "edit span out of range");
    }
    if (s.substr(e.span_begin, e.span_end - e.span_begin) != e.before) {
      throw Error(ErrorCode::MalformedRecord,
                  "edit 'before' text does not match the string state");
    }
    s = s.substr(0, e.span_begin) + e.after + s.substr(e.span_end);
  }
  return s;
}

}  // namespace claimkit::rewriter
