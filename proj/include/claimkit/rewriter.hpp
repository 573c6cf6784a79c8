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

#ifndef CLAIMKIT_REWRITER_HPP
#define CLAIMKIT_REWRITER_HPP

#include <string>
#include <vector>

#include "claimkit/aida.hpp"
#include "claimkit/lexicons.hpp"
#include "claimkit/lingkit.hpp"

namespace claimkit::rewriter {

enum class EditKind {
  StripFraming,
  Demodalize,
  TenseShift,
  RemoveHedge,
  StripHeader,
  Capitalize,
  TerminalStop,
  Whitespace,
};

const char* edit_kind_name(EditKind kind);

struct Edit {
  EditKind kind;
  std::string before;
  std::string after;
  // Character range in the string state this edit was applied to.
  std::size_t span_begin = 0;
  std::size_t span_end = 0;
};

struct RewriteResult {
  std::string original;
  std::string rewritten;
  std::vector<Edit> edits;
  aida::AidaVerdict pre_verdict;
  aida::AidaVerdict post_verdict;
  bool attempted = false;
  std::vector<std::string> warnings;
};

/// Everything the rewrite steps need: tagger for re-analysis after each edit,
/// morphology for conjugation, lexicons and cue patterns for matching.
struct RewriteDeps {
  const lingkit::Tagger* tagger = nullptr;
  const lingkit::Morphology* morphology = nullptr;
  const lexicons::LexiconSet* lex = nullptr;
  const lexicons::CuePatternSet* patterns = nullptr;
};

/// One rewrite step: takes the current sentence text, returns the new text
/// and appends the edits it made.
struct StepResult {
  std::string text;
  std::vector<Edit> edits;
  std::vector<std::string> warnings;
};

StepResult strip_framing(const std::string& text, const RewriteDeps& deps);
StepResult demodalize(const std::string& text, const RewriteDeps& deps);
StepResult shift_to_present(const std::string& text, const RewriteDeps& deps);
StepResult remove_hedges(const std::string& text, const RewriteDeps& deps);
StepResult finalize_syntax(const std::string& text);

/// Full edit sequence (framing, modals, tense, hedges, syntax) driven by the
/// pre-computed verdict. Atomic-only
/// failures and already-compliant sentences are left untouched.
RewriteResult rewrite(const lingkit::Sentence& sentence,
                      const aida::AidaVerdict& verdict,
                      const RewriteDeps& deps);

/// Replays an edit log over the original string; used to audit results.
std::string replay_edits(const std::string& original,
                         const std::vector<Edit>& edits);

}  // namespace claimkit::rewriter

#endif  // CLAIMKIT_REWRITER_HPP
