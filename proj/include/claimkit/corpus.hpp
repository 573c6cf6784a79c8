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

#ifndef CLAIMKIT_CORPUS_HPP
#define CLAIMKIT_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "claimkit/lingkit.hpp"

namespace claimkit::corpus {

struct Article {
  std::string id;
  std::string full_text;  // UTF-8
  std::optional<lingkit::Span> abstract_span;
  std::optional<std::string> title;

  std::string abstract_text() const;
};

struct GoldCoreSentence {
  std::string article_id;
  std::string sentence_text;
};

struct LabeledAidaSentence {
  std::string sentence_text;
  bool atomic = false;
  bool independent = false;
  bool declarative = false;
  bool absolute = false;

  bool aida() const { return atomic && independent && declarative && absolute; }
};

/// Builds an Article from raw text and locates the abstract. The heuristic:
/// an "Abstract" header line opens the abstract, which runs to the next
/// section header or blank-line pair; without a header the second
/// blank-line-delimited paragraph is used.
Article load_article(const std::string& id, const std::string& text);

/// Reads the file and calls load_article with the file stem as id.
Article load_article_file(const std::string& path);

/// Drops a leading section-header artifact ("CONCLUSIONS:", fused ALL-CAPS
/// word) and collapses whitespace runs.
std::string strip_formatting(const std::string& raw_sentence);

/// `<article_id>\t<sentence>` per line, `#` comments skipped.
std::vector<GoldCoreSentence> load_gold(const std::string& content);
std::vector<GoldCoreSentence> load_gold_file(const std::string& path);

/// `<sentence>\t<A>\t<I>\t<D>\t<A>` per line with 0/1 flags.
std::vector<LabeledAidaSentence> load_labeled_sentences(
    const std::string& content);
std::vector<LabeledAidaSentence> load_labeled_sentences_file(
    const std::string& path);

std::string serialize_gold(const std::vector<GoldCoreSentence>& gold);

}  // namespace claimkit::corpus

#endif  // CLAIMKIT_CORPUS_HPP
