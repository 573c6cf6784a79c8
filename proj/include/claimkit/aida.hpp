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

#ifndef CLAIMKIT_AIDA_HPP
#define CLAIMKIT_AIDA_HPP

#include <string>
#include <utility>
#include <vector>

#include "claimkit/lexicons.hpp"
#include "claimkit/lingkit.hpp"

namespace claimkit::aida {

struct Evidence {
  std::string rule_id;
  std::string matched_text;  // verbatim token subsequence at span
  std::size_t span_begin = 0;
  std::size_t span_end = 0;  // token index range [begin, end)
};

struct AidaVerdict {
  bool atomic = false;
  bool independent = false;
  bool declarative = false;
  bool absolute = false;
  bool aida = false;
  std::vector<Evidence> evidence;
};

using CheckResult = std::pair<bool, std::vector<Evidence>>;

CheckResult check_atomic(const lingkit::Sentence& sentence,
                         const lexicons::LexiconSet& lex);
CheckResult check_independent(const lingkit::Sentence& sentence,
                              const lexicons::LexiconSet& lex);
CheckResult check_declarative(const lingkit::Sentence& sentence);
CheckResult check_absolute(const lingkit::Sentence& sentence,
                           const lexicons::LexiconSet& lex);

AidaVerdict check_aida(const lingkit::Sentence& sentence,
                       const lexicons::LexiconSet& lex);

}  // namespace claimkit::aida

#endif  // CLAIMKIT_AIDA_HPP
