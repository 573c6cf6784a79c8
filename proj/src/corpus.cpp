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

#include "claimkit/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <unordered_set>

#include "claimkit/error.hpp"
#include "textutil.hpp"

namespace claimkit::corpus {

namespace tu = claimkit::textutil;

std::string Article::abstract_text() const {
  if (!abstract_span) return {};
  return full_text.substr(abstract_span->begin, abstract_span->length());
}

// ---------------------------------------------------------------------------
// Abstract location

namespace {

struct Line {
  std::size_t begin;  // offset of first char
  std::size_t end;    // offset past last char (before the newline)
  std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      lines.push_back({start, i, text.substr(start, i - start)});
      start = i + 1;
    }
  }
  return lines;
}

bool is_blank(const Line& line) { return tu::trim(line.text).empty(); }

std::size_t token_count(const std::string& s) {
  return lingkit::tokenize(s).size();
}

bool is_abstract_header(const std::string& line) {
  std::string t = tu::to_lower(tu::trim(line));
  if (t == "abstract") return true;
  return t.starts_with("abstract:") || t.starts_with("abstract—") ||
         t.starts_with("abstract -") || t.starts_with("abstract.");
}

// Returns text after the header word when the abstract starts on the header
// line itself ("Abstract: Malaria is ...").
std::size_t abstract_inline_offset(const Line& line) {
  std::string t = tu::trim(line.text);
  std::string lower = tu::to_lower(t);
  for (const char* prefix : {"abstract:", "abstract.", "abstract -"}) {
    if (lower.starts_with(prefix)) {
      std::size_t off = line.text.find(t) + std::char_traits<char>::length(prefix);
      while (off < line.text.size() && tu::is_space(line.text[off])) ++off;
      return line.begin + off;
    }
  }
  return std::string::npos;
}

bool is_section_header(const std::string& line) {
  std::string t = tu::trim(line);
  if (t.empty()) return false;
  static const std::unordered_set<std::string> known = {
      "introduction", "background", "methods",    "method",
      "results",      "discussion", "conclusion", "conclusions",
      "keywords",     "references", "materials and methods",
  };
  std::string lower = tu::to_lower(t);
  if (!lower.empty() && (lower.back() == ':' || lower.back() == '.')) {
    lower.pop_back();
  }
  if (known.count(lower)) return true;
  // short capitalized line without terminal punctuation
  if (!tu::is_upper(t[0])) return false;
  if (t.back() == '.' || t.back() == '?' || t.back() == '!') return false;
  return token_count(t) <= 5;
}

}  // namespace

Article load_article(const std::string& id, const std::string& text) {
  if (text.empty()) {
    throw Error(ErrorCode::EmptyInput, "article text is empty: " + id);
  }
  if (!tu::valid_utf8(text)) {
    throw Error(ErrorCode::EncodingError, "article is not valid UTF-8: " + id);
  }

  Article article;
  article.id = id;
  article.full_text = text;

  auto lines = split_lines(text);
  // first non-blank line doubles as the title
  for (const auto& line : lines) {
    if (!is_blank(line)) {
      article.title = tu::trim(line.text);
      break;
    }
  }

  // pass 1: explicit "Abstract" header
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!is_abstract_header(lines[i].text)) continue;
    std::size_t begin = abstract_inline_offset(lines[i]);
    std::size_t end = begin;
    std::size_t j = i + 1;
    if (begin == std::string::npos) {
      // body starts on the next non-blank line
      while (j < lines.size() && is_blank(lines[j])) ++j;
      if (j >= lines.size()) break;
      begin = lines[j].begin;
      end = lines[j].end;
      ++j;
    }
    int blank_run = 0;
    for (; j < lines.size(); ++j) {
      if (is_blank(lines[j])) {
        if (++blank_run >= 2) break;
        continue;
      }
      if (is_section_header(lines[j].text) && lines[j].begin > begin) break;
      blank_run = 0;
      end = lines[j].end;
    }
    if (end == begin) {
      // header line carried the whole abstract
      end = lines[i].end;
    }
    if (end > begin) {
      article.abstract_span = lingkit::Span{begin, end};
      return article;
    }
  }

  // pass 2: second blank-line-delimited paragraph block
  std::vector<lingkit::Span> blocks;
  std::size_t block_begin = std::string::npos;
  std::size_t block_end = 0;
  for (const auto& line : lines) {
    if (is_blank(line)) {
      if (block_begin != std::string::npos) {
        blocks.push_back({block_begin, block_end});
        block_begin = std::string::npos;
      }
    } else {
      if (block_begin == std::string::npos) block_begin = line.begin;
      block_end = line.end;
    }
  }
  if (block_begin != std::string::npos) blocks.push_back({block_begin, block_end});
  if (blocks.size() >= 2 && blocks[1].length() > 0) {
    article.abstract_span = blocks[1];
  }
  return article;
}

Article load_article_file(const std::string& path) {
  std::filesystem::path p(path);
  return load_article(p.stem().string(), tu::read_file(path));
}

// ---------------------------------------------------------------------------
// Formatting artifacts

std::string strip_formatting(const std::string& raw_sentence) {
  std::string s = tu::collapse_whitespace(tu::trim(raw_sentence));
  auto tokens = lingkit::tokenize(s);

  // "CONCLUSIONS:" or "Main results:" style prefix, up to 4 capitalized
  // tokens terminated by a colon
  std::size_t colon = std::string::npos;
  for (std::size_t i = 0; i < tokens.size() && i < 5; ++i) {
    if (tokens[i].text == ":") {
      colon = i;
      break;
    }
    if (tokens[i].text.empty() || !tu::is_upper(tokens[i].text[0])) break;
  }
  if (colon != std::string::npos && colon >= 1 && colon + 1 < tokens.size()) {
    std::size_t cut = tokens[colon].span.end;
    while (cut < s.size() && tu::is_space(s[cut])) ++cut;
    return s.substr(cut);
  }

  // fused ALL-CAPS header word: "CONCLUSIONSMalaria is ...". Only known
  // section names are stripped so acronyms like "DNase" survive.
  static const std::unordered_set<std::string> header_words = {
      "conclusion", "conclusions", "result",  "results",    "background",
      "methods",    "aims",        "aim",     "objective",  "objectives",
      "findings",   "interpretation", "purpose", "introduction",
      "discussion", "summary",
  };
  if (!tokens.empty()) {
    const std::string& first = tokens[0].text;
    std::size_t caps = 0;
    while (caps < first.size() && tu::is_upper(first[caps])) ++caps;
    if (caps >= 2 && caps + 1 < first.size() && tu::is_alpha(first[caps]) &&
        !tu::is_upper(first[caps])) {
      std::string prefix = tu::to_lower(first.substr(0, caps - 1));
      if (header_words.count(prefix)) {
        return s.substr(tokens[0].span.begin + caps - 1);
      }
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Gold files

namespace {

std::vector<std::string> data_lines(const std::string& content) {
  std::vector<std::string> out;
  for (const std::string& line : tu::split(content, '\n')) {
    std::string t = line;
    if (!t.empty() && t.back() == '\r') t.pop_back();
    if (tu::trim(t).empty() || tu::trim(t)[0] == '#') continue;
    out.push_back(t);
  }
  return out;
}

}  // namespace

std::vector<GoldCoreSentence> load_gold(const std::string& content) {
  std::vector<GoldCoreSentence> out;
  std::unordered_set<std::string> seen;
  for (const std::string& line : data_lines(content)) {
    auto fields = tu::split(line, '\t');
    if (fields.size() != 2) {
      throw Error(ErrorCode::MalformedRecord,
                  "gold record needs exactly two fields: " + line);
    }
    GoldCoreSentence rec{tu::trim(fields[0]), tu::trim(fields[1])};
    if (rec.article_id.empty() || rec.sentence_text.empty()) {
      throw Error(ErrorCode::MalformedRecord, "empty gold field: " + line);
    }
    if (!seen.insert(rec.article_id).second) {
      throw Error(ErrorCode::DuplicateId,
                  "duplicate article id in gold file: " + rec.article_id);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<GoldCoreSentence> load_gold_file(const std::string& path) {
  return load_gold(tu::read_file(path));
}

std::string serialize_gold(const std::vector<GoldCoreSentence>& gold) {
  std::string out;
  for (const auto& rec : gold) {
    out += rec.article_id;
    out += '\t';
    out += rec.sentence_text;
    out += '\n';
  }
  return out;
}

std::vector<LabeledAidaSentence> load_labeled_sentences(
    const std::string& content) {
  std::vector<LabeledAidaSentence> out;
  for (const std::string& line : data_lines(content)) {
    auto fields = tu::split(line, '\t');
    if (fields.size() != 5) {
      throw Error(ErrorCode::MalformedRecord,
                  "labeled record needs sentence plus four flags: " + line);
    }
    LabeledAidaSentence rec;
    rec.sentence_text = tu::trim(fields[0]);
    if (rec.sentence_text.empty()) {
      throw Error(ErrorCode::MalformedRecord, "empty sentence: " + line);
    }
    bool* flags[4] = {&rec.atomic, &rec.independent, &rec.declarative,
                      &rec.absolute};
    for (int i = 0; i < 4; ++i) {
      std::string f = tu::trim(fields[i + 1]);
      if (f == "0") *flags[i] = false;
      else if (f == "1") *flags[i] = true;
      else
        throw Error(ErrorCode::InvalidFlag, "flag must be 0 or 1: " + f);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<LabeledAidaSentence> load_labeled_sentences_file(
    const std::string& path) {
  return load_labeled_sentences(tu::read_file(path));
}

}  // namespace claimkit::corpus
