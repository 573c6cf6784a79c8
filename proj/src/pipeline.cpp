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

#include "claimkit/pipeline.hpp"

#include <atomic>
#include <filesystem>
#include <thread>

#include "claimkit/error.hpp"

namespace claimkit::pipeline {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// JSON serialization (field order is fixed for byte-stable output)

json to_json(const extractor::ScoreBreakdown& b) {
  json j;
  j["pattern"] = b.pattern;
  j["core_words"] = b.core_words;
  j["non_core"] = b.non_core;
  j["term_frequency"] = b.term_frequency;
  j["length"] = b.length;
  j["total"] = b.total;
  j["evidence"] = b.evidence;
  return j;
}

json to_json(const aida::AidaVerdict& v) {
  json j;
  j["atomic"] = v.atomic;
  j["independent"] = v.independent;
  j["declarative"] = v.declarative;
  j["absolute"] = v.absolute;
  j["aida"] = v.aida;
  json evidence = json::array();
  for (const auto& e : v.evidence) {
    json je;
    je["rule_id"] = e.rule_id;
    je["matched_text"] = e.matched_text;
    je["span"] = {e.span_begin, e.span_end};
    evidence.push_back(std::move(je));
  }
  j["evidence"] = std::move(evidence);
  return j;
}

json to_json(const rewriter::Edit& e) {
  json j;
  j["kind"] = rewriter::edit_kind_name(e.kind);
  j["before"] = e.before;
  j["after"] = e.after;
  j["span"] = {e.span_begin, e.span_end};
  return j;
}

json to_json(const PipelineRecord& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["article_id"] = r.article_id;
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  if (r.core_sentence) j["core_sentence"] = *r.core_sentence;
  if (r.score) j["score"] = to_json(*r.score);
  if (r.verdict) j["verdict"] = to_json(*r.verdict);
  if (r.rewritten) {
    j["rewrite_attempted"] = r.rewrite_attempted;
    j["rewritten"] = *r.rewritten;
    json edits = json::array();
    for (const auto& e : r.edits) edits.push_back(to_json(e));
    j["edits"] = std::move(edits);
  }
  if (r.post_verdict) j["post_verdict"] = to_json(*r.post_verdict);
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

aida::AidaVerdict verdict_from_json(const json& j) {
  aida::AidaVerdict v;
  v.atomic = j.at("atomic").get<bool>();
  v.independent = j.at("independent").get<bool>();
  v.declarative = j.at("declarative").get<bool>();
  v.absolute = j.at("absolute").get<bool>();
  v.aida = j.at("aida").get<bool>();
  if (j.contains("evidence")) {
    for (const auto& je : j.at("evidence")) {
      aida::Evidence e;
      e.rule_id = je.at("rule_id").get<std::string>();
      e.matched_text = je.at("matched_text").get<std::string>();
      e.span_begin = je.at("span").at(0).get<std::size_t>();
      e.span_end = je.at("span").at(1).get<std::size_t>();
      v.evidence.push_back(std::move(e));
    }
  }
  return v;
}

PipelineRecord record_from_json(const json& j) {
  PipelineRecord r;
  r.article_id = j.value("article_id", "");
  if (j.contains("error")) {
    r.error = j.at("error").get<std::string>();
    return r;
  }
  if (j.contains("core_sentence")) {
    r.core_sentence = j.at("core_sentence").get<std::string>();
  }
  if (j.contains("score")) {
    const auto& js = j.at("score");
    extractor::ScoreBreakdown b;
    b.pattern = js.at("pattern").get<int>();
    b.core_words = js.at("core_words").get<int>();
    b.non_core = js.at("non_core").get<int>();
    b.term_frequency = js.at("term_frequency").get<int>();
    b.length = js.at("length").get<int>();
    b.total = js.at("total").get<int>();
    b.evidence = js.at("evidence").get<std::vector<std::string>>();
    r.score = std::move(b);
  }
  if (j.contains("verdict")) r.verdict = verdict_from_json(j.at("verdict"));
  if (j.contains("rewritten")) {
    r.rewritten = j.at("rewritten").get<std::string>();
    r.rewrite_attempted = j.value("rewrite_attempted", false);
    if (j.contains("edits")) {
      for (const auto& je : j.at("edits")) {
        rewriter::Edit e;
        std::string kind = je.at("kind").get<std::string>();
        static const std::pair<const char*, rewriter::EditKind> kinds[] = {
            {"strip_framing", rewriter::EditKind::StripFraming},
            {"demodalize", rewriter::EditKind::Demodalize},
            {"tense_shift", rewriter::EditKind::TenseShift},
            {"remove_hedge", rewriter::EditKind::RemoveHedge},
            {"strip_header", rewriter::EditKind::StripHeader},
            {"capitalize", rewriter::EditKind::Capitalize},
            {"terminal_stop", rewriter::EditKind::TerminalStop},
            {"whitespace", rewriter::EditKind::Whitespace},
        };
        for (const auto& [name, k] : kinds) {
          if (kind == name) e.kind = k;
        }
        e.before = je.at("before").get<std::string>();
        e.after = je.at("after").get<std::string>();
        e.span_begin = je.at("span").at(0).get<std::size_t>();
        e.span_end = je.at("span").at(1).get<std::size_t>();
        r.edits.push_back(std::move(e));
      }
    }
  }
  if (j.contains("post_verdict")) {
    r.post_verdict = verdict_from_json(j.at("post_verdict"));
  }
  if (j.contains("warnings")) {
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
  }
  return r;
}

// ---------------------------------------------------------------------------
// Context

Context Context::load(const std::string& lexicon_dir,
                      const extractor::ScoringConfig& config) {
  Context ctx;
  fs::path dir(lexicon_dir);
  ctx.tagger = lingkit::Tagger::load((dir / "tags.tsv").string());
  ctx.morphology = lingkit::Morphology::load((dir / "irregular_verbs.tsv").string());
  ctx.morphology.set_known_words(ctx.tagger.known_words());
  ctx.lex = lexicons::load_lexicons(lexicon_dir);
  fs::path grammar = dir / "cue_patterns.txt";
  ctx.patterns = fs::exists(grammar)
                     ? lexicons::CuePatternSet::load(grammar.string())
                     : lexicons::CuePatternSet::builtin();
  ctx.config = config;
  ctx.config.validate();
  return ctx;
}

rewriter::RewriteDeps Context::rewrite_deps() const {
  return {&tagger, &morphology, &lex, &patterns};
}

// ---------------------------------------------------------------------------
// Stages

PipelineRecord run_extract(const corpus::Article& article, const Context& ctx) {
  PipelineRecord record;
  record.article_id = article.id;
  try {
    auto result =
        extractor::extract_core(article, ctx.tagger, ctx.config, ctx.lex,
                                ctx.patterns);
    record.core_sentence = result.core.raw;
    record.score = result.breakdown;
  } catch (const Error& e) {
    record.error = std::string(error_code_name(e.code())) + ": " + e.what();
  }
  return record;
}

void run_check(PipelineRecord& record, const Context& ctx) {
  if (record.error || !record.core_sentence) return;
  lingkit::Sentence s = ctx.tagger.tag_copy(*record.core_sentence);
  record.verdict = aida::check_aida(s, ctx.lex);
}

void run_rewrite(PipelineRecord& record, const Context& ctx) {
  if (record.error) return;
  if (!record.verdict || !record.core_sentence) {
    record.error = "MissingVerdict: record has no verdict to rewrite from";
    return;
  }
  lingkit::Sentence s = ctx.tagger.tag_copy(*record.core_sentence);
  auto result = rewriter::rewrite(s, *record.verdict, ctx.rewrite_deps());
  record.rewritten = result.rewritten;
  record.edits = result.edits;
  record.post_verdict = result.post_verdict;
  record.rewrite_attempted = result.attempted;
  for (const auto& w : result.warnings) record.warnings.push_back(w);
}

PipelineRecord run_pipeline(const corpus::Article& article, const Context& ctx) {
  PipelineRecord record = run_extract(article, ctx);
  run_check(record, ctx);
  run_rewrite(record, ctx);
  return record;
}

std::vector<PipelineRecord> run_pipeline_batch(
    const std::vector<corpus::Article>& articles, const Context& ctx,
    unsigned jobs) {
  std::vector<PipelineRecord> records(articles.size());
  if (jobs <= 1 || articles.size() <= 1) {
    for (std::size_t i = 0; i < articles.size(); ++i) {
      records[i] = run_pipeline(articles[i], ctx);
    }
    return records;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(articles.size()));
  for (unsigned w = 0; w < n; ++w) {
    workers.emplace_back([&]() {
      for (std::size_t i = next.fetch_add(1); i < articles.size();
           i = next.fetch_add(1)) {
        records[i] = run_pipeline(articles[i], ctx);
      }
    });
  }
  for (auto& t : workers) t.join();
  return records;
}

}  // namespace claimkit::pipeline
