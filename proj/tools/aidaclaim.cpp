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

// aidaclaim: extract the core claim sentence of an article, check it against
// the AIDA requirements, rewrite it toward compliance, and evaluate all
// stages against gold data. Stages communicate through JSONL records.

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "claimkit/error.hpp"
#include "claimkit/pipeline.hpp"
#include "textutil.hpp"

namespace {

using claimkit::Error;
using claimkit::pipeline::Context;
using claimkit::pipeline::PipelineRecord;
using claimkit::pipeline::json;
namespace corpus = claimkit::corpus;
namespace eval = claimkit::eval;
namespace pipeline = claimkit::pipeline;
namespace tu = claimkit::textutil;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNoRecords = 2;

struct CommonOpts {
  std::string lexicon_dir = "data/lexicons";
  std::string config_file;
  std::string output;
  std::string format = "jsonl";
  unsigned jobs = 1;
  claimkit::extractor::ScoringConfig scoring;
};

void add_common_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--lexicons", opts.lexicon_dir, "Lexicon directory");
  cmd->add_option("--config", opts.config_file,
                  "Scoring config file (key=value per line)");
  cmd->add_option("--output", opts.output, "Output path (default stdout)");
  cmd->add_option("--format", opts.format, "Output format: jsonl|csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  cmd->add_option("--jobs", opts.jobs, "Worker thread count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--pattern-bonus", opts.scoring.pattern_bonus,
                  "Points for a cue pattern match");
  cmd->add_option("--core-points", opts.scoring.core_word_points,
                  "Points per core word hit");
  cmd->add_option("--non-core-penalty", opts.scoring.non_core_penalty,
                  "Points per non-core word hit (negative)");
  cmd->add_option("--tf-points", opts.scoring.tf_points,
                  "Points per frequent-term hit");
  cmd->add_option("--length-penalty", opts.scoring.length_penalty,
                  "Points for overlong sentences (negative)");
  cmd->add_option("--max-len", opts.scoring.max_length_tokens,
                  "Length threshold in tokens");
  cmd->add_option("--top-k", opts.scoring.top_k_terms,
                  "Number of frequent terms to rank");
}

void apply_config_file(CommonOpts& opts) {
  if (opts.config_file.empty()) return;
  for (const std::string& line : tu::split(tu::read_file(opts.config_file), '\n')) {
    std::string t = tu::trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw Error(claimkit::ErrorCode::MalformedRecord,
                  "config line is not key=value: " + t);
    }
    std::string key = tu::trim(t.substr(0, eq));
    int value = std::stoi(tu::trim(t.substr(eq + 1)));
    auto& s = opts.scoring;
    if (key == "pattern_bonus") s.pattern_bonus = value;
    else if (key == "core_word_points") s.core_word_points = value;
    else if (key == "non_core_penalty") s.non_core_penalty = value;
    else if (key == "tf_points") s.tf_points = value;
    else if (key == "length_penalty") s.length_penalty = value;
    else if (key == "max_length_tokens") s.max_length_tokens = value;
    else if (key == "top_k_terms") s.top_k_terms = value;
    else
      throw Error(claimkit::ErrorCode::MalformedRecord,
                  "unknown config key: " + key);
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw Error(claimkit::ErrorCode::IoError, "cannot open output: " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int emit_records(const std::vector<PipelineRecord>& records,
                 const CommonOpts& opts) {
  Output out(opts.output);
  std::size_t ok = 0;
  for (const auto& r : records) {
    out.stream() << pipeline::to_json(r).dump() << "\n";
    if (!r.error) ++ok;
  }
  return ok > 0 ? kExitOk : kExitNoRecords;
}

std::vector<corpus::Article> load_articles(const std::vector<std::string>& paths) {
  std::vector<corpus::Article> articles;
  for (const auto& p : paths) articles.push_back(corpus::load_article_file(p));
  return articles;
}

std::vector<PipelineRecord> read_jsonl_records(std::istream& in) {
  std::vector<PipelineRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (tu::trim(line).empty()) continue;
    try {
      records.push_back(pipeline::record_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      PipelineRecord bad;
      bad.error = std::string("MalformedRecord: ") + e.what();
      records.push_back(std::move(bad));
    }
  }
  return records;
}

std::unique_ptr<std::istream> open_input(const std::string& path) {
  if (path.empty() || path == "-") return nullptr;  // stdin
  auto in = std::make_unique<std::ifstream>(path);
  if (!*in) throw Error(claimkit::ErrorCode::IoError, "cannot open: " + path);
  return in;
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_extract(const std::vector<std::string>& inputs, const CommonOpts& opts) {
  Context ctx = Context::load(opts.lexicon_dir, opts.scoring);
  std::vector<PipelineRecord> records;
  for (const auto& article : load_articles(inputs)) {
    records.push_back(pipeline::run_extract(article, ctx));
  }
  return emit_records(records, opts);
}

int cmd_check(const std::string& input, const CommonOpts& opts) {
  Context ctx = Context::load(opts.lexicon_dir, opts.scoring);
  auto in = open_input(input);
  std::istream& is = in ? *in : std::cin;

  // Peek the first non-empty line: JSONL records from a prior stage, or raw
  // sentences one per line.
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) {
    if (!tu::trim(line).empty()) lines.push_back(line);
  }
  std::vector<PipelineRecord> records;
  bool jsonl = !lines.empty() && tu::trim(lines.front()).front() == '{';
  if (jsonl) {
    std::stringstream ss;
    for (const auto& l : lines) ss << l << "\n";
    records = read_jsonl_records(ss);
  } else {
    std::size_t n = 0;
    for (const auto& sentence : lines) {
      PipelineRecord r;
      r.article_id = "line-" + std::to_string(++n);
      r.core_sentence = tu::trim(sentence);
      records.push_back(std::move(r));
    }
  }
  for (auto& r : records) pipeline::run_check(r, ctx);
  return emit_records(records, opts);
}

int cmd_rewrite(const std::string& input, const CommonOpts& opts) {
  Context ctx = Context::load(opts.lexicon_dir, opts.scoring);
  auto in = open_input(input);
  auto records = read_jsonl_records(in ? *in : std::cin);
  for (auto& r : records) pipeline::run_rewrite(r, ctx);
  return emit_records(records, opts);
}

int cmd_pipeline(const std::vector<std::string>& inputs, const CommonOpts& opts) {
  Context ctx = Context::load(opts.lexicon_dir, opts.scoring);
  auto records = pipeline::run_pipeline_batch(load_articles(inputs), ctx,
                                              opts.jobs);
  return emit_records(records, opts);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

int cmd_evaluate(const std::string& input, const std::string& gold_path,
                 const std::string& labeled_path, double threshold,
                 const CommonOpts& opts) {
  Context ctx = Context::load(opts.lexicon_dir, opts.scoring);
  auto in = open_input(input);
  auto records = read_jsonl_records(in ? *in : std::cin);

  json report;
  report["schema_version"] = pipeline::kSchemaVersion;
  std::ostringstream table;

  if (!gold_path.empty()) {
    auto gold = corpus::load_gold_file(gold_path);
    std::vector<std::pair<std::string, std::string>> extracted;
    for (const auto& r : records) {
      if (!r.error && r.core_sentence) {
        extracted.emplace_back(r.article_id, *r.core_sentence);
      }
    }
    auto ex = eval::evaluate_extraction(extracted, gold, threshold);
    json jex;
    jex["matched"] = ex.matched;
    jex["total"] = ex.total;
    jex["fraction"] = fmt(ex.fraction);
    json per = json::array();
    for (const auto& m : ex.per_article) {
      per.push_back({{"article_id", m.article_id},
                     {"similarity", fmt(m.similarity)},
                     {"matched", m.matched}});
    }
    jex["per_article"] = std::move(per);
    report["extraction"] = std::move(jex);
    table << "Extraction: " << ex.matched << "/" << ex.total
          << " matched (fraction " << fmt(ex.fraction) << ", threshold "
          << fmt(threshold) << ")\n\n";
  }

  if (!labeled_path.empty()) {
    auto labeled = corpus::load_labeled_sentences_file(labeled_path);
    std::vector<eval::FlagVector> predicted, gold_flags;
    for (const auto& s : labeled) {
      auto sentence = ctx.tagger.tag_copy(s.sentence_text);
      predicted.push_back(
          eval::FlagVector::from_verdict(claimkit::aida::check_aida(sentence, ctx.lex)));
      gold_flags.push_back(eval::FlagVector::from_labeled(s));
    }
    auto metrics = eval::evaluate_checks(predicted, gold_flags);
    json jm;
    table << "Check metrics (positive = compliant):\n";
    table << "requirement   precision  recall  f-measure  accuracy\n";
    for (const char* req :
         {"atomic", "independent", "declarative", "absolute", "aida"}) {
      const auto& m = metrics.per_requirement.at(req);
      jm[req] = {{"tp", m.counts.tp},     {"fp", m.counts.fp},
                 {"tn", m.counts.tn},     {"fn", m.counts.fn},
                 {"precision", fmt(m.precision)}, {"recall", fmt(m.recall)},
                 {"f_measure", fmt(m.f_measure)}, {"accuracy", fmt(m.accuracy)},
                 {"degenerate", m.degenerate}};
      table << req << std::string(14 - std::string(req).size(), ' ')
            << fmt(m.precision) << "     " << fmt(m.recall) << "  "
            << fmt(m.f_measure) << "     " << fmt(m.accuracy) << "\n";
    }
    report["check_metrics"] = std::move(jm);
    table << "\n";
  }

  // compliance before/after from the records themselves
  {
    std::vector<eval::FlagVector> before, after;
    for (const auto& r : records) {
      if (r.error || !r.verdict || !r.post_verdict) continue;
      before.push_back(eval::FlagVector::from_verdict(*r.verdict));
      after.push_back(eval::FlagVector::from_verdict(*r.post_verdict));
    }
    if (!before.empty()) {
      auto compliance = eval::evaluate_rewrites(before, after);
      json jc = json::array();
      table << "Compliance before/after rewriting (" << before.size()
            << " sentences):\n";
      table << "requirement   before%   after%\n";
      for (const auto& row : compliance.rows) {
        jc.push_back({{"requirement", row.requirement},
                      {"before_pct", fmt(row.before_pct)},
                      {"after_pct", fmt(row.after_pct)}});
        table << row.requirement
              << std::string(14 - row.requirement.size(), ' ')
              << fmt(row.before_pct) << "   " << fmt(row.after_pct) << "\n";
      }
      report["compliance"] = std::move(jc);
    }
  }

  Output out(opts.output);
  if (opts.format == "csv") {
    out.stream() << "section,key,value\n";
    // flat CSV export of the same report
    std::function<void(const std::string&, const json&)> walk =
        [&](const std::string& prefix, const json& node) {
          if (node.is_object()) {
            for (auto it = node.begin(); it != node.end(); ++it) {
              walk(prefix.empty() ? it.key() : prefix + "." + it.key(),
                   it.value());
            }
          } else if (node.is_array()) {
            std::size_t i = 0;
            for (const auto& v : node) walk(prefix + "[" + std::to_string(i++) + "]", v);
          } else {
            auto dot = prefix.find('.');
            std::string section = dot == std::string::npos ? prefix : prefix.substr(0, dot);
            std::string key = dot == std::string::npos ? "" : prefix.substr(dot + 1);
            out.stream() << section << "," << key << ","
                         << (node.is_string() ? node.get<std::string>() : node.dump())
                         << "\n";
          }
        };
    walk("", report);
  } else {
    out.stream() << report.dump() << "\n";
  }
  std::cerr << table.str();
  return records.empty() ? kExitNoRecords : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AIDA core-claim extraction, checking and rewriting"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<std::string> inputs;
  std::string input_file;
  std::string gold_path, labeled_path;
  double threshold = 0.85;

  auto* extract = app.add_subcommand("extract", "Extract core sentences");
  extract->add_option("articles", inputs, "Article text files")->required();
  add_common_options(extract, opts);

  auto* check = app.add_subcommand("check", "Check AIDA compliance");
  check->add_option("input", input_file,
                    "Sentences or prior JSONL ('-' for stdin)");
  add_common_options(check, opts);

  auto* rewrite = app.add_subcommand("rewrite", "Rewrite non-compliant sentences");
  rewrite->add_option("input", input_file, "Prior JSONL ('-' for stdin)");
  add_common_options(rewrite, opts);

  auto* pipe = app.add_subcommand("pipeline", "Run extract + check + rewrite");
  pipe->add_option("articles", inputs, "Article text files")->required();
  add_common_options(pipe, opts);

  auto* evaluate = app.add_subcommand("evaluate", "Evaluate against gold data");
  evaluate->add_option("input", input_file, "Pipeline JSONL ('-' for stdin)");
  evaluate->add_option("--gold", gold_path, "Gold core sentences (TSV)");
  evaluate->add_option("--labeled", labeled_path, "Labeled AIDA sentences (TSV)");
  evaluate->add_option("--similarity-threshold", threshold,
                       "Extraction match threshold");
  add_common_options(evaluate, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    apply_config_file(opts);
    opts.scoring.validate();
    if (extract->parsed()) return cmd_extract(inputs, opts);
    if (check->parsed()) return cmd_check(input_file, opts);
    if (rewrite->parsed()) return cmd_rewrite(input_file, opts);
    if (pipe->parsed()) return cmd_pipeline(inputs, opts);
    if (evaluate->parsed()) {
      return cmd_evaluate(input_file, gold_path, labeled_path, threshold, opts);
    }
  } catch (const Error& e) {
    std::cerr << "error (" << claimkit::error_code_name(e.code()) << "): "
              << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
