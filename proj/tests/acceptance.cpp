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

// Acceptance suite. Each test case covers one release criterion and prints a
// single PASS/FAIL line; details of a failure go to stderr.

#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "claimkit/aida.hpp"
#include "claimkit/corpus.hpp"
#include "claimkit/eval.hpp"
#include "claimkit/extractor.hpp"
#include "claimkit/rewriter.hpp"
#include "test_support.hpp"
#include "textutil.hpp"

using namespace claimkit;
namespace ts = testsupport;
namespace tu = claimkit::textutil;
using json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const std::string& name, bool ok) {
  std::cout << (ok ? "[ PASS ] " : "[ FAIL ] ") << name << std::endl;
  CHECK_MESSAGE(ok, name);
}

bool note(bool ok, const std::string& detail) {
  if (!ok) std::cerr << "    detail: " << detail << "\n";
  return ok;
}

std::string rewrite_text(const std::string& raw) {
  auto s = ts::tagged(raw);
  auto v = aida::check_aida(s, ts::context().lex);
  return rewriter::rewrite(s, v, ts::context().rewrite_deps()).rewritten;
}

// Fuzz sentence generator: claim-like sentences with optional framing cues,
// modals, hedges, past tense, header artifacts, and sloppy punctuation.
std::string fuzz_sentence(std::mt19937& rng) {
  static const std::vector<std::pair<std::string, bool>> subjects = {
      {"The drug", true},    {"Bed nets", false}, {"The vaccine", true},
      {"Patients", false},   {"The enzyme", true}, {"Malaria", true},
      {"The protein", true}, {"Infection rates", false}};
  static const std::vector<std::string> verbs = {"reduce", "prevent",
                                                 "improve", "regulate"};
  static const std::vector<std::string> pasts = {"reduced", "prevented",
                                                 "improved", "showed"};
  static const std::vector<std::string> objects = {
      "mortality", "infection rates", "cell growth", "survival", "the fever"};

  std::uniform_int_distribution<int> pick(0, 1000);
  auto choice = [&](const auto& v) { return v[pick(rng) % v.size()]; };

  auto [subject, singular] = choice(subjects);
  std::string verb;
  switch (pick(rng) % 5) {
    case 0: verb = choice(verbs) + (singular ? "s" : ""); break;
    case 1: verb = choice(pasts); break;
    case 2: verb = "may " + choice(verbs); break;
    case 3: verb = "may not " + choice(verbs); break;
    default: verb = "probably " + choice(verbs) + (singular ? "s" : "");
  }
  std::string core = subject + " " + verb + " " + choice(objects);

  switch (pick(rng) % 4) {
    case 0: break;
    case 1:
      core[0] = tu::lower(core[0]);
      core = "Overall, this study reveals that " + core;
      break;
    case 2:
      core = "CONCLUSIONS: " + core;
      break;
    default:
      core[0] = tu::lower(core[0]);
      core = "These findings indicate that " + core;
  }
  switch (pick(rng) % 4) {
    case 0: core += "."; break;
    case 1: core += " ."; break;
    case 2: core += ".."; break;
    default: break;  // no stop at all
  }
  if (pick(rng) % 5 == 0) core += "  ";
  return core;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ts::cli_bin()) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  RunResult r;
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("acceptance: canonical exemplars pass every check") {
  auto start = Clock::now();
  bool ok = true;
  for (const char* raw :
       {"Malaria is transmitted by mosquitos.",
        "The degree of hepatic reticuloendothelial function impairment does "
        "not differ between cirrhotic patients with and without previous "
        "history of SBP."}) {
    auto v = aida::check_aida(ts::tagged(raw), ts::context().lex);
    ok &= note(v.atomic && v.independent && v.declarative && v.absolute &&
                   v.aida,
               std::string("exemplar failed a check: ") + raw);
  }
  ok &= note(seconds_since(start) < 1.0, "exemplar checks exceeded 1 s");
  report("canonical exemplars pass all four checks and check_aida in < 1 s",
         ok);
}

TEST_CASE("acceptance: end-to-end fixture is byte-exact") {
  const std::string fixture =
      "Overall, this study reveals that malaria is transmitted by mosquitos.";
  auto s = ts::tagged(fixture);
  auto v = aida::check_aida(s, ts::context().lex);
  bool ok = note(!v.independent, "fixture should fail independence");
  ok &= note(!v.absolute, "fixture should fail absoluteness");
  auto r = rewriter::rewrite(s, v, ts::context().rewrite_deps());
  ok &= note(r.attempted, "rewrite should be attempted");
  ok &= note(r.rewritten == "Malaria is transmitted by mosquitos.",
             "rewrite not byte-exact: [" + r.rewritten + "]");
  ok &= note(r.post_verdict.atomic && r.post_verdict.independent &&
                 r.post_verdict.declarative && r.post_verdict.absolute &&
                 r.post_verdict.aida,
             "post-check should be all true");
  report("end-to-end fixture rewrites byte-exactly and re-checks clean", ok);
}

TEST_CASE("acceptance: atomic-only failures give up untouched") {
  const std::string fixture =
      "Malaria is transmitted by mosquitos, and bed nets reduce infection "
      "rates.";
  auto s = ts::tagged(fixture);
  auto v = aida::check_aida(s, ts::context().lex);
  bool ok = note(!v.atomic && v.independent && v.declarative && v.absolute,
                 "fixture should fail atomicity only");
  auto r = rewriter::rewrite(s, v, ts::context().rewrite_deps());
  ok &= note(!r.attempted, "rewrite should not be attempted");
  ok &= note(r.rewritten == fixture, "text should be identical");
  report("non-atomic-only fixture returns attempted=false and identical text",
         ok);
}

TEST_CASE("acceptance: brute-force oracles agree") {
  const auto& ctx = ts::context();
  auto start = Clock::now();
  bool ok = true;

  // top_terms vs a plain counter on 100 random documents
  std::mt19937 rng(101);
  for (int doc = 0; doc < 100 && ok; ++doc) {
    std::string body;
    std::uniform_int_distribution<int> n_sent(2, 12);
    int n = n_sent(rng);
    for (int i = 0; i < n; ++i) body += fuzz_sentence(rng) + " ";
    corpus::Article article;
    article.id = "fuzz";
    article.full_text = body;
    article.abstract_span = lingkit::Span{0, body.size()};
    auto ranking = extractor::top_terms(article, ctx.config, ctx.lex);

    std::map<std::string, std::size_t> oracle;
    for (const auto& tok : lingkit::tokenize(body)) {
      if (tok.is_punct()) continue;
      std::string lower = tu::to_lower(tok.text);
      bool alpha = false;
      for (char c : lower) alpha = alpha || tu::is_alpha(c);
      if (!alpha || ctx.lex.stop_words.contains(lower)) continue;
      oracle[lower] += 1;
    }
    std::vector<std::pair<std::string, std::size_t>> sorted(oracle.begin(),
                                                            oracle.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) {
                       return a.second > b.second;
                     });
    sorted.resize(std::min<std::size_t>(
        sorted.size(), static_cast<std::size_t>(ctx.config.top_k_terms)));
    ok &= note(ranking.terms == sorted,
               "top_terms disagrees with the oracle on doc " +
                   std::to_string(doc));
  }
  ok &= note(seconds_since(start) < 10.0, "top_terms oracle exceeded 10 s");

  // metric formulas vs a brute-force confusion counter on 1000 label sets
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    std::vector<eval::FlagVector> predicted, gold;
    std::uniform_int_distribution<int> n_items(1, 12);
    int n = n_items(rng);
    for (int i = 0; i < n; ++i) {
      eval::FlagVector p{coin(rng), coin(rng), coin(rng), coin(rng), false};
      eval::FlagVector g{coin(rng), coin(rng), coin(rng), coin(rng), false};
      p.aida = p.atomic && p.independent && p.declarative && p.absolute;
      g.aida = g.atomic && g.independent && g.declarative && g.absolute;
      predicted.push_back(p);
      gold.push_back(g);
    }
    auto reportm = eval::evaluate_checks(predicted, gold);
    std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
      tp += predicted[i].aida && gold[i].aida;
      fp += predicted[i].aida && !gold[i].aida;
      fn += !predicted[i].aida && gold[i].aida;
      tn += !predicted[i].aida && !gold[i].aida;
    }
    const auto& m = reportm.per_requirement.at("aida");
    bool counts_ok = m.counts.tp == tp && m.counts.fp == fp &&
                     m.counts.tn == tn && m.counts.fn == fn;
    double precision = tp + fp == 0 ? 0.0 : double(tp) / double(tp + fp);
    double recall = tp + fn == 0 ? 0.0 : double(tp) / double(tp + fn);
    double f = precision + recall == 0.0
                   ? 0.0
                   : 2.0 * precision * recall / (precision + recall);
    double accuracy = double(tp + tn) / double(predicted.size());
    bool formulas_ok = m.precision == precision && m.recall == recall &&
                       m.f_measure == f && m.accuracy == accuracy;
    ok &= note(counts_ok && formulas_ok,
               "metrics disagree with the oracle on trial " +
                   std::to_string(trial));
  }
  report("top_terms and metric formulas match brute-force oracles", ok);
}

TEST_CASE("acceptance: extraction is an argmax with the last-wins tie-break") {
  const auto& ctx = ts::context();
  std::mt19937 rng(202);
  std::uniform_int_distribution<int> n_sent(1, 8);
  bool ok = true;
  for (int doc = 0; doc < 200 && ok; ++doc) {
    std::string body;
    int n = n_sent(rng);
    for (int i = 0; i < n; ++i) {
      std::string s = fuzz_sentence(rng);
      if (s.find('.') == std::string::npos) s += ".";
      body += s + " ";
    }
    corpus::Article article;
    article.id = "fuzz";
    article.full_text = body;
    article.abstract_span = lingkit::Span{0, body.size()};
    auto result = extractor::extract_core(article, ctx.tagger, ctx.config,
                                          ctx.lex, ctx.patterns);
    std::size_t best = 0;
    for (std::size_t i = 0; i < result.ranked.size(); ++i) {
      if (result.ranked[i].breakdown.total >=
          result.ranked[best].breakdown.total) {
        best = i;
      }
    }
    ok &= note(result.core.raw == result.ranked[best].sentence.raw &&
                   result.breakdown.total == result.ranked[best].breakdown.total,
               "argmax violated on doc " + std::to_string(doc));
    for (const auto& ranked : result.ranked) {
      ok &= ranked.breakdown.total <= result.breakdown.total;
    }
  }
  report("extract_core is an argmax with ties to the later sentence (200 docs)",
         ok);
}

TEST_CASE("acceptance: rewrite, strip_formatting, finalize_syntax idempotent") {
  std::mt19937 rng(303);
  bool ok = true;
  for (int i = 0; i < 200 && ok; ++i) {
    std::string raw = fuzz_sentence(rng);

    std::string once = rewrite_text(raw);
    std::string twice = rewrite_text(once);
    ok &= note(twice == once, "rewrite not idempotent on: [" + raw + "] -> [" +
                                  once + "] -> [" + twice + "]");

    std::string s1 = corpus::strip_formatting(raw);
    ok &= note(corpus::strip_formatting(s1) == s1,
               "strip_formatting not idempotent on: " + raw);

    std::string f1 = rewriter::finalize_syntax(raw).text;
    ok &= note(rewriter::finalize_syntax(f1).text == f1,
               "finalize_syntax not idempotent on: " + raw);
  }
  report("rewrite, strip_formatting, finalize_syntax idempotent on 200 fuzz "
         "sentences", ok);
}

TEST_CASE("acceptance: accuracy and F-measure diverge on skewed labels") {
  std::vector<eval::FlagVector> predicted(125), gold(125);
  // all-false predictor; 2 of 125 gold sentences are compliant
  gold[17] = {true, true, true, true, true};
  gold[94] = {true, true, true, true, true};
  auto reportm = eval::evaluate_checks(predicted, gold);
  const auto& m = reportm.per_requirement.at("aida");
  bool ok = note(m.accuracy >= 0.97, "accuracy should be >= 0.97");
  ok &= note(m.accuracy == doctest::Approx(123.0 / 125.0).epsilon(1e-12),
             "accuracy should be 0.984 exactly");
  ok &= note(m.f_measure == 0.0, "F should be exactly 0");
  report("all-negative predictor scores accuracy >= 0.97 with F = 0", ok);
}

TEST_CASE("acceptance: evaluate emits both tables on the bundled corpus") {
  auto start = Clock::now();
  std::string corpus_args;
  for (int i = 1; i <= 10; ++i) {
    char id[8];
    std::snprintf(id, sizeof(id), "A%02d", i);
    corpus_args += " " + ts::fixture_dir() + "/corpus/" + id + ".txt";
  }
  std::string lex = " --lexicons " + ts::lexicon_dir();
  std::string piped =
      "/tmp/claimkit_accept_" + std::to_string(::getpid()) + ".jsonl";
  auto p = run_cli("pipeline" + corpus_args + lex + " --output " + piped);
  bool ok = note(p.exit_code == 0, "pipeline run failed");
  auto r = run_cli("evaluate " + piped + lex + " --gold " + ts::fixture_dir() +
                   "/gold.tsv --labeled " + ts::fixture_dir() + "/labeled.tsv");
  ok &= note(r.exit_code == 0, "evaluate run failed");
  if (ok) {
    auto report_json = json::parse(r.out);
    ok &= note(report_json.at("extraction").at("matched") == 10 &&
                   report_json.at("extraction").at("total") == 10,
               "extraction fraction should be 10/10");
    // metric table: one row per requirement with the four measures
    for (const char* req :
         {"atomic", "independent", "declarative", "absolute", "aida"}) {
      const auto& row = report_json.at("check_metrics").at(req);
      ok &= note(row.contains("precision") && row.contains("recall") &&
                     row.contains("f_measure") && row.contains("accuracy"),
                 std::string("metric row incomplete: ") + req);
    }
    // compliance table: five before/after rows, overall row first
    const auto& compliance = report_json.at("compliance");
    ok &= note(compliance.size() == 5, "compliance table should have 5 rows");
    ok &= note(compliance.at(0).at("requirement") == "aida",
               "overall compliance row should come first");
  }
  ok &= note(seconds_since(start) < 5.0, "evaluation exceeded 5 s");
  std::remove(piped.c_str());
  report("evaluate emits metric and compliance tables, 10/10 extraction, < 5 s",
         ok);
}

TEST_CASE("acceptance: morphology reproduces the irregular table") {
  const auto& m = ts::context().morphology;
  bool ok = true;
  for (const auto& row : m.table()) {
    ok &= note(m.to_present(row.past, lingkit::Number::Plural) == row.base,
               "plural form wrong for: " + row.past);
    ok &= note(m.to_present(row.past, lingkit::Number::Singular) ==
                   row.third_singular,
               "singular form wrong for: " + row.past);
  }
  ok &= note(m.to_present("showed", lingkit::Number::Plural) == "show",
             "showed/plural");
  ok &= note(m.to_present("increased", lingkit::Number::Singular) ==
                 "increases",
             "increased/singular");
  ok &= note(m.to_present("was", lingkit::Number::Singular) == "is",
             "was/singular");
  report("to_present reproduces the irregular table and worked examples", ok);
}
