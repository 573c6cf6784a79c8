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

#include <doctest.h>

#include <string>
#include <vector>

#include "claimkit/error.hpp"
#include "claimkit/rewriter.hpp"
#include "test_support.hpp"
#include "textutil.hpp"

using namespace claimkit;
using namespace claimkit::rewriter;
namespace ts = testsupport;
namespace tu = claimkit::textutil;

namespace {

RewriteResult run(const std::string& raw) {
  auto s = ts::tagged(raw);
  auto v = aida::check_aida(s, ts::context().lex);
  return rewrite(s, v, ts::context().rewrite_deps());
}

}  // namespace

TEST_CASE("framing cues are stripped and the claim recapitalized") {
  auto r = run("Overall, this study reveals that malaria is transmitted by mosquitos.");
  CHECK(r.attempted);
  CHECK(r.rewritten == "Malaria is transmitted by mosquitos.");
  CHECK(r.post_verdict.aida);
}

TEST_CASE("modals are folded into a present-tense verb") {
  CHECK(run("Malaria may be transmitted by mosquitos.").rewritten ==
        "Malaria is transmitted by mosquitos.");
  CHECK(run("The drug may reduce mortality.").rewritten ==
        "The drug reduces mortality.");
  // negation keeps do-support
  CHECK(run("The drug may not reduce mortality.").rewritten ==
        "The drug does not reduce mortality.");
}

TEST_CASE("past tense shifts to present") {
  CHECK(run("Malaria was transmitted by mosquitos.").rewritten ==
        "Malaria is transmitted by mosquitos.");
  CHECK(run("CONCLUSIONS: the drug reduced mortality").rewritten ==
        "The drug reduces mortality.");
}

TEST_CASE("adverbial hedges are deleted, hedge verbs stay") {
  auto r = run("The results probably show an effect.");
  CHECK(r.rewritten == "The results show an effect.");
  CHECK_FALSE(r.post_verdict.absolute);  // "show" still hedges the claim
}

TEST_CASE("compliant input is not touched") {
  auto r = run("Malaria is transmitted by mosquitos.");
  CHECK_FALSE(r.attempted);
  CHECK(r.rewritten == r.original);
  CHECK(r.edits.empty());
}

TEST_CASE("atomic-only failures are not attempted") {
  auto r = run(
      "Malaria is transmitted by mosquitos, and bed nets reduce infection rates.");
  CHECK_FALSE(r.attempted);
  CHECK(r.rewritten == r.original);
  REQUIRE_FALSE(r.warnings.empty());
  CHECK(r.warnings[0].find("not atomic") != std::string::npos);
}

TEST_CASE("strip_framing refuses a degenerate result") {
  auto deps = ts::context().rewrite_deps();
  auto step = strip_framing("This study reveals that mosquitos.", deps);
  CHECK(step.text == "This study reveals that mosquitos.");
  REQUIRE_FALSE(step.warnings.empty());
  CHECK(step.warnings[0].find("degenerate") != std::string::npos);
}

TEST_CASE("demodalize warns without an agreement head") {
  auto deps = ts::context().rewrite_deps();
  auto step = demodalize("May reduce the fever.", deps);
  REQUIRE_FALSE(step.warnings.empty());
  CHECK(step.warnings[0].find("no agreement head") != std::string::npos);
}

TEST_CASE("finalize_syntax fixes spacing, case, and the full stop") {
  CHECK(finalize_syntax("  the   drug works .").text == "The drug works.");
  CHECK(finalize_syntax("The drug works").text == "The drug works.");
  CHECK(finalize_syntax("The drug works...").text == "The drug works.");
  CHECK(finalize_syntax("The drug works ;").text == "The drug works.");
  CHECK(finalize_syntax("CONCLUSIONS: the drug works.").text ==
        "The drug works.");
}

TEST_CASE("finalize_syntax is idempotent") {
  const char* samples[] = {
      "  the   drug works .",
      "The drug works...",
      "RESULTS: patients recovered",
      "Malaria is transmitted by mosquitos.",
      "a b ;; c ,, d",
  };
  for (const char* raw : samples) {
    auto once = finalize_syntax(raw);
    auto twice = finalize_syntax(once.text);
    CHECK(twice.text == once.text);
    CHECK(twice.edits.empty());
  }
}

TEST_CASE("rewriting an already rewritten sentence changes nothing") {
  const char* samples[] = {
      "Overall, this study reveals that malaria is transmitted by mosquitos.",
      "Malaria may be transmitted by mosquitos.",
      "Malaria was transmitted by mosquitos.",
      "The drug may not reduce mortality.",
      "In conclusion, the results suggest that the vaccine improves survival.",
  };
  for (const char* raw : samples) {
    auto first = run(raw);
    auto second = run(first.rewritten);
    CHECK(second.rewritten == first.rewritten);
  }
}

TEST_CASE("edit log replays to the rewritten text") {
  const char* samples[] = {
      "Overall, this study reveals that malaria is transmitted by mosquitos.",
      "Malaria may be transmitted by mosquitos.",
      "CONCLUSIONS: the drug reduced mortality",
      "The results probably show an effect.",
      "These findings indicate that bed nets reduce infection rates.",
  };
  for (const char* raw : samples) {
    auto r = run(raw);
    CHECK(replay_edits(r.original, r.edits) == r.rewritten);
  }
}

TEST_CASE("replay rejects a tampered edit log") {
  auto r = run("Malaria may be transmitted by mosquitos.");
  REQUIRE_FALSE(r.edits.empty());
  auto tampered = r.edits;
  tampered[0].before = "bogus text";
  CHECK_THROWS_AS(replay_edits(r.original, tampered), Error);
  tampered = r.edits;
  tampered[0].span_end = r.original.size() + 40;
  CHECK_THROWS_AS(replay_edits(r.original, tampered), Error);
}

TEST_CASE("rewriting never breaks declarativeness") {
  const char* samples[] = {
      "Overall, this study reveals that malaria is transmitted by mosquitos.",
      "the results probably show an effect",
      "Malaria may be transmitted by mosquitos.",
      "We observed a significant reduction in symptoms.",
      "CONCLUSIONS: the drug reduced mortality",
  };
  for (const char* raw : samples) {
    auto r = run(raw);
    if (r.attempted) CHECK(r.post_verdict.declarative);
  }
}

TEST_CASE("rewrites introduce no new content words") {
  const char* samples[] = {
      "Overall, this study reveals that malaria is transmitted by mosquitos.",
      "Malaria may be transmitted by mosquitos.",
      "The drug may not reduce mortality.",
      "The results probably show an effect.",
      "Malaria was transmitted by mosquitos.",
  };
  // function words the grammar repairs may add
  const std::vector<std::string> allowed = {"is", "are", "does", "do", "not"};
  for (const char* raw : samples) {
    auto r = run(raw);
    auto before = lingkit::tokenize(tu::to_lower(r.original));
    for (const auto& tok : lingkit::tokenize(tu::to_lower(r.rewritten))) {
      if (tok.is_punct()) continue;
      bool ok = false;
      for (const auto& w : allowed) ok = ok || tok.text == w;
      for (const auto& b : before) {
        if (b.is_punct()) continue;
        // same word or a reconjugation sharing the stem prefix
        if (b.text == tok.text ||
            (b.text.size() >= 3 && tok.text.size() >= 3 &&
             b.text.substr(0, 3) == tok.text.substr(0, 3))) {
          ok = true;
          break;
        }
      }
      CHECK_MESSAGE(ok, "unexpected new word '" << tok.text << "' in: "
                                                << r.rewritten);
    }
  }
}
