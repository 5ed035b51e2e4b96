#include <catch2/catch_amalgamated.hpp>

#include "geosynth/catalog_default.hpp"
#include "geosynth/generate.hpp"
#include "geosynth/reasoner.hpp"

using namespace geosynth;

namespace {

Catalog default_catalog() { return parse_catalog(default_catalog_json(), "bundled"); }

struct Pipeline {
  Catalog catalog = default_catalog();
  PromptAssets assets = load_prompt_assets();
  MockCompletionClient client;
  RequestLog log;

  Pipeline() { client.set_log(&log); }

  FigureBundle figure(std::uint64_t index, const std::string& kind = "",
                      std::uint64_t seed = 101) {
    GenerationConfig cfg;
    cfg.seed = seed;
    if (!kind.empty()) cfg.substrate_distribution = {{kind, 1.0}};
    return generate_figure(cfg, catalog, index);
  }

  std::vector<const Theorem*> theorems_of(const FigureBundle& fig) {
    std::vector<const Theorem*> out;
    for (const auto& id : fig.theorem_ids) out.push_back(catalog.theorem_by_id(id));
    return out;
  }
};

}  // namespace

TEST_CASE("select_prompt_context ranking") {
  PromptAssets assets = load_prompt_assets();
  SECTION("exactly three matching templates come back in id order") {
    std::set<std::string> tags = {"Tangent"};
    PromptTemplatePool pool;
    for (const char* id : {"t.b", "t.a", "t.c"})
      pool.templates.push_back({id, {"Tangent"}, "p", "r"});
    pool.templates.push_back({"t.z", {"Rhombus"}, "p", "r"});
    auto ctx = select_prompt_context(pool, tags);
    REQUIRE(ctx.templates.size() == 3);
    CHECK(ctx.templates[0]->id == "t.a");
    CHECK(ctx.templates[1]->id == "t.b");
    CHECK(ctx.templates[2]->id == "t.c");
  }
  SECTION("top four of many matches, ranked by overlap then id") {
    PromptTemplatePool pool;
    pool.templates.push_back({"t.two_a", {"Circle", "Tangent"}, "p", "r"});
    pool.templates.push_back({"t.two_b", {"Circle", "Tangent", "Rhombus"}, "p", "r"});
    pool.templates.push_back({"t.one_a", {"Circle"}, "p", "r"});
    pool.templates.push_back({"t.one_b", {"Tangent"}, "p", "r"});
    pool.templates.push_back({"t.one_c", {"Tangent", "Square"}, "p", "r"});
    for (int i = 0; i < 5; ++i)
      pool.templates.push_back({"t.zz" + std::to_string(i), {"Square"}, "p", "r"});
    auto ctx = select_prompt_context(pool, {"Circle", "Tangent"});
    REQUIRE(ctx.templates.size() == 4);
    CHECK(ctx.templates[0]->id == "t.two_a");
    CHECK(ctx.templates[1]->id == "t.two_b");
    CHECK(ctx.templates[2]->id == "t.one_a");
    CHECK(ctx.templates[3]->id == "t.one_b");
  }
  SECTION("circle-theorem figures prefer circle-tagged knowledge") {
    auto ctx = select_prompt_context(assets.pool, {"Circle", "Inscribed Angle"});
    REQUIRE_FALSE(ctx.knowledge.empty());
    for (const auto* k : ctx.knowledge) {
      bool tagged = false;
      for (const auto& t : k->tags)
        if (t == "Circle" || t == "Inscribed Angle") tagged = true;
      CHECK(tagged);
    }
  }
  SECTION("small pool returns fewer items") {
    PromptTemplatePool pool;
    pool.templates.push_back({"only", {"Circle"}, "p", "r"});
    auto ctx = select_prompt_context(pool, {"Circle"});
    CHECK(ctx.templates.size() == 1);
  }
}

TEST_CASE("fixture-table mock reproduces the isosceles example") {
  Pipeline p;
  FigureBundle fig = p.figure(0, "isosceles-triangle");
  auto theorems = p.theorems_of(fig);
  auto tags = figure_query_tags(p.catalog, fig.theorem_ids);

  PromptContext ctx = select_prompt_context(p.assets.pool, tags);
  std::string first_prompt =
      build_reasoning_prompt(p.assets, ctx, theorems, {}, fig.description.patches[0]);
  const auto& cyc = fig.scene.substrates()[0].cycle;  // apex, base1, base2
  std::string b = cyc[1], c = cyc[2];
  p.client.add_fixture(first_prompt,
                       "```step\nSTATEMENT: ∠" + cyc[0] + b + c + " = ∠" + b + c + cyc[0] +
                           " by the base-angle theorem.\nTHEOREMS: isos.base_angles\n"
                           "CLAIMS: none\n```");

  auto chain = patch_reasoning_fusion(fig.description, theorems, p.client, p.assets, tags,
                                      "fig0");
  REQUIRE(chain.size() == fig.description.patches.size());
  CHECK(chain[0].statement.find("base-angle") != std::string::npos);
  CHECK(chain[0].theorem_ids == std::vector<std::string>{"isos.base_angles"});
  CHECK(validate_step(chain[0], fig.ledger, fig.scene, p.catalog).ok);
}

TEST_CASE("fusion chains prior steps into later prompts") {
  Pipeline p;
  FigureBundle fig = p.figure(1);
  auto theorems = p.theorems_of(fig);
  auto tags = figure_query_tags(p.catalog, fig.theorem_ids);
  auto chain = patch_reasoning_fusion(fig.description, theorems, p.client, p.assets, tags,
                                      "fig1");
  REQUIRE(chain.size() >= 2);

  auto entries = p.log.snapshot();
  REQUIRE(entries[0].id == "fig1:reason:0");
  CHECK(entries[0].prompt.find("PRIOR STEPS:\n(none)") != std::string::npos);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const auto& prompt = entries[i].prompt;
    for (std::size_t j = 0; j < i; ++j) {
      INFO("prompt " << i << " should contain statement " << j);
      CHECK(prompt.find(chain[j].statement) != std::string::npos);
    }
  }
}

TEST_CASE("prompt assembly contract: examples and templates") {
  Pipeline p;
  FigureBundle fig = p.figure(2);
  auto theorems = p.theorems_of(fig);
  auto tags = figure_query_tags(p.catalog, fig.theorem_ids);
  PromptContext ctx = select_prompt_context(p.assets.pool, tags);
  std::string prompt =
      build_reasoning_prompt(p.assets, ctx, theorems, {"prior one"}, fig.description.patches[0]);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = prompt.find(needle, pos)) != std::string::npos) {
      ++n;
      pos += needle.size();
    }
    return n;
  };
  CHECK(count("EXAMPLE ") == 3);
  CHECK(count("TEMPLATE tpl.") >= 3);
  CHECK(count("TEMPLATE tpl.") <= 4);
  CHECK(prompt.find("STEP 1: prior one") != std::string::npos);
}

TEST_CASE("malformed responses get one re-ask, then mark the step malformed") {
  Pipeline p;
  FigureBundle fig = p.figure(3);
  auto theorems = p.theorems_of(fig);
  auto tags = figure_query_tags(p.catalog, fig.theorem_ids);
  PromptContext ctx = select_prompt_context(p.assets.pool, tags);
  std::string first_prompt =
      build_reasoning_prompt(p.assets, ctx, theorems, {}, fig.description.patches[0]);
  p.client.add_fixture(first_prompt, "not a structured response");
  std::string retry_prompt = first_prompt +
      "\n\nREMINDER: respond with exactly one fenced ```step block in the "
      "documented format.";
  p.client.add_fixture(retry_prompt, "still not structured");

  auto chain = patch_reasoning_fusion(fig.description, theorems, p.client, p.assets, tags,
                                      "fig3");
  REQUIRE_FALSE(chain.empty());
  CHECK(chain[0].malformed);
  CHECK(chain.size() == 1);
  bool saw_retry = false;
  for (const auto& e : p.log.snapshot())
    if (e.id == "fig3:reason:0:retry") saw_retry = true;
  CHECK(saw_retry);
}

TEST_CASE("validate_step checks values, elements and theorem preconditions") {
  Pipeline p;
  FigureBundle fig = p.figure(4, "isosceles-triangle");
  const auto& cyc = fig.scene.substrates()[0].cycle;

  SECTION("exact claim passes") {
    ReasoningStep step;
    step.statement = "base length";
    NumericClaim claim;
    claim.kind = NumericClaim::Kind::length;
    claim.ids = {cyc[1], cyc[2]};
    claim.value = *fig.ledger.lookup_length(cyc[1], cyc[2]);
    step.claims = {claim};
    CHECK(validate_step(step, fig.ledger, fig.scene, p.catalog).ok);
  }
  SECTION("claiming a right angle on a non-right triangle fails the metric check") {
    double apex = *fig.ledger.lookup_angle(cyc[1], cyc[0], cyc[2]);
    if (std::abs(apex - 90.0) > 1.0) {
      ReasoningStep step;
      step.statement = "wrong angle";
      NumericClaim claim;
      claim.kind = NumericClaim::Kind::angle;
      claim.ids = {cyc[1], cyc[0], cyc[2]};
      claim.value = 90.0;
      step.claims = {claim};
      auto report = validate_step(step, fig.ledger, fig.scene, p.catalog);
      CHECK_FALSE(report.ok);
      CHECK(report.reason == RejectReason::metric_discrepancy);
    }
  }
  SECTION("citing a circle theorem in a circle-free figure fails the precondition check") {
    ReasoningStep step;
    step.statement = "misuse";
    step.theorem_ids = {"inscribed.half_central"};
    auto report = validate_step(step, fig.ledger, fig.scene, p.catalog);
    CHECK_FALSE(report.ok);
    CHECK(report.reason == RejectReason::theorem_violation);
  }
  SECTION("referencing a missing element fails") {
    ReasoningStep step;
    step.statement = "ghost";
    NumericClaim claim;
    claim.kind = NumericClaim::Kind::length;
    claim.ids = {"X9", "Y9"};
    claim.value = 5;
    step.claims = {claim};
    auto report = validate_step(step, fig.ledger, fig.scene, p.catalog);
    CHECK_FALSE(report.ok);
    CHECK(report.reason == RejectReason::diagram_text_mismatch);
  }
}

TEST_CASE("reverse generation emits questions only for validated steps") {
  Pipeline p;
  FigureBundle fig = p.figure(5);
  auto theorems = p.theorems_of(fig);
  auto tags = figure_query_tags(p.catalog, fig.theorem_ids);
  auto chain = patch_reasoning_fusion(fig.description, theorems, p.client, p.assets, tags,
                                      "fig5");
  REQUIRE_FALSE(chain.empty());

  SECTION("valid chain: one candidate per valid step, prefix supporting chains") {
    auto pairs = reverse_question_generation(chain, fig.ledger, fig.scene, p.catalog,
                                             p.client, p.assets, tags, "fig5",
                                             fig.description.joined());
    REQUIRE_FALSE(pairs.empty());
    for (const auto& pair : pairs) {
      CHECK(pair.status == QAStatus::candidate);
      REQUIRE_FALSE(pair.chain.empty());
      for (std::size_t i = 0; i < pair.chain.size(); ++i)
        CHECK(pair.chain[i] == static_cast<int>(i));
      CHECK_FALSE(pair.question.empty());
    }
  }
  SECTION("a step contradicting the ledger yields no question") {
    auto corrupted = chain;
    NumericClaim bogus;
    bogus.kind = NumericClaim::Kind::length;
    bogus.ids = {fig.scene.vertices()[0].first, fig.scene.vertices()[1].first};
    bogus.value = 1e6;
    corrupted[0].claims.push_back(bogus);
    auto pairs = reverse_question_generation(corrupted, fig.ledger, fig.scene, p.catalog,
                                             p.client, p.assets, tags, "fig5b",
                                             fig.description.joined());
    for (const auto& pair : pairs) CHECK(pair.chain.size() != 1);
  }
}

TEST_CASE("filter_qa forward pass and taxonomy") {
  Pipeline p;
  FigureBundle fig = p.figure(6);
  auto theorems = p.theorems_of(fig);
  auto tags = figure_query_tags(p.catalog, fig.theorem_ids);
  auto chain = patch_reasoning_fusion(fig.description, theorems, p.client, p.assets, tags,
                                      "fig6");
  auto pairs = reverse_question_generation(chain, fig.ledger, fig.scene, p.catalog,
                                           p.client, p.assets, tags, "fig6",
                                           fig.description.joined());
  REQUIRE_FALSE(pairs.empty());

  SECTION("clean pairs are accepted") {
    auto copy = pairs;
    auto outcome = filter_qa(copy, chain, fig.ledger, fig.scene, p.catalog, p.client,
                             p.assets, "fig6", fig.description.joined());
    CHECK(outcome.complete);
    for (const auto& pair : copy) {
      CHECK(pair.status == QAStatus::accepted);
      CHECK(pair.reason == RejectReason::none);
    }
  }
  SECTION("answer off by 10% is rejected as metric discrepancy") {
    auto copy = pairs;
    bool planted = false;
    for (auto& pair : copy)
      if (!pair.claims.empty()) {
        pair.claims[0].value *= 1.10;
        planted = true;
        break;
      }
    if (planted) {
      filter_qa(copy, chain, fig.ledger, fig.scene, p.catalog, p.client, p.assets, "fig6",
                fig.description.joined());
      bool saw = false;
      for (const auto& pair : copy)
        if (pair.status == QAStatus::rejected &&
            pair.reason == RejectReason::metric_discrepancy)
          saw = true;
      CHECK(saw);
    }
  }
  SECTION("reference to a nonexistent segment is a diagram-text mismatch") {
    auto copy = pairs;
    NumericClaim ghost;
    ghost.kind = NumericClaim::Kind::length;
    ghost.ids = {"X9", "Y9"};
    ghost.value = 4;
    copy[0].claims.push_back(ghost);
    filter_qa(copy, chain, fig.ledger, fig.scene, p.catalog, p.client, p.assets, "fig6",
              fig.description.joined());
    CHECK(copy[0].status == QAStatus::rejected);
    CHECK(copy[0].reason == RejectReason::diagram_text_mismatch);
  }
  SECTION("inapplicable cited theorem is a theorem violation") {
    auto copy = pairs;
    bool has_circle = false;
    for (const auto& prim : fig.scene.primitives())
      if (prim.kind == PrimitiveKind::circle) has_circle = true;
    if (!has_circle) {
      copy[0].theorem_ids.push_back("inscribed.half_central");
      filter_qa(copy, chain, fig.ledger, fig.scene, p.catalog, p.client, p.assets, "fig6",
                fig.description.joined());
      CHECK(copy[0].status == QAStatus::rejected);
      CHECK(copy[0].reason == RejectReason::theorem_violation);
    }
  }
  SECTION("underdetermined question is rejected by the reverse judge") {
    auto copy = pairs;
    copy[0].question = "What is the length of the segment in some configuration?";
    filter_qa(copy, chain, fig.ledger, fig.scene, p.catalog, p.client, p.assets, "fig6",
              fig.description.joined());
    CHECK(copy[0].status == QAStatus::rejected);
    CHECK(copy[0].reason == RejectReason::answerability_ambiguity);
  }
  SECTION("judge failure leaves the pair candidate and flags the corpus") {
    auto copy = pairs;
    copy[0].question = "Please <<fail>> this judgement: what is the relationship?";
    p.client.fail_when_contains("<<fail>>");
    auto outcome = filter_qa(copy, chain, fig.ledger, fig.scene, p.catalog, p.client,
                             p.assets, "fig6", fig.description.joined());
    CHECK_FALSE(outcome.complete);
    CHECK(copy[0].status == QAStatus::candidate);
  }
}

TEST_CASE("mock pipeline produces accepted pairs across many figures", "[corpus]") {
  Pipeline p;
  int accepted = 0, figures = 0, rejected = 0;
  for (std::uint64_t i = 0; i < 40; ++i) {
    FigureBundle fig = p.figure(i, "", 777);
    auto theorems = p.theorems_of(fig);
    auto tags = figure_query_tags(p.catalog, fig.theorem_ids);
    auto chain = patch_reasoning_fusion(fig.description, theorems, p.client, p.assets,
                                        tags, "f" + std::to_string(i));
    if (!chain.empty() && chain.back().malformed) continue;
    auto pairs = reverse_question_generation(chain, fig.ledger, fig.scene, p.catalog,
                                             p.client, p.assets, tags,
                                             "f" + std::to_string(i),
                                             fig.description.joined());
    filter_qa(pairs, chain, fig.ledger, fig.scene, p.catalog, p.client, p.assets,
              "f" + std::to_string(i), fig.description.joined());
    ++figures;
    for (const auto& pair : pairs) {
      if (pair.status == QAStatus::accepted) ++accepted;
      if (pair.status == QAStatus::rejected) ++rejected;
      if (pair.status == QAStatus::accepted) {
        CHECK(validate_claims(pair.claims, fig.ledger, fig.scene).ok);
        CHECK(pair.reason == RejectReason::none);
      }
      if (pair.status == QAStatus::rejected) CHECK(pair.reason != RejectReason::none);
    }
  }
  CHECK(figures == 40);
  CHECK(accepted > 40);
}
