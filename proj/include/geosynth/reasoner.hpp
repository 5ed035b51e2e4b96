#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "geosynth/client.hpp"
#include "geosynth/prompts.hpp"

namespace geosynth {

// ---------------------------------------------------------------------------
// Claims and reasoning steps
// ---------------------------------------------------------------------------

struct NumericClaim {
  enum class Kind { length, angle, area };
  Kind kind{Kind::length};
  std::vector<std::string> ids;  // 2 labels (length), 3 (angle), >=3 (area)
  double value{0};

  std::string element_key() const {
    switch (kind) {
      case Kind::length: return length_key(ids[0], ids[1]);
      case Kind::angle: return angle_key(ids[0], ids[1], ids[2]);
      case Kind::area: return area_key(ids);
    }
    return "?";
  }

  std::string render() const {
    const char* name = kind == Kind::length ? "length" : kind == Kind::angle ? "angle" : "area";
    std::string out = std::string(name) + "(";
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + ids[i];
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", value);
    return out + ") = " + buf;
  }
};

struct ReasoningStep {
  int index{0};  // matches the patch index
  std::string statement;
  std::vector<std::string> theorem_ids;
  std::vector<NumericClaim> claims;
  bool malformed{false};
  std::string raw_response;

  std::string block() const {
    std::string out = "STATEMENT: " + statement + "\nCLAIMS: ";
    if (claims.empty()) {
      out += "none";
    } else {
      for (std::size_t i = 0; i < claims.size(); ++i)
        out += (i ? "; " : "") + claims[i].render();
    }
    return out;
  }
};

enum class QAStatus { candidate, accepted, rejected };

enum class RejectReason {
  none,
  theorem_violation,
  metric_discrepancy,
  diagram_text_mismatch,
  answerability_ambiguity,
};

inline const char* reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::none: return "none";
    case RejectReason::theorem_violation: return "theorem-violation";
    case RejectReason::metric_discrepancy: return "metric-discrepancy";
    case RejectReason::diagram_text_mismatch: return "diagram-text-mismatch";
    case RejectReason::answerability_ambiguity: return "answerability-ambiguity";
  }
  return "?";
}

struct QAPair {
  std::string question;
  std::string answer;
  std::string qtype;  // side-length | angle | area | relationship
  std::vector<int> chain;  // supporting step indices (prefix)
  std::vector<NumericClaim> claims;
  std::vector<std::string> theorem_ids;
  QAStatus status{QAStatus::candidate};
  RejectReason reason{RejectReason::none};
};

// ---------------------------------------------------------------------------
// Response parsing: the prompt instructs the model to answer in a fenced,
// line-structured block; the parser accepts only that shape.
// ---------------------------------------------------------------------------

namespace reasoner_detail {

inline std::optional<std::string> fenced_block(const std::string& text,
                                               const std::string& tag) {
  std::string open = "```" + tag;
  auto pos = text.find(open);
  if (pos == std::string::npos) return std::nullopt;
  pos += open.size();
  if (pos < text.size() && text[pos] == '\n') ++pos;
  auto end = text.find("```", pos);
  if (end == std::string::npos) return std::nullopt;
  return text.substr(pos, end - pos);
}

inline std::optional<std::string> labeled_line(const std::string& block,
                                               const std::string& label) {
  auto pos = block.find(label + ":");
  if (pos == std::string::npos) return std::nullopt;
  pos += label.size() + 1;
  auto end = block.find('\n', pos);
  std::string line = block.substr(pos, end == std::string::npos ? end : end - pos);
  while (!line.empty() && line.front() == ' ') line.erase(line.begin());
  while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
  return line;
}

inline std::optional<NumericClaim> parse_claim(const std::string& text) {
  auto open = text.find('(');
  auto close = text.find(')', open);
  auto eq = text.find('=', close);
  if (open == std::string::npos || close == std::string::npos || eq == std::string::npos)
    return std::nullopt;
  std::string name = text.substr(0, open);
  while (!name.empty() && name.front() == ' ') name.erase(name.begin());
  NumericClaim claim;
  if (name == "length") claim.kind = NumericClaim::Kind::length;
  else if (name == "angle") claim.kind = NumericClaim::Kind::angle;
  else if (name == "area") claim.kind = NumericClaim::Kind::area;
  else return std::nullopt;
  std::string inner = text.substr(open + 1, close - open - 1);
  std::string cur;
  for (char c : inner) {
    if (c == ',') {
      if (cur.empty()) return std::nullopt;
      claim.ids.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) claim.ids.push_back(cur);
  std::size_t need = claim.kind == NumericClaim::Kind::length  ? 2
                     : claim.kind == NumericClaim::Kind::angle ? 3
                                                               : 3;
  if (claim.ids.size() < need) return std::nullopt;
  if (claim.kind != NumericClaim::Kind::area && claim.ids.size() != need)
    return std::nullopt;
  try {
    claim.value = std::stod(text.substr(eq + 1));
  } catch (...) {
    return std::nullopt;
  }
  return claim;
}

inline std::optional<ReasoningStep> parse_step_response(const std::string& text) {
  auto block = fenced_block(text, "step");
  if (!block) return std::nullopt;
  auto statement = labeled_line(*block, "STATEMENT");
  auto theorems = labeled_line(*block, "THEOREMS");
  auto claims = labeled_line(*block, "CLAIMS");
  if (!statement || !theorems || !claims || statement->empty()) return std::nullopt;
  ReasoningStep step;
  step.statement = *statement;
  step.raw_response = text;
  if (*theorems != "none" && !theorems->empty()) {
    std::string cur;
    for (char c : *theorems + ",") {
      if (c == ',') {
        while (!cur.empty() && cur.front() == ' ') cur.erase(cur.begin());
        while (!cur.empty() && cur.back() == ' ') cur.pop_back();
        if (!cur.empty()) step.theorem_ids.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
  }
  if (*claims != "none" && !claims->empty()) {
    std::string cur;
    for (char c : *claims + ";") {
      if (c == ';') {
        if (!cur.empty()) {
          auto claim = parse_claim(cur);
          if (!claim) return std::nullopt;
          step.claims.push_back(*claim);
        }
        cur.clear();
      } else {
        cur += c;
      }
    }
  }
  return step;
}

}  // namespace reasoner_detail

// ---------------------------------------------------------------------------
// Deterministic step validation against the ledger (no model involved).
// Tolerance max(0.5% relative, 0.05 absolute) absorbs display rounding.
// ---------------------------------------------------------------------------

struct ValidationReport {
  bool ok{true};
  RejectReason reason{RejectReason::none};
  std::string detail;
  double residual{0};
};

// Lengths and areas: max(0.5% relative, 0.05 absolute), absorbing the one-
// decimal display rounding. Angles display as whole degrees, so their
// absolute floor is 0.5°.
inline bool claim_value_matches(double claimed, double exact,
                                NumericClaim::Kind kind = NumericClaim::Kind::length) {
  double floor_abs = kind == NumericClaim::Kind::angle ? 0.5 : 0.05;
  double tol = std::max(0.005 * std::abs(exact), floor_abs);
  return std::abs(claimed - exact) <= tol;
}

inline ValidationReport validate_claims(const std::vector<NumericClaim>& claims,
                                        const PropertyLedger& ledger, const Scene& scene) {
  for (const auto& claim : claims) {
    for (const auto& id : claim.ids) {
      if (!scene.has_vertex(id))
        return {false, RejectReason::diagram_text_mismatch,
                "element " + id + " is not in the figure", 0};
    }
    std::optional<double> exact;
    switch (claim.kind) {
      case NumericClaim::Kind::length: {
        auto it = ledger.lengths.find(claim.element_key());
        if (it != ledger.lengths.end()) exact = it->second;
        else
          // Any two registered vertices define a measurable distance.
          exact = distance(scene.at(claim.ids[0]), scene.at(claim.ids[1]));
        break;
      }
      case NumericClaim::Kind::angle: {
        auto it = ledger.angles.find(claim.element_key());
        if (it != ledger.angles.end()) exact = it->second;
        else
          exact = angle_at_deg(scene.at(claim.ids[1]), scene.at(claim.ids[0]),
                               scene.at(claim.ids[2]));
        break;
      }
      case NumericClaim::Kind::area: {
        auto it = ledger.areas.find(claim.element_key());
        if (it != ledger.areas.end()) {
          exact = it->second;
        } else {
          std::vector<Point> pts;
          for (const auto& id : claim.ids) pts.push_back(scene.at(id));
          exact = std::abs(polygon_signed_area(pts));
        }
        break;
      }
    }
    if (!exact)
      return {false, RejectReason::diagram_text_mismatch,
              "no ledger entry for " + claim.element_key(), 0};
    if (!claim_value_matches(claim.value, *exact, claim.kind))
      return {false, RejectReason::metric_discrepancy,
              claim.render() + " but the exact value is " + std::to_string(*exact),
              std::abs(claim.value - *exact)};
  }
  return {};
}

// (a) numeric claims match the ledger, (b) referenced elements exist,
// (c) cited theorems have satisfiable preconditions on this scene.
inline ValidationReport validate_step(const ReasoningStep& step,
                                      const PropertyLedger& ledger, const Scene& scene,
                                      const Catalog& catalog) {
  if (step.malformed)
    return {false, RejectReason::diagram_text_mismatch, "malformed step response", 0};
  ValidationReport claims_report = validate_claims(step.claims, ledger, scene);
  if (!claims_report.ok) return claims_report;
  for (const auto& id : step.theorem_ids) {
    const Theorem* t = catalog.theorem_by_id(id);
    if (!t)
      return {false, RejectReason::theorem_violation, "unknown theorem " + id, 0};
    if (!theorem_applicable(*t, scene, &ledger.relations))
      return {false, RejectReason::theorem_violation,
              "theorem " + id + " does not apply to this figure", 0};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Patch reasoning fusion: one completion per patch, each prompt carrying all
// prior steps, the applicable theorem set, and the relevance-ranked context.
// ---------------------------------------------------------------------------

struct ReasonerSettings {
  int malformed_retries{1};  // one re-ask with a format reminder, then reject
};

inline std::vector<ReasoningStep> patch_reasoning_fusion(
    const Description& description, const std::vector<const Theorem*>& theorems,
    CompletionClient& client, const PromptAssets& assets,
    const std::set<std::string>& query_tags, const std::string& figure_id,
    const ReasonerSettings& settings = {}) {
  if (description.patches.empty())
    throw Error(ErrorCode::invalid_config, "description has no patches");
  PromptContext ctx = select_prompt_context(assets.pool, query_tags);
  std::vector<ReasoningStep> chain;
  std::vector<std::string> prior;
  for (std::size_t i = 0; i < description.patches.size(); ++i) {
    std::string prompt =
        build_reasoning_prompt(assets, ctx, theorems, prior, description.patches[i]);
    std::string id = figure_id + ":reason:" + std::to_string(i);
    ReasoningStep step;
    step.index = static_cast<int>(i);
    bool parsed = false;
    for (int attempt = 0; attempt <= settings.malformed_retries; ++attempt) {
      std::string ask = prompt;
      if (attempt > 0)
        ask += "\n\nREMINDER: respond with exactly one fenced ```step block in the "
               "documented format.";
      auto result = client.complete(attempt == 0 ? id : id + ":retry", ask);
      if (!result.ok)
        throw Error(ErrorCode::client_error,
                    "completion failed for request " + id + ": " + result.error);
      if (auto got = reasoner_detail::parse_step_response(result.text)) {
        step = *got;
        step.index = static_cast<int>(i);
        parsed = true;
        break;
      }
    }
    if (!parsed) step.malformed = true;
    chain.push_back(step);
    prior.push_back(step.malformed ? "(malformed step)" : step.statement);
    if (step.malformed) break;  // the figure routes to rejection
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Reverse question generation: a question is produced only for steps the
// deterministic validator accepts; otherwise the step yields nothing.
// ---------------------------------------------------------------------------

inline std::vector<QAPair> reverse_question_generation(
    const std::vector<ReasoningStep>& chain, const PropertyLedger& ledger,
    const Scene& scene, const Catalog& catalog, CompletionClient& client,
    const PromptAssets& assets, const std::set<std::string>& query_tags,
    const std::string& figure_id, const std::string& conditions) {
  if (chain.empty()) throw Error(ErrorCode::invalid_config, "empty reasoning chain");
  PromptContext ctx = select_prompt_context(assets.pool, query_tags);
  std::vector<QAPair> out;
  for (const auto& step : chain) {
    if (!validate_step(step, ledger, scene, catalog).ok) continue;
    std::string prompt = build_question_prompt(assets, ctx, step.block(), conditions);
    std::string id = figure_id + ":question:" + std::to_string(step.index);
    auto result = client.complete(id, prompt);
    if (!result.ok)
      throw Error(ErrorCode::client_error,
                  "completion failed for request " + id + ": " + result.error);
    auto block = reasoner_detail::fenced_block(result.text, "question");
    if (!block) continue;
    auto question = reasoner_detail::labeled_line(*block, "QUESTION");
    auto qtype = reasoner_detail::labeled_line(*block, "TYPE");
    if (!question || question->empty()) continue;
    QAPair pair;
    pair.question = *question;
    pair.answer = step.statement;
    pair.qtype = qtype.value_or("relationship");
    for (int j = 0; j <= step.index; ++j) pair.chain.push_back(j);
    pair.claims = step.claims;
    pair.theorem_ids = step.theorem_ids;
    out.push_back(std::move(pair));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Error filtering: deterministic forward pass against the ledger, then one
// reverse-judgement completion per surviving pair. Client failures leave the
// pair candidate so the corpus can be flagged incomplete, never silently
// accepted.
// ---------------------------------------------------------------------------

struct FilterOutcome {
  bool complete{true};  // false when any reverse judgement failed
};

inline FilterOutcome filter_qa(std::vector<QAPair>& pairs,
                               const std::vector<ReasoningStep>& chain,
                               const PropertyLedger& ledger, const Scene& scene,
                               const Catalog& catalog, CompletionClient& client,
                               const PromptAssets& assets, const std::string& figure_id,
                               const std::string& conditions) {
  FilterOutcome outcome;
  int idx = 0;
  for (auto& pair : pairs) {
    if (pair.status != QAStatus::candidate) {
      ++idx;
      continue;
    }
    // Forward: supporting steps and the answer's own claims.
    ValidationReport report;
    for (int step_index : pair.chain) {
      if (step_index < 0 || step_index >= static_cast<int>(chain.size())) continue;
      report = validate_step(chain[static_cast<std::size_t>(step_index)], ledger, scene,
                             catalog);
      if (!report.ok) break;
    }
    if (report.ok) report = validate_claims(pair.claims, ledger, scene);
    if (report.ok) {
      for (const auto& id : pair.theorem_ids) {
        const Theorem* t = catalog.theorem_by_id(id);
        if (!t || !theorem_applicable(*t, scene, &ledger.relations)) {
          report = {false, RejectReason::theorem_violation,
                    "theorem " + id + " does not apply", 0};
          break;
        }
      }
    }
    if (!report.ok) {
      pair.status = QAStatus::rejected;
      pair.reason = report.reason;
      ++idx;
      continue;
    }
    // Reverse: one completion per surviving pair.
    std::string prompt = build_judge_prompt(assets, pair.question, conditions, pair.answer);
    auto result =
        client.complete(figure_id + ":judge:" + std::to_string(idx), prompt);
    if (!result.ok) {
      outcome.complete = false;  // stays candidate
      ++idx;
      continue;
    }
    auto block = reasoner_detail::fenced_block(result.text, "verdict");
    auto verdict = block ? reasoner_detail::labeled_line(*block, "ANSWERABLE")
                         : std::nullopt;
    if (!verdict) {
      outcome.complete = false;
      ++idx;
      continue;
    }
    if (*verdict == "YES") {
      pair.status = QAStatus::accepted;
      pair.reason = RejectReason::none;
    } else {
      pair.status = QAStatus::rejected;
      pair.reason = RejectReason::answerability_ambiguity;
    }
    ++idx;
  }
  return outcome;
}

}  // namespace geosynth
