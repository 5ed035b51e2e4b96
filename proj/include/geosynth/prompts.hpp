#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "geosynth/catalog.hpp"
#include "geosynth/engine.hpp"
#include "geosynth/prompts_default.hpp"

namespace geosynth {

struct PoolTemplate {
  std::string id;
  std::vector<std::string> tags;
  std::string problem;
  std::string reasoning;
};

struct KnowledgeSnippet {
  std::string id;
  std::vector<std::string> tags;
  std::string text;
};

struct PromptTemplatePool {
  std::vector<PoolTemplate> templates;
  std::vector<KnowledgeSnippet> knowledge;
  std::map<std::string, std::vector<std::string>> contextual_examples;
};

// Skeleton files plus the parsed pool. Loadable from a directory of asset
// files; the bundled defaults are embedded.
struct PromptAssets {
  std::map<std::string, std::string> files;
  PromptTemplatePool pool;

  const std::string& skeleton(const std::string& name) const {
    auto it = files.find(name);
    if (it == files.end())
      throw Error(ErrorCode::io_error, "missing prompt asset " + name);
    return it->second;
  }
};

namespace prompt_detail {

inline PromptTemplatePool parse_pool(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, origin + ": " + e.what());
  }
  PromptTemplatePool pool;
  for (const auto& t : j.at("templates")) {
    PoolTemplate pt;
    pt.id = t.at("id").get<std::string>();
    for (const auto& tag : t.at("tags")) pt.tags.push_back(tag.get<std::string>());
    pt.problem = t.at("problem").get<std::string>();
    pt.reasoning = t.at("reasoning").get<std::string>();
    if (pt.tags.empty())
      throw Error(ErrorCode::schema_violation, origin + ": template " + pt.id + " has no tags");
    pool.templates.push_back(std::move(pt));
  }
  for (const auto& k : j.at("knowledge")) {
    KnowledgeSnippet ks;
    ks.id = k.at("id").get<std::string>();
    for (const auto& tag : k.at("tags")) ks.tags.push_back(tag.get<std::string>());
    ks.text = k.at("text").get<std::string>();
    if (ks.tags.empty())
      throw Error(ErrorCode::schema_violation, origin + ": snippet " + ks.id + " has no tags");
    pool.knowledge.push_back(std::move(ks));
  }
  for (const auto& [kind, arr] : j.at("examples").items()) {
    std::vector<std::string> ex;
    for (const auto& e : arr) ex.push_back(e.get<std::string>());
    pool.contextual_examples[kind] = std::move(ex);
  }
  return pool;
}

}  // namespace prompt_detail

inline PromptAssets load_prompt_assets(const std::string& dir = "") {
  PromptAssets assets;
  if (dir.empty()) {
    assets.files = default_prompt_assets();
  } else {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
      throw Error(ErrorCode::io_error, "prompt asset directory not found: " + dir);
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (!entry.is_regular_file()) continue;
      std::ifstream in(entry.path(), std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      assets.files[entry.path().filename().string()] = ss.str();
    }
  }
  auto it = assets.files.find("pool.json");
  if (it == assets.files.end())
    throw Error(ErrorCode::io_error, "prompt assets have no pool.json");
  assets.pool = prompt_detail::parse_pool(it->second, dir.empty() ? "bundled" : dir);
  return assets;
}

// ---------------------------------------------------------------------------
// Relevance selection: 3-4 templates and up to 3 knowledge snippets, ranked
// by tag overlap with the figure's theorem families, ties broken by id.
// ---------------------------------------------------------------------------

struct PromptContext {
  std::vector<const PoolTemplate*> templates;
  std::vector<const KnowledgeSnippet*> knowledge;
};

inline PromptContext select_prompt_context(const PromptTemplatePool& pool,
                                           const std::set<std::string>& query_tags) {
  PromptContext out;
  auto overlap = [&](const std::vector<std::string>& tags) {
    int n = 0;
    for (const auto& t : tags)
      if (query_tags.count(t)) ++n;
    return n;
  };

  std::vector<std::pair<int, const PoolTemplate*>> ranked;
  for (const auto& t : pool.templates) ranked.emplace_back(overlap(t.tags), &t);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second->id < b.second->id;
  });
  std::size_t matching = 0;
  for (const auto& [n, t] : ranked)
    if (n > 0) ++matching;
  // Top 4 among matching templates; with exactly 3 matches take those 3; with
  // fewer, pad by id order up to 3 when the pool allows.
  std::size_t want = matching >= 4 ? 4 : std::max<std::size_t>(matching, 3);
  want = std::min(want, ranked.size());
  for (std::size_t i = 0; i < want; ++i) out.templates.push_back(ranked[i].second);

  std::vector<std::pair<int, const KnowledgeSnippet*>> kranked;
  for (const auto& k : pool.knowledge) {
    int n = overlap(k.tags);
    if (n > 0) kranked.emplace_back(n, &k);
  }
  std::sort(kranked.begin(), kranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second->id < b.second->id;
  });
  for (std::size_t i = 0; i < kranked.size() && i < 3; ++i)
    out.knowledge.push_back(kranked[i].second);
  return out;
}

// ---------------------------------------------------------------------------
// Prompt assembly. Deterministic given (assets, theorems, patch content).
// Placeholder syntax in skeletons: {EXAMPLES}, {TEMPLATES}, {KNOWLEDGE},
// {THEOREMS}, {PRIOR_STEPS}, {PATCH}, {STEP}, {QUESTION}, {ANSWER},
// {ANALYSIS}, {COT}.
// ---------------------------------------------------------------------------

namespace prompt_detail {

inline std::string fill(std::string skeleton,
                        const std::map<std::string, std::string>& slots) {
  for (const auto& [key, value] : slots) {
    std::string needle = "{" + key + "}";
    std::size_t pos;
    while ((pos = skeleton.find(needle)) != std::string::npos)
      skeleton.replace(pos, needle.size(), value);
  }
  return skeleton;
}

inline std::string render_examples(const PromptAssets& assets, const std::string& kind) {
  auto it = assets.pool.contextual_examples.find(kind);
  std::string out;
  int n = 0;
  if (it != assets.pool.contextual_examples.end()) {
    for (const auto& e : it->second) {
      if (n == 3) break;  // exactly three contextual examples per prompt
      out += "EXAMPLE " + std::to_string(++n) + ":\n" + e + "\n\n";
    }
  }
  while (n < 3) out += "EXAMPLE " + std::to_string(++n) + ":\n(none)\n\n";
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

inline std::string render_templates(const PromptContext& ctx) {
  std::string out;
  for (const auto* t : ctx.templates) {
    out += "TEMPLATE " + t->id + " [";
    for (std::size_t i = 0; i < t->tags.size(); ++i) out += (i ? ", " : "") + t->tags[i];
    out += "]:\nProblem: " + t->problem + "\nReasoning: " + t->reasoning + "\n";
  }
  if (out.empty()) out = "(none)\n";
  out.pop_back();
  return out;
}

inline std::string render_knowledge(const PromptContext& ctx) {
  std::string out;
  for (const auto* k : ctx.knowledge) out += "- " + k->text + "\n";
  if (out.empty()) out = "(none)\n";
  out.pop_back();
  return out;
}

inline std::string render_theorems(const std::vector<const Theorem*>& theorems) {
  std::string out;
  for (const auto* t : theorems) out += "- " + t->id + ": " + t->statement + "\n";
  if (out.empty()) out = "(none)\n";
  out.pop_back();
  return out;
}

}  // namespace prompt_detail

// Tags used for relevance ranking: the families of the figure's theorems.
inline std::set<std::string> figure_query_tags(const Catalog& catalog,
                                               const std::vector<std::string>& theorem_ids) {
  std::set<std::string> tags;
  for (const auto& id : theorem_ids)
    if (const Theorem* t = catalog.theorem_by_id(id)) tags.insert(t->family);
  return tags;
}

inline std::string build_reasoning_prompt(const PromptAssets& assets,
                                          const PromptContext& ctx,
                                          const std::vector<const Theorem*>& theorems,
                                          const std::vector<std::string>& prior_statements,
                                          const DescriptionPatch& patch) {
  std::string prior;
  for (std::size_t i = 0; i < prior_statements.size(); ++i)
    prior += "STEP " + std::to_string(i + 1) + ": " + prior_statements[i] + "\n";
  if (prior.empty()) prior = "(none)\n";
  prior.pop_back();

  std::string patch_block = patch.text;
  patch_block += "\nMOTIVATING THEOREMS: ";
  if (patch.theorem_ids.empty()) {
    patch_block += "none";
  } else {
    for (std::size_t i = 0; i < patch.theorem_ids.size(); ++i)
      patch_block += (i ? ", " : "") + patch.theorem_ids[i];
  }
  patch_block += "\nELEMENTS: ";
  for (std::size_t i = 0; i < patch.vertex_labels.size(); ++i)
    patch_block += (i ? ", " : "") + patch.vertex_labels[i];

  return prompt_detail::fill(
      assets.skeleton("reasoning.txt"),
      {{"EXAMPLES", prompt_detail::render_examples(assets, "reasoning")},
       {"TEMPLATES", prompt_detail::render_templates(ctx)},
       {"KNOWLEDGE", prompt_detail::render_knowledge(ctx)},
       {"THEOREMS", prompt_detail::render_theorems(theorems)},
       {"PRIOR_STEPS", prior},
       {"PATCH", patch_block}});
}

inline std::string build_question_prompt(const PromptAssets& assets,
                                         const PromptContext& ctx,
                                         const std::string& step_block,
                                         const std::string& conditions) {
  return prompt_detail::fill(
      assets.skeleton("question.txt"),
      {{"EXAMPLES", prompt_detail::render_examples(assets, "question")},
       {"KNOWLEDGE", prompt_detail::render_knowledge(ctx)},
       {"STEP", step_block},
       {"PATCH", conditions}});
}

inline std::string build_judge_prompt(const PromptAssets& assets,
                                      const std::string& question,
                                      const std::string& conditions,
                                      const std::string& answer) {
  return prompt_detail::fill(
      assets.skeleton("judge.txt"),
      {{"EXAMPLES", prompt_detail::render_examples(assets, "judge")},
       {"QUESTION", question},
       {"PATCH", conditions},
       {"ANSWER", answer}});
}

}  // namespace geosynth
