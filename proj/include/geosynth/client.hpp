#pragma once

#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <json.hpp>

#include "geosynth/digest.hpp"
#include "geosynth/error.hpp"

namespace geosynth {

// Append-only log of completion traffic. The JSONL file carries
// {id, prompt_hash, response, latency_ms}; the in-memory entries additionally
// keep the full prompt so tests can inspect assembled prompts.
class RequestLog {
 public:
  struct Entry {
    std::string id;
    std::string prompt;
    std::string prompt_hash;
    std::string response;
    double latency_ms{0};
  };

  void append(Entry e) {
    std::lock_guard<std::mutex> lock(mu_);
    entries_.push_back(std::move(e));
  }

  std::vector<Entry> snapshot() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
  }

  // One JSON object per line, ordered by request id for determinism under
  // parallel pipelines.
  std::string to_jsonl() const {
    auto entries = snapshot();
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.id < b.id; });
    std::string out;
    for (const auto& e : entries) {
      nlohmann::ordered_json j;
      j["id"] = e.id;
      j["prompt_hash"] = e.prompt_hash;
      j["response"] = e.response;
      j["latency_ms"] = e.latency_ms;
      out += j.dump() + "\n";
    }
    return out;
  }

 private:
  mutable std::mutex mu_;
  std::vector<Entry> entries_;
};

struct CompletionResult {
  bool ok{false};
  std::string text;
  std::string error;
};

// Abstract completion endpoint. Retries and logging live here; concrete
// clients implement one attempt.
class CompletionClient {
 public:
  virtual ~CompletionClient() = default;

  CompletionResult complete(const std::string& id, const std::string& prompt) {
    CompletionResult result;
    auto start = std::chrono::steady_clock::now();
    for (int attempt = 0; attempt < max_attempts_; ++attempt) {
      result = complete_once(prompt);
      if (result.ok) break;
    }
    double latency =
        deterministic_latency_
            ? 0.0
            : std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                        start)
                  .count();
    if (log_)
      log_->append({id, prompt, digest_hex(prompt),
                    result.ok ? result.text : ("<error> " + result.error), latency});
    return result;
  }

  void set_log(RequestLog* log) { log_ = log; }
  void set_max_attempts(int n) { max_attempts_ = std::max(1, n); }

 protected:
  virtual CompletionResult complete_once(const std::string& prompt) = 0;
  bool deterministic_latency_{false};

 private:
  RequestLog* log_{nullptr};
  int max_attempts_{3};
};

// ---------------------------------------------------------------------------
// Deterministic mock: fixture table keyed by prompt hash, with a scripted
// synthesizer fallback that answers our own prompt formats well enough to run
// the full pipeline offline.
// ---------------------------------------------------------------------------

class MockCompletionClient : public CompletionClient {
 public:
  MockCompletionClient() { deterministic_latency_ = true; }

  void add_fixture(const std::string& prompt, const std::string& response) {
    fixtures_[fnv1a64(prompt)] = response;
  }
  void add_fixture_hash(std::uint64_t prompt_hash, const std::string& response) {
    fixtures_[prompt_hash] = response;
  }
  // Any prompt containing this substring fails (for error-path tests).
  void fail_when_contains(const std::string& marker) { fail_marker_ = marker; }

 protected:
  CompletionResult complete_once(const std::string& prompt) override {
    if (!fail_marker_.empty() && prompt.find(fail_marker_) != std::string::npos)
      return {false, "", "injected mock failure"};
    auto it = fixtures_.find(fnv1a64(prompt));
    if (it != fixtures_.end()) return {true, it->second, ""};
    return {true, synthesize(prompt), ""};
  }

 private:
  static std::string section(const std::string& prompt, const std::string& header) {
    auto pos = prompt.find(header);
    if (pos == std::string::npos) return "";
    pos += header.size();
    auto end = prompt.find("\n\n", pos);
    if (end == std::string::npos) end = prompt.size();
    return prompt.substr(pos, end - pos);
  }

  struct ParsedValue {
    std::string rendered;  // e.g. "length(A,B) = 7.5"
    std::string question;
    std::string qtype;
  };

  // Pull label/value facts out of a patch text. Labels are A..Z with an
  // optional numeric suffix, concatenated in prose ("A1B = 7.5", "∠ABC = 60°").
  static std::vector<ParsedValue> extract_values(const std::string& text) {
    std::vector<ParsedValue> out;
    static const std::regex angle_re(
        "∠([A-Z][0-9]*)([A-Z][0-9]*)([A-Z][0-9]*) = ([0-9]+(?:\\.[0-9]+)?)°");
    static const std::regex len_re(
        "(?:^|[^A-Za-z0-9∠])([A-Z][0-9]*)([A-Z][0-9]*) = ([0-9]+(?:\\.[0-9]+)?)");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), angle_re);
         it != std::sregex_iterator(); ++it) {
      const auto& m = *it;
      ParsedValue v;
      v.rendered = "angle(" + m[1].str() + "," + m[2].str() + "," + m[3].str() + ") = " +
                   m[4].str();
      v.question = "What is the measure of ∠" + m[1].str() + m[2].str() + m[3].str() + "?";
      v.qtype = "angle";
      out.push_back(v);
    }
    for (auto it = std::sregex_iterator(text.begin(), text.end(), len_re);
         it != std::sregex_iterator(); ++it) {
      const auto& m = *it;
      ParsedValue v;
      v.rendered = "length(" + m[1].str() + "," + m[2].str() + ") = " + m[3].str();
      v.question =
          "What is the length of segment " + m[1].str() + m[2].str() + "?";
      v.qtype = "side-length";
      out.push_back(v);
    }
    return out;
  }

  // Area claims the mock can derive exactly from the patch's given values.
  static std::optional<std::string> derive_area(const std::string& text) {
    static const std::regex square_re("[Ss]quare ([A-Z][0-9]*)([A-Z][0-9]*)([A-Z][0-9]*)"
                                      "([A-Z][0-9]*)[^.]*? = ([0-9]+(?:\\.[0-9]+)?)");
    static const std::regex rect_re(
        "[Rr]ectangle ([A-Z][0-9]*)([A-Z][0-9]*)([A-Z][0-9]*)([A-Z][0-9]*)[^.]*? = "
        "([0-9]+(?:\\.[0-9]+)?)[^.]*? = ([0-9]+(?:\\.[0-9]+)?)");
    std::smatch m;
    char buf[64];
    if (std::regex_search(text, m, square_re)) {
      double s = std::stod(m[5].str());
      std::snprintf(buf, sizeof(buf), "%g", s * s);
      return "area(" + m[1].str() + "," + m[2].str() + "," + m[3].str() + "," +
             m[4].str() + ") = " + buf;
    }
    if (std::regex_search(text, m, rect_re)) {
      double a = std::stod(m[5].str());
      double b = std::stod(m[6].str());
      std::snprintf(buf, sizeof(buf), "%g", a * b);
      return "area(" + m[1].str() + "," + m[2].str() + "," + m[3].str() + "," +
             m[4].str() + ") = " + buf;
    }
    return std::nullopt;
  }

  std::string synthesize(const std::string& prompt) const {
    std::uint64_t h = fnv1a64(prompt);
    if (prompt.rfind("TASK[reasoning]", 0) == 0) {
      std::string patch = section(prompt, "DESCRIPTION PATCH:\n");
      std::string patch_text = patch.substr(0, patch.find("\nMOTIVATING THEOREMS:"));
      std::string theorems = "none";
      auto tpos = patch.find("MOTIVATING THEOREMS: ");
      if (tpos != std::string::npos) {
        auto end = patch.find('\n', tpos);
        theorems = patch.substr(tpos + 21, end - tpos - 21);
      }
      auto values = extract_values(patch_text);
      auto area = derive_area(patch_text);
      std::string claims;
      for (std::size_t i = 0; i < values.size() && i < 3; ++i) {
        if (!claims.empty()) claims += "; ";
        claims += values[i].rendered;
      }
      if (area && (h % 2 == 0)) {
        if (!claims.empty()) claims += "; ";
        claims += *area;
      }
      if (claims.empty()) claims = "none";
      std::string statement;
      if (area && (h % 2 == 0))
        statement = "From the given measurements, " + *area + ".";
      else if (!values.empty())
        statement = "The construction fixes " + values[h % values.size()].rendered + ".";
      else
        statement = "The step records the stated construction: " +
                    patch_text.substr(0, patch_text.find('.')) + ".";
      return "```step\nSTATEMENT: " + statement + "\nTHEOREMS: " + theorems +
             "\nCLAIMS: " + claims + "\n```";
    }
    if (prompt.rfind("TASK[question]", 0) == 0) {
      std::string step = section(prompt, "ANSWER STEP:\n");
      // Parse rendered claims of the form kind(L1,L2,...) = value.
      static const std::regex claim_re(
          "(length|angle|area)\\(([A-Z0-9,]+)\\) = ([0-9]+(?:\\.[0-9]+)?)");
      std::vector<std::pair<std::string, std::string>> found;  // (kind, labels-run)
      for (auto it = std::sregex_iterator(step.begin(), step.end(), claim_re);
           it != std::sregex_iterator(); ++it) {
        std::string run;
        for (char c : (*it)[2].str())
          if (c != ',') run += c;
        found.emplace_back((*it)[1].str(), run);
      }
      std::string question, qtype;
      if (found.empty()) {
        question = "What relationship does the construction establish in this step?";
        qtype = "relationship";
      } else {
        const auto& [kind, run] = found[h % found.size()];
        if (kind == "length") {
          question = "Given the construction, what is the length of segment " + run + "?";
          qtype = "side-length";
        } else if (kind == "angle") {
          question = "Given the construction, what is the measure of ∠" + run + "?";
          qtype = "angle";
        } else {
          question = "Given the construction, what is the area of " + run + "?";
          qtype = "area";
        }
      }
      return "```question\nQUESTION: " + question + "\nTYPE: " + qtype + "\n```";
    }
    if (prompt.rfind("TASK[judge]", 0) == 0) {
      std::string q = section(prompt, "QUESTION:\n");
      // Phrasing that leaves the configuration open reads as underdetermined;
      // everything else passes.
      bool ambiguous = q.find("in some configuration") != std::string::npos;
      return std::string("```verdict\nANSWERABLE: ") + (ambiguous ? "NO" : "YES") +
             "\nREASON: " +
             (ambiguous ? "The question leaves the configuration underdetermined."
                        : "The stated conditions pin down a unique answer.") +
             "\n```";
    }
    if (prompt.rfind("TASK[analysis]", 0) == 0) {
      std::string q = section(prompt, "ORIGINAL QUESTION:\n");
      std::string cot = section(prompt, "ORIGINAL WORKED ANSWER:\n");
      return "```analysis\nRestating the solution in full detail. " + cot +
             " Each of these facts follows from the stated conditions of: " + q + "\n```";
    }
    if (prompt.rfind("TASK[segment]", 0) == 0) {
      std::string analysis = section(prompt, "ANALYSIS:\n");
      // Sentence-split into at most four steps.
      std::vector<std::string> sentences;
      std::string cur;
      for (char c : analysis) {
        cur += c;
        if (c == '.' && cur.size() > 12) {
          sentences.push_back(cur);
          cur.clear();
          if (sentences.size() == 4) break;
        }
      }
      if (sentences.empty()) sentences.push_back(analysis + ".");
      std::string out = "```steps\n";
      for (std::size_t i = 0; i < sentences.size(); ++i) {
        std::string s = sentences[i];
        while (!s.empty() && (s.front() == ' ' || s.front() == '\n')) s.erase(s.begin());
        out += "STEP " + std::to_string(i + 1) + ": " + s + "\n";
      }
      return out + "```";
    }
    if (prompt.rfind("TASK[stepqa]", 0) == 0) {
      std::string step = section(prompt, "STEP:\n");
      return "```question\nQUESTION: Which fact does this part of the solution establish: " +
             step.substr(0, 120) + (step.size() > 120 ? "…" : "") +
             "?\nANSWER: " + step + "\n```";
    }
    if (prompt.rfind("TASK[quality]", 0) == 0)
      return "```score\nSCORE: 8\nREASON: Steps are ordered and justified.\n```";
    return "UNRECOGNIZED PROMPT";
  }

  std::map<std::uint64_t, std::string> fixtures_;
  std::string fail_marker_;
};

// ---------------------------------------------------------------------------
// HTTP client for an OpenAI-style chat completions endpoint. Endpoint and
// credential come from environment variables; model and temperature from
// configuration.
// ---------------------------------------------------------------------------

struct HttpClientConfig {
  std::string model{"default"};
  double temperature{0.2};
  std::string path{"/v1/chat/completions"};
  static const char* endpoint_env() { return "GEOSYNTH_LLM_ENDPOINT"; }
  static const char* api_key_env() { return "GEOSYNTH_LLM_API_KEY"; }
};

class HttpCompletionClient : public CompletionClient {
 public:
  explicit HttpCompletionClient(HttpClientConfig config = {});

 protected:
  CompletionResult complete_once(const std::string& prompt) override;

 private:
  HttpClientConfig config_;
  std::string endpoint_;
  std::string api_key_;
};

}  // namespace geosynth

// The HTTP implementation lives behind a macro so that test binaries that
// never talk to a network do not pay for the httplib include.
#ifdef GEOSYNTH_ENABLE_HTTP_CLIENT
#include <httplib.h>

namespace geosynth {

inline HttpCompletionClient::HttpCompletionClient(HttpClientConfig config)
    : config_(std::move(config)) {
  const char* ep = std::getenv(HttpClientConfig::endpoint_env());
  if (!ep)
    throw Error(ErrorCode::invalid_config,
                std::string(HttpClientConfig::endpoint_env()) + " is not set");
  endpoint_ = ep;
  if (const char* key = std::getenv(HttpClientConfig::api_key_env())) api_key_ = key;
}

inline CompletionResult HttpCompletionClient::complete_once(const std::string& prompt) {
  httplib::Client cli(endpoint_);
  cli.set_read_timeout(120, 0);
  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);
  nlohmann::ordered_json body;
  body["model"] = config_.model;
  body["temperature"] = config_.temperature;
  body["messages"] = {{{"role", "user"}, {"content", prompt}}};
  auto res = cli.Post(config_.path, headers, body.dump(), "application/json");
  if (!res) return {false, "", "transport error"};
  if (res->status != 200)
    return {false, "", "http status " + std::to_string(res->status)};
  try {
    auto j = nlohmann::json::parse(res->body);
    return {true, j.at("choices").at(0).at("message").at("content").get<std::string>(),
            ""};
  } catch (const nlohmann::json::exception& e) {
    return {false, "", std::string("bad response: ") + e.what()};
  }
}

}  // namespace geosynth
#endif  // GEOSYNTH_ENABLE_HTTP_CLIENT
