#include "cmred/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "cmred/error.hpp"

namespace cmred {

namespace {

Error at_line(std::size_t line, const std::string& what) {
  return Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

CorpusEntry parse_corpus_entry(const std::string& text, std::size_t line) {
  try {
    json j = json::parse(text);
    require_keys(j, {"label", "field", "place", "ainvs", "cm", "expected"}, "entry");
    for (const char* key : {"label", "field", "place", "ainvs", "cm", "expected"}) {
      if (!j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing key '") + key + "'");
    }
    CorpusEntry e;
    e.line = line;
    e.label = j.at("label").get<std::string>();
    e.field = field_from_json(j.at("field"));

    const json& place = j.at("place");
    require_keys(place, {"p", "index"}, "place");
    e.p = place.at("p").get<long>();
    e.place_index = place.value("index", 0);

    const json& ainvs = j.at("ainvs");
    if (!ainvs.is_array() || ainvs.size() != 5) throw Error(ErrorKind::ParseError, "ainvs must list five coefficients");
    for (std::size_t i = 0; i < 5; ++i) e.ainvs[i] = element_from_json(ainvs[i], e.field);

    const json& cm = j.at("cm");
    require_keys(cm, {"D", "defined_over_base", "order_is_maximal"}, "cm");
    e.cm = make_cm_spec(QuadraticField(cm.at("D").get<long>()), cm.value("defined_over_base", false),
                        cm.value("order_is_maximal", true));

    const json& expected = j.at("expected");
    require_keys(expected, {"kodaira", "j", "v_delta_min"}, "expected");
    e.expected.kodaira = KodairaType::parse(expected.at("kodaira").get<std::string>());
    if (expected.contains("j")) e.expected.j = element_from_json(expected.at("j"), e.field);
    if (expected.contains("v_delta_min")) e.expected.v_delta_min = expected.at("v_delta_min").get<long>();
    return e;
  } catch (const Error& err) {
    throw at_line(line, err.what());
  } catch (const json::exception& err) {
    throw at_line(line, err.what());
  }
}

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> entries;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    entries.push_back(parse_corpus_entry(text, line));
  }
  return entries;
}

CorpusResult run_entry(const CorpusEntry& entry, const ResidueLimits& limits) {
  CorpusResult result;
  result.label = entry.label;
  result.line = entry.line;
  try {
    WeierstrassModel model(entry.field, entry.ainvs);
    LocalPlace place = place_at(entry.field, entry.p, entry.place_index);
    ConformanceReport report = check_curve(model, place, entry.cm, limits);
    if (report.local.kodaira != entry.expected.kodaira) {
      result.mismatches.push_back("kodaira " + report.local.kodaira.to_string() + " != expected " +
                                  entry.expected.kodaira.to_string());
    }
    if (entry.expected.j && !(model.derived().j == *entry.expected.j)) {
      result.mismatches.push_back("j " + model.derived().j.to_string() + " != expected " + entry.expected.j->to_string());
    }
    if (entry.expected.v_delta_min && report.local.v_delta_min != *entry.expected.v_delta_min) {
      result.mismatches.push_back("v_delta_min " + std::to_string(report.local.v_delta_min) + " != expected " +
                                  std::to_string(*entry.expected.v_delta_min));
    }
    result.verdict = report.verdict == Verdict::Pass && result.mismatches.empty() ? Verdict::Pass : Verdict::Fail;
    result.report = std::move(report);
  } catch (const Error& err) {
    result.error = err.what();
    result.verdict = err.kind() == ErrorKind::HypothesisNotMet ? Verdict::NotCovered : Verdict::Fail;
  }
  return result;
}

CorpusSummary run_corpus(const std::vector<CorpusEntry>& entries, unsigned parallelism, const ResidueLimits& limits) {
  CorpusSummary summary;
  summary.results.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) summary.results[i] = run_entry(entries[i], limits);
  };
  unsigned threads = std::max(1U, std::min<unsigned>(parallelism, static_cast<unsigned>(entries.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& r : summary.results) {
    switch (r.verdict) {
      case Verdict::Pass: ++summary.pass; break;
      case Verdict::Fail: ++summary.fail; break;
      case Verdict::NotCovered: ++summary.not_covered; break;
    }
  }
  return summary;
}

CorpusSummary run_corpus(const std::string& path, unsigned parallelism, const ResidueLimits& limits) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return run_corpus(parse_corpus(in), parallelism, limits);
}

json to_json(const CorpusResult& result) {
  json out = result.report ? to_json(*result.report) : json::object();
  json entry = {{"label", result.label}, {"line", result.line}};
  entry.update(out);
  entry["verdict"] = std::string(to_string(result.verdict));
  if (!result.mismatches.empty()) entry["mismatches"] = result.mismatches;
  if (!result.error.empty()) entry["error"] = result.error;
  return entry;
}

json summary_json(const CorpusSummary& summary) {
  return {{"pass", summary.pass}, {"fail", summary.fail}, {"not_covered", summary.not_covered}};
}

}  // namespace cmred
