#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "cmred/cmclass.hpp"
#include "cmred/json_io.hpp"

namespace cmred {

struct CorpusExpectation {
  KodairaType kodaira;
  std::optional<FieldElement> j;
  std::optional<long> v_delta_min;
};

/// One line of a corpus file:
///   {"label": ..., "field": {...}, "place": {"p": 7, "index": 0},
///    "ainvs": [5 coefficients], "cm": {"D": -7, "defined_over_base": false,
///    "order_is_maximal": true}, "expected": {"kodaira": "III", "j": ..., "v_delta_min": 3}}
struct CorpusEntry {
  std::size_t line = 0;
  std::string label;
  QuadraticField field;
  long p = 2;
  int place_index = 0;
  std::array<FieldElement, 5> ainvs;
  CMSpec cm;
  CorpusExpectation expected;
};

// Throws ParseError mentioning the line number.
CorpusEntry parse_corpus_entry(const std::string& text, std::size_t line);
std::vector<CorpusEntry> parse_corpus(std::istream& in);

struct CorpusResult {
  std::string label;
  std::size_t line = 0;
  Verdict verdict = Verdict::Fail;
  std::optional<ConformanceReport> report;
  std::vector<std::string> mismatches;  // expectation failures
  std::string error;                    // downstream error, if any
};

struct CorpusSummary {
  std::vector<CorpusResult> results;  // input order
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_covered = 0;
};

CorpusResult run_entry(const CorpusEntry& entry, const ResidueLimits& limits = {});

// Evaluates entries on up to `parallelism` threads.
CorpusSummary run_corpus(const std::vector<CorpusEntry>& entries, unsigned parallelism,
                         const ResidueLimits& limits = {});
CorpusSummary run_corpus(const std::string& path, unsigned parallelism, const ResidueLimits& limits = {});

json to_json(const CorpusResult& result);
json summary_json(const CorpusSummary& summary);

}  // namespace cmred
