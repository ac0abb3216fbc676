#pragma once

// String-similarity evaluation of generated tellings: word-level Levenshtein
// distance and BLEU over stemmed tokens, aggregated per corpus.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace retell {

// Lowercase, whitespace split, strip leading/trailing punctuation, drop
// empties, then Porter-stem unless stem is false.
std::vector<std::string> tokenize_and_stem(std::string_view text, bool stem = true);

// Porter (1980) suffix-stripping stemmer. Expects a lowercase word.
std::string porter_stem(std::string_view word);

std::size_t levenshtein(std::span<const std::string> a, std::span<const std::string> b);

struct BleuConfig {
  int max_order = 4;
  double epsilon = 0.1;  // replaces a zero match count
};

// Geometric mean of modified n-gram precisions for n = 1..min(max_order,
// |candidate|), smoothed, times the brevity penalty. Single reference;
// 0 for an empty candidate.
double bleu(std::span<const std::string> candidate, std::span<const std::string> reference,
            const BleuConfig& config = {});

struct EvalPair {
  std::string candidate_text;
  std::string reference_text;
  std::string label;
};

struct EvalRow {
  std::string label;
  std::size_t levenshtein = 0;
  double bleu = 0.0;
};

struct MetricSummary {
  double mean = 0.0;
  double stddev = 0.0;  // population
};

struct EvalReport {
  std::vector<EvalRow> rows;
  MetricSummary levenshtein;
  MetricSummary bleu;
};

// Throws EmptyInputError for no pairs, Error for an empty text.
EvalReport corpus_report(std::span<const EvalPair> pairs, bool stem = true);

MetricSummary summarize(std::span<const double> values);

// Two-tailed Student's t-test, pooled variance (no Welch correction).
struct TTestResult {
  double t = 0.0;
  double degrees_of_freedom = 0.0;
  double p_value = 1.0;
};
TTestResult student_t_test(std::span<const double> a, std::span<const double> b);

struct ReportComparison {
  TTestResult levenshtein;
  TTestResult bleu;
};
ReportComparison compare_reports(const EvalReport& a, const EvalReport& b);

std::string format_report(const EvalReport& report);
std::string report_to_json(const EvalReport& report);

}  // namespace retell
