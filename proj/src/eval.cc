#include "retell/eval.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include <boost/math/distributions/students_t.hpp>
#include "json.hpp"

#include "retell/error.h"

namespace retell {
namespace {

// Porter's original algorithm. Helpers follow his notation: m, *v*, *d, *o.
class PorterStemmer {
 public:
  explicit PorterStemmer(std::string word) : w_(std::move(word)) {}

  std::string run() {
    step1a();
    step1b();
    step1c();
    step2();
    step3();
    step4();
    step5a();
    step5b();
    return w_;
  }

 private:
  bool consonant(const std::string& s, std::size_t i) const {
    switch (s[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u': return false;
      case 'y': return i == 0 || !consonant(s, i - 1);
      default: return true;
    }
  }

  // m in [C](VC)^m[V].
  int measure(const std::string& s) const {
    int m = 0;
    std::size_t i = 0;
    const std::size_t n = s.size();
    while (i < n && consonant(s, i)) ++i;
    while (i < n) {
      while (i < n && !consonant(s, i)) ++i;
      if (i >= n) break;
      while (i < n && consonant(s, i)) ++i;
      ++m;
    }
    return m;
  }

  bool has_vowel(const std::string& s) const {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!consonant(s, i)) return true;
    }
    return false;
  }

  bool double_consonant(const std::string& s) const {
    const std::size_t n = s.size();
    return n >= 2 && s[n - 1] == s[n - 2] && consonant(s, n - 1);
  }

  // *o
  bool cvc(const std::string& s) const {
    const std::size_t n = s.size();
    if (n < 3) return false;
    if (!consonant(s, n - 3) || consonant(s, n - 2) || !consonant(s, n - 1)) return false;
    const char c = s[n - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view suffix) const {
    return w_.size() >= suffix.size() &&
           w_.compare(w_.size() - suffix.size(), suffix.size(), suffix) == 0;
  }

  std::string stem_without(std::string_view suffix) const {
    return w_.substr(0, w_.size() - suffix.size());
  }

  struct Rule {
    std::string_view suffix;
    std::string_view replacement;
  };

  // First rule whose suffix matches decides; its condition failing leaves
  // the word alone.
  template <typename Cond>
  void apply_first(std::initializer_list<Rule> rules, Cond cond) {
    for (const Rule& r : rules) {
      if (!ends(r.suffix)) continue;
      std::string stem = stem_without(r.suffix);
      if (cond(stem, r.suffix)) w_ = stem + std::string(r.replacement);
      return;
    }
  }

  void step1a() {
    apply_first({{"sses", "ss"}, {"ies", "i"}, {"ss", "ss"}, {"s", ""}},
                [](const std::string&, std::string_view) { return true; });
  }

  void step1b() {
    if (ends("eed")) {
      if (measure(stem_without("eed")) > 0) w_.pop_back();
      return;
    }
    std::string_view suffix;
    if (ends("ed")) {
      suffix = "ed";
    } else if (ends("ing")) {
      suffix = "ing";
    } else {
      return;
    }
    std::string stem = stem_without(suffix);
    if (!has_vowel(stem)) return;
    w_ = stem;
    if (ends("at") || ends("bl") || ends("iz")) {
      w_ += 'e';
    } else if (double_consonant(w_) && !ends("l") && !ends("s") && !ends("z")) {
      w_.pop_back();
    } else if (measure(w_) == 1 && cvc(w_)) {
      w_ += 'e';
    }
  }

  void step1c() {
    if (ends("y") && has_vowel(stem_without("y"))) w_.back() = 'i';
  }

  void step2() {
    apply_first({{"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
                 {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},    {"entli", "ent"},
                 {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
                 {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
                 {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},  {"biliti", "ble"}},
                [this](const std::string& s, std::string_view) { return measure(s) > 0; });
  }

  void step3() {
    apply_first({{"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
                 {"ical", "ic"}, {"ful", ""}, {"ness", ""}},
                [this](const std::string& s, std::string_view) { return measure(s) > 0; });
  }

  void step4() {
    apply_first({{"al", ""},   {"ance", ""}, {"ence", ""}, {"er", ""},   {"ic", ""},
                 {"able", ""}, {"ible", ""}, {"ant", ""},  {"ement", ""}, {"ment", ""},
                 {"ent", ""},  {"ion", ""},  {"ou", ""},   {"ism", ""},  {"ate", ""},
                 {"iti", ""},  {"ous", ""},  {"ive", ""},  {"ize", ""}},
                [this](const std::string& s, std::string_view suffix) {
                  if (measure(s) <= 1) return false;
                  if (suffix == "ion") return !s.empty() && (s.back() == 's' || s.back() == 't');
                  return true;
                });
  }

  void step5a() {
    if (!ends("e")) return;
    std::string stem = stem_without("e");
    const int m = measure(stem);
    if (m > 1 || (m == 1 && !cvc(stem))) w_ = stem;
  }

  void step5b() {
    if (measure(w_) > 1 && double_consonant(w_) && ends("l")) w_.pop_back();
  }

  std::string w_;
};

bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

double mean_of(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Unbiased sample variance.
double sample_variance(std::span<const double> v, double mean) {
  double s = 0.0;
  for (double x : v) s += (x - mean) * (x - mean);
  return s / static_cast<double>(v.size() - 1);
}

std::string fixed(double v, int precision) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(precision) << v;
  return out.str();
}

}  // namespace

std::string porter_stem(std::string_view word) {
  return PorterStemmer(std::string(word)).run();
}

std::vector<std::string> tokenize_and_stem(std::string_view text, bool stem) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    std::size_t b = 0;
    std::size_t e = cur.size();
    while (b < e && is_punct(cur[b])) ++b;
    while (e > b && is_punct(cur[e - 1])) --e;
    if (b < e) {
      std::string tok = cur.substr(b, e - b);
      out.push_back(stem ? porter_stem(tok) : tok);
    }
    cur.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  flush();
  return out;
}

std::size_t levenshtein(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double bleu(std::span<const std::string> candidate, std::span<const std::string> reference,
            const BleuConfig& config) {
  if (candidate.empty() || reference.empty()) return 0.0;
  const std::size_t order =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(config.max_order, 1)),
                            candidate.size());
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= order; ++n) {
    std::map<std::vector<std::string>, std::size_t> ref_counts;
    for (std::size_t i = 0; i + n <= reference.size(); ++i) {
      ++ref_counts[{reference.begin() + i, reference.begin() + i + n}];
    }
    std::map<std::vector<std::string>, std::size_t> cand_counts;
    for (std::size_t i = 0; i + n <= candidate.size(); ++i) {
      ++cand_counts[{candidate.begin() + i, candidate.begin() + i + n}];
    }
    std::size_t matches = 0;
    for (const auto& [gram, count] : cand_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) matches += std::min(count, it->second);
    }
    const double total = static_cast<double>(candidate.size() - n + 1);
    const double precision =
        matches == 0 ? config.epsilon / total : static_cast<double>(matches) / total;
    log_sum += std::log(precision);
  }
  const double c = static_cast<double>(candidate.size());
  const double r = static_cast<double>(reference.size());
  const double brevity = c > r ? 1.0 : std::exp(1.0 - r / c);
  return brevity * std::exp(log_sum / static_cast<double>(order));
}

MetricSummary summarize(std::span<const double> values) {
  if (values.empty()) throw EmptyInputError("no values to summarize");
  MetricSummary s;
  s.mean = mean_of(values);
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(sq / static_cast<double>(values.size()));
  return s;
}

EvalReport corpus_report(std::span<const EvalPair> pairs, bool stem) {
  if (pairs.empty()) throw EmptyInputError("no evaluation pairs");
  EvalReport report;
  std::vector<double> lev;
  std::vector<double> bl;
  for (const auto& p : pairs) {
    auto cand = tokenize_and_stem(p.candidate_text, stem);
    auto ref = tokenize_and_stem(p.reference_text, stem);
    if (cand.empty()) throw Error("empty candidate text for '" + p.label + "'");
    if (ref.empty()) throw Error("empty reference text for '" + p.label + "'");
    EvalRow row{p.label, levenshtein(cand, ref), bleu(cand, ref)};
    lev.push_back(static_cast<double>(row.levenshtein));
    bl.push_back(row.bleu);
    report.rows.push_back(std::move(row));
  }
  report.levenshtein = summarize(lev);
  report.bleu = summarize(bl);
  return report;
}

TTestResult student_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw EmptyInputError("t-test needs at least two values per sample");
  }
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double ma = mean_of(a);
  const double mb = mean_of(b);
  const double df = na + nb - 2.0;
  const double pooled =
      ((na - 1.0) * sample_variance(a, ma) + (nb - 1.0) * sample_variance(b, mb)) / df;
  TTestResult r;
  r.degrees_of_freedom = df;
  const double se = std::sqrt(pooled * (1.0 / na + 1.0 / nb));
  if (se == 0.0) {
    r.t = ma == mb ? 0.0 : std::copysign(INFINITY, ma - mb);
    r.p_value = ma == mb ? 1.0 : 0.0;
    return r;
  }
  r.t = (ma - mb) / se;
  boost::math::students_t dist(df);
  r.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(r.t)));
  return r;
}

ReportComparison compare_reports(const EvalReport& a, const EvalReport& b) {
  auto column = [](const EvalReport& r, bool lev) {
    std::vector<double> v;
    for (const auto& row : r.rows) v.push_back(lev ? static_cast<double>(row.levenshtein) : row.bleu);
    return v;
  };
  return {student_t_test(column(a, true), column(b, true)),
          student_t_test(column(a, false), column(b, false))};
}

std::string format_report(const EvalReport& report) {
  std::size_t width = 5;
  for (const auto& row : report.rows) width = std::max(width, row.label.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "label" << "  levenshtein  bleu\n";
  for (const auto& row : report.rows) {
    out << std::left << std::setw(static_cast<int>(width)) << row.label << "  " << std::right
        << std::setw(11) << row.levenshtein << "  " << fixed(row.bleu, 4) << '\n';
  }
  out << std::left << std::setw(static_cast<int>(width)) << "mean" << "  " << std::right
      << std::setw(11) << fixed(report.levenshtein.mean, 2) << "  " << fixed(report.bleu.mean, 4)
      << '\n';
  out << std::left << std::setw(static_cast<int>(width)) << "stddev" << "  " << std::right
      << std::setw(11) << fixed(report.levenshtein.stddev, 2) << "  "
      << fixed(report.bleu.stddev, 4) << '\n';
  return out.str();
}

std::string report_to_json(const EvalReport& report) {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : report.rows) {
    j["rows"].push_back({{"label", row.label}, {"levenshtein", row.levenshtein}, {"bleu", row.bleu}});
  }
  j["levenshtein"] = {{"mean", report.levenshtein.mean}, {"stddev", report.levenshtein.stddev}};
  j["bleu"] = {{"mean", report.bleu.mean}, {"stddev", report.bleu.stddev}};
  return j.dump(2) + "\n";
}

}  // namespace retell
