#pragma once

// Translation quality metrics: term-frequency cosine similarity and its
// angle, word-level precision/recall/F-measure, and the corpus size measure
// (L2 norm of per-record lengths).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <iomanip>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ontomt/corpus.hpp"
#include "ontomt/error.hpp"
#include "ontomt/text.hpp"

namespace ontomt {

class TermVector {
 public:
  using Counts = std::map<std::string, std::uint64_t>;

  TermVector() = default;
  explicit TermVector(Counts counts) {
    for (auto& [term, freq] : counts) {
      if (freq > 0) terms_.emplace(term, freq);
    }
    recompute_norm();
  }

  const Counts& terms() const noexcept { return terms_; }
  double norm() const noexcept { return norm_; }
  std::uint64_t squared_norm() const noexcept { return squared_norm_; }
  bool empty() const noexcept { return terms_.empty(); }

  std::uint64_t frequency(std::string_view term) const {
    auto it = terms_.find(std::string(term));
    return it == terms_.end() ? 0 : it->second;
  }

 private:
  void recompute_norm() {
    squared_norm_ = 0;
    for (const auto& [_, f] : terms_) squared_norm_ += f * f;
    norm_ = std::sqrt(static_cast<double>(squared_norm_));
  }

  Counts terms_;
  std::uint64_t squared_norm_ = 0;
  double norm_ = 0.0;
};

// Normalized non-punctuation tokens, in order.
inline std::vector<std::string> metric_tokens(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& tok : text::tokenize(s)) {
    if (text::is_punctuation_token(tok)) continue;
    auto w = text::normalize_word(tok);
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

inline TermVector term_vector(std::string_view s) {
  TermVector::Counts counts;
  for (auto& w : metric_tokens(s)) ++counts[std::move(w)];
  return TermVector(std::move(counts));
}

// d1.d2 / (|d1| |d2|), clamped to [0, 1]. Terms missing from one side
// contribute nothing. Dot product and squared norms stay integral and the
// denominator is one sqrt of their product, so cosine(v, v) is exactly 1.
inline double cosine(const TermVector& d1, const TermVector& d2) {
  if (d1.empty() || d2.empty()) throw Error(ErrorKind::ZeroVector, "cosine of an empty vector");
  const auto& small = d1.terms().size() <= d2.terms().size() ? d1 : d2;
  const auto& large = &small == &d1 ? d2 : d1;
  std::uint64_t dot = 0;
  for (const auto& [term, f] : small.terms()) dot += f * large.frequency(term);
  const double denom = std::sqrt(static_cast<double>(d1.squared_norm()) *
                                 static_cast<double>(d2.squared_norm()));
  const double c = static_cast<double>(dot) / denom;
  return std::clamp(c, 0.0, 1.0);
}

inline double angle_degrees(double c) {
  if (!(c >= -1.0 && c <= 1.0)) {
    throw Error(ErrorKind::OutOfRange, "cosine " + std::to_string(c) + " outside [-1, 1]");
  }
  return std::acos(c) * 180.0 / std::numbers::pi;
}

// Harmonic mean; 0 when both inputs are 0.
inline double f_measure(double precision, double recall) {
  if (!(precision >= 0.0 && precision <= 1.0 && recall >= 0.0 && recall <= 1.0)) {
    throw Error(ErrorKind::OutOfRange, "precision/recall outside [0, 1]");
  }
  const double sum = precision + recall;
  return sum == 0.0 ? 0.0 : 2.0 * precision * recall / sum;
}

struct PrfResult {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  std::size_t matched = 0;
  std::size_t candidate_words = 0;
  std::size_t reference_words = 0;
  bool candidate_empty = false;  // precision undefined, reported as 0
};

// "Correctly translated" words are the multiset intersection of normalized
// candidate and reference tokens, position independent.
inline PrfResult prf(std::string_view candidate, std::string_view reference) {
  const auto ref = term_vector(reference);
  if (ref.empty()) throw Error(ErrorKind::EmptyReference, "reference has no words");
  const auto cand = term_vector(candidate);
  PrfResult r;
  for (const auto& [_, f] : ref.terms()) r.reference_words += f;
  for (const auto& [_, f] : cand.terms()) r.candidate_words += f;
  for (const auto& [term, f] : cand.terms()) r.matched += std::min(f, ref.frequency(term));
  r.recall = static_cast<double>(r.matched) / static_cast<double>(r.reference_words);
  if (r.candidate_words == 0) {
    r.candidate_empty = true;
  } else {
    r.precision = static_cast<double>(r.matched) / static_cast<double>(r.candidate_words);
  }
  r.f_measure = f_measure(r.precision, r.recall);
  return r;
}

enum class LengthUnit { Tokens, Characters };

inline std::size_t record_length(std::string_view source, LengthUnit unit) {
  if (unit == LengthUnit::Tokens) return metric_tokens(source).size();
  std::size_t n = 0;
  for (char32_t c : text::decode_utf8(source)) n += text::is_whitespace(c) ? 0 : 1;
  return n;
}

// sqrt(sum over records of length(r)^2).
inline double corpus_size(const std::vector<CorpusRecord>& corpus,
                          LengthUnit unit = LengthUnit::Tokens) {
  double sq = 0.0;
  for (const auto& r : corpus) {
    const auto len = static_cast<double>(record_length(r.source_text, unit));
    sq += len * len;
  }
  return std::sqrt(sq);
}

struct EvalReport {
  double cosine = 0.0;
  double angle_degrees = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

// Cosine/angle against the reference (the first document of the pair) plus
// precision/recall/F.
inline EvalReport evaluate_pair(std::string_view candidate, std::string_view reference) {
  EvalReport r;
  r.cosine = cosine(term_vector(reference), term_vector(candidate));
  r.angle_degrees = angle_degrees(r.cosine);
  const auto p = prf(candidate, reference);
  r.precision = p.precision;
  r.recall = p.recall;
  r.f_measure = p.f_measure;
  return r;
}

struct EvalRow {
  std::string id;
  Language language = Language::English;
  std::string candidate;
  std::optional<EvalReport> report;
  std::optional<ErrorKind> error_kind;
  std::string error;
  bool flagged() const { return !report.has_value(); }
};

struct CorpusEvaluation {
  std::vector<EvalRow> rows;
  std::optional<EvalReport> average;  // over unflagged rows
  std::size_t flagged = 0;
};

// Produces the candidate translation for a record; throws ontomt::Error when
// the translation failed.
using Translator = std::function<std::string(const CorpusRecord&)>;

// Records are translated concurrently, at most `max_threads` at a time
// (0: hardware concurrency); rows come back in corpus order.
inline CorpusEvaluation evaluate_corpus(const std::vector<CorpusRecord>& corpus,
                                        const Translator& translator,
                                        std::size_t max_threads = 0) {
  if (max_threads == 0) max_threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<std::string>> pending;
  pending.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (i >= max_threads) pending[i - max_threads].wait();
    pending.push_back(std::async(std::launch::async, [&translator, &record = corpus[i]] {
      return translator(record);
    }));
  }

  CorpusEvaluation eval;
  EvalReport sum;
  std::size_t ok = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EvalRow row;
    row.id = corpus[i].id;
    row.language = corpus[i].language;
    try {
      row.candidate = pending[i].get();
      row.report = evaluate_pair(row.candidate, corpus[i].reference_translation);
    } catch (const Error& e) {
      row.error_kind = e.kind();
      row.error = std::string(kind_name(e.kind())) + ": " + e.detail();
    }
    if (row.report) {
      sum.cosine += row.report->cosine;
      sum.angle_degrees += row.report->angle_degrees;
      sum.precision += row.report->precision;
      sum.recall += row.report->recall;
      sum.f_measure += row.report->f_measure;
      ++ok;
    } else {
      ++eval.flagged;
    }
    eval.rows.push_back(std::move(row));
  }
  if (ok > 0) {
    const auto n = static_cast<double>(ok);
    eval.average = EvalReport{sum.cosine / n, sum.angle_degrees / n, sum.precision / n,
                              sum.recall / n, sum.f_measure / n};
  }
  return eval;
}

namespace detail {

inline std::string fixed6(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << v;
  return s.str();
}

}  // namespace detail

inline std::string format_evaluation_table(const CorpusEvaluation& eval) {
  std::ostringstream out;
  auto row = [&](const std::string& id, const std::string& lang, const std::optional<EvalReport>& r,
                 const std::string& status) {
    out << std::left << std::setw(16) << id << std::setw(6) << lang;
    if (r) {
      out << std::right << std::setw(10) << detail::fixed6(r->cosine) << std::setw(12)
          << detail::fixed6(r->angle_degrees) << std::setw(11) << detail::fixed6(r->precision)
          << std::setw(10) << detail::fixed6(r->recall) << std::setw(11)
          << detail::fixed6(r->f_measure);
    } else {
      out << std::right << std::setw(10) << "-" << std::setw(12) << "-" << std::setw(11) << "-"
          << std::setw(10) << "-" << std::setw(11) << "-";
    }
    out << "  " << status << "\n";
  };
  out << std::left << std::setw(16) << "id" << std::setw(6) << "lang" << std::right
      << std::setw(10) << "cosine" << std::setw(12) << "angle" << std::setw(11) << "precision"
      << std::setw(10) << "recall" << std::setw(11) << "f-measure"
      << "  status\n";
  for (const auto& r : eval.rows) {
    row(r.id, std::string(language_code(r.language)), r.report, r.flagged() ? "FLAGGED " + r.error : "ok");
  }
  row("AVERAGE", "", eval.average,
      std::to_string(eval.rows.size() - eval.flagged) + "/" + std::to_string(eval.rows.size()) +
          " rows");
  return out.str();
}

inline std::string format_evaluation_tsv(const CorpusEvaluation& eval) {
  std::ostringstream out;
  out << "id\tlang\tcosine\tangle\tprecision\trecall\tf_measure\tstatus\n";
  auto cells = [&](const std::optional<EvalReport>& r) {
    if (!r) return std::string("\t\t\t\t");
    return detail::fixed6(r->cosine) + "\t" + detail::fixed6(r->angle_degrees) + "\t" +
           detail::fixed6(r->precision) + "\t" + detail::fixed6(r->recall) + "\t" +
           detail::fixed6(r->f_measure);
  };
  for (const auto& r : eval.rows) {
    out << r.id << "\t" << language_code(r.language) << "\t" << cells(r.report) << "\t"
        << (r.flagged() ? r.error : "ok") << "\n";
  }
  out << "AVERAGE\t\t" << cells(eval.average) << "\t"
      << (eval.rows.size() - eval.flagged) << "/" << eval.rows.size() << "\n";
  return out.str();
}

}  // namespace ontomt
