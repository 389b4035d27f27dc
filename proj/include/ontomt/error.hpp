#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ontomt {

// Every failure the library reports. The numeric values are the CLI exit codes.
enum class ErrorKind : int {
  Usage = 2,
  FileUnreadable = 3,
  FormatError = 4,
  DuplicateEntry = 5,
  InvariantViolation = 6,
  AmbiguousConcept = 7,
  WordUnknown = 8,
  NotSingleMeaning = 9,
  NotInOntology = 10,
  ContextUnregistered = 11,
  EmptyInput = 12,
  NoLetters = 13,
  ContextUnknown = 14,
  ContextTie = 15,
  UnbalancedBrackets = 16,
  EmptyNode = 17,
  LeafWithoutTag = 18,
  TokenizationEmpty = 19,
  InternalSplitError = 20,
  CoverageGap = 21,
  RuleLoopDetected = 22,
  ZeroVector = 23,
  OutOfRange = 24,
  EmptyReference = 25,
  RowErrors = 26,
};

inline constexpr std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::FileUnreadable: return "FileUnreadable";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::DuplicateEntry: return "DuplicateEntry";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::AmbiguousConcept: return "AmbiguousConcept";
    case ErrorKind::WordUnknown: return "WordUnknown";
    case ErrorKind::NotSingleMeaning: return "NotSingleMeaning";
    case ErrorKind::NotInOntology: return "NotInOntology";
    case ErrorKind::ContextUnregistered: return "ContextUnregistered";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NoLetters: return "NoLetters";
    case ErrorKind::ContextUnknown: return "ContextUnknown";
    case ErrorKind::ContextTie: return "ContextTie";
    case ErrorKind::UnbalancedBrackets: return "UnbalancedBrackets";
    case ErrorKind::EmptyNode: return "EmptyNode";
    case ErrorKind::LeafWithoutTag: return "LeafWithoutTag";
    case ErrorKind::TokenizationEmpty: return "TokenizationEmpty";
    case ErrorKind::InternalSplitError: return "InternalSplitError";
    case ErrorKind::CoverageGap: return "CoverageGap";
    case ErrorKind::RuleLoopDetected: return "RuleLoopDetected";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::EmptyReference: return "EmptyReference";
    case ErrorKind::RowErrors: return "RowErrors";
  }
  return "Unknown";
}

inline constexpr int exit_code(ErrorKind kind) { return static_cast<int>(kind); }

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string file = {}, std::size_t line = 0)
      : std::runtime_error(format(kind, message, file, line)),
        kind_(kind),
        detail_(std::move(message)),
        file_(std::move(file)),
        line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::string& file() const noexcept { return file_; }
  // 1-based; 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(ErrorKind kind, const std::string& message,
                            const std::string& file, std::size_t line) {
    std::string out;
    if (!file.empty()) {
      out += file;
      if (line > 0) out += ":" + std::to_string(line);
      out += ": ";
    }
    out += kind_name(kind);
    if (!message.empty()) out += ": " + message;
    return out;
  }

  ErrorKind kind_;
  std::string detail_;
  std::string file_;
  std::size_t line_;
};

// Non-fatal loader diagnostics (empty resource files and the like).
using Warnings = std::vector<std::string>;

inline void warn(Warnings* sink, std::string message) {
  if (sink != nullptr) sink->push_back(std::move(message));
}

}  // namespace ontomt
