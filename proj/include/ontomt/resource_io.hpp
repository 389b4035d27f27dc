#pragma once

// Line-oriented reading shared by the resource loaders.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ontomt/error.hpp"

namespace ontomt {

struct SourceLine {
  std::size_t number;  // 1-based
  std::string text;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::FileUnreadable, "cannot open file", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::FileUnreadable, "read failed", path.string());
  return buf.str();
}

// Splits into lines, dropping a UTF-8 BOM and trailing CRs.
inline std::vector<SourceLine> split_lines(std::string_view content) {
  if (content.substr(0, 3) == "\xEF\xBB\xBF") content.remove_prefix(3);
  std::vector<SourceLine> lines;
  std::size_t number = 1;
  while (!content.empty()) {
    const auto nl = content.find('\n');
    auto line = content.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, std::string(line)});
    if (nl == std::string_view::npos) break;
    content.remove_prefix(nl + 1);
  }
  return lines;
}

inline bool is_blank_or_comment(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t");
  return pos == std::string_view::npos || line[pos] == '#';
}

inline std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> fields;
  while (true) {
    const auto tab = line.find('\t');
    fields.emplace_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return fields;
}

}  // namespace ontomt
