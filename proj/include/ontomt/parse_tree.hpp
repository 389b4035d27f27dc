#pragma once

// POS-labeled constituency trees in bracketed notation: "(ROOT (S (NN x)))".

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontomt/error.hpp"
#include "ontomt/text.hpp"

namespace ontomt {

struct Token {
  std::string surface;
  std::string normalized;
  std::string pos;
  std::size_t index = 0;

  bool operator==(const Token&) const = default;
};

// A node is either a leaf (POS label + word) or an internal node with
// children, never both.
struct ParseTree {
  std::string label;
  std::vector<ParseTree> children;
  std::optional<std::string> word;

  static ParseTree leaf(std::string tag, std::string surface) {
    return ParseTree{std::move(tag), {}, std::move(surface)};
  }
  static ParseTree node(std::string label, std::vector<ParseTree> kids) {
    return ParseTree{std::move(label), std::move(kids), std::nullopt};
  }

  bool is_leaf() const noexcept { return word.has_value(); }

  std::size_t leaf_count() const {
    if (is_leaf()) return 1;
    std::size_t n = 0;
    for (const auto& c : children) n += c.leaf_count();
    return n;
  }

  bool operator==(const ParseTree&) const = default;
};

namespace detail {

inline std::string escape_word(std::string_view w) {
  if (w == "(") return "-LRB-";
  if (w == ")") return "-RRB-";
  return std::string(w);
}

inline std::string unescape_word(std::string_view w) {
  if (w == "-LRB-") return "(";
  if (w == "-RRB-") return ")";
  return std::string(w);
}

class BracketReader {
 public:
  explicit BracketReader(std::string_view input) : in_(input) {}

  ParseTree read() {
    std::vector<ParseTree> roots;
    skip_space();
    while (pos_ < in_.size()) {
      if (in_[pos_] == ')') fail(ErrorKind::UnbalancedBrackets, "unmatched ')'");
      if (in_[pos_] != '(') fail(ErrorKind::LeafWithoutTag, "word outside a tagged node");
      roots.push_back(read_node(true));
      skip_space();
    }
    if (roots.empty()) fail(ErrorKind::EmptyNode, "no tree");
    if (roots.size() == 1) return std::move(roots.front());
    return ParseTree::node("ROOT", std::move(roots));
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& what, std::size_t at) const {
    throw Error(kind, what + " at position " + std::to_string(at));
  }
  [[noreturn]] void fail(ErrorKind kind, const std::string& what) const { fail(kind, what, pos_); }

  void skip_space() {
    while (pos_ < in_.size() && is_space(in_[pos_])) ++pos_;
  }

  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  }

  bool at_atom() const {
    return pos_ < in_.size() && in_[pos_] != '(' && in_[pos_] != ')' && !is_space(in_[pos_]);
  }

  std::string read_atom() {
    const auto start = pos_;
    while (at_atom()) ++pos_;
    return std::string(in_.substr(start, pos_ - start));
  }

  ParseTree read_node(bool top_level) {
    const auto open = pos_;
    ++pos_;  // '('
    skip_space();
    if (pos_ >= in_.size()) fail(ErrorKind::UnbalancedBrackets, "unclosed '('", open);
    if (in_[pos_] == ')') fail(ErrorKind::EmptyNode, "empty node", open);

    std::string label;
    if (in_[pos_] == '(') {
      if (!top_level) fail(ErrorKind::EmptyNode, "unlabeled node", open);
      label = "ROOT";
    } else {
      label = read_atom();
    }
    skip_space();
    if (pos_ >= in_.size()) fail(ErrorKind::UnbalancedBrackets, "unclosed '('", open);

    if (in_[pos_] == ')') fail(ErrorKind::LeafWithoutTag, "'" + label + "' has no word", open);

    if (at_atom()) {
      auto w = read_atom();
      skip_space();
      if (pos_ >= in_.size()) fail(ErrorKind::UnbalancedBrackets, "unclosed '('", open);
      if (in_[pos_] != ')') fail(ErrorKind::LeafWithoutTag, "untagged material after '" + w + "'");
      ++pos_;
      return ParseTree::leaf(std::move(label), unescape_word(w));
    }

    std::vector<ParseTree> kids;
    while (true) {
      skip_space();
      if (pos_ >= in_.size()) fail(ErrorKind::UnbalancedBrackets, "unclosed '('", open);
      if (in_[pos_] == ')') {
        ++pos_;
        break;
      }
      if (in_[pos_] != '(') fail(ErrorKind::LeafWithoutTag, "untagged word inside '" + label + "'");
      kids.push_back(read_node(false));
    }
    return ParseTree::node(std::move(label), std::move(kids));
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

inline void write_node(const ParseTree& t, std::string& out) {
  out.push_back('(');
  out += t.label;
  if (t.is_leaf()) {
    out.push_back(' ');
    out += escape_word(*t.word);
  } else {
    for (const auto& c : t.children) {
      out.push_back(' ');
      write_node(c, out);
    }
  }
  out.push_back(')');
}

inline void collect_tokens(const ParseTree& t, std::vector<Token>& out) {
  if (t.is_leaf()) {
    out.push_back({*t.word, text::normalize_word(*t.word), t.label, out.size()});
    return;
  }
  for (const auto& c : t.children) collect_tokens(c, out);
}

}  // namespace detail

// Accepts one tree or a forest of top-level nodes (wrapped in ROOT); a
// top-level "( (S ...))" gets the label ROOT. "-LRB-"/"-RRB-" words decode
// to parentheses.
inline ParseTree read_bracketed(std::string_view input) {
  return detail::BracketReader(input).read();
}

inline std::string write_bracketed(const ParseTree& tree) {
  std::string out;
  detail::write_node(tree, out);
  return out;
}

// Leaves in surface order, indexed from 0.
inline std::vector<Token> tokens(const ParseTree& tree) {
  std::vector<Token> out;
  detail::collect_tokens(tree, out);
  return out;
}

}  // namespace ontomt
