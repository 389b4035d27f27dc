#pragma once

// UTF-8 helpers, word normalization and the shared tokenizer.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ontomt {
namespace text {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes UTF-8; malformed sequences become U+FFFD and decoding resumes at
// the next byte.
inline std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int extra = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
      extra = 1;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      extra = 2;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      extra = 3;
      cp = b0 & 0x07;
    } else {
      out.push_back(kReplacementChar);
      ++i;
      continue;
    }
    if (i + extra >= s.size()) {
      out.push_back(kReplacementChar);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      const auto b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok) {
      out.push_back(kReplacementChar);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode_utf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

inline bool is_whitespace(char32_t c) {
  switch (c) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\v':
    case U'\f':
    case U'\r':
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

// Harakat, superscript alef and the other combining marks of the Arabic block.
inline bool is_arabic_mark(char32_t c) {
  return (c >= 0x0610 && c <= 0x061A) || (c >= 0x064B && c <= 0x065F) ||
         c == 0x0670 || (c >= 0x06D6 && c <= 0x06ED);
}

inline constexpr char32_t kTatweel = 0x0640;

inline bool in_arabic_blocks(char32_t c) {
  return (c >= 0x0600 && c <= 0x06FF) || (c >= 0x0750 && c <= 0x077F) ||
         (c >= 0x08A0 && c <= 0x08FF) || (c >= 0xFB50 && c <= 0xFDFF) ||
         (c >= 0xFE70 && c <= 0xFEFF);
}

inline bool is_arabic_punctuation(char32_t c) {
  return c == 0x060C || c == 0x060D || c == 0x061B || c == 0x061E ||
         c == 0x061F || (c >= 0x066A && c <= 0x066D) || c == 0x06D4;
}

inline bool is_arabic_digit(char32_t c) {
  return (c >= 0x0660 && c <= 0x0669) || (c >= 0x06F0 && c <= 0x06F9);
}

inline bool is_arabic_letter(char32_t c) {
  return in_arabic_blocks(c) && !is_arabic_mark(c) && c != kTatweel &&
         !is_arabic_punctuation(c) && !is_arabic_digit(c) &&
         !(c >= 0x0600 && c <= 0x060F) && c != 0xFDFC && c != 0xFDFD;
}

inline bool is_latin_letter(char32_t c) {
  if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')) return true;
  return c >= 0xC0 && c <= 0x024F && c != 0xD7 && c != 0xF7;
}

inline bool is_punctuation(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  return is_arabic_punctuation(c) || c == 0xAB || c == 0xBB ||
         (c >= 0x2010 && c <= 0x2027) || (c >= 0x2030 && c <= 0x205E);
}

// Characters split off the end of a word by the tokenizer.
inline bool is_detachable_punctuation(char32_t c) {
  switch (c) {
    case U'.':
    case U',':
    case U'!':
    case U'?':
    case U';':
    case U':':
    case 0x060C:  // ،
    case 0x061B:  // ؛
    case 0x061F:  // ؟
    case 0x06D4:
    case 0x2026:  // …
      return true;
    default:
      return false;
  }
}

inline bool is_sentence_terminator(char32_t c) {
  return c == U'.' || c == U'!' || c == U'?' || c == 0x061F || c == 0x061B ||
         c == 0x06D4;
}

inline bool is_punctuation_token(std::string_view token) {
  if (token.empty()) return false;
  for (char32_t c : decode_utf8(token)) {
    if (!is_punctuation(c)) return false;
  }
  return true;
}

inline std::string trim(std::string_view s) {
  const auto cps = decode_utf8(s);
  std::size_t b = 0;
  std::size_t e = cps.size();
  while (b < e && is_whitespace(cps[b])) ++b;
  while (e > b && is_whitespace(cps[e - 1])) --e;
  return encode_utf8(std::u32string_view(cps).substr(b, e - b));
}

inline std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

inline bool iequals(std::string_view a, std::string_view b) {
  return to_lower_ascii(a) == to_lower_ascii(b);
}

// Lookup form of a single word. English is case-folded; Arabic loses tatweel
// and combining marks, and hamza/madda-carrying alefs fold to bare alef (their
// canonical decompositions are alef plus a combining mark).
inline std::string normalize_word(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (char32_t c : decode_utf8(word)) {
    if (c == kTatweel || is_arabic_mark(c)) continue;
    if (c == 0x0622 || c == 0x0623 || c == 0x0625 || c == 0x0671) c = 0x0627;
    if (c >= U'A' && c <= U'Z') c = c - U'A' + U'a';
    append_utf8(out, c);
  }
  return out;
}

inline std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> parts;
  std::u32string current;
  for (char32_t c : decode_utf8(s)) {
    if (is_whitespace(c)) {
      if (!current.empty()) {
        parts.push_back(encode_utf8(current));
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) parts.push_back(encode_utf8(current));
  return parts;
}

// Normalizes every whitespace-separated word and rejoins with single spaces.
inline std::string normalize_phrase(std::string_view phrase) {
  std::string out;
  for (const auto& w : split_whitespace(phrase)) {
    if (!out.empty()) out.push_back(' ');
    out += normalize_word(w);
  }
  return out;
}

// Splits on Unicode whitespace and detaches trailing punctuation
// (. , ! ? ; : ، ؛ ؟ …) as tokens of their own, one character each.
inline std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> tokens;
  for (const auto& chunk : split_whitespace(s)) {
    const auto cps = decode_utf8(chunk);
    std::size_t end = cps.size();
    while (end > 0 && is_detachable_punctuation(cps[end - 1])) --end;
    if (end > 0) tokens.push_back(encode_utf8(std::u32string_view(cps).substr(0, end)));
    for (std::size_t i = end; i < cps.size(); ++i) {
      tokens.push_back(encode_utf8(std::u32string_view(cps).substr(i, 1)));
    }
  }
  return tokens;
}

// Splits running text into sentences after each run of terminal punctuation.
// Terminators stay with their sentence.
inline std::vector<std::string> split_sentences(std::string_view s) {
  std::vector<std::string> sentences;
  const auto cps = decode_utf8(s);
  std::u32string current;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    current.push_back(cps[i]);
    if (is_sentence_terminator(cps[i]) &&
        (i + 1 == cps.size() || !is_sentence_terminator(cps[i + 1]))) {
      auto sentence = trim(encode_utf8(current));
      if (!sentence.empty()) sentences.push_back(std::move(sentence));
      current.clear();
    }
  }
  auto tail = trim(encode_utf8(current));
  if (!tail.empty()) sentences.push_back(std::move(tail));
  return sentences;
}

inline std::string capitalize_first(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

inline bool starts_with_vowel_letter(std::string_view s) {
  if (s.empty()) return false;
  const char c = static_cast<char>(s[0] | 0x20);
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

inline std::size_t codepoint_count(std::string_view s) { return decode_utf8(s).size(); }

}  // namespace text
}  // namespace ontomt
