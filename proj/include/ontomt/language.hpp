#pragma once

#include <optional>
#include <string_view>

namespace ontomt {

enum class Language { Arabic, English };

inline constexpr Language opposite(Language lang) {
  return lang == Language::Arabic ? Language::English : Language::Arabic;
}

inline constexpr std::string_view language_code(Language lang) {
  return lang == Language::Arabic ? "ar" : "en";
}

inline constexpr std::string_view language_name(Language lang) {
  return lang == Language::Arabic ? "Arabic" : "English";
}

inline std::optional<Language> parse_language_code(std::string_view code) {
  if (code == "ar") return Language::Arabic;
  if (code == "en") return Language::English;
  return std::nullopt;
}

}  // namespace ontomt
