#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subvec {

class Utf8Error : public std::runtime_error {
 public:
  Utf8Error(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " at byte offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

/// Decodes one code point starting at `pos` and advances `pos` past it.
/// Throws Utf8Error on malformed input.
char32_t decode_utf8(std::string_view text, std::size_t& pos);

std::vector<char32_t> to_code_points(std::string_view text);

void append_utf8(std::string& out, char32_t cp);
std::string to_utf8(const std::vector<char32_t>& cps);

// Letter/digit classification over the major alphabetic blocks
// (Latin, Cyrillic, Greek, Armenian, Hebrew, Arabic, CJK, Kana).
bool is_word_char(char32_t cp);
bool is_space_char(char32_t cp);

/// Simple one-to-one lowercase mapping (ASCII, Latin-1, Latin Extended-A,
/// Greek, Cyrillic). Code points without a mapping pass through.
char32_t fold_case(char32_t cp);

}  // namespace subvec
