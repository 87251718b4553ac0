#include "subvec/utf8.hpp"

namespace subvec {

char32_t decode_utf8(std::string_view text, std::size_t& pos) {
  auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  const std::size_t start = pos;
  unsigned char b0 = byte(pos);

  if (b0 < 0x80) {
    ++pos;
    return b0;
  }

  int len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    throw Utf8Error(start, "invalid UTF-8 lead byte");
  }

  if (start + len > text.size()) throw Utf8Error(start, "truncated UTF-8 sequence");
  for (int i = 1; i < len; ++i) {
    unsigned char b = byte(start + i);
    if ((b & 0xC0) != 0x80) throw Utf8Error(start + i, "invalid UTF-8 continuation byte");
    cp = (cp << 6) | (b & 0x3F);
  }

  // reject overlong encodings and surrogates
  static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len]) throw Utf8Error(start, "overlong UTF-8 encoding");
  if (cp >= 0xD800 && cp <= 0xDFFF) throw Utf8Error(start, "UTF-8 encoded surrogate");
  if (cp > 0x10FFFF) throw Utf8Error(start, "code point out of range");

  pos = start + len;
  return cp;
}

std::vector<char32_t> to_code_points(std::string_view text) {
  std::vector<char32_t> cps;
  cps.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) cps.push_back(decode_utf8(text, pos));
  return cps;
}

void append_utf8(std::string& out, char32_t cp) {
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

std::string to_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

namespace {

struct Range {
  char32_t lo, hi;
};

// Alphabetic blocks; a few symbol code points inside them are excluded below.
constexpr Range kLetterRanges[] = {
    {U'A', U'Z'},       {U'a', U'z'},
    {0x00C0, 0x024F},   // Latin-1 letters .. Latin Extended-B
    {0x0250, 0x02AF},   // IPA extensions
    {0x0386, 0x0386},   {0x0388, 0x03FF},  // Greek
    {0x0400, 0x04FF},   // Cyrillic
    {0x0500, 0x052F},   // Cyrillic supplement
    {0x0531, 0x0556},   {0x0561, 0x0587},  // Armenian
    {0x05D0, 0x05EA},   // Hebrew
    {0x0620, 0x064A},   {0x0660, 0x0669},  // Arabic letters + digits
    {0x3040, 0x30FF},   // Hiragana, Katakana
    {0x4E00, 0x9FFF},   // CJK unified
    {0xAC00, 0xD7A3},   // Hangul syllables
};

}  // namespace

bool is_word_char(char32_t cp) {
  if (cp >= U'0' && cp <= U'9') return true;
  if (cp == 0x00D7 || cp == 0x00F7) return false;  // multiplication/division signs
  if (cp == 0x30FB || cp == 0x3099 || cp == 0x309A) return false;
  for (const auto& r : kLetterRanges)
    if (cp >= r.lo && cp <= r.hi) return true;
  return false;
}

bool is_space_char(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x00A0:
    case 0x2028:
    case 0x2029:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200B;
  }
}

char32_t fold_case(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;  // Latin-1
  if (cp >= 0x0100 && cp <= 0x0137) return (cp % 2 == 0) ? cp + 1 : cp;  // Latin Ext-A pairs
  if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) return cp + 0x20;  // Greek
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;                  // Cyrillic А..Я
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;                  // Ѐ..Џ (incl. Ё)
  return cp;
}

}  // namespace subvec
