#include "subvec/subword.hpp"

#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "subvec/utf8.hpp"

namespace subvec {

SegmentKind parse_segment_kind(std::string_view name) {
  if (name == "sg") return SegmentKind::WholeWord;
  if (name == "ngrams") return SegmentKind::NGrams;
  if (name == "morph") return SegmentKind::Morphemes;
  if (name == "morphng") return SegmentKind::MorphNGrams;
  throw std::invalid_argument("unknown strategy: " + std::string(name) +
                              " (expected sg|ngrams|morph|morphng)");
}

std::string_view segment_kind_name(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::WholeWord: return "sg";
    case SegmentKind::NGrams: return "ngrams";
    case SegmentKind::Morphemes: return "morph";
    case SegmentKind::MorphNGrams: return "morphng";
  }
  throw std::invalid_argument("invalid segment kind");
}

void MorphemeLexicon::add(const std::string& word, std::vector<std::string> parts) {
  if (parts.empty()) throw std::invalid_argument("lexicon entry needs at least one morpheme");
  for (const auto& m : parts)
    if (morpheme_to_id.emplace(m, static_cast<std::uint32_t>(morphemes.size())).second)
      morphemes.push_back(m);
  auto it = word_to_entry.find(word);
  if (it != word_to_entry.end()) {
    entries[it->second].second = std::move(parts);
    ++duplicate_words;
  } else {
    word_to_entry.emplace(word, entries.size());
    entries.emplace_back(word, std::move(parts));
  }
}

const std::vector<std::string>* MorphemeLexicon::find(const std::string& word) const {
  auto it = word_to_entry.find(word);
  if (it == word_to_entry.end()) return nullptr;
  return &entries[it->second].second;
}

std::optional<std::uint32_t> MorphemeLexicon::morpheme_id(const std::string& morpheme) const {
  auto it = morpheme_to_id.find(morpheme);
  if (it == morpheme_to_id.end()) return std::nullopt;
  return it->second;
}

MorphemeLexicon load_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  MorphemeLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto bad = [&](const char* what) {
      return std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
    };
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw bad("expected word<TAB>morphemes");
    std::string word = line.substr(0, tab);
    if (word.empty()) throw bad("empty word field");
    std::vector<std::string> parts;
    std::size_t start = tab + 1;
    while (start <= line.size()) {
      auto space = line.find(' ', start);
      std::string part = line.substr(start, space == std::string::npos ? std::string::npos
                                                                        : space - start);
      if (part.empty()) throw bad("empty morpheme field");
      parts.push_back(std::move(part));
      if (space == std::string::npos) break;
      start = space + 1;
    }
    if (parts.empty()) throw bad("empty morpheme field");
    lex.add(word, std::move(parts));
  }
  return lex;
}

SegmentIdSpace make_segment_space(const SegmentationStrategy& strategy, std::uint32_t vocab_size,
                                  std::uint32_t morpheme_count) {
  SegmentIdSpace space;
  space.vocab_size = vocab_size;
  space.buckets = strategy.uses_ngrams() ? strategy.buckets : 0;
  space.morphemes = strategy.uses_morphemes() ? morpheme_count : 0;
  return space;
}

std::vector<std::string> extract_ngrams(const std::string& word, std::uint32_t n_min,
                                        std::uint32_t n_max) {
  if (word.empty()) throw std::invalid_argument("extract_ngrams: empty word");
  if (n_min < 1 || n_min > n_max) throw std::invalid_argument("extract_ngrams: bad n bounds");

  std::vector<char32_t> wrapped;
  wrapped.push_back(U'<');
  for (char32_t cp : to_code_points(word)) wrapped.push_back(cp);
  wrapped.push_back(U'>');

  std::vector<std::string> out;
  const std::size_t len = wrapped.size();
  for (std::uint32_t n = n_min; n <= n_max && n <= len; ++n) {
    for (std::size_t start = 0; start + n <= len; ++start) {
      std::string gram;
      for (std::size_t i = start; i < start + n; ++i) append_utf8(gram, wrapped[i]);
      out.push_back(std::move(gram));
    }
  }
  return out;
}

std::uint32_t fnv1a32(std::string_view bytes) {
  std::uint32_t h = 2166136261u;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 16777619u;
  }
  return h;
}

std::uint32_t hash_segment(std::string_view ngram, std::uint32_t buckets) {
  if (buckets < 1) throw std::invalid_argument("hash_segment: buckets must be >= 1");
  return fnv1a32(ngram) % buckets;
}

std::vector<std::uint32_t> segments_for(const std::string& word,
                                        std::optional<std::uint32_t> word_id,
                                        const SegmentationStrategy& strategy,
                                        const SegmentIdSpace& space,
                                        const MorphemeLexicon& lexicon) {
  std::vector<std::uint32_t> segs;
  if (strategy.kind == SegmentKind::WholeWord) {
    if (word_id) segs.push_back(*word_id);
    return segs;
  }

  std::unordered_set<std::uint32_t> seen;
  auto push = [&](std::uint32_t id) {
    if (seen.insert(id).second) segs.push_back(id);
  };

  const bool has_word_unit = strategy.include_word && word_id.has_value();
  if (has_word_unit) push(*word_id);

  if (strategy.uses_ngrams()) {
    const std::string whole = "<" + word + ">";
    for (const auto& gram : extract_ngrams(word, strategy.n_min, strategy.n_max)) {
      if (has_word_unit && gram == whole) continue;
      push(space.ngram_begin() + hash_segment(gram, strategy.buckets));
    }
  }

  if (strategy.uses_morphemes()) {
    auto push_morpheme = [&](const std::string& m) {
      if (auto id = lexicon.morpheme_id(m)) push(space.morpheme_begin() + *id);
    };
    if (const auto* parts = lexicon.find(word)) {
      for (const auto& m : *parts) push_morpheme(m);
    } else {
      push_morpheme(word);  // fallback: whole word as a single morpheme
    }
  }

  return segs;
}

}  // namespace subvec
