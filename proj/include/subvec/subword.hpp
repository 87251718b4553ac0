#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace subvec {

enum class SegmentKind : std::uint32_t {
  WholeWord = 0,
  NGrams = 1,
  Morphemes = 2,
  MorphNGrams = 3,
};

/// How a word maps to its set of trainable units.
struct SegmentationStrategy {
  SegmentKind kind = SegmentKind::WholeWord;
  std::uint32_t n_min = 3;
  std::uint32_t n_max = 6;
  std::uint32_t buckets = 2'000'000;
  bool include_word = true;

  bool uses_ngrams() const { return kind == SegmentKind::NGrams || kind == SegmentKind::MorphNGrams; }
  bool uses_morphemes() const { return kind == SegmentKind::Morphemes || kind == SegmentKind::MorphNGrams; }
};

/// Parses one of "sg", "ngrams", "morph", "morphng".
SegmentKind parse_segment_kind(std::string_view name);
std::string_view segment_kind_name(SegmentKind kind);

/// Word -> ordered morpheme list, with a dense id per distinct morpheme.
/// Entry and morpheme-id order follow first appearance in the source file so
/// the mapping survives serialization.
struct MorphemeLexicon {
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;
  std::unordered_map<std::string, std::size_t> word_to_entry;
  std::vector<std::string> morphemes;
  std::unordered_map<std::string, std::uint32_t> morpheme_to_id;
  std::size_t duplicate_words = 0;  // later entries replaced earlier ones at load

  std::size_t morpheme_count() const { return morphemes.size(); }
  bool empty() const { return entries.empty(); }

  /// Replaces any previous entry for `word`.
  void add(const std::string& word, std::vector<std::string> parts);

  const std::vector<std::string>* find(const std::string& word) const;
  std::optional<std::uint32_t> morpheme_id(const std::string& morpheme) const;
};

/// UTF-8 TSV: word<TAB>morphemes separated by single spaces.
MorphemeLexicon load_lexicon(const std::string& path);

/// Layout of the global segment-id space:
/// [0, vocab_size) word ids, then `buckets` n-gram ids, then morpheme ids.
struct SegmentIdSpace {
  std::uint32_t vocab_size = 0;
  std::uint32_t buckets = 0;    // 0 when the strategy has no n-gram range
  std::uint32_t morphemes = 0;  // 0 when the strategy has no morpheme range

  std::uint32_t size() const { return vocab_size + buckets + morphemes; }
  std::uint32_t ngram_begin() const { return vocab_size; }
  std::uint32_t morpheme_begin() const { return vocab_size + buckets; }
};

SegmentIdSpace make_segment_space(const SegmentationStrategy& strategy, std::uint32_t vocab_size,
                                  std::uint32_t morpheme_count);

/// All contiguous code-point substrings of "<word>" with length in
/// [n_min, n_max], ordered by (length, start).
std::vector<std::string> extract_ngrams(const std::string& word, std::uint32_t n_min,
                                        std::uint32_t n_max);

std::uint32_t fnv1a32(std::string_view bytes);

/// FNV-1a over UTF-8 bytes, reduced mod `buckets`.
std::uint32_t hash_segment(std::string_view ngram, std::uint32_t buckets);

/// Segment ids of `word` under `strategy`, duplicates removed, in (word,
/// n-grams, morphemes) order. The full wrapped n-gram "<word>" is dropped when
/// the word already contributes its whole-word unit. OOV words yield sub-word
/// units only; the result is empty only when no unit is representable.
std::vector<std::uint32_t> segments_for(const std::string& word,
                                        std::optional<std::uint32_t> word_id,
                                        const SegmentationStrategy& strategy,
                                        const SegmentIdSpace& space,
                                        const MorphemeLexicon& lexicon);

}  // namespace subvec
