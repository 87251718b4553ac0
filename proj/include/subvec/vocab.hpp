#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace subvec {

/// Splits UTF-8 text into tokens: maximal runs of letters/digits, every other
/// non-whitespace code point as a single-character token. Whitespace is
/// discarded. Throws Utf8Error (with byte offset) on malformed input.
std::vector<std::string> tokenize(std::string_view text, bool lowercase = true);

/// Frequency-ranked word table. Ids run over [0, size()) in descending count
/// order, ties broken lexicographically.
struct Vocabulary {
  std::vector<std::string> words;
  std::vector<std::uint64_t> counts;
  std::uint64_t total_tokens = 0;  // token count of the full stream, dropped words included
  std::unordered_map<std::string, std::uint32_t> word_to_id;

  std::size_t size() const { return words.size(); }

  std::optional<std::uint32_t> id_of(const std::string& word) const {
    auto it = word_to_id.find(word);
    if (it == word_to_id.end()) return std::nullopt;
    return it->second;
  }
};

Vocabulary build_vocab(const std::vector<std::string>& tokens, std::size_t max_vocab,
                       std::uint64_t min_count);

/// Streaming variant: tokenizes `path` line by line.
Vocabulary build_vocab_file(const std::string& path, bool lowercase, std::size_t max_vocab,
                            std::uint64_t min_count);

/// min(1, (sqrt(f/t) + 1) * (t/f)) with f = count/total.
double keep_probability(std::uint64_t count, std::uint64_t total, double t);

/// Cumulative distribution over word ids with P(i) proportional to count^power.
struct NoiseTable {
  std::vector<double> cumulative;  // strictly increasing, last entry 1.0
  double power = 0.75;
};

NoiseTable build_noise_table(const Vocabulary& vocab, double power = 0.75);

std::uint32_t sample_negative(const NoiseTable& table, std::mt19937_64& rng);

// "#total N" header, then "word\tcount" per word in id order.
void save_vocab(const Vocabulary& vocab, const std::string& path);
Vocabulary load_vocab(const std::string& path);

}  // namespace subvec
