#include "subvec/vocab.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "subvec/utf8.hpp"

namespace subvec {

std::vector<std::string> tokenize(std::string_view text, bool lowercase) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp = decode_utf8(text, pos);
    if (is_space_char(cp)) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
      continue;
    }
    if (lowercase) cp = fold_case(cp);
    if (is_word_char(cp)) {
      append_utf8(current, cp);
    } else {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
      std::string punct;
      append_utf8(punct, cp);
      tokens.push_back(std::move(punct));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

namespace {

Vocabulary finish_vocab(std::unordered_map<std::string, std::uint64_t>&& freq,
                        std::uint64_t total, std::size_t max_vocab, std::uint64_t min_count) {
  std::vector<std::pair<std::string, std::uint64_t>> entries;
  entries.reserve(freq.size());
  for (auto& [word, count] : freq)
    if (count >= min_count) entries.emplace_back(word, count);

  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (entries.size() > max_vocab) entries.resize(max_vocab);

  Vocabulary vocab;
  vocab.total_tokens = total;
  vocab.words.reserve(entries.size());
  vocab.counts.reserve(entries.size());
  for (auto& [word, count] : entries) {
    vocab.word_to_id.emplace(word, static_cast<std::uint32_t>(vocab.words.size()));
    vocab.words.push_back(std::move(word));
    vocab.counts.push_back(count);
  }
  return vocab;
}

}  // namespace

Vocabulary build_vocab(const std::vector<std::string>& tokens, std::size_t max_vocab,
                       std::uint64_t min_count) {
  if (max_vocab < 1 || min_count < 1) throw std::invalid_argument("max_vocab and min_count must be >= 1");
  std::unordered_map<std::string, std::uint64_t> freq;
  for (const auto& t : tokens) ++freq[t];
  return finish_vocab(std::move(freq), tokens.size(), max_vocab, min_count);
}

Vocabulary build_vocab_file(const std::string& path, bool lowercase, std::size_t max_vocab,
                            std::uint64_t min_count) {
  if (max_vocab < 1 || min_count < 1) throw std::invalid_argument("max_vocab and min_count must be >= 1");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::unordered_map<std::string, std::uint64_t> freq;
  std::uint64_t total = 0;
  std::string line;
  while (std::getline(in, line)) {
    for (auto& t : tokenize(line, lowercase)) {
      ++total;
      ++freq[std::move(t)];
    }
  }
  return finish_vocab(std::move(freq), total, max_vocab, min_count);
}

double keep_probability(std::uint64_t count, std::uint64_t total, double t) {
  if (count < 1 || total < count || t <= 0) throw std::invalid_argument("keep_probability preconditions violated");
  double f = static_cast<double>(count) / static_cast<double>(total);
  double p = (std::sqrt(f / t) + 1.0) * (t / f);
  return p < 1.0 ? p : 1.0;
}

NoiseTable build_noise_table(const Vocabulary& vocab, double power) {
  if (vocab.size() == 0) throw std::invalid_argument("noise table requires a non-empty vocabulary");
  NoiseTable table;
  table.power = power;
  table.cumulative.resize(vocab.size());
  double norm = 0.0;
  for (std::uint64_t c : vocab.counts) norm += std::pow(static_cast<double>(c), power);
  double acc = 0.0;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    acc += std::pow(static_cast<double>(vocab.counts[i]), power) / norm;
    table.cumulative[i] = acc;
  }
  table.cumulative.back() = 1.0;
  return table;
}

std::uint32_t sample_negative(const NoiseTable& table, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double u = unit(rng);
  auto it = std::upper_bound(table.cumulative.begin(), table.cumulative.end(), u);
  if (it == table.cumulative.end()) --it;
  return static_cast<std::uint32_t>(it - table.cumulative.begin());
}

void save_vocab(const Vocabulary& vocab, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write vocabulary file: " + path);
  out << "#total " << vocab.total_tokens << "\n";
  for (std::size_t i = 0; i < vocab.size(); ++i)
    out << vocab.words[i] << "\t" << vocab.counts[i] << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

Vocabulary load_vocab(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open vocabulary file: " + path);
  Vocabulary vocab;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.rfind("#total ", 0) == 0) {
      vocab.total_tokens = std::stoull(line.substr(7));
      continue;
    }
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected word<TAB>count");
    std::string word = line.substr(0, tab);
    std::uint64_t count = std::stoull(line.substr(tab + 1));
    vocab.word_to_id.emplace(word, static_cast<std::uint32_t>(vocab.words.size()));
    vocab.words.push_back(std::move(word));
    vocab.counts.push_back(count);
  }
  return vocab;
}

}  // namespace subvec
