#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "subvec/mat.hpp"
#include "subvec/subword.hpp"
#include "subvec/vocab.hpp"

namespace subvec {

struct TrainConfig {
  std::uint32_t dim = 100;
  std::uint32_t window = 5;     // max context offset m
  std::uint32_t negatives = 5;  // k
  float lr0 = 0.025f;
  float lr_min = 1e-4f;
  double subsample_t = 1e-4;
  std::uint32_t epochs = 5;
  std::uint64_t seed = 1;
  std::uint32_t threads = 1;
  bool deterministic = true;  // single worker, sequential update order
  bool lowercase = true;      // must match the tokenization used for the vocabulary

  void validate() const;
};

/// Input matrix over segment ids, output (context) matrix over word ids.
struct EmbeddingModel {
  SegmentationStrategy strategy;
  SegmentIdSpace space;
  Vocabulary vocab;
  MorphemeLexicon lexicon;
  std::uint32_t dim = 0;
  Mat<float> input;
  Mat<float> output;

  std::vector<std::uint32_t> segments_of(const std::string& word) const {
    return segments_for(word, vocab.id_of(word), strategy, space, lexicon);
  }
};

/// Input rows uniform in [-0.5/dim, 0.5/dim], output rows zero.
EmbeddingModel init_model(Vocabulary vocab, MorphemeLexicon lexicon,
                          const SegmentationStrategy& strategy, std::uint32_t dim,
                          std::uint64_t seed);

struct TrainStats {
  std::uint64_t in_vocab_tokens = 0;  // per epoch, pre-subsampling
  std::uint64_t oov_skipped = 0;      // per epoch
  std::uint64_t pairs_trained = 0;    // all epochs
  std::vector<double> epoch_mean_loss;
};

/// max(lr_min, lr0 * (1 - progress)).
float lr_at(double progress, const TrainConfig& cfg);

/// Skip-gram negative-sampling training over a text corpus. Each input line is
/// one context window boundary. threads == 1 (or deterministic) runs the
/// serial reference; otherwise an asynchronous OpenMP path updates the shared
/// matrices without synchronization.
TrainStats train(EmbeddingModel& model, const std::string& corpus_path, const NoiseTable& noise,
                 const TrainConfig& cfg);

std::pair<EmbeddingModel, TrainStats> train_embeddings(const std::string& corpus_path,
                                                       Vocabulary vocab, MorphemeLexicon lexicon,
                                                       const SegmentationStrategy& strategy,
                                                       const NoiseTable& noise,
                                                       const TrainConfig& cfg);

}  // namespace subvec
