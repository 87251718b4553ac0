#include "subvec/trainer.hpp"

#include <omp.h>

#include <atomic>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "subvec/sgns.hpp"

namespace subvec {

void TrainConfig::validate() const {
  if (dim < 1) throw std::invalid_argument("dim must be >= 1");
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  if (negatives < 1) throw std::invalid_argument("negatives must be >= 1");
  if (!(lr_min > 0.0f) || lr_min > lr0) throw std::invalid_argument("need 0 < lr_min <= lr0");
  if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (subsample_t <= 0.0) throw std::invalid_argument("subsample threshold must be > 0");
}

EmbeddingModel init_model(Vocabulary vocab, MorphemeLexicon lexicon,
                          const SegmentationStrategy& strategy, std::uint32_t dim,
                          std::uint64_t seed) {
  EmbeddingModel model;
  model.strategy = strategy;
  model.vocab = std::move(vocab);
  model.lexicon = std::move(lexicon);
  model.dim = dim;
  model.space = make_segment_space(strategy, static_cast<std::uint32_t>(model.vocab.size()),
                                   static_cast<std::uint32_t>(model.lexicon.morpheme_count()));
  model.input = Mat<float>(model.space.size(), dim);
  model.output = Mat<float>(model.vocab.size(), dim);

  std::mt19937_64 rng(seed);
  const float bound = 0.5f / static_cast<float>(dim);
  std::uniform_real_distribution<float> uniform(-bound, bound);
  for (auto& v : model.input.data) v = uniform(rng);
  return model;
}

float lr_at(double progress, const TrainConfig& cfg) {
  if (progress < 0.0 || progress > 1.0) throw std::invalid_argument("progress must be in [0,1]");
  const float lr = cfg.lr0 * static_cast<float>(1.0 - progress);
  return lr > cfg.lr_min ? lr : cfg.lr_min;
}

namespace {

constexpr std::size_t kMaxSentence = 1000;

struct TokenizedCorpus {
  std::vector<std::uint32_t> ids;       // in-vocab tokens only
  std::vector<std::size_t> offsets;     // sentence boundaries, offsets.back() == ids.size()
  std::uint64_t oov_skipped = 0;

  std::size_t sentence_count() const { return offsets.empty() ? 0 : offsets.size() - 1; }
};

TokenizedCorpus load_corpus(const std::string& path, const Vocabulary& vocab, bool lowercase) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  TokenizedCorpus corpus;
  corpus.offsets.push_back(0);
  std::string line;
  std::size_t current_len = 0;
  while (std::getline(in, line)) {
    for (const auto& token : tokenize(line, lowercase)) {
      auto id = vocab.id_of(token);
      if (!id) {
        ++corpus.oov_skipped;
        continue;
      }
      corpus.ids.push_back(*id);
      if (++current_len >= kMaxSentence) {
        corpus.offsets.push_back(corpus.ids.size());
        current_len = 0;
      }
    }
    if (current_len > 0) {
      corpus.offsets.push_back(corpus.ids.size());
      current_len = 0;
    }
  }
  return corpus;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

TrainStats train(EmbeddingModel& model, const std::string& corpus_path, const NoiseTable& noise,
                 const TrainConfig& cfg) {
  cfg.validate();
  if (model.dim != cfg.dim) throw std::invalid_argument("model/config dim mismatch");

  const TokenizedCorpus corpus = load_corpus(corpus_path, model.vocab, cfg.lowercase);

  TrainStats stats;
  stats.in_vocab_tokens = corpus.ids.size();
  stats.oov_skipped = corpus.oov_skipped;

  // Per-word keep probabilities and segment lists, fixed for the whole run.
  const std::size_t vocab_size = model.vocab.size();
  std::vector<double> keep(vocab_size, 1.0);
  for (std::size_t i = 0; i < vocab_size; ++i)
    keep[i] = keep_probability(model.vocab.counts[i], model.vocab.total_tokens, cfg.subsample_t);
  std::vector<std::vector<std::uint32_t>> segments(vocab_size);
  for (std::size_t i = 0; i < vocab_size; ++i)
    segments[i] = segments_for(model.vocab.words[i], static_cast<std::uint32_t>(i),
                               model.strategy, model.space, model.lexicon);

  const double total_work =
      static_cast<double>(stats.in_vocab_tokens) * static_cast<double>(cfg.epochs);
  std::atomic<std::uint64_t> tokens_done{0};

  const std::int64_t n_sentences = static_cast<std::int64_t>(corpus.sentence_count());
  const bool serial = cfg.deterministic || cfg.threads == 1;

  struct SentenceWork {
    std::vector<std::uint32_t> kept;
    std::vector<std::uint32_t> negatives;
    std::vector<float> h_buf, grad_buf;
  };

  // Shared inner loop: sub-sample, then one step per (center, in-window
  // context) pair with a fresh dynamic window and fresh negatives.
  auto process_sentence = [&](std::int64_t si, std::mt19937_64& rng, SentenceWork& work,
                              double& loss_sum, std::uint64_t& pair_count) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t begin = corpus.offsets[si];
    const std::size_t end = corpus.offsets[si + 1];

    const float lr = lr_at(
        std::min(1.0, static_cast<double>(tokens_done.load(std::memory_order_relaxed)) /
                          (total_work > 0 ? total_work : 1.0)),
        cfg);

    work.kept.clear();
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint32_t id = corpus.ids[i];
      if (keep[id] >= 1.0 || unit(rng) < keep[id]) work.kept.push_back(id);
    }
    tokens_done.fetch_add(end - begin, std::memory_order_relaxed);

    const std::int64_t len = static_cast<std::int64_t>(work.kept.size());
    for (std::int64_t t = 0; t < len; ++t) {
      std::uniform_int_distribution<std::uint32_t> window_dist(1, cfg.window);
      const std::int64_t b = window_dist(rng);
      for (std::int64_t j = t - b; j <= t + b; ++j) {
        if (j == t || j < 0 || j >= len) continue;
        work.negatives.resize(cfg.negatives);
        for (auto& neg : work.negatives) neg = sample_negative(noise, rng);
        loss_sum += sgns_step<float>(model.input, model.output, segments[work.kept[t]],
                                     work.kept[j], work.negatives, lr, work.h_buf, work.grad_buf);
        ++pair_count;
      }
    }
  };

  auto check_finite = [&] {
    for (float v : model.input.data)
      if (!std::isfinite(v)) throw std::runtime_error("non-finite value in input matrix");
    for (float v : model.output.data)
      if (!std::isfinite(v)) throw std::runtime_error("non-finite value in output matrix");
  };

  for (std::uint32_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    double loss_sum = 0.0;
    std::uint64_t pair_count = 0;

    if (serial) {
      SentenceWork work;
      for (std::int64_t si = 0; si < n_sentences; ++si) {
        std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(epoch) ^ splitmix64(si + 1)));
        process_sentence(si, rng, work, loss_sum, pair_count);
      }
    } else {
#pragma omp parallel num_threads(static_cast<int>(cfg.threads)) reduction(+ : loss_sum, pair_count)
      {
        SentenceWork work;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t si = 0; si < n_sentences; ++si) {
          std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(epoch) ^ splitmix64(si + 1)));
          process_sentence(si, rng, work, loss_sum, pair_count);
        }
      }
    }

    stats.pairs_trained += pair_count;
    stats.epoch_mean_loss.push_back(pair_count > 0 ? loss_sum / static_cast<double>(pair_count)
                                                   : 0.0);
    check_finite();
  }
  return stats;
}

std::pair<EmbeddingModel, TrainStats> train_embeddings(const std::string& corpus_path,
                                                       Vocabulary vocab, MorphemeLexicon lexicon,
                                                       const SegmentationStrategy& strategy,
                                                       const NoiseTable& noise,
                                                       const TrainConfig& cfg) {
  EmbeddingModel model =
      init_model(std::move(vocab), std::move(lexicon), strategy, cfg.dim, cfg.seed);
  TrainStats stats = train(model, corpus_path, noise, cfg);
  return {std::move(model), std::move(stats)};
}

}  // namespace subvec
