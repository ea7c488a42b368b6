#ifndef MCSEG_VOCAB_HPP
#define MCSEG_VOCAB_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "types.hpp"

namespace mcseg {

// Frozen bidirectional token<->index tables for unigram characters and
// forward character bigrams (x_t, x_{t+1}), with </s> padding the final pair.
// Index 0 is the unknown entry in both tables. Indices are assigned by
// (frequency desc, token asc), so two builds over the same corpus agree.
class Vocab {
 public:
  static constexpr int kUnkIndex = 0;
  static const AtomicToken kUnkToken;       // "<unk>", reserved at index 0
  static const AtomicToken kBoundaryToken;  // "</s>"

  Vocab() = default;

  // Sentences must already be normalized and wrapped. Criterion markers are
  // always kept, regardless of min_count.
  static Vocab build(const std::vector<TaggedSentence>& sentences,
                     int min_count = 1);

  // Exact rebuild from serialized index-ordered token lists.
  static Vocab from_lists(std::vector<std::string> unigrams,
                          std::vector<std::string> bigram_keys);

  bool frozen() const { return frozen_; }

  // Misses return kUnkIndex.
  int lookup_unigram(const AtomicToken& token) const;
  int lookup_bigram(const AtomicToken& first, const AtomicToken& second) const;

  // Bigram index at 0-based position t in [0, tokens.size()); the token after
  // the last one is kBoundaryToken.
  int bigram_at(const std::vector<AtomicToken>& tokens, size_t t) const;

  size_t unigram_size() const { return uni_list_.size(); }
  size_t bigram_size() const { return bi_list_.size(); }

  const std::string& unigram_token(size_t index) const;
  // Serialized form of a bigram entry: first and second joined by a tab.
  const std::string& bigram_key(size_t index) const;

  friend bool operator==(const Vocab& a, const Vocab& b) {
    return a.uni_list_ == b.uni_list_ && a.bi_list_ == b.bi_list_;
  }

 private:
  void require_frozen() const;
  void index_lists();

  bool frozen_ = false;
  std::unordered_map<std::string, int> uni_, bi_;
  std::vector<std::string> uni_list_, bi_list_;
};

inline std::string bigram_join(const AtomicToken& first,
                               const AtomicToken& second) {
  return first + '\t' + second;
}

}  // namespace mcseg

#endif
