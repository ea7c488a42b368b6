#ifndef MCSEG_TYPES_HPP
#define MCSEG_TYPES_HPP

#include <string>
#include <vector>

#include "error.hpp"

namespace mcseg {

// One input symbol: a single Unicode scalar, or an indivisible multi-character
// special such as <ENG>, <NUM>, <pku>, </pku>. Never empty.
using AtomicToken = std::string;

// A word is a non-empty sequence of atomic tokens.
using Word = std::vector<AtomicToken>;

// Data tags. Start/End exist only inside the CRF lattice (indices 4 and 5);
// they never appear in a TaggedSentence.
enum class Tag : int { B = 0, M = 1, E = 2, S = 3 };

constexpr int kNumDataTags = 4;

const char* tag_name(Tag t);
Tag tag_from_char(char c);

// Names a segmentation convention; determines the <name> and </name> marker
// tokens wrapped around every sentence of that corpus.
class CriterionId {
 public:
  CriterionId() = default;
  explicit CriterionId(std::string name);  // validates [a-z0-9_]{1,16}

  const std::string& name() const { return name_; }
  AtomicToken open_token() const { return "<" + name_ + ">"; }
  AtomicToken close_token() const { return "</" + name_ + ">"; }
  bool empty() const { return name_.empty(); }

  friend bool operator==(const CriterionId& a, const CriterionId& b) {
    return a.name_ == b.name_;
  }
  friend bool operator!=(const CriterionId& a, const CriterionId& b) {
    return !(a == b);
  }
  friend bool operator<(const CriterionId& a, const CriterionId& b) {
    return a.name_ < b.name_;
  }

 private:
  std::string name_;
};

// Gold segmentation of one sentence.
struct WordSentence {
  std::vector<Word> words;
  CriterionId criterion;
};

struct TaggedSentence {
  std::vector<AtomicToken> tokens;
  std::vector<Tag> tags;  // parallel to tokens
  CriterionId criterion;
};

// B is followed by M or E; M by M or E; E and S by B, S, or end of sentence.
bool tags_well_formed(const std::vector<Tag>& tags);

}  // namespace mcseg

#endif
