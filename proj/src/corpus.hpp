#ifndef MCSEG_CORPUS_HPP
#define MCSEG_CORPUS_HPP

#include <iosfwd>
#include <set>
#include <unordered_map>
#include <utility>

#include "types.hpp"

namespace mcseg {

inline const AtomicToken kEngToken = "<ENG>";
inline const AtomicToken kNumToken = "<NUM>";
// Shared replacement when letter and digit runs are not distinguished.
inline const AtomicToken kMixedToken = "<X>";

struct NormalizeOptions {
  // Collapse ASCII letter runs and digit runs to the single shared token <X>
  // instead of the separate <ENG>/<NUM> pair.
  bool merge_ascii_classes = false;
};

// One sentence per non-blank line, words separated by Unicode whitespace,
// each word split into single-scalar tokens. Invalid UTF-8 reports the
// 1-based line number.
std::vector<WordSentence> read_segmented_corpus(std::istream& in,
                                                const CriterionId& criterion);

// Collapses each maximal run of ASCII letters to <ENG> and of ASCII digits to
// <NUM>; everything else passes through. Runs never cross the token-list
// boundary, so word-wise application keeps runs inside words.
std::vector<AtomicToken> normalize_tokens(const std::vector<AtomicToken>& tokens,
                                          const NormalizeOptions& opt = {});

// Same, but also reports for every output token the half-open range of input
// positions it replaced. Used to restore original surfaces after decoding.
std::vector<AtomicToken> normalize_tokens_with_spans(
    const std::vector<AtomicToken>& tokens,
    std::vector<std::pair<size_t, size_t>>* spans,
    const NormalizeOptions& opt = {});

// 。？！；，、 plus ASCII , . ? ! ;
const std::set<AtomicToken>& default_punctuation();

// Splits after every word that consists of exactly one splitter token; the
// punctuation word stays at the end of its fragment.
std::vector<WordSentence> split_by_punctuation(
    const WordSentence& sentence,
    const std::set<AtomicToken>& splitters = default_punctuation());

// Length-1 word -> [S]; length-k word -> [B, M x (k-2), E].
TaggedSentence words_to_bmes(const WordSentence& sentence);

// Word index ranges for a tag sequence. Ill-formed sequences are repaired
// deterministically: a boundary goes before every B and S and after every E
// and S; an orphan M or E joins the open word, or starts one if none is open.
std::vector<std::pair<size_t, size_t>> bmes_to_word_spans(
    const std::vector<Tag>& tags);

// Decodes tags to word strings (tokens concatenated per word). Total for any
// tag sequence; the concatenation of the result equals the input tokens.
std::vector<std::string> bmes_to_words(const std::vector<AtomicToken>& tokens,
                                       const std::vector<Tag>& tags);

// [<c>] + tokens + [</c>], both markers tagged S.
TaggedSentence wrap_with_criterion(const TaggedSentence& ts);

// Exact inverse of wrap_with_criterion; errors if the markers are absent or
// do not match ts.criterion.
TaggedSentence strip_criterion(const TaggedSentence& ts);

// Optional single-scalar substitution table (e.g. Traditional->Simplified),
// one src<TAB>dst pair per line. Identity for unlisted tokens.
using CharMap = std::unordered_map<std::string, std::string>;

CharMap load_char_map(std::istream& in);
void apply_char_map(std::vector<AtomicToken>& tokens, const CharMap& map);
void apply_char_map(WordSentence& sentence, const CharMap& map);

}  // namespace mcseg

#endif
