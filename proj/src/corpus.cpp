#include "corpus.hpp"

#include <istream>

#include "utf8.hpp"

namespace mcseg {

namespace {

// Splits a line into whitespace-separated word strings, then each word into
// scalar tokens.
std::vector<Word> line_to_words(const std::string& line) {
  std::vector<Word> words;
  Word current;
  size_t pos = 0;
  while (pos < line.size()) {
    size_t start = pos;
    uint32_t cp = utf8::decode(line, pos);
    if (utf8::is_space(cp)) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.emplace_back(line.substr(start, pos - start));
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

bool is_marker_token(const AtomicToken& tok, const CriterionId& c) {
  return tok == c.open_token() || tok == c.close_token();
}

}  // namespace

std::vector<WordSentence> read_segmented_corpus(std::istream& in,
                                                const CriterionId& criterion) {
  std::vector<WordSentence> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<Word> words;
    try {
      words = line_to_words(line);
    } catch (const Error& e) {
      fail(ErrorCode::bad_format,
           "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (words.empty()) continue;  // blank line
    out.push_back(WordSentence{std::move(words), criterion});
  }
  return out;
}

std::vector<AtomicToken> normalize_tokens(const std::vector<AtomicToken>& tokens,
                                          const NormalizeOptions& opt) {
  return normalize_tokens_with_spans(tokens, nullptr, opt);
}

std::vector<AtomicToken> normalize_tokens_with_spans(
    const std::vector<AtomicToken>& tokens,
    std::vector<std::pair<size_t, size_t>>* spans,
    const NormalizeOptions& opt) {
  auto klass = [](const AtomicToken& t) -> int {
    if (t.size() == 1) {
      uint8_t c = static_cast<uint8_t>(t[0]);
      if (utf8::is_ascii_letter(c)) return 1;
      if (utf8::is_ascii_digit(c)) return 2;
    }
    return 0;
  };
  std::vector<AtomicToken> out;
  if (spans) spans->clear();
  size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].empty()) {
      fail(ErrorCode::invalid_argument, "empty atomic token");
    }
    int k = klass(tokens[i]);
    if (k == 0) {
      out.push_back(tokens[i]);
      if (spans) spans->emplace_back(i, i + 1);
      ++i;
      continue;
    }
    size_t j = i + 1;
    while (j < tokens.size() && klass(tokens[j]) == k) ++j;
    if (opt.merge_ascii_classes) {
      out.push_back(kMixedToken);
    } else {
      out.push_back(k == 1 ? kEngToken : kNumToken);
    }
    if (spans) spans->emplace_back(i, j);
    i = j;
  }
  return out;
}

const std::set<AtomicToken>& default_punctuation() {
  static const std::set<AtomicToken> kSet = {
      "\xE3\x80\x82",  // 。
      "\xEF\xBC\x9F",  // ？
      "\xEF\xBC\x81",  // ！
      "\xEF\xBC\x9B",  // ；
      "\xEF\xBC\x8C",  // ，
      "\xE3\x80\x81",  // 、
      ",", ".", "?", "!", ";"};
  return kSet;
}

std::vector<WordSentence> split_by_punctuation(
    const WordSentence& sentence, const std::set<AtomicToken>& splitters) {
  std::vector<WordSentence> out;
  WordSentence current;
  current.criterion = sentence.criterion;
  for (const Word& w : sentence.words) {
    current.words.push_back(w);
    if (w.size() == 1 && splitters.count(w[0])) {
      out.push_back(std::move(current));
      current = WordSentence{{}, sentence.criterion};
    }
  }
  if (!current.words.empty()) out.push_back(std::move(current));
  return out;
}

TaggedSentence words_to_bmes(const WordSentence& sentence) {
  TaggedSentence ts;
  ts.criterion = sentence.criterion;
  for (const Word& w : sentence.words) {
    if (w.empty()) {
      fail(ErrorCode::invalid_argument, "malformed input: empty word");
    }
    if (w.size() == 1) {
      ts.tokens.push_back(w[0]);
      ts.tags.push_back(Tag::S);
    } else {
      for (size_t i = 0; i < w.size(); ++i) {
        ts.tokens.push_back(w[i]);
        ts.tags.push_back(i == 0            ? Tag::B
                          : i + 1 == w.size() ? Tag::E
                                              : Tag::M);
      }
    }
  }
  return ts;
}

std::vector<std::pair<size_t, size_t>> bmes_to_word_spans(
    const std::vector<Tag>& tags) {
  std::vector<std::pair<size_t, size_t>> spans;
  size_t open_start = 0;
  bool open = false;
  auto close_at = [&](size_t end) {
    if (open) {
      spans.emplace_back(open_start, end);
      open = false;
    }
  };
  for (size_t t = 0; t < tags.size(); ++t) {
    switch (tags[t]) {
      case Tag::B:
        close_at(t);
        open = true;
        open_start = t;
        break;
      case Tag::S:
        close_at(t);
        spans.emplace_back(t, t + 1);
        break;
      case Tag::M:
        if (!open) {
          open = true;
          open_start = t;
        }
        break;
      case Tag::E:
        if (!open) {
          open = true;
          open_start = t;
        }
        close_at(t + 1);
        break;
    }
  }
  close_at(tags.size());
  return spans;
}

std::vector<std::string> bmes_to_words(const std::vector<AtomicToken>& tokens,
                                       const std::vector<Tag>& tags) {
  if (tokens.size() != tags.size()) {
    fail(ErrorCode::invalid_argument,
         "token/tag length mismatch: " + std::to_string(tokens.size()) +
             " vs " + std::to_string(tags.size()));
  }
  std::vector<std::string> words;
  for (auto [begin, end] : bmes_to_word_spans(tags)) {
    std::string w;
    for (size_t i = begin; i < end; ++i) w += tokens[i];
    words.push_back(std::move(w));
  }
  return words;
}

TaggedSentence wrap_with_criterion(const TaggedSentence& ts) {
  if (ts.criterion.empty()) {
    fail(ErrorCode::invalid_argument, "sentence has no criterion");
  }
  if (!ts.tokens.empty() && (is_marker_token(ts.tokens.front(), ts.criterion) ||
                             is_marker_token(ts.tokens.back(), ts.criterion))) {
    fail(ErrorCode::invalid_argument,
         "sentence already wrapped with " + ts.criterion.open_token());
  }
  if (ts.tokens.size() != ts.tags.size()) {
    fail(ErrorCode::invalid_argument, "token/tag length mismatch");
  }
  TaggedSentence out;
  out.criterion = ts.criterion;
  out.tokens.reserve(ts.tokens.size() + 2);
  out.tags.reserve(ts.tags.size() + 2);
  out.tokens.push_back(ts.criterion.open_token());
  out.tags.push_back(Tag::S);
  out.tokens.insert(out.tokens.end(), ts.tokens.begin(), ts.tokens.end());
  out.tags.insert(out.tags.end(), ts.tags.begin(), ts.tags.end());
  out.tokens.push_back(ts.criterion.close_token());
  out.tags.push_back(Tag::S);
  return out;
}

TaggedSentence strip_criterion(const TaggedSentence& ts) {
  const AtomicToken open = ts.criterion.open_token();
  const AtomicToken close = ts.criterion.close_token();
  if (ts.tokens.size() < 2 || ts.tokens.front() != open ||
      ts.tokens.back() != close) {
    fail(ErrorCode::invalid_argument,
         "sentence is not wrapped with " + open + " ... " + close);
  }
  TaggedSentence out;
  out.criterion = ts.criterion;
  out.tokens.assign(ts.tokens.begin() + 1, ts.tokens.end() - 1);
  out.tags.assign(ts.tags.begin() + 1, ts.tags.end() - 1);
  return out;
}

CharMap load_char_map(std::istream& in) {
  CharMap map;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      fail(ErrorCode::bad_format, "character map line " +
                                      std::to_string(line_no) +
                                      ": expected src<TAB>dst");
    }
    std::string src = line.substr(0, tab);
    std::string dst = line.substr(tab + 1);
    if (utf8::count_scalars(src) != 1 || utf8::count_scalars(dst) != 1) {
      fail(ErrorCode::bad_format,
           "character map line " + std::to_string(line_no) +
               ": both sides must be single characters");
    }
    map[src] = dst;
  }
  return map;
}

void apply_char_map(std::vector<AtomicToken>& tokens, const CharMap& map) {
  if (map.empty()) return;
  for (AtomicToken& t : tokens) {
    auto it = map.find(t);
    if (it != map.end()) t = it->second;
  }
}

void apply_char_map(WordSentence& sentence, const CharMap& map) {
  if (map.empty()) return;
  for (Word& w : sentence.words) apply_char_map(w, map);
}

}  // namespace mcseg
