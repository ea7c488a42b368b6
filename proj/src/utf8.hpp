#ifndef MCSEG_UTF8_HPP
#define MCSEG_UTF8_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mcseg::utf8 {

// Decodes the scalar starting at s[pos] and advances pos past it.
// Rejects truncated sequences, bad continuation bytes, overlong encodings,
// surrogates, and values above U+10FFFF.
uint32_t decode(std::string_view s, size_t& pos);

// Splits s into single-scalar strings.
std::vector<std::string> split_scalars(std::string_view s);

// Number of Unicode scalars in s.
size_t count_scalars(std::string_view s);

bool is_space(uint32_t cp);

inline bool is_ascii_letter(uint32_t cp) {
  return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z');
}

inline bool is_ascii_digit(uint32_t cp) { return cp >= '0' && cp <= '9'; }

}  // namespace mcseg::utf8

#endif
