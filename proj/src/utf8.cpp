#include "utf8.hpp"

#include "error.hpp"

namespace mcseg::utf8 {

namespace {

[[noreturn]] void bad(size_t pos, const char* why) {
  fail(ErrorCode::bad_format,
       "invalid UTF-8 at byte " + std::to_string(pos) + ": " + why);
}

}  // namespace

uint32_t decode(std::string_view s, size_t& pos) {
  if (pos >= s.size()) bad(pos, "past end of input");
  uint8_t b0 = static_cast<uint8_t>(s[pos]);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  int len;
  uint32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    bad(pos, "bad lead byte");
  }
  if (pos + len > s.size()) bad(pos, "truncated sequence");
  for (int i = 1; i < len; ++i) {
    uint8_t b = static_cast<uint8_t>(s[pos + i]);
    if ((b & 0xC0) != 0x80) bad(pos, "bad continuation byte");
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr uint32_t kMinByLen[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMinByLen[len]) bad(pos, "overlong encoding");
  if (cp >= 0xD800 && cp <= 0xDFFF) bad(pos, "surrogate code point");
  if (cp > 0x10FFFF) bad(pos, "code point out of range");
  pos += len;
  return cp;
}

std::vector<std::string> split_scalars(std::string_view s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t start = pos;
    decode(s, pos);
    out.emplace_back(s.substr(start, pos - start));
  }
  return out;
}

size_t count_scalars(std::string_view s) {
  size_t pos = 0, n = 0;
  while (pos < s.size()) {
    decode(s, pos);
    ++n;
  }
  return n;
}

bool is_space(uint32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
    case 0x20: case 0x85: case 0xA0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

}  // namespace mcseg::utf8
