#include "types.hpp"

namespace mcseg {

const char* tag_name(Tag t) {
  switch (t) {
    case Tag::B: return "B";
    case Tag::M: return "M";
    case Tag::E: return "E";
    case Tag::S: return "S";
  }
  fail(ErrorCode::invalid_argument, "bad tag value");
}

Tag tag_from_char(char c) {
  switch (c) {
    case 'B': return Tag::B;
    case 'M': return Tag::M;
    case 'E': return Tag::E;
    case 'S': return Tag::S;
  }
  fail(ErrorCode::invalid_argument, std::string("bad tag letter '") + c + "'");
}

CriterionId::CriterionId(std::string name) : name_(std::move(name)) {
  if (name_.empty() || name_.size() > 16) {
    fail(ErrorCode::invalid_argument,
         "criterion name must match [a-z0-9_]{1,16}, got \"" + name_ + "\"");
  }
  for (char c : name_) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) {
      fail(ErrorCode::invalid_argument,
           "criterion name must match [a-z0-9_]{1,16}, got \"" + name_ + "\"");
    }
  }
}

bool tags_well_formed(const std::vector<Tag>& tags) {
  bool open = false;  // inside a B..E word
  for (Tag t : tags) {
    switch (t) {
      case Tag::B:
        if (open) return false;
        open = true;
        break;
      case Tag::M:
      case Tag::E:
        if (!open) return false;
        if (t == Tag::E) open = false;
        break;
      case Tag::S:
        if (open) return false;
        break;
    }
  }
  return !open;
}

}  // namespace mcseg
