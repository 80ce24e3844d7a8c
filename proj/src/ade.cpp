#include "severi/ade.hpp"

#include "severi/errors.hpp"

#include <cctype>
#include <charconv>

namespace severi {

AdeType::AdeType(AdeFamily family, int index) : family_(family), index_(index) {
  switch (family) {
  case AdeFamily::A:
    if (index < 1)
      throw InvalidArgument("A_n needs n >= 1");
    delta_ = (index + 1) / 2;
    branches_ = (index % 2 == 1) ? 2 : 1;
    break;
  case AdeFamily::D:
    if (index < 4)
      throw InvalidArgument("D_n needs n >= 4");
    delta_ = (index % 2 == 0) ? (index + 2) / 2 : (index + 1) / 2;
    branches_ = (index % 2 == 0) ? 3 : 2;
    break;
  case AdeFamily::E:
    if (index == 6) {
      delta_ = 3;
      branches_ = 1;
    } else if (index == 7) {
      delta_ = 4;
      branches_ = 2;
    } else if (index == 8) {
      delta_ = 4;
      branches_ = 1;
    } else {
      throw InvalidArgument("E_n needs n in {6, 7, 8}");
    }
    break;
  }
  if (2 * delta_ + 1 - branches_ != index_)
    throw Error("internal: (delta, b) table inconsistent with mu for " + name());
}

AdeType AdeType::parse(std::string_view label) {
  if (label.empty())
    throw InvalidArgument("empty ADE label");
  AdeFamily family;
  switch (std::toupper(static_cast<unsigned char>(label.front()))) {
  case 'A':
    family = AdeFamily::A;
    break;
  case 'D':
    family = AdeFamily::D;
    break;
  case 'E':
    family = AdeFamily::E;
    break;
  default:
    throw InvalidArgument("unknown ADE family in '" + std::string(label) + "'");
  }
  std::string_view rest = label.substr(1);
  if (!rest.empty() && rest.front() == '_')
    rest.remove_prefix(1);
  int index = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
  if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size())
    throw InvalidArgument("malformed ADE label '" + std::string(label) + "'");
  return AdeType(family, index);
}

std::string AdeType::name() const {
  const char f = family_ == AdeFamily::A ? 'A' : family_ == AdeFamily::D ? 'D' : 'E';
  return std::string(1, f) + std::to_string(index_);
}

} // namespace severi
