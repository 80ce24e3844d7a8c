#include "severi/models.hpp"

#include "severi/errors.hpp"
#include "severi/staircase.hpp"

#include <cctype>
#include <numeric>
#include <regex>

namespace severi {

namespace {

std::string torus_word(int p, int q) {
  std::string inner;
  for (int i = 1; i < p; ++i) {
    if (!inner.empty())
      inner += ' ';
    inner += std::to_string(i);
  }
  return "(" + inner + ")^" + std::to_string(q);
}

// Torus knots that are simple singularities: y^p + x^q up to swapping.
std::optional<AdeType> ade_for_torus(int p, int q) {
  if (p > q)
    std::swap(p, q);
  if (p == 2)
    return AdeType(AdeFamily::A, q - 1);
  if (p == 3 && q == 4)
    return AdeType(AdeFamily::E, 6);
  if (p == 3 && q == 5)
    return AdeType(AdeFamily::E, 8);
  return std::nullopt;
}

} // namespace

BraidWord SingularityModel::braid() const {
  if (!link_braid)
    throw InvalidArgument(name + " has no braid presentation in the catalog");
  return parse_braid(link_braid->word, link_braid->strands);
}

SingularityModel ade_model(const AdeType& t) {
  SingularityModel m{t.name(), t.delta(), t.milnor(), t.branches(), NhSource::Staircase, t, {}};
  // T(2, n+1) for A_n; T(3,4) for E6; T(3,5) for E8. D_n and E7 links are
  // not torus links and carry no word.
  switch (t.family()) {
  case AdeFamily::A:
    m.link_braid = LinkBraid{2, "(1)^" + std::to_string(t.index() + 1)};
    break;
  case AdeFamily::E:
    if (t.index() == 6)
      m.link_braid = LinkBraid{3, "(1 2)^4"};
    else if (t.index() == 8)
      m.link_braid = LinkBraid{3, "(1 2)^5"};
    break;
  case AdeFamily::D:
    break;
  }
  return m;
}

SingularityModel torus_model(int p, int q) {
  if (p < 2 || q < 2)
    throw InvalidArgument("torus germ x^p - y^q needs p, q >= 2");
  if (std::gcd(p, q) != 1)
    throw InvalidArgument("torus germ x^p - y^q needs gcd(p, q) = 1");
  const int delta = (p - 1) * (q - 1) / 2;
  SingularityModel m{"T(" + std::to_string(p) + "," + std::to_string(q) + ")",
                     delta,
                     2 * delta,
                     1,
                     NhSource::None,
                     std::nullopt,
                     LinkBraid{p, torus_word(p, q)}};
  if (auto ade = ade_for_torus(p, q)) {
    m.ade = ade;
    m.nh_source = NhSource::Staircase;
  }
  return m;
}

std::vector<SingularityModel> catalog() {
  std::vector<SingularityModel> out;
  for (int n = 1; n <= 12; ++n)
    out.push_back(ade_model(AdeType(AdeFamily::A, n)));
  for (int n = 4; n <= 12; ++n)
    out.push_back(ade_model(AdeType(AdeFamily::D, n)));
  for (int n = 6; n <= 8; ++n)
    out.push_back(ade_model(AdeType(AdeFamily::E, n)));
  out.push_back(torus_model(3, 7));
  out.push_back(torus_model(4, 5));
  return out;
}

SingularityModel find_model(const std::string& name) {
  static const std::regex torus(R"(^\s*(?:[Tt](?:orus)?)\s*\(?\s*(\d+)\s*[, ]\s*(\d+)\s*\)?\s*$)");
  std::smatch m;
  if (std::regex_match(name, m, torus))
    return torus_model(std::stoi(m[1]), std::stoi(m[2]));
  return ade_model(AdeType::parse(name));
}

bool model_is_consistent(const SingularityModel& m) {
  if (m.mu != 2 * m.delta + 1 - m.branches)
    return false;
  if (m.link_braid) {
    const BraidWord w = m.braid();
    if (w.is_positive() && m.mu != w.writhe() - w.strands() + 1)
      return false;
    if (closure_components(w) != m.branches)
      return false;
  }
  return true;
}

LaurentPoly1 nh_generating_polynomial(const NhVector& n, int branches) {
  LaurentPoly1 out;
  for (int h = n.low(); h <= n.high(); ++h)
    out = out + LaurentPoly1::monomial(2 * h - branches, n.at(h));
  return out;
}

ConjectureReport conjecture_check(const SingularityModel& m, const EnumerationOptions& opts) {
  const BraidWord w = m.braid();
  PinfResult p = pinf_positive(w, opts);
  ConjectureReport report{m.name, p.pinf, std::move(p.counts), std::nullopt, std::nullopt,
                          ConjectureStatus::NhUnavailable};
  if (m.nh_source == NhSource::Staircase && m.ade) {
    report.nh = ade_nh(*m.ade);
    report.nh_side = nh_generating_polynomial(*report.nh, m.branches);
    report.status =
        *report.nh_side == report.pinf ? ConjectureStatus::Match : ConjectureStatus::Mismatch;
  }
  return report;
}

const char* to_string(ConjectureStatus s) {
  switch (s) {
  case ConjectureStatus::Match:
    return "match";
  case ConjectureStatus::Mismatch:
    return "mismatch";
  case ConjectureStatus::NhUnavailable:
    return "nh-unavailable";
  }
  return "?";
}

} // namespace severi
