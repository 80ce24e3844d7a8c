#include "severi/json_io.hpp"

#include "severi/errors.hpp"

#include <limits>

namespace severi {

Json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer())
    return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      return BigInt(s);
    } catch (const std::exception&) {
      throw ParseError("not a decimal integer: '" + s + "'");
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json to_json(const LaurentPoly1& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back(Json::array({e, c.str()}));
  return out;
}

Json to_json(const LaurentPoly2& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.terms())
    out.push_back(Json::array({k.first, k.second, c.str()}));
  return out;
}

Json to_json(const TruncatedSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs())
    out.push_back(integer_json(c));
  return out;
}

Json to_json(const NhVector& v) {
  Json values = Json::array();
  for (const auto& c : v.values())
    values.push_back(integer_json(c));
  return Json{{"kind", v.kind() == NhKind::Local ? "local" : "global"},
              {"low", v.low()},
              {"values", std::move(values)}};
}

NhVector nh_from_json(const Json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "local" && kind != "global")
      throw ParseError("NhVector kind must be \"local\" or \"global\"");
    std::vector<BigInt> values;
    for (const auto& v : j.at("values"))
      values.push_back(integer_from_json(v));
    return NhVector(kind == "local" ? NhKind::Local : NhKind::Global, j.at("low").get<int>(),
                    std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed NhVector record: ") + e.what());
  }
}

Json braid_json(const BraidWord& w, const std::optional<HomflyValue>& homfly,
                const std::optional<PinfResult>& pinf) {
  Json out{{"strands", w.strands()}, {"writhe", w.writhe()}};
  if (homfly) {
    out["homfly"] = to_json(homfly->unnormalized);
    out["homfly_normalized"] = homfly->normalized ? to_json(*homfly->normalized) : Json(nullptr);
    out["pinf"] = to_json(lowest_a_part(homfly->unnormalized).part);
  }
  if (pinf) {
    out["pinf"] = to_json(pinf->pinf);
    Json counts = Json::array();
    for (std::size_t r = 0; r < pinf->counts.size(); ++r)
      counts.push_back(Json::array({r, pinf->counts[r]}));
    out["counts"] = std::move(counts);
  }
  return out;
}

Json to_json(const SingularityModel& m) {
  Json out{{"name", m.name},
           {"delta", m.delta},
           {"mu", m.mu},
           {"branches", m.branches},
           {"nh_source", m.nh_source == NhSource::Staircase ? "staircase" : "none"}};
  if (m.link_braid)
    out["braid"] = Json{{"strands", m.link_braid->strands}, {"word", m.link_braid->word}};
  else
    out["braid"] = nullptr;
  return out;
}

Json to_json(const ConjectureReport& r) {
  Json counts = Json::array();
  for (std::size_t k = 0; k < r.counts.size(); ++k)
    counts.push_back(Json::array({k, r.counts[k]}));
  return Json{{"model", r.model},
              {"status", to_string(r.status)},
              {"pinf", to_json(r.pinf)},
              {"counts", std::move(counts)},
              {"nh", r.nh ? to_json(*r.nh) : Json(nullptr)},
              {"nh_side", r.nh_side ? to_json(*r.nh_side) : Json(nullptr)}};
}

Json dynkin_json(const AdeType& t) {
  const SimpleGraph g = SimpleGraph::dynkin(t);
  const auto poly = independence_polynomial(g);
  Json counts = Json::array();
  for (std::size_t k = 0; k < poly.size(); ++k)
    counts.push_back(Json::array({k, integer_json(poly[k])}));
  return Json{{"type", t.name()},
              {"vertices", g.vertex_count()},
              {"counts", std::move(counts)},
              {"nh", to_json(dynkin_nh(t))}};
}

} // namespace severi
