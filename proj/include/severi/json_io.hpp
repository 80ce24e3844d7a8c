#pragma once

// JSON shapes shared by the C API and the CLI.
//   polynomial, one variable:  [[e, "c"], ...]
//   polynomial, two variables: [[a, z, "c"], ...]
//   NhVector: {"kind": "local"|"global", "low": int, "values": [ints]}
//   braid:    {"strands", "writhe", "homfly", "pinf", "counts"}

#include "severi/braid.hpp"
#include "severi/dynkin.hpp"
#include "severi/genus_transform.hpp"
#include "severi/laurent.hpp"
#include "severi/models.hpp"

#include <json.hpp>

#include <optional>

namespace severi {

using Json = nlohmann::ordered_json;

// int64 when it fits, otherwise the decimal string.
Json integer_json(const BigInt& v);
// Accepts integers and decimal strings.
BigInt integer_from_json(const Json& j);

Json to_json(const LaurentPoly1& p);
Json to_json(const LaurentPoly2& p);
Json to_json(const TruncatedSeries& s);
Json to_json(const NhVector& v);
NhVector nh_from_json(const Json& j);

// Fields left out when their optional input is absent.
Json braid_json(const BraidWord& w, const std::optional<HomflyValue>& homfly,
                const std::optional<PinfResult>& pinf);
Json to_json(const SingularityModel& m);
Json to_json(const ConjectureReport& r);
Json dynkin_json(const AdeType& t);

} // namespace severi
