#include "severi/severi.h"

#include "severi/braid.hpp"
#include "severi/dynkin.hpp"
#include "severi/errors.hpp"
#include "severi/genus_transform.hpp"
#include "severi/json_io.hpp"
#include "severi/models.hpp"
#include "severi/selftest.hpp"
#include "severi/staircase.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <sstream>

struct severi_series {
  severi::TruncatedSeries value;
};
struct severi_nh {
  severi::NhVector value;
};
struct severi_braid {
  severi::BraidWord value;
};
struct severi_homfly {
  severi::HomflyValue value;
};
struct severi_pinf {
  severi::PinfResult value;
};

namespace {

thread_local std::string g_last_error;
std::atomic<unsigned> g_max_letters{0};
std::atomic<unsigned> g_threads{0};

severi::EnumerationOptions options() {
  auto opts = severi::default_enumeration_options();
  if (unsigned v = g_max_letters.load())
    opts.max_letters = v;
  if (unsigned v = g_threads.load())
    opts.threads = v;
  return opts;
}

severi_status fail(severi_status s, const char* what) {
  g_last_error = what;
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
severi_status guarded(F&& f) {
  try {
    f();
    return SEVERI_OK;
  } catch (const severi::InvalidArgument& e) {
    return fail(SEVERI_INVALID_ARGUMENT, e.what());
  } catch (const severi::ParseError& e) {
    return fail(SEVERI_PARSE_ERROR, e.what());
  } catch (const severi::InsufficientOrder& e) {
    return fail(SEVERI_INSUFFICIENT_ORDER, e.what());
  } catch (const severi::BudgetExceeded& e) {
    return fail(SEVERI_BUDGET_EXCEEDED, e.what());
  } catch (const severi::DomainError& e) {
    return fail(SEVERI_DOMAIN_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SEVERI_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(SEVERI_INTERNAL_ERROR, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* name) {
  if (p == nullptr)
    throw severi::InvalidArgument(std::string(name) + " must not be null");
}

std::vector<severi::BigInt> parse_csv(const char* csv) {
  require(csv, "coefficient list");
  std::vector<severi::BigInt> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw severi::ParseError("empty entry in coefficient list '" + std::string(csv) + "'");
    item = item.substr(b, e - b + 1);
    const std::size_t digits_from = (item[0] == '-' || item[0] == '+') ? 1 : 0;
    if (digits_from == item.size() ||
        item.find_first_not_of("0123456789", digits_from) != std::string::npos)
      throw severi::ParseError("not a decimal integer: '" + item + "'");
    out.emplace_back(item[0] == '+' ? item.substr(1) : item);
  }
  if (out.empty())
    throw severi::ParseError("empty coefficient list");
  return out;
}

severi::LaurentPoly1 poly_from_csv(const char* csv) {
  const auto c = parse_csv(csv);
  severi::LaurentPoly1::Map m;
  for (std::size_t i = 0; i < c.size(); ++i)
    m.emplace(static_cast<int>(i), c[i]);
  return severi::LaurentPoly1(std::move(m));
}

severi::InfinityModel to_model(severi_model m) {
  switch (m) {
  case SEVERI_MODEL_A:
    return severi::InfinityModel::A;
  case SEVERI_MODEL_D:
    return severi::InfinityModel::D;
  case SEVERI_MODEL_E:
    return severi::InfinityModel::E;
  }
  throw severi::InvalidArgument("unknown model");
}

} // namespace

extern "C" {

const char* severi_last_error(void) { return g_last_error.c_str(); }

const char* severi_status_name(severi_status status) {
  switch (status) {
  case SEVERI_OK:
    return "ok";
  case SEVERI_INVALID_ARGUMENT:
    return "invalid argument";
  case SEVERI_PARSE_ERROR:
    return "parse error";
  case SEVERI_INSUFFICIENT_ORDER:
    return "insufficient truncation order";
  case SEVERI_BUDGET_EXCEEDED:
    return "enumeration budget exceeded";
  case SEVERI_DOMAIN_ERROR:
    return "domain error";
  case SEVERI_INTERNAL_ERROR:
    return "internal error";
  }
  return "unknown status";
}

void severi_string_free(char* s) { std::free(s); }

void severi_set_max_letters(unsigned letters) { g_max_letters = letters; }
void severi_set_threads(unsigned threads) { g_threads = threads; }

// ---- series

severi_status severi_series_from_csv(const char* csv, severi_series** out) {
  return guarded([&] {
    require(out, "out");
    *out = new severi_series{severi::TruncatedSeries(parse_csv(csv))};
  });
}

severi_status severi_series_model(severi_model model, unsigned order, int enumerate,
                                  severi_series** out) {
  return guarded([&] {
    require(out, "out");
    const auto m = to_model(model);
    *out = new severi_series{enumerate ? severi::enumerated_series(m, order)
                                       : severi::model_series(m, order)};
  });
}

severi_status severi_series_expand_rational(const char* numerator_csv,
                                            const char* const* denominator_csvs,
                                            size_t denominator_count, unsigned order,
                                            severi_series** out) {
  return guarded([&] {
    require(out, "out");
    if (denominator_count > 0)
      require(denominator_csvs, "denominators");
    std::vector<severi::LaurentPoly1> dens;
    for (size_t i = 0; i < denominator_count; ++i)
      dens.push_back(poly_from_csv(denominator_csvs[i]));
    *out = new severi_series{severi::expand_rational(poly_from_csv(numerator_csv), dens, order)};
  });
}

void severi_series_free(severi_series* s) { delete s; }

unsigned severi_series_order(const severi_series* s) { return s ? s->value.order() : 0; }

severi_status severi_series_to_json(const severi_series* s, char** out) {
  return guarded([&] {
    require(s, "series");
    require(out, "out");
    *out = dup_string(severi::to_json(s->value).dump());
  });
}

severi_status severi_series_to_text(const severi_series* s, char** out) {
  return guarded([&] {
    require(s, "series");
    require(out, "out");
    std::string text;
    for (const auto& c : s->value.coeffs())
      text += (text.empty() ? "" : ",") + c.str();
    *out = dup_string(text);
  });
}

// ---- n_h

severi_status severi_nh_from_series_local(const severi_series* hilb, int delta, int branches,
                                          severi_nh** out) {
  return guarded([&] {
    require(hilb, "series");
    require(out, "out");
    severi::LocalGermData d;
    d.delta = delta;
    d.branches = branches;
    d.hilb = hilb->value;
    *out = new severi_nh{severi::nh_from_series_local(d)};
  });
}

severi_status severi_nh_from_series_global(const severi_series* hilb, int genus,
                                           severi_nh** out) {
  return guarded([&] {
    require(hilb, "series");
    require(out, "out");
    severi::GlobalCurveData d;
    d.genus = genus;
    d.hilb = hilb->value;
    *out = new severi_nh{severi::nh_from_series_global(d)};
  });
}

severi_status severi_nh_from_values(int is_local, int low, const char* values_csv,
                                    severi_nh** out) {
  return guarded([&] {
    require(out, "out");
    *out = new severi_nh{severi::NhVector(is_local ? severi::NhKind::Local : severi::NhKind::Global,
                                          low, parse_csv(values_csv))};
  });
}

severi_status severi_nh_from_json(const char* json, severi_nh** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    severi::Json j;
    try {
      j = severi::Json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      throw severi::ParseError(e.what());
    }
    *out = new severi_nh{severi::nh_from_json(j)};
  });
}

severi_status severi_nh_combine(int geometric_genus, const severi_nh* const* locals, size_t count,
                                severi_nh** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0)
      require(locals, "locals");
    std::vector<severi::NhVector> v;
    for (size_t i = 0; i < count; ++i) {
      require(locals[i], "local vector");
      v.push_back(locals[i]->value);
    }
    *out = new severi_nh{severi::combine_local(geometric_genus, v)};
  });
}

severi_status severi_nh_ade(const char* label, severi_ade_method method, severi_nh** out) {
  return guarded([&] {
    require(label, "label");
    require(out, "out");
    const auto t = severi::AdeType::parse(label);
    switch (method) {
    case SEVERI_ADE_TRUNCATION:
      *out = new severi_nh{severi::ade_nh(t)};
      return;
    case SEVERI_ADE_FORMULA:
      *out = new severi_nh{severi::ade_closed_nh(t)};
      return;
    case SEVERI_ADE_DYNKIN:
      *out = new severi_nh{severi::dynkin_nh(t)};
      return;
    }
    throw severi::InvalidArgument("unknown ADE method");
  });
}

severi_status severi_nh_to_series(const severi_nh* v, int branches, unsigned order,
                                  severi_series** out) {
  return guarded([&] {
    require(v, "vector");
    require(out, "out");
    if (v->value.kind() == severi::NhKind::Local)
      *out = new severi_series{severi::local_series_from_nh(v->value, branches, order)};
    else
      *out = new severi_series{severi::series_from_nh(v->value, order)};
  });
}

void severi_nh_free(severi_nh* v) { delete v; }

int severi_nh_is_local(const severi_nh* v) {
  return v && v->value.kind() == severi::NhKind::Local ? 1 : 0;
}
int severi_nh_low(const severi_nh* v) { return v ? v->value.low() : 0; }
int severi_nh_high(const severi_nh* v) { return v ? v->value.high() : -1; }

severi_status severi_nh_value(const severi_nh* v, int h, int64_t* out) {
  return guarded([&] {
    require(v, "vector");
    require(out, "out");
    const auto c = v->value.at(h);
    if (c > std::numeric_limits<int64_t>::max() || c < std::numeric_limits<int64_t>::min())
      throw severi::DomainError("n_" + std::to_string(h) + " does not fit in 64 bits");
    *out = static_cast<int64_t>(c);
  });
}

int severi_nh_equal(const severi_nh* x, const severi_nh* y) {
  return x && y && x->value == y->value ? 1 : 0;
}

severi_status severi_nh_to_json(const severi_nh* v, char** out) {
  return guarded([&] {
    require(v, "vector");
    require(out, "out");
    *out = dup_string(severi::to_json(v->value).dump());
  });
}

severi_status severi_nh_to_text(const severi_nh* v, char** out) {
  return guarded([&] {
    require(v, "vector");
    require(out, "out");
    std::string text = "[";
    for (std::size_t i = 0; i < v->value.values().size(); ++i)
      text += (i ? "," : "") + v->value.values()[i].str();
    *out = dup_string(text + "]");
  });
}

severi_status severi_global_checks_json(const severi_series* hilb, int genus, int geometric_genus,
                                        const char* euler, char** out, int* all_passed) {
  return guarded([&] {
    require(hilb, "series");
    require(out, "out");
    severi::GlobalCurveData d;
    d.genus = genus;
    d.geometric_genus = geometric_genus;
    d.hilb = hilb->value;
    const auto n = severi::nh_from_series_global(d);
    const auto low = severi::check_low_vanishing(hilb->value, genus);
    const bool below = severi::vanishes_below(n, geometric_genus);
    bool ok = low.ok && below;
    severi::Json report{{"nh", severi::to_json(n)},
                        {"low_vanishing", {{"ok", low.ok}, {"c", severi::integer_json(low.c)}}},
                        {"vanishes_below_geometric_genus", below}};
    if (euler != nullptr) {
      const auto values = parse_csv(euler);
      if (values.size() != 1)
        throw severi::ParseError("euler must be a single integer");
      const auto ids = severi::identity_checks(d, values.front());
      severi::Json arr = severi::Json::array();
      for (const auto& c : ids.checks)
        arr.push_back({{"name", c.name},
                       {"passed", c.passed},
                       {"expected", severi::integer_json(c.expected)},
                       {"actual", severi::integer_json(c.actual)}});
      report["identities"] = std::move(arr);
      ok = ok && ids.all_passed();
    }
    report["all_passed"] = ok;
    *out = dup_string(report.dump());
    if (all_passed)
      *all_passed = ok ? 1 : 0;
  });
}

// ---- braids

severi_status severi_braid_parse(const char* text, int strands, severi_braid** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new severi_braid{severi::parse_braid(text, strands)};
  });
}

void severi_braid_free(severi_braid* b) { delete b; }
int severi_braid_strands(const severi_braid* b) { return b ? b->value.strands() : 0; }
int severi_braid_writhe(const severi_braid* b) { return b ? b->value.writhe() : 0; }
size_t severi_braid_length(const severi_braid* b) { return b ? b->value.length() : 0; }
int severi_braid_components(const severi_braid* b) {
  return b ? severi::closure_components(b->value) : 0;
}
int severi_braid_is_positive(const severi_braid* b) {
  return b && b->value.is_positive() ? 1 : 0;
}

severi_status severi_braid_milnor(const severi_braid* b, int* mu) {
  return guarded([&] {
    require(b, "braid");
    require(mu, "mu");
    *mu = severi::milnor_from_braid(b->value).mu;
  });
}

severi_status severi_braid_homfly(const severi_braid* b, severi_homfly** out) {
  return guarded([&] {
    require(b, "braid");
    require(out, "out");
    *out = new severi_homfly{severi::jaeger_homfly(b->value, options())};
  });
}

void severi_homfly_free(severi_homfly* h) { delete h; }

uint64_t severi_homfly_admissible(const severi_homfly* h) { return h ? h->value.admissible : 0; }

severi_status severi_homfly_to_text(const severi_homfly* h, severi_homfly_form form, char** out) {
  return guarded([&] {
    require(h, "homfly");
    require(out, "out");
    switch (form) {
    case SEVERI_HOMFLY_UNNORMALIZED:
      *out = dup_string(h->value.unnormalized.to_string());
      return;
    case SEVERI_HOMFLY_NORMALIZED:
      if (!h->value.normalized)
        throw severi::DomainError("polynomial is not divisible by P(unknot)");
      *out = dup_string(h->value.normalized->to_string());
      return;
    case SEVERI_HOMFLY_PINF:
      *out = dup_string(severi::lowest_a_part(h->value.unnormalized).part.to_string("z"));
      return;
    }
    throw severi::InvalidArgument("unknown HOMFLY form");
  });
}

severi_status severi_braid_pinf(const severi_braid* b, severi_pinf** out) {
  return guarded([&] {
    require(b, "braid");
    require(out, "out");
    *out = new severi_pinf{severi::pinf_positive(b->value, options())};
  });
}

void severi_pinf_free(severi_pinf* p) { delete p; }
size_t severi_pinf_count_size(const severi_pinf* p) { return p ? p->value.counts.size() : 0; }
uint64_t severi_pinf_count(const severi_pinf* p, size_t r) {
  return p && r < p->value.counts.size() ? p->value.counts[r] : 0;
}

severi_status severi_pinf_to_text(const severi_pinf* p, char** out) {
  return guarded([&] {
    require(p, "pinf");
    require(out, "out");
    *out = dup_string(p->value.pinf.to_string("z"));
  });
}

severi_status severi_braid_to_json(const severi_braid* b, const severi_homfly* homfly,
                                   const severi_pinf* pinf, char** out) {
  return guarded([&] {
    require(b, "braid");
    require(out, "out");
    std::optional<severi::HomflyValue> h;
    std::optional<severi::PinfResult> p;
    if (homfly)
      h = homfly->value;
    if (pinf)
      p = pinf->value;
    *out = dup_string(severi::braid_json(b->value, h, p).dump());
  });
}

severi_status severi_braid_markov_json(const severi_braid* b, char** out, int* all_passed) {
  return guarded([&] {
    require(b, "braid");
    require(out, "out");
    const auto report = severi::markov_checks(b->value, options());
    severi::Json arr = severi::Json::array();
    for (const auto& c : report.checks)
      arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    *out = dup_string(severi::Json{{"checks", std::move(arr)}, {"all_passed", report.all_passed()}}.dump());
    if (all_passed)
      *all_passed = report.all_passed() ? 1 : 0;
  });
}

// ---- catalog and checks

severi_status severi_dynkin_json(const char* label, char** out) {
  return guarded([&] {
    require(label, "label");
    require(out, "out");
    *out = dup_string(severi::dynkin_json(severi::AdeType::parse(label)).dump());
  });
}

severi_status severi_catalog_json(char** out) {
  return guarded([&] {
    require(out, "out");
    severi::Json arr = severi::Json::array();
    for (const auto& m : severi::catalog())
      arr.push_back(severi::to_json(m));
    *out = dup_string(arr.dump());
  });
}

severi_status severi_conjecture_json(const char* model, char** out, int* status_out) {
  return guarded([&] {
    require(model, "model");
    require(out, "out");
    const auto report = severi::conjecture_check(severi::find_model(model), options());
    *out = dup_string(severi::to_json(report).dump());
    if (status_out)
      *status_out = report.status == severi::ConjectureStatus::Match      ? 1
                    : report.status == severi::ConjectureStatus::Mismatch ? 0
                                                                          : -1;
  });
}

severi_status severi_selftest(char** report, int* failures) {
  return guarded([&] {
    require(report, "report");
    int failed = 0;
    std::string text;
    for (const auto& r : severi::run_selftest()) {
      if (r.passed) {
        text += "PASS " + r.name + "\n";
      } else {
        ++failed;
        text += "FAIL " + r.name + ": " + r.detail + "\n";
      }
    }
    *report = dup_string(text);
    if (failures)
      *failures = failed;
  });
}

} // extern "C"
