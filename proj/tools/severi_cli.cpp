// Command-line front end over the libseveri C API.

#include "severi/severi.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

// Thrown after a failing C call; main prints it and exits nonzero.
struct CallFailed {
  severi_status status;
  std::string message;
};

void check(severi_status s) {
  if (s != SEVERI_OK)
    throw CallFailed{s, severi_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Series = std::unique_ptr<severi_series, Deleter<severi_series, severi_series_free>>;
using Nh = std::unique_ptr<severi_nh, Deleter<severi_nh, severi_nh_free>>;
using Braid = std::unique_ptr<severi_braid, Deleter<severi_braid, severi_braid_free>>;
using Homfly = std::unique_ptr<severi_homfly, Deleter<severi_homfly, severi_homfly_free>>;
using Pinf = std::unique_ptr<severi_pinf, Deleter<severi_pinf, severi_pinf_free>>;

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  severi_string_free(s);
  return out;
}

template <class Fn, class... Args>
std::string call_string(Fn fn, Args... args) {
  char* out = nullptr;
  check(fn(args..., &out));
  return take(out);
}

severi_model parse_model(const std::string& m) {
  if (m == "A" || m == "A_inf" || m == "a")
    return SEVERI_MODEL_A;
  if (m == "D" || m == "D_inf" || m == "d")
    return SEVERI_MODEL_D;
  if (m == "E" || m == "E_inf" || m == "e")
    return SEVERI_MODEL_E;
  throw CLI::ValidationError("--model", "expected A, D or E");
}

Braid parse_braid(const std::string& word, int strands) {
  severi_braid* b = nullptr;
  check(severi_braid_parse(word.c_str(), strands, &b));
  return Braid(b);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"severi: Hilbert-scheme series, Severi multiplicities n_h, and HOMFLY state sums"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  unsigned threads = 0;
  unsigned max_letters = 0;
  app.add_flag("--json", json, "Emit a single JSON document");
  app.add_option("--threads", threads, "Threads for braid enumeration (default 1)");
  app.add_option("--max-letters", max_letters, "Enumeration budget in letters (default 26)");

  int exit_code = 0;

  // series
  auto* series = app.add_subcommand("series", "Hilbert series of the A/D/E infinity models");
  std::string model;
  unsigned order = 10;
  bool enumerate = false;
  series->add_option("--model", model, "A, D or E")->required();
  series->add_option("--order", order, "Truncation order");
  series->add_flag("--enumerate", enumerate, "Count staircases instead of expanding the closed form");
  series->callback([&] {
    severi_series* s = nullptr;
    check(severi_series_model(parse_model(model), order, enumerate ? 1 : 0, &s));
    Series owned(s);
    std::cout << (json ? call_string(severi_series_to_json, owned.get())
                       : call_string(severi_series_to_text, owned.get()))
              << '\n';
  });

  // transform
  auto* transform = app.add_subcommand("transform", "Series of Euler numbers to n_h");
  bool local = false, global = false;
  int delta = 0, branches = 1, genus = 0, gtilde = -1;
  std::string coeffs, euler;
  auto* local_flag = transform->add_flag("--local", local, "Local germ transform");
  auto* global_flag = transform->add_flag("--global", global, "Global curve transform");
  local_flag->excludes(global_flag);
  transform->add_option("--delta", delta, "Delta invariant (local)");
  transform->add_option("--branches", branches, "Number of branches (local)");
  transform->add_option("--genus", genus, "Arithmetic genus (global)");
  transform->add_option("--gtilde", gtilde, "Geometric genus: check vanishing below it (global)");
  transform->add_option("--euler", euler, "Topological Euler number: check n_g, n_{g-1} (global)");
  transform->add_option("--coeffs", coeffs, "chi(C^[0]),chi(C^[1]),...")->required();
  transform->callback([&] {
    if (!local && !global)
      throw CLI::ValidationError("transform", "pass --local or --global");
    severi_series* s = nullptr;
    check(severi_series_from_csv(coeffs.c_str(), &s));
    Series hilb(s);
    severi_nh* v = nullptr;
    if (local)
      check(severi_nh_from_series_local(hilb.get(), delta, branches, &v));
    else
      check(severi_nh_from_series_global(hilb.get(), genus, &v));
    Nh nh(v);
    const bool checks = global && (gtilde >= 0 || !euler.empty());
    if (!checks) {
      std::cout << (json ? call_string(severi_nh_to_json, nh.get())
                         : call_string(severi_nh_to_text, nh.get()))
                << '\n';
      return;
    }
    char* out = nullptr;
    int ok = 0;
    check(severi_global_checks_json(hilb.get(), genus, gtilde < 0 ? 0 : gtilde,
                                    euler.empty() ? nullptr : euler.c_str(), &out, &ok));
    const std::string report = take(out);
    if (json)
      std::cout << report << '\n';
    else
      std::cout << call_string(severi_nh_to_text, nh.get()) << '\n'
                << (ok ? "checks: pass" : "checks: FAIL") << '\n';
    if (!ok)
      exit_code = 1;
  });

  // ade
  auto* ade = app.add_subcommand("ade", "n_h of a simple singularity");
  std::string type, method = "truncation";
  ade->add_option("--type", type, "A1..., D4..., E6, E7, E8")->required();
  ade->add_option("--method", method, "truncation | formula | dynkin | all")
      ->check(CLI::IsMember({"truncation", "formula", "dynkin", "all"}));
  ade->callback([&] {
    auto compute = [&](severi_ade_method m) {
      severi_nh* v = nullptr;
      check(severi_nh_ade(type.c_str(), m, &v));
      return Nh(v);
    };
    Nh primary = compute(method == "formula"  ? SEVERI_ADE_FORMULA
                         : method == "dynkin" ? SEVERI_ADE_DYNKIN
                                              : SEVERI_ADE_TRUNCATION);
    if (method == "all") {
      Nh f = compute(SEVERI_ADE_FORMULA), d = compute(SEVERI_ADE_DYNKIN);
      if (!severi_nh_equal(primary.get(), f.get()) || !severi_nh_equal(primary.get(), d.get())) {
        std::cerr << "routes disagree: truncation " << call_string(severi_nh_to_text, primary.get())
                  << ", formula " << call_string(severi_nh_to_text, f.get()) << ", dynkin "
                  << call_string(severi_nh_to_text, d.get()) << '\n';
        exit_code = 1;
      }
    }
    std::cout << (json ? call_string(severi_nh_to_json, primary.get())
                       : call_string(severi_nh_to_text, primary.get()))
              << '\n';
  });

  // dynkin
  auto* dynkin = app.add_subcommand("dynkin", "Independent-set counts of a Dynkin diagram");
  std::string dtype;
  dynkin->add_option("--type", dtype, "A1..., D4..., E6, E7, E8")->required();
  dynkin->callback([&] {
    const std::string doc = call_string(severi_dynkin_json, dtype.c_str());
    if (json) {
      std::cout << doc << '\n';
      return;
    }
    severi_nh* v = nullptr;
    check(severi_nh_ade(dtype.c_str(), SEVERI_ADE_DYNKIN, &v));
    Nh nh(v);
    std::cout << call_string(severi_nh_to_text, nh.get()) << '\n';
  });

  // homfly
  auto* homfly = app.add_subcommand("homfly", "HOMFLY polynomial of a braid closure");
  int strands = 2;
  std::string word;
  bool want_pinf = false, normalized = false, markov = false;
  homfly->add_option("--strands", strands, "Number of strands")->required();
  homfly->add_option("--word", word, "Braid word, e.g. \"(1 2)^4\"")->required();
  auto* pinf_flag = homfly->add_flag("--pinf", want_pinf, "Print only the lowest a-degree part");
  auto* norm_flag = homfly->add_flag("--normalized", normalized, "Print with unknot = 1");
  pinf_flag->excludes(norm_flag);
  homfly->add_flag("--markov", markov, "Also check Markov-move invariance");
  homfly->callback([&] {
    Braid b = parse_braid(word, strands);
    severi_homfly* h = nullptr;
    check(severi_braid_homfly(b.get(), &h));
    Homfly value(h);
    if (json) {
      std::cout << call_string(severi_braid_to_json, b.get(),
                               static_cast<const severi_homfly*>(value.get()),
                               static_cast<const severi_pinf*>(nullptr))
                << '\n';
    } else {
      const auto form = want_pinf    ? SEVERI_HOMFLY_PINF
                        : normalized ? SEVERI_HOMFLY_NORMALIZED
                                     : SEVERI_HOMFLY_UNNORMALIZED;
      std::cout << call_string(severi_homfly_to_text, value.get(), form) << '\n';
    }
    if (markov) {
      char* out = nullptr;
      int ok = 0;
      check(severi_braid_markov_json(b.get(), &out, &ok));
      const std::string report = take(out);
      std::cerr << report << '\n';
      if (!ok)
        exit_code = 1;
    }
  });

  // pinf
  auto* pinf = app.add_subcommand("pinf", "P_inf of a positive braid via admissible counts");
  int pstrands = 2;
  std::string pword;
  pinf->add_option("--strands", pstrands, "Number of strands")->required();
  pinf->add_option("--word", pword, "Positive braid word")->required();
  pinf->callback([&] {
    Braid b = parse_braid(pword, pstrands);
    severi_pinf* p = nullptr;
    check(severi_braid_pinf(b.get(), &p));
    Pinf value(p);
    if (json) {
      std::cout << call_string(severi_braid_to_json, b.get(),
                               static_cast<const severi_homfly*>(nullptr),
                               static_cast<const severi_pinf*>(value.get()))
                << '\n';
      return;
    }
    std::cout << call_string(severi_pinf_to_text, value.get()) << '\n';
    std::cout << "counts:";
    for (size_t r = 0; r < severi_pinf_count_size(value.get()); ++r)
      std::cout << (r ? "," : " ") << severi_pinf_count(value.get(), r);
    std::cout << '\n';
  });

  // conjecture
  auto* conj = app.add_subcommand("conjecture", "Compare P_inf with sum n_h z^{2h-b}");
  std::string cmodel;
  conj->add_option("--model", cmodel, "Catalog name: E6, A4, T(4,5), ...")->required();
  conj->callback([&] {
    char* out = nullptr;
    int status = -1;
    check(severi_conjecture_json(cmodel.c_str(), &out, &status));
    const std::string doc = take(out);
    if (json) {
      std::cout << doc << '\n';
    } else {
      std::cout << cmodel << ": "
                << (status == 1 ? "match" : status == 0 ? "MISMATCH" : "n_h side unavailable")
                << '\n';
      std::cout << doc << '\n';
    }
    if (status == 0)
      exit_code = 1;
  });

  // combine
  auto* combine = app.add_subcommand("combine", "Global n_h from local vectors");
  int cgtilde = 0;
  std::vector<std::string> locals;
  combine->add_option("--gtilde", cgtilde, "Geometric genus");
  combine->add_option("--local", locals, "n_0,...,n_delta of one singularity (repeatable)");
  combine->callback([&] {
    std::vector<Nh> owned;
    std::vector<const severi_nh*> raw;
    for (const auto& l : locals) {
      severi_nh* v = nullptr;
      check(severi_nh_from_values(1, 0, l.c_str(), &v));
      owned.emplace_back(v);
      raw.push_back(v);
    }
    severi_nh* out = nullptr;
    check(severi_nh_combine(cgtilde, raw.data(), raw.size(), &out));
    Nh result(out);
    std::cout << (json ? call_string(severi_nh_to_json, result.get())
                       : call_string(severi_nh_to_text, result.get()))
              << '\n';
  });

  // catalog
  auto* cat = app.add_subcommand("catalog", "List the singularity models");
  cat->callback([&] { std::cout << call_string(severi_catalog_json) << '\n'; });

  // selftest
  auto* self = app.add_subcommand("selftest", "Check the built-in reference values");
  self->callback([&] {
    char* out = nullptr;
    int failures = 0;
    check(severi_selftest(&out, &failures));
    std::cout << take(out);
    std::cout << (failures == 0 ? "selftest: all anchors pass"
                                : "selftest: " + std::to_string(failures) + " failing")
              << '\n';
    if (failures != 0)
      exit_code = 1;
  });

  app.parse_complete_callback([&] {
    severi_set_threads(threads);
    severi_set_max_letters(max_letters);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const CallFailed& e) {
    std::cerr << "error: " << severi_status_name(e.status) << ": " << e.message << '\n';
    return 2;
  }
  return exit_code;
}
