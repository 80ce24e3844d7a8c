#include "severi/braid.hpp"

#include "severi/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>

namespace severi {

// ---------------------------------------------------------------- words

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1)
    throw InvalidArgument("a braid needs at least one strand");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1)
      throw InvalidArgument("generator index " + std::to_string(l.index) + " out of range 1.." +
                            std::to_string(strands_ - 1));
    if (l.sign != 1 && l.sign != -1)
      throw InvalidArgument("letter sign must be +1 or -1");
  }
}

int BraidWord::writhe() const noexcept {
  int w = 0;
  for (const auto& l : letters_)
    w += l.sign;
  return w;
}

bool BraidWord::is_positive() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(), [](const auto& l) { return l.sign > 0; });
}

BraidWord BraidWord::rotated(std::size_t k) const {
  std::vector<BraidLetter> l = letters_;
  if (!l.empty())
    std::rotate(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(k % l.size()), l.end());
  return BraidWord(strands_, std::move(l));
}

BraidWord BraidWord::appended(std::span<const BraidLetter> tail) const {
  std::vector<BraidLetter> l = letters_;
  l.insert(l.end(), tail.begin(), tail.end());
  return BraidWord(strands_, std::move(l));
}

BraidWord BraidWord::stabilized() const {
  std::vector<BraidLetter> l = letters_;
  l.push_back({strands_, 1});
  return BraidWord(strands_ + 1, std::move(l));
}

std::string BraidWord::to_string() const {
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty())
      s += ' ';
    if (l.sign < 0)
      s += '-';
    s += std::to_string(l.index);
  }
  return s;
}

// ---------------------------------------------------------------- parser

namespace {

constexpr std::size_t kMaxParsedLetters = std::size_t{1} << 20;

class BraidParser {
public:
  BraidParser(std::string_view text, int strands) : text_(text), strands_(strands) {}

  std::vector<BraidLetter> parse() {
    auto letters = parse_word(false);
    if (pos_ != text_.size())
      fail("unexpected ')'");
    return letters;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("braid word, column " + std::to_string(pos_ + 1) + ": " + what);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool at_space() const { return !at_end() && std::isspace(static_cast<unsigned char>(peek())); }

  void skip_ws() {
    while (at_space())
      ++pos_;
  }

  unsigned long parse_uint() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    unsigned long value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ptr == begin)
      fail("expected a number");
    if (ec != std::errc{})
      fail("number too large");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::vector<BraidLetter> parse_word(bool nested) {
    std::vector<BraidLetter> out;
    skip_ws();
    while (!at_end() && peek() != ')') {
      auto term = parse_term();
      out.insert(out.end(), term.begin(), term.end());
      if (out.size() > kMaxParsedLetters)
        fail("word too long");
      if (!at_end() && !at_space() && peek() != ')')
        fail("terms must be separated by whitespace");
      skip_ws();
    }
    if (nested && at_end())
      fail("unclosed '('");
    return out;
  }

  std::vector<BraidLetter> parse_term() {
    if (peek() == '(') {
      ++pos_;
      auto inner = parse_word(true);
      if (inner.empty())
        fail("empty group");
      ++pos_;  // ')'
      if (at_end() || peek() != '^')
        fail("malformed repetition: expected '^' after ')'");
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("malformed repetition: expected exponent after '^'");
      const unsigned long times = parse_uint();
      if (times == 0)
        fail("malformed repetition: exponent must be positive");
      if (times > kMaxParsedLetters / inner.size())
        fail("word too long");
      std::vector<BraidLetter> out;
      out.reserve(inner.size() * times);
      for (unsigned long t = 0; t < times; ++t)
        out.insert(out.end(), inner.begin(), inner.end());
      return out;
    }
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a generator index");
    const std::size_t start = pos_;
    const unsigned long idx = parse_uint();
    if (idx < 1 || idx > static_cast<unsigned long>(strands_ - 1)) {
      pos_ = start;
      fail("index " + std::to_string(idx) + " out of range 1.." + std::to_string(strands_ - 1));
    }
    return {BraidLetter{static_cast<int>(idx), sign}};
  }

  std::string_view text_;
  int strands_;
  std::size_t pos_ = 0;
};

} // namespace

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1)
    throw InvalidArgument("a braid needs at least one strand");
  return BraidWord(strands, BraidParser(text, strands).parse());
}

int closure_components(const BraidWord& w) {
  const auto n = static_cast<std::size_t>(w.strands());
  // perm[p] = bottom position reached from top position p.
  std::vector<int> perm(n + 1);
  for (std::size_t p = 1; p <= n; ++p) {
    int pos = static_cast<int>(p);
    for (const auto& l : w.letters())
      if (pos == l.index)
        pos = l.index + 1;
      else if (pos == l.index + 1)
        pos = l.index;
    perm[p] = pos;
  }
  std::vector<bool> seen(n + 1, false);
  int cycles = 0;
  for (std::size_t p = 1; p <= n; ++p) {
    if (seen[p])
      continue;
    ++cycles;
    for (auto q = p; !seen[q]; q = static_cast<std::size_t>(perm[q]))
      seen[q] = true;
  }
  return cycles;
}

// ---------------------------------------------------------------- tracing

CircuitPartition::CircuitPartition(BraidWord w, std::vector<bool> k)
    : word(std::move(w)), kept(std::move(k)) {
  if (kept.size() != word.length())
    throw InvalidArgument("circuit partition needs one keep/remove flag per letter");
}

namespace {

// Walks the closure of a circuit partition. The strand number is the
// current position, changed only at kept letters. Start at top position 1;
// each pass sweeps the word once. When a pass ends at an already visited
// top position, restart from the smallest unvisited one.
class Tracer {
public:
  explicit Tracer(const BraidWord& w)
      : n_(w.strands()), lo_(w.length()), sign_(w.length()), first_(w.length()),
        visited_(static_cast<std::size_t>(n_) + 2) {
    for (std::size_t j = 0; j < w.length(); ++j) {
      lo_[j] = w.letters()[j].index;
      sign_[j] = w.letters()[j].sign;
    }
  }

  struct Outcome {
    bool admissible;
    int components;
  };

  // Full trace for one keep-mask (bit j set = letter j kept). With
  // stop_early the walk ends at the first inadmissible removed letter.
  template <class OnEncounter>
  Outcome run(const std::vector<bool>& kept, bool stop_early, OnEncounter&& on_encounter) {
    std::fill(first_.begin(), first_.end(), 0);
    std::fill(visited_.begin(), visited_.end(), false);
    bool admissible = true;
    int components = 0;
    int next_start = 1;
    const std::size_t len = lo_.size();
    while (true) {
      while (next_start <= n_ && visited_[static_cast<std::size_t>(next_start)])
        ++next_start;
      if (next_start > n_)
        break;
      ++components;
      int pos = next_start;
      while (!visited_[static_cast<std::size_t>(pos)]) {
        visited_[static_cast<std::size_t>(pos)] = true;
        for (std::size_t j = 0; j < len; ++j) {
          const int lo = lo_[j];
          if (pos != lo && pos != lo + 1)
            continue;
          on_encounter(j, pos);
          if (first_[j] == 0) {
            first_[j] = pos;
          } else if (!kept[j]) {
            const bool ok = sign_[j] > 0 ? first_[j] < pos : first_[j] > pos;
            if (!ok) {
              admissible = false;
              if (stop_early)
                return {false, components};
            }
          }
          if (kept[j])
            pos = (pos == lo) ? lo + 1 : lo;
        }
      }
    }
    return {admissible, components};
  }

  Outcome run(const std::vector<bool>& kept, bool stop_early) {
    return run(kept, stop_early, [](std::size_t, int) {});
  }

private:
  int n_;
  std::vector<int> lo_;
  std::vector<int> sign_;
  std::vector<int> first_;
  std::vector<bool> visited_;
};

} // namespace

std::vector<Encounter> trace_encounters(const CircuitPartition& p) {
  Tracer tracer(p.word);
  std::vector<Encounter> out(p.word.length(), Encounter{0, 0});
  tracer.run(p.kept, false, [&](std::size_t j, int strand) {
    if (out[j].first == 0)
      out[j].first = strand;
    else
      out[j].second = strand;
  });
  return out;
}

bool is_admissible(const CircuitPartition& p) {
  Tracer tracer(p.word);
  return tracer.run(p.kept, true).admissible;
}

int partition_components(const CircuitPartition& p) {
  Tracer tracer(p.word);
  return tracer.run(p.kept, false).components;
}

// ---------------------------------------------------------------- state sums

namespace {

unsigned env_unsigned(const char* name, unsigned fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0')
    return fallback;
  unsigned out = 0;
  const std::string_view s(v);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    return fallback;
  return out;
}

void check_budget(const BraidWord& w, const EnumerationOptions& opts) {
  const unsigned cap = std::min(opts.max_letters, 62u);
  if (w.length() > cap)
    throw BudgetExceeded("word has " + std::to_string(w.length()) +
                         " letters; enumeration budget is " + std::to_string(cap));
}

// (removed letters, removed negative letters mod 2, components) -> count
using StateTally = std::map<std::tuple<int, int, int>, std::uint64_t>;

StateTally tally_range(const BraidWord& w, std::uint64_t begin, std::uint64_t end) {
  Tracer tracer(w);
  const std::size_t len = w.length();
  std::vector<bool> kept(len);
  StateTally tally;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    int removed = 0, removed_negative = 0;
    for (std::size_t j = 0; j < len; ++j) {
      kept[j] = (mask >> j) & 1u;
      if (!kept[j]) {
        ++removed;
        if (w.letters()[j].sign < 0)
          ++removed_negative;
      }
    }
    const auto outcome = tracer.run(kept, true);
    if (outcome.admissible)
      ++tally[{removed, removed_negative % 2, outcome.components}];
  }
  return tally;
}

} // namespace

EnumerationOptions default_enumeration_options() {
  EnumerationOptions opts;
  opts.max_letters = env_unsigned("SEVERI_MAX_LETTERS", opts.max_letters);
  opts.threads = std::max(1u, env_unsigned("SEVERI_THREADS", opts.threads));
  return opts;
}

HomflyValue jaeger_homfly(const BraidWord& w, const EnumerationOptions& opts) {
  check_budget(w, opts);
  const std::uint64_t total = std::uint64_t{1} << w.length();

  // Contiguous chunks, merged in chunk order; counts are exact integers so
  // the result does not depend on the thread count.
  const unsigned threads =
      static_cast<unsigned>(std::clamp<std::uint64_t>(opts.threads, 1, std::max<std::uint64_t>(1, total / 1024)));
  std::vector<StateTally> partial(threads);
  if (threads == 1) {
    partial[0] = tally_range(w, 0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t step = total / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t b = step * t;
      const std::uint64_t e = (t + 1 == threads) ? total : step * (t + 1);
      pool.emplace_back([&, t, b, e] { partial[t] = tally_range(w, b, e); });
    }
    for (auto& th : pool)
      th.join();
  }
  StateTally tally;
  for (const auto& p : partial)
    for (const auto& [k, c] : p)
      tally[k] += c;

  const int n = w.strands();
  std::vector<LaurentPoly2> unknot_pow(static_cast<std::size_t>(n) + 1);
  unknot_pow[0] = LaurentPoly2::monomial(0, 0);
  for (int b = 1; b <= n; ++b)
    unknot_pow[static_cast<std::size_t>(b)] =
        unknot_pow[static_cast<std::size_t>(b - 1)] * LaurentPoly2::unknot();

  HomflyValue value;
  for (const auto& [key, count] : tally) {
    const auto [removed, negative_parity, b] = key;
    BigInt c = count;
    if (negative_parity)
      c = -c;
    value.unnormalized = value.unnormalized +
                         LaurentPoly2::monomial(w.writhe() + n - b, removed, c) *
                             unknot_pow[static_cast<std::size_t>(b)];
    value.admissible += count;
  }
  value.normalized = value.unnormalized.divide_by_unknot();
  return value;
}

namespace {

// Depth-first over keep/remove choices, keeping only kept subsets whose
// permutation is the identity. cur[p] = top label now at position p.
class IdentitySubsetWalker {
public:
  IdentitySubsetWalker(const BraidWord& w)
      : word_(w), cur_(static_cast<std::size_t>(w.strands()) + 2), kept_(w.length()) {
    std::iota(cur_.begin(), cur_.end(), 0);
  }

  template <class Visit>
  void walk(Visit&& visit) {
    walk_from(0, 0, visit);
  }

private:
  template <class Visit>
  void walk_from(std::size_t j, int kept_count, Visit& visit) {
    const std::size_t remaining = word_.length() - j;
    // One transposition repairs at most two misplaced positions.
    if (misplaced_ > 2 * static_cast<int>(remaining))
      return;
    if (remaining == 0) {
      visit(kept_, kept_count);
      return;
    }
    kept_[j] = false;
    walk_from(j + 1, kept_count, visit);
    kept_[j] = true;
    swap_at(word_.letters()[j].index);
    walk_from(j + 1, kept_count + 1, visit);
    swap_at(word_.letters()[j].index);
    kept_[j] = false;
  }

  void swap_at(int i) {
    const auto a = static_cast<std::size_t>(i), b = a + 1;
    misplaced_ -= (cur_[a] != static_cast<int>(a)) + (cur_[b] != static_cast<int>(b));
    std::swap(cur_[a], cur_[b]);
    misplaced_ += (cur_[a] != static_cast<int>(a)) + (cur_[b] != static_cast<int>(b));
  }

  const BraidWord& word_;
  std::vector<int> cur_;
  std::vector<bool> kept_;
  int misplaced_ = 0;
};

} // namespace

PinfResult pinf_positive(const BraidWord& w, const EnumerationOptions& opts) {
  if (!w.is_positive())
    throw InvalidArgument("pinf_positive needs a positive braid word");
  check_budget(w, opts);
  Tracer tracer(w);
  PinfResult result;
  IdentitySubsetWalker walker(w);
  walker.walk([&](const std::vector<bool>& kept, int kept_count) {
    if (!tracer.run(kept, true).admissible)
      return;
    const auto r = static_cast<std::size_t>(kept_count / 2);
    if (result.counts.size() <= r)
      result.counts.resize(r + 1, 0);
    ++result.counts[r];
  });
  const int top = w.writhe() - w.strands();
  for (std::size_t r = 0; r < result.counts.size(); ++r)
    if (result.counts[r] != 0)
      result.pinf = result.pinf +
                    LaurentPoly1::monomial(top - 2 * static_cast<int>(r), result.counts[r]);
  return result;
}

// ---------------------------------------------------------------- harness

bool MarkovReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

MarkovReport markov_checks(const BraidWord& w, const EnumerationOptions& opts) {
  MarkovReport report;
  const LaurentPoly2 base = jaeger_homfly(w, opts).unnormalized;
  auto compare = [&](const std::string& name, const BraidWord& other) {
    const LaurentPoly2 p = jaeger_homfly(other, opts).unnormalized;
    report.checks.push_back(
        {name, p == base, p == base ? "" : "got " + p.to_string() + ", expected " + base.to_string()});
  };

  compare("conjugation (rotate by one letter)", w.rotated(1));
  if (w.strands() >= 2) {
    const std::array<BraidLetter, 2> pair{BraidLetter{1, 1}, BraidLetter{1, -1}};
    compare("canceling pair 1 -1 appended", w.appended(pair));
  } else {
    report.checks.push_back({"canceling pair (single strand, skipped)", true, ""});
  }
  const BraidWord stab = w.stabilized();
  compare("stabilization", stab);

  if (w.is_positive()) {
    const PinfResult before = pinf_positive(w, opts);
    const PinfResult after = pinf_positive(stab, opts);
    const bool same_wn = (w.writhe() - w.strands()) == (stab.writhe() - stab.strands());
    report.checks.push_back({"stabilization keeps w - n", same_wn, ""});
    report.checks.push_back({"stabilization keeps #A_{n,r}", before.counts == after.counts,
                             before.pinf.to_string() + " vs " + after.pinf.to_string()});
  }
  return report;
}

std::optional<int> MilnorData::delta_for_branches(int branches) const {
  const int twice = writhe - strands + branches;
  if (twice < 0 || twice % 2 != 0)
    return std::nullopt;
  return twice / 2;
}

MilnorData milnor_from_braid(const BraidWord& w) {
  if (!w.is_positive())
    throw InvalidArgument("milnor_from_braid needs a positive braid word");
  const int mu = w.writhe() - w.strands() + 1;
  return {mu, mu >= 1, w.writhe(), w.strands()};
}

} // namespace severi
