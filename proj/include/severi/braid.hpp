#pragma once

// Braid words, their closures, and Jaeger's circuit-partition state sum for
// the HOMFLY polynomial with skein relation
//
//     a^-1 P(+) - a P(-) = z P(0),     P(unknot) = (a^-1 - a) / z.
//
// A circuit partition keeps or removes each letter of the word. Tracing the
// closure of the kept braid, every letter is met twice; a removed positive
// (negative) letter is admissible when the first meeting has the lower
// (higher) strand number. Then
//
//     P(closure) = a^w  sum_{admissible} (-1)^{#removed negative} z^{#removed}
//                       a^{n - b} P(unknot)^b
//
// where b is the number of components of the kept braid's closure.

#include "severi/laurent.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace severi {

struct BraidLetter {
  int index;  // generator i in 1..n-1, exchanging positions i and i+1
  int sign;   // +1 counter-clockwise half twist, -1 its inverse
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
public:
  // Throws InvalidArgument when a letter index falls outside 1..n-1.
  BraidWord(int strands, std::vector<BraidLetter> letters);

  int strands() const noexcept { return strands_; }
  std::span<const BraidLetter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  int writhe() const noexcept;
  bool is_positive() const noexcept;

  // Conjugation by the first letter: its letters moved to the end.
  BraidWord rotated(std::size_t k = 1) const;
  BraidWord appended(std::span<const BraidLetter> tail) const;
  // Extra strand n+1 and a positive letter n at the end.
  BraidWord stabilized() const;

  // Space separated, e.g. "1 -2 1".
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

// WORD := TERM (WS TERM)*;  TERM := SIGNED | '(' WORD ')' '^' UINT;
// SIGNED := ['-'] UINT.  Empty text is the identity word.
BraidWord parse_braid(std::string_view text, int strands);

// Cycle count of the word's permutation (all letters kept).
int closure_components(const BraidWord& w);

struct CircuitPartition {
  // Throws InvalidArgument when kept.size() != word.length().
  CircuitPartition(BraidWord word, std::vector<bool> kept);

  BraidWord word;
  std::vector<bool> kept;
};

// Strand numbers at the two meetings of each letter, in trace order.
struct Encounter {
  int first;
  int second;
  friend bool operator==(const Encounter&, const Encounter&) = default;
};

std::vector<Encounter> trace_encounters(const CircuitPartition& p);
bool is_admissible(const CircuitPartition& p);
// b(pi): components of the closure of the kept letters.
int partition_components(const CircuitPartition& p);

struct EnumerationOptions {
  unsigned max_letters = 26;
  unsigned threads = 1;
};

// Defaults, overridden by SEVERI_MAX_LETTERS and SEVERI_THREADS.
EnumerationOptions default_enumeration_options();

struct HomflyValue {
  LaurentPoly2 unnormalized;               // multiple of P(unknot)
  std::optional<LaurentPoly2> normalized;  // unknot = 1, when divisible
  std::uint64_t admissible = 0;            // admissible circuit partitions
};

HomflyValue jaeger_homfly(const BraidWord& w,
                          const EnumerationOptions& opts = default_enumeration_options());

struct PinfResult {
  // counts[r] = #A_{n,r}: admissible partitions keeping 2r letters whose
  // kept braid closes to n components.
  std::vector<std::uint64_t> counts;
  LaurentPoly1 pinf;  // sum_r counts[r] z^{w - n - 2r}
};

// Positive words only (InvalidArgument otherwise).
PinfResult pinf_positive(const BraidWord& w,
                         const EnumerationOptions& opts = default_enumeration_options());

struct MarkovCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct MarkovReport {
  std::vector<MarkovCheck> checks;
  bool all_passed() const;
};

// Conjugation, canceling-pair insertion, and stabilization invariance of
// the state sum (plus P_inf data for positive words).
MarkovReport markov_checks(const BraidWord& w,
                           const EnumerationOptions& opts = default_enumeration_options());

struct MilnorData {
  int mu;
  bool singularity_like;  // mu >= 1
  int writhe;
  int strands;
  // 2 delta = w - n + b; nullopt when the parity does not work out.
  std::optional<int> delta_for_branches(int branches) const;
};

// Positive words only: mu = w - n + 1.
MilnorData milnor_from_braid(const BraidWord& w);

} // namespace severi
