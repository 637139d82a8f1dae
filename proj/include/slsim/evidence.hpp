#pragma once
// The four-class information model. Media evidence is pro or con a
// proposition, and independently valuable or noisy. Agents always read the
// pro/con label correctly but need topic competence to tell valuable from
// noisy; misjudged items land in the uncertain bucket (or leak into
// belief/disbelief when noise is mistaken for substance).

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "slsim/opinion.hpp"
#include "slsim/rng.hpp"

namespace slsim {

enum class EvidenceClass : std::uint8_t { PV = 0, PN = 1, CV = 2, CN = 3 };

const char* to_string(EvidenceClass c);

// An ordered bag of evidence items plus per-class counts (kept alongside the
// sequence; always consistent with a recount).
struct EvidenceMatrix {
  std::vector<EvidenceClass> items;
  std::array<long long, 4> counts{0, 0, 0, 0};

  long long size() const { return static_cast<long long>(items.size()); }
  long long count(EvidenceClass c) const {
    return counts[static_cast<std::size_t>(c)];
  }
};

// Perceived tallies after the competence filter.
struct PerceivedCounts {
  long long n_b = 0;
  long long n_d = 0;
  long long n_u = 0;

  long long total() const { return n_b + n_d + n_u; }
};

// Builds a shuffled evidence sequence with exactly the requested class
// counts. Deterministic given the rng state; at least one count must be
// positive.
EvidenceMatrix build_matrix(long long n_pv, long long n_pn, long long n_cv,
                            long long n_cn, Rng& rng);

// Competence-filtered perception. Per item one uniform draw r in (0,1) is
// consumed; r <= tc means the agent judges the item's value correctly:
//   PV: correct -> n_b, misjudged -> n_u      CV: correct -> n_d, misjudged -> n_u
//   PN: correct -> n_u, misjudged -> n_b      CN: correct -> n_u, misjudged -> n_d
// tc = 1 and tc = 0 are exactly deterministic because r is never 0 or 1.
PerceivedCounts map_evidence(double tc, const EvidenceMatrix& ev, Rng& rng);

// Perceived tallies -> opinion (fraction of items per bucket).
Opinion perceived_opinion(const PerceivedCounts& pc, double base_rate);

// Plain-text serialization: a `# pv=<n> pn=<n> cv=<n> cn=<n>` header line,
// then one class token per line.
void write_matrix(std::ostream& out, const EvidenceMatrix& ev);
EvidenceMatrix read_matrix(std::istream& in);

}  // namespace slsim
