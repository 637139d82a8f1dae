#include "slsim/evidence.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace slsim {

const char* to_string(EvidenceClass c) {
  switch (c) {
    case EvidenceClass::PV: return "PV";
    case EvidenceClass::PN: return "PN";
    case EvidenceClass::CV: return "CV";
    case EvidenceClass::CN: return "CN";
  }
  throw std::logic_error("to_string: bad EvidenceClass");
}

EvidenceMatrix build_matrix(long long n_pv, long long n_pn, long long n_cv,
                            long long n_cn, Rng& rng) {
  if (n_pv < 0 || n_pn < 0 || n_cv < 0 || n_cn < 0)
    throw std::invalid_argument("build_matrix: negative count");
  const long long total = n_pv + n_pn + n_cv + n_cn;
  if (total == 0)
    throw std::invalid_argument("build_matrix: at least one count must be positive");

  EvidenceMatrix m;
  m.counts = {n_pv, n_pn, n_cv, n_cn};
  m.items.reserve(static_cast<std::size_t>(total));
  const EvidenceClass classes[4] = {EvidenceClass::PV, EvidenceClass::PN,
                                    EvidenceClass::CV, EvidenceClass::CN};
  for (int c = 0; c < 4; ++c)
    m.items.insert(m.items.end(), static_cast<std::size_t>(m.counts[c]), classes[c]);
  rng.shuffle(m.items);
  return m;
}

PerceivedCounts map_evidence(double tc, const EvidenceMatrix& ev, Rng& rng) {
  if (!(tc >= 0.0 && tc <= 1.0))
    throw std::invalid_argument("map_evidence: competence outside [0,1]");
  PerceivedCounts out;
  for (const EvidenceClass c : ev.items) {
    const bool judged = rng.uniform_open01() <= tc;
    switch (c) {
      case EvidenceClass::PV: ++(judged ? out.n_b : out.n_u); break;
      case EvidenceClass::PN: ++(judged ? out.n_u : out.n_b); break;
      case EvidenceClass::CV: ++(judged ? out.n_d : out.n_u); break;
      case EvidenceClass::CN: ++(judged ? out.n_u : out.n_d); break;
    }
  }
  return out;
}

Opinion perceived_opinion(const PerceivedCounts& pc, double base_rate) {
  if (pc.n_b < 0 || pc.n_d < 0 || pc.n_u < 0)
    throw std::invalid_argument("perceived_opinion: negative count");
  const long long total = pc.total();
  if (total <= 0)
    throw std::invalid_argument("perceived_opinion: total count must be positive");
  const double n = static_cast<double>(total);
  return Opinion(static_cast<double>(pc.n_b) / n, static_cast<double>(pc.n_d) / n,
                 static_cast<double>(pc.n_u) / n, base_rate);
}

void write_matrix(std::ostream& out, const EvidenceMatrix& ev) {
  out << "# pv=" << ev.count(EvidenceClass::PV)
      << " pn=" << ev.count(EvidenceClass::PN)
      << " cv=" << ev.count(EvidenceClass::CV)
      << " cn=" << ev.count(EvidenceClass::CN) << "\n";
  for (const EvidenceClass c : ev.items) out << to_string(c) << "\n";
}

EvidenceMatrix read_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("evidence file: empty input");
  EvidenceMatrix m;
  {
    long long pv = -1, pn = -1, cv = -1, cn = -1;
    std::istringstream hs(line);
    std::string hash;
    hs >> hash;
    std::string kv;
    while (hs >> kv) {
      const auto eq = kv.find('=');
      if (hash != "#" || eq == std::string::npos)
        throw std::runtime_error("evidence file: malformed header line");
      const std::string key = kv.substr(0, eq);
      const long long val = std::stoll(kv.substr(eq + 1));
      if (key == "pv") pv = val;
      else if (key == "pn") pn = val;
      else if (key == "cv") cv = val;
      else if (key == "cn") cn = val;
      else throw std::runtime_error("evidence file: unknown header key '" + key + "'");
    }
    if (pv < 0 || pn < 0 || cv < 0 || cn < 0)
      throw std::runtime_error("evidence file: header must carry pv, pn, cv, cn");
    m.counts = {pv, pn, cv, cn};
  }

  std::array<long long, 4> seen{0, 0, 0, 0};
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    EvidenceClass c;
    if (line == "PV") c = EvidenceClass::PV;
    else if (line == "PN") c = EvidenceClass::PN;
    else if (line == "CV") c = EvidenceClass::CV;
    else if (line == "CN") c = EvidenceClass::CN;
    else
      throw std::runtime_error("evidence file line " + std::to_string(line_no) +
                               ": unknown token '" + line + "'");
    ++seen[static_cast<std::size_t>(c)];
    m.items.push_back(c);
  }
  if (seen != m.counts)
    throw std::runtime_error("evidence file: item counts do not match header");
  if (m.items.empty())
    throw std::runtime_error("evidence file: no items");
  return m;
}

}  // namespace slsim
