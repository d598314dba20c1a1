#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hookpairs/critical.hpp"
#include "hookpairs/jack.hpp"
#include "hookpairs/oracle.hpp"

namespace hookpairs {

using Json = nlohmann::ordered_json;

// Text grammar: comma-separated nonnegative decimal integers with an
// optional "@N" ambient-length suffix, e.g. "2,7,8,2,0,0" or "3,0@5".
// "@N" alone denotes the zero composition of ambient length N.
Composition parse_composition(const std::string& text);

// Full round-trip form: every stored part, trailing zeros included.
std::string render(const Composition& alpha);

// Display form trimmed to l(alpha); "0" for the zero composition.
std::string render_trimmed(const Composition& alpha);

// Modified Ferrers diagram, row 1 on top, columns 0..alpha_i with the
// column-0 nodes present.
std::string diagram(const Composition& alpha);

Json composition_json(const Composition& alpha);          // trimmed parts array
Json trace_json(const AlgorithmTrace& trace);
Json construct_json(const ConstructResult& result);
Json certificate_json(const CriticalPairCertificate& cert);
Json closure_json(const Composition& alpha, const Int& m, const Int& n, int depth,
                  const std::vector<ClosureEntry>& entries);
Json hooks_json(const Composition& alpha);
Json jack_report_json(const JackReport& report);
Json partners_json(const Composition& alpha, const Int& m, const Int& n,
                   const std::vector<Composition>& partners);

// Scan reports as JSON lines: one record per (alpha, m, n).
std::string uniqueness_report_lines(const UniquenessReport& report);
std::string negative_report_lines(const NegativeExistenceReport& report);

}  // namespace hookpairs
