#pragma once

#include "json.hpp"

#include "critlab/coloring.hpp"
#include "critlab/criticality.hpp"
#include "critlab/even_factor.hpp"
#include "critlab/lemma_lab.hpp"

// JSON encodings of every verdict the tools emit. The layouts are documented
// in docs/certificates.md.
namespace critlab::cert {

using Json = nlohmann::ordered_json;

Json edge(const Edge& e);
Json edges(const EdgeSet& es);
/// {"k": k, "edges": [[u, v, color], ...]}
Json coloring(const EdgeColoring& c);
/// Inverse of coloring(); validates properness against g.
EdgeColoring coloring_from(const Graph& g, const Json& j);
Json chain(const KempeChain& ch);
/// {"X", "components", "boundary", "q", "deficiency"}
Json barrier(const Barrier& b);
Json properties(const BarrierProperties& p);
Json normalized(const NormalizedBarrier& nb);
Json rational(const Rational& r);
Json criticality(const CriticalityReport& rep, bool with_witnesses = true);
Json lemma1_config(const Lemma1Config& cfg);
Json lemma1_trace(const Lemma1Trace& tr);
Json lemma2(const Lemma2Result& r);
Json audit(const AuditVerdict& v);

}  // namespace critlab::cert
