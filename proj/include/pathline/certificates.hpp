#pragma once

#include <string>

#include <json.hpp>

#include "pathline/atfree.hpp"
#include "pathline/bandwidth.hpp"
#include "pathline/decomposition.hpp"
#include "pathline/distortion.hpp"
#include "pathline/domination.hpp"
#include "pathline/graph.hpp"

namespace pathline {

/// JSON certificates carry the instance graph alongside the claimed
/// object so that a certificate alone is checkable. nlohmann::json keeps
/// object keys sorted, which makes every emitted document reproducible.

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json decomposition_certificate(const Graph& g,
                                         const PathDecomposition& pd,
                                         const DecompositionMetrics& m);
nlohmann::json layout_certificate(const Graph& g, const Layout& layout);
nlohmann::json embedding_certificate(const Graph& g, const LineEmbedding& f);
nlohmann::json dominating_path_certificate(const Graph& g,
                                           const DominatingPath& p);
nlohmann::json dominating_pair_certificate(const Graph& g,
                                           const DominatingPair& p);

struct VerifyResult {
  bool ok = true;
  std::string message;
};

/// Re-validates the decomposition and recomputes length, breadth, and
/// the center witnesses against the claimed values.
VerifyResult verify_decomposition_certificate(const nlohmann::json& j);

/// Checks bijectivity and the claimed bandwidth.
VerifyResult verify_layout_certificate(const nlohmann::json& j);

/// Checks injectivity, non-contractiveness over all vertex pairs, and
/// the claimed distortion.
VerifyResult verify_embedding_certificate(const nlohmann::json& j);

}  // namespace pathline
