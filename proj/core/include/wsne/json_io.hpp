#pragma once

#include "wsne/auxgame.hpp"
#include "wsne/equilibrium.hpp"
#include "wsne/extremal.hpp"
#include "wsne/tournament.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

namespace wsne {

using nlohmann::json;

// Games, graphs and certificates interchange as JSON; rationals are "p/q"
// strings in lowest terms with a positive denominator.

void to_json(json& j, const Tournament& t);
Tournament tournament_from_json(const json& j);

void to_json(json& j, const WinLoseGame& g);
WinLoseGame game_from_json(const json& j);

void to_json(json& j, const BipartiteDigraph& d);
BipartiteDigraph digraph_from_json(const json& j);

void to_json(json& j, const GeneralDigraph& d);
GeneralDigraph general_digraph_from_json(const json& j);

void to_json(json& j, const WeightedBipartiteDigraph& w);
WeightedBipartiteDigraph weighted_digraph_from_json(const json& j);

void to_json(json& j, const BVertex& v);
void to_json(json& j, const VertexSet& vs);
void to_json(json& j, const MixedStrategy& s);
MixedStrategy strategy_from_json(const json& j);
void to_json(json& j, const Profile& p);
Profile profile_from_json(const json& j);
void to_json(json& j, const SupportPair& sp);
SupportPair support_pair_from_json(const json& j);
void to_json(json& j, const EpsResult& r);
void to_json(json& j, const SearchResult& r);
void to_json(json& j, const NeighborhoodDecomposition& nd);
void to_json(json& j, const ConjectureResult& r);
void to_json(json& j, const ChResult& r);
void to_json(json& j, const NoSmallWsneCertificate& c);

/// Coverage result as a certificate object:
/// {"property": "k-covered", "k", "holds", "mode", "status", "witness"?, ...}
json coverage_certificate(const KCoverageResult& r, int k);

/// FNV-1a 64-bit over a byte string, rendered as fixed-width hex. Used to
/// fingerprint inputs inside run reports.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace wsne
