#ifndef FINRING_IO_HPP
#define FINRING_IO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "finring/catalogue.hpp"
#include "finring/semidirect.hpp"
#include "finring/star.hpp"
#include "finring/structure.hpp"

namespace finring {

using json = nlohmann::json;

/// Ring table document: { "order": n, "one": index-or-null,
/// "add": [[...]], "mul": [[...]], "labels": [...] }. The neg table is
/// derived on import and never serialized.
json ring_to_json(const FiniteRing& r);

/// Throws std::invalid_argument on structural defects (bad shapes,
/// indices out of range) and on axiom failures, with distinct messages.
FiniteRing ring_from_json(const json& doc);

FiniteRing load_ring_file(const std::string& path);

/// Semidirect document: { "B": ring, "S": ring, "lambda": [[...]],
/// "rho": [[...]] } with |S| rows of |B| indices each.
json sdspec_to_json(const SemidirectSpec& spec);
SemidirectSpec sdspec_from_json(const json& doc);
SemidirectSpec load_sdspec_file(const std::string& path);

json analysis_to_json(const AnalysisReport& rep);
json classification_to_json(const FiniteRing& r, const Classification& c);
json star_to_json(const FiniteRing& r, const StarWitness& w);
json matrix_to_json(const CatalogueReport& rep);

/// Cayley table in row-label x column-label layout, one table per call.
std::string format_table(const FiniteRing& r, bool multiplicative);

std::string format_analysis(const FiniteRing& r, const AnalysisReport& rep);
std::string format_matrix(const CatalogueReport& rep);

}  // namespace finring

#endif
