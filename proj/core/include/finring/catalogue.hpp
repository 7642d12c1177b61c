#ifndef FINRING_CATALOGUE_HPP
#define FINRING_CATALOGUE_HPP

#include <optional>
#include <string>
#include <vector>

#include "finring/semidirect.hpp"
#include "finring/star.hpp"

namespace finring {

struct CatalogueEntry {
  std::string id;
  FiniteRing ring;
  std::optional<SemidirectSpec> sd;  // present for semidirect entries
};

/// The fixed verification catalogue: Z/nZ for n in 2..16; GF(q) for
/// q in {2,3,4,5,7,8,9}; GF(q)[x]/<x^2> and <x^3> for q in {2,3};
/// GF(q) x GF(q) for q in {2,3}; function rings for (GF(2),2), (GF(2),3),
/// (GF(3),2); k x| k for k in {GF(2),GF(3),GF(4),GF(5)}; 2(Z/4Z) x| Z/2Z;
/// GF(4) x| GF(2).
std::vector<CatalogueEntry> default_catalogue();

/// The explicit action pair behind the 2(Z/4Z) x| Z/2Z catalogue entry.
SemidirectSpec two_z4_spec();

struct MatrixRow {
  std::string ring_id;
  std::string check_id;
  std::string paper_ref;  // short statement of the claim being verified
  bool pass = false;
  std::string witness;    // failure detail or informative note
};

struct CatalogueReport {
  std::vector<MatrixRow> rows;
  bool all_pass() const {
    for (auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

/// Runs every cross-module invariant over the given entries and returns
/// one row per (ring, check). An empty catalogue yields an empty report.
CatalogueReport verify_catalogue(const std::vector<CatalogueEntry>& entries);

}  // namespace finring

#endif
