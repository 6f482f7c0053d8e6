// catalog.hpp
// Built-in catalog of published reference states with their claimed per-cut
// concurrences. Sign listings are stored verbatim; entries whose listing is
// inconsistent with its own claimed values are flagged, never silently
// corrected, and point at a reconstructed companion entry where one exists.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxcon/state.hpp"

namespace maxcon {

struct CutClaim {
  std::string cut;   // canonical cut label, e.g. "A", "AD"
  double value;      // concurrence
};

struct CatalogEntry {
  std::string name;
  std::string description;
  PureState state;                  // amplitudes exactly as published
  std::vector<CutClaim> published;  // claimed values, as printed
  std::vector<CutClaim> expected;   // verified values (frozen); what a clean
                                    // build must reproduce
  bool sign_listing_suspect = false;
  std::string note;
};

const std::vector<CatalogEntry>& catalog();

// nullptr when the name is unknown.
const CatalogEntry* find_catalog_entry(std::string_view name);

std::vector<std::string> catalog_names();

}  // namespace maxcon
