#pragma once

#include <string>

#include "json.hpp"
#include "mstd/constructions.hpp"
#include "mstd/fringe.hpp"
#include "mstd/intset.hpp"
#include "mstd/search.hpp"

namespace mstd {

// Text form used by the CLI: "{0,2,3,...}" (ascending, no spaces).
std::string format_set(const IntSet& a);

// Accepts "{0,2,3}" or "0,2,3" with optional whitespace; "{}" is empty.
IntSet parse_set(const std::string& text);

// Flag form "s,d,sigma,delta"; validated against the quadruple constraints.
SdQuad parse_quad(const std::string& text);

nlohmann::json to_json(const IntSet& a);
nlohmann::json to_json(const SdQuad& q);
nlohmann::json to_json(const FringePair& fp);
nlohmann::json to_json(const DiffScanResult& r);
// Canonical document: excludes wall time so identical (seed, trials,
// workers) yield byte-identical output.
nlohmann::json to_json(const SearchReport& r);

IntSet set_from_json(const nlohmann::json& j);
FringePair fringe_pair_from_json(const nlohmann::json& j);

} // namespace mstd
