#pragma once

#include <string>

#include "iqg/catalog.hpp"
#include "iqg/groth.hpp"
#include "iqg/inks.hpp"

namespace iqg {

// {"type":"A|D|E","rank":n,"arrows":[[i,j],...],"involution":[...]}, 1-based
IQuiver quiver_from_json(const std::string& text);
std::string quiver_to_json(const IQuiver& q);

CaseCatalog catalog_from_json(const OrbitQuiver& orbit, const std::string& text);
std::string catalog_to_json(const OrbitQuiver& orbit, const CaseCatalog& cat);

// {"pairs":[{"v":{"root":mult,...},"w":[...],"slack":{...}},...]}
std::string pairs_to_json(const OrbitQuiver& orbit, const std::vector<DimPair>& pairs);

std::string knit_to_json(const KnitTable& k);
std::string knit_to_dot(const KnitTable& k);

std::string gelement_to_json(const OrbitQuiver& orbit, const GElement& g);

}  // namespace iqg
