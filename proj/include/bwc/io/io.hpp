#pragma once

#include <string>

#include "bwc/cousins/cousins.hpp"
#include "json.hpp"

namespace bwc::io {

using Json = nlohmann::ordered_json;

Json to_json(const lat::Lattice& l);
lat::Lattice lattice_from_json(const Json& j);
Json gram_to_json(const lat::Lattice& l);
Json to_json(const brw::MonomialIsometry& g);
brw::MonomialIsometry isometry_from_json(int d, const Json& j);
Json to_json(const cousins::VerificationReport& r);

// Two-space indent and a trailing newline.
std::string dump(const Json& j);
void write_file(const std::string& path, const Json& j);

}  // namespace bwc::io
