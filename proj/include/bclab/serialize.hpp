#pragma once

#include <json.hpp>
#include <string>

#include "bclab/config.hpp"
#include "bclab/pnt.hpp"
#include "bclab/rankin_selberg.hpp"

namespace bclab {

using Json = nlohmann::ordered_json;

Json to_json(const DirichletChar& chi);
Json to_json(const TwistedChar& chi);
Json to_json(const AbelianField& field);
Json to_json(const GalHeckeChar& pi);
Json to_json(const SplittingData& s);
Json to_json(const TwistedPairSet& t, const RsConvolution& rs);
Json to_json(const TheoremFlags& f);
Json to_json(const CountPrediction& c);
Json to_json(const PntReport& r);

/// {"artifact_version": ..., "config_hash": ...}; every artifact starts with these.
Json provenance(const std::string& config_hash);

/// First line of every CSV artifact, a '#' comment naming version and hash.
std::string csv_banner(const std::string& config_hash);

} // namespace bclab
