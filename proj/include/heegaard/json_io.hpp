#pragma once

#include <string>

#include "json.hpp"

#include "heegaard/distance.hpp"
#include "heegaard/splittings.hpp"

namespace heegaard {

// Document schemas: specs carry "heegaard-spec/1", certificates
// "heegaard-cert/1" plus a "kind" of distance, dcp, or stab. Slopes print as
// "p/q", "inf", or "none"; boundary parameters as exact "p/q" strings. All
// from_json readers throw std::invalid_argument on malformed documents.
nlohmann::json curve_to_json(const ChordCurve& c);
ChordCurve curve_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const SplittingSpec& spec);
SplittingSpec spec_from_json(const nlohmann::json& j);

nlohmann::json distance_cert_to_json(const DistanceCertificate& cert);
DistanceCertificate distance_cert_from_json(const nlohmann::json& j);

nlohmann::json dcp_cert_to_json(const DcpCertificate& cert);
DcpCertificate dcp_cert_from_json(const nlohmann::json& j);

nlohmann::json stab_cert_to_json(const StabilizationCertificate& cert);
StabilizationCertificate stab_cert_from_json(const nlohmann::json& j);

// Sorted keys and fixed indentation: equal values give equal bytes.
std::string dump_json(const nlohmann::json& j);

}  // namespace heegaard
