#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heegaard/splittings.hpp"
#include "heegaard/surface.hpp"

namespace heegaard {

// One curve of a distance chain. rep_a/rep_b are representatives in the two
// side charts; a curve may live in only one chart.
struct CertCurve {
  std::string label;
  std::optional<ChordCurve> rep_a, rep_b;
};

// Witness that the splitting's disk sets are at most curves.size()-1 apart
// in the curve graph: consecutive curves disjoint, the first bounding on
// side a, the last on side b, all curves essential.
struct DistanceCertificate {
  SideModel side_a, side_b;
  std::vector<CertCurve> curves;
};

// Witness for a disjoint pair of essential disks on opposite sides together
// with an essential seam curve missing both boundaries.
struct DcpCertificate {
  SideModel side_a, side_b;
  ChordCurve seam, disk1, disk2;
};

struct VerifyResult {
  bool ok = false;
  int distance_bound = 0;  // chain length when ok
  std::string reason;      // first violated clause otherwise
  int index = -1;          // offending curve position when applicable
};

VerifyResult verify_certificate(const DistanceCertificate& cert);
VerifyResult verify_dcp(const DcpCertificate& cert);

// Length-three chain for a family instance, anchored on the fixture disk
// data. `second` emits the mirror chain (curves reversed, charts swapped),
// matching the second derived splitting. Throws when the instance's end
// data misses the pinned disk slopes.
DistanceCertificate build_distance3_certificate(const SplittingSpec& spec,
                                                bool second);

// Seam and two opposite-side disks around the first fixture curve.
DcpCertificate build_dcp_certificate();

}  // namespace heegaard
