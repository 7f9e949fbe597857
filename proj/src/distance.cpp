#include "heegaard/distance.hpp"

#include <stdexcept>

#include "heegaard/fixtures.hpp"

namespace heegaard {

namespace {

bool trivial_word(const Word& w) { return reduce(w).empty(); }

// Tri-state essentiality: a nontrivial side word certifies; otherwise an
// audited tag is accepted iff the surface word is nontrivial; otherwise a
// trivial surface word means inessential and anything else is inconclusive.
std::string essentiality_problem(const ChordCurve* rep_a,
                                 const ChordCurve* rep_b,
                                 const SideModel& side_a,
                                 const SideModel& side_b) {
  if (rep_a && !trivial_word(side_word(*rep_a, side_a))) return "";
  if (rep_b && !trivial_word(side_word(*rep_b, side_b))) return "";
  const ChordCurve& r = rep_a ? *rep_a : *rep_b;
  bool surface_trivial = null_homotopic_on_surface(r);
  if (surface_trivial) return "inessential";
  if (!r.essential_tag.empty()) return "";
  return "essentiality-inconclusive";
}

bool disjoint(const ChordCurve& x, const ChordCurve& y) {
  return !shares_boundary_point(x, y) && crossings(x, y) == 0;
}

VerifyResult fail(const std::string& reason, int index = -1) {
  VerifyResult r;
  r.reason = reason;
  r.index = index;
  return r;
}

}  // namespace

VerifyResult verify_certificate(const DistanceCertificate& cert) {
  const auto& curves = cert.curves;
  if (curves.empty()) return fail("empty-chain");

  for (size_t i = 0; i < curves.size(); ++i) {
    for (const auto* rep : {&curves[i].rep_a, &curves[i].rep_b}) {
      if (!*rep) continue;
      auto problems = validate(**rep);
      if (!problems.empty())
        return fail("bad-rep(" + curves[i].label + "): " + problems.front(),
                    (int)i);
    }
    if (!curves[i].rep_a && !curves[i].rep_b)
      return fail("no-representative(" + curves[i].label + ")", (int)i);
  }

  for (size_t i = 0; i + 1 < curves.size(); ++i) {
    bool shared = false;
    for (int side = 0; side < 2; ++side) {
      const auto& r1 = side ? curves[i].rep_b : curves[i].rep_a;
      const auto& r2 = side ? curves[i + 1].rep_b : curves[i + 1].rep_a;
      if (!r1 || !r2) continue;
      shared = true;
      if (shares_boundary_point(*r1, *r2) || crossings(*r1, *r2) > 0)
        return fail("not-disjoint(" + curves[i].label + "," +
                        curves[i + 1].label + ")",
                    (int)i);
    }
    if (!shared)
      return fail("no-shared-chart(" + curves[i].label + "," +
                      curves[i + 1].label + ")",
                  (int)i);
  }

  if (!curves.front().rep_a ||
      !trivial_word(side_word(*curves.front().rep_a, cert.side_a)))
    return fail("first-curve-not-bounding", 0);
  if (!curves.back().rep_b ||
      !trivial_word(side_word(*curves.back().rep_b, cert.side_b)))
    return fail("last-curve-not-bounding", (int)curves.size() - 1);

  for (size_t i = 0; i < curves.size(); ++i) {
    auto problem = essentiality_problem(
        curves[i].rep_a ? &*curves[i].rep_a : nullptr,
        curves[i].rep_b ? &*curves[i].rep_b : nullptr, cert.side_a,
        cert.side_b);
    if (!problem.empty())
      return fail(problem + "(" + curves[i].label + ")", (int)i);
  }

  VerifyResult r;
  r.ok = true;
  r.distance_bound = (int)curves.size() - 1;
  return r;
}

namespace {

// Anchor disk for a product end; throws unless it misses the anchor curve,
// which pins the anchor's slope to 0/1.
ChordCurve product_disk_for(const ChordCurve& anchor, const char* where) {
  ChordCurve dd = product_disk_boundary(make_slope(0, 1));
  if (shares_boundary_point(dd, anchor) || crossings(dd, anchor) != 0)
    throw std::runtime_error(
        std::string("unsupported-spec: no product disk misses the ") + where +
        " anchor (slope 0/1 required)");
  return dd;
}

DistanceCertificate mirror(const DistanceCertificate& cert) {
  DistanceCertificate out;
  out.side_a = cert.side_b;
  out.side_b = cert.side_a;
  for (auto it = cert.curves.rbegin(); it != cert.curves.rend(); ++it) {
    CertCurve c;
    c.label = it->label;
    c.rep_a = it->rep_b;
    c.rep_b = it->rep_a;
    out.curves.push_back(c);
  }
  return out;
}

const SurgerySlot& slot_or_throw(const SplittingSpec& spec,
                                 const std::string& label) {
  const SurgerySlot* s = spec.find(label);
  if (!s) throw std::runtime_error("missing slot " + label);
  return *s;
}

}  // namespace

DistanceCertificate build_distance3_certificate(const SplittingSpec& spec,
                                                bool second) {
  DistanceCertificate cert;
  cert.side_a = spec.side_a;
  cert.side_b = spec.side_b;

  if (spec.family == Family::MH) {
    ChordCurve disk_a = band_sum(lambda1(), cross_curve(0));
    ChordCurve disk_b = band_sum(lambda2(), cross_curve(3));
    cert.curves = {{"c0", disk_a, disk_a},
                   {"c1", lambda1(), lambda1()},
                   {"c2", lambda2(), lambda2()},
                   {"c3", disk_b, disk_b}};
  } else if (spec.family == Family::MxI) {
    const auto& l0 = slot_or_throw(spec, "l0");
    const auto& l1 = slot_or_throw(spec, "l1");
    if (!l0.rep_a || !l0.rep_b || !l1.rep_a || !l1.rep_b)
      throw std::runtime_error("missing slot representatives");
    ChordCurve disk_a = product_disk_for(*l0.rep_a, "front");
    ChordCurve disk_b = product_disk_for(*l1.rep_b, "back");
    cert.curves = {{"c0", disk_a, std::nullopt},
                   {"c1", l0.rep_a, l0.rep_b},
                   {"c2", l1.rep_a, l1.rep_b},
                   {"c3", std::nullopt, disk_b}};
  } else if (spec.family == Family::Hybrid) {
    const auto& l1 = slot_or_throw(spec, "l1");
    const auto& l2 = slot_or_throw(spec, "l2");
    if (!l1.rep_a || !l1.rep_b || !l2.rep_a || !l2.rep_b)
      throw std::runtime_error("missing slot representatives");
    ChordCurve disk_a = band_sum(*l1.rep_a, cross_curve(0));
    ChordCurve disk_b = product_disk_for(*l2.rep_b, "back");
    cert.curves = {{"c0", disk_a, std::nullopt},
                   {"c1", l1.rep_a, l1.rep_b},
                   {"c2", l2.rep_a, l2.rep_b},
                   {"c3", std::nullopt, disk_b}};
  } else {
    throw std::runtime_error("no distance plan for this family");
  }
  return second ? mirror(cert) : cert;
}

namespace {

ChordCurve shifted(const ChordCurve& c, const Rational& d) {
  ChordCurve out;
  out.essential_tag = c.essential_tag;
  for (auto ch : c.chords) {
    ch.from.t = ch.from.t - d;
    ch.to.t = ch.to.t + d;
    out.chords.push_back(ch);
  }
  return out;
}

}  // namespace

DcpCertificate build_dcp_certificate() {
  DcpCertificate cert;
  cert.side_a = {SideKind::Handlebody, kSideA};
  cert.side_b = {SideKind::Handlebody, kSideB};
  cert.disk1 = band_sum(lambda1(), cross_curve(0));
  cert.disk2 = band_sum(lambda1(), cross_curve(1));

  // The seam is a parallel copy of the curve both disks were banded along;
  // the band strands hug that curve, so the copy's offset shrinks until the
  // seam clears both disks. The disks miss the curve itself, so some
  // positive offset works.
  Rational d(1, 64);
  for (int attempt = 0; attempt < 9; ++attempt, d = d / Rational(2)) {
    ChordCurve seam = shifted(lambda1(), d);
    if (!validate(seam).empty()) continue;
    if (shares_boundary_point(seam, cert.disk1) ||
        shares_boundary_point(seam, cert.disk2))
      continue;
    try {
      if (crossings(seam, cert.disk1) != 0 || crossings(seam, cert.disk2) != 0)
        continue;
    } catch (const std::runtime_error&) {
      continue;  // touching offset; shrink further
    }
    cert.seam = seam;
    return cert;
  }
  throw std::runtime_error("no seam offset clears both disks");
}

VerifyResult verify_dcp(const DcpCertificate& cert) {
  struct Named {
    const char* name;
    const ChordCurve* curve;
  };
  const Named parts[] = {{"seam", &cert.seam},
                         {"disk1", &cert.disk1},
                         {"disk2", &cert.disk2}};
  for (const auto& p : parts) {
    auto problems = validate(*p.curve);
    if (!problems.empty())
      return fail(std::string("bad-curve(") + p.name + "): " +
                  problems.front());
  }
  if (!disjoint(cert.seam, cert.disk1)) return fail("seam-crosses(disk1)");
  if (!disjoint(cert.seam, cert.disk2)) return fail("seam-crosses(disk2)");
  if (!trivial_word(side_word(cert.disk1, cert.side_a)))
    return fail("disk1-not-bounding");
  if (!trivial_word(side_word(cert.disk2, cert.side_b)))
    return fail("disk2-not-bounding");
  for (const auto& p : parts) {
    auto problem =
        essentiality_problem(p.curve, p.curve, cert.side_a, cert.side_b);
    if (!problem.empty())
      return fail(problem + "(" + p.name + ")");
  }
  VerifyResult r;
  r.ok = true;
  return r;
}

}  // namespace heegaard
