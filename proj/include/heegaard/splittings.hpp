#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heegaard/farey.hpp"
#include "heegaard/surface.hpp"
#include "heegaard/words.hpp"

namespace heegaard {

// A side of a splitting: either a handlebody with a designated meridian
// system on the chart, or a product (punctured torus) x I whose two ends are
// the front (sides 0..3) and back (sides 4..7) halves of the chart.
enum class SideKind { Handlebody, Product };

struct SideModel {
  SideKind kind = SideKind::Handlebody;
  MeridianSystem meridians;  // used only for handlebodies

  friend bool operator==(const SideModel& x, const SideModel& y) {
    if (x.kind != y.kind) return false;
    if (x.kind == SideKind::Product) return true;
    return x.meridians.cls1 == y.meridians.cls1 &&
           x.meridians.cls2 == y.meridians.cls2;
  }
  friend bool operator!=(const SideModel& x, const SideModel& y) {
    return !(x == y);
  }
};

// Word of a curve in the given side's fundamental group.
Word side_word(const ChordCurve& c, const SideModel& side);

// A curve slot of a splitting description. Each side of the splitting has
// its own chart of the gluing surface; a slot may carry a representative in
// either or both charts, and carries the curve's word per side. host records
// where the curve has been pushed ("a", "b", or "none"); slope is the
// surgery slope (nullopt = no surgery).
struct SurgerySlot {
  std::string label;
  std::string host = "none";
  std::optional<Word> word_a, word_b;
  std::optional<ChordCurve> rep_a, rep_b;
  std::optional<Slope> slope;
};

bool operator==(const ChordCurve& x, const ChordCurve& y);
bool operator==(const SurgerySlot& x, const SurgerySlot& y);

enum class Family { MH, MxI, Hybrid, Generic };
std::string family_name(Family f);
Family family_from_name(const std::string& s);

struct SplittingSpec {
  Family family = Family::Generic;
  SideModel side_a, side_b;
  std::string gluing_tag;
  std::vector<SurgerySlot> slots;

  const SurgerySlot* find(const std::string& label) const;
};

bool operator==(const SplittingSpec& x, const SplittingSpec& y);
inline bool operator!=(const SplittingSpec& x, const SplittingSpec& y) {
  return !(x == y);
}

// Structural invariants: unique labels, word/representative agreement per
// side, and pairwise disjointness of same-side representatives of slots
// pushed into a common host. Empty list means valid.
std::vector<std::string> validate_spec(const SplittingSpec& spec);

// Canonical form: slots sorted by label, words canonicalized, chord lists
// rotated to a canonical first chord, host cleared when no surgery slope is
// set (pushing an unsurgered curve changes nothing). Idempotent; normalized
// structural equality is the spec equality notion.
SplittingSpec normalize(const SplittingSpec& spec);

// The two splittings obtained by pushing the two unassigned slots into
// opposite sides before surgery. First output: lower label to side a;
// second output: the swap. Throws with the violated clause named:
// "doubly-primitive(<label>,A-side)", "not-disjoint(<l1>,<l2>)", etc.
std::pair<SplittingSpec, SplittingSpec> dehn_derive(const SplittingSpec& spec);

// Family generators. Builders fix the chart data: the three-handle fixture
// curves for handlebody sides, slope curves on the two product ends for
// product sides (front end from the first slope, back end from the second).
SplittingSpec build_mh(const std::optional<Slope>& l1,
                       const std::optional<Slope>& l2,
                       const std::optional<Slope>& ra,
                       const std::optional<Slope>& rb,
                       const std::string& gluing_tag);
SplittingSpec build_mxi(const Slope& a0, const Slope& a1, const Slope& b0,
                        const Slope& b1, const std::optional<Slope>& sl0,
                        const std::optional<Slope>& sl1,
                        const std::string& gluing_tag);
SplittingSpec build_hybrid(const std::optional<Slope>& l3,
                           const std::optional<Slope>& l1,
                           const std::optional<Slope>& l2, const Slope& b0,
                           const Slope& b1, const std::string& gluing_tag);

// Slope whose standard word is the given one (exponent counts, validated
// against the canonical slope word); nullopt when the word is not of that
// shape.
std::optional<Slope> slope_of_word(const Word& w);

// Disjoint primitive pair taxonomy. TypeA: the pair is carried by a
// homeomorphism to the fixture pair after surgery on a third curve rho;
// witness is rho's word and the winding of u over v's dual solid torus.
// TypeB: the pair is carried to opposite ends of a product; witness assigns
// each word an end and a slope. Unknown carries the reduced pair as
// diagnostics.
enum class PairTag { TypeA, TypeB, Unknown };

struct PairType {
  PairTag tag = PairTag::Unknown;
  std::string witness_rho;
  long long witness_winding = 0;
  std::string witness_end0, witness_end1;
  std::optional<Slope> witness_slope0, witness_slope1;
  std::string diagnostics;
};

PairType classify_pair(const Word& u, const Word& v,
                       const ChordCurve* ru = nullptr,
                       const ChordCurve* rv = nullptr);

// Farey criterion for a one-stabilization equivalence of product-family
// splittings: the two front-end slopes at most two apart, witnessed by an
// arc slope adjacent to both.
struct SingleStabAnswer {
  bool possible = false;
  std::optional<Slope> witness;
};
SingleStabAnswer single_stab_possible_mxi(const Slope& a0, const Slope& a1);

struct StabMove {
  std::string move;  // "tube-add" | "destabilize"
  std::string label;
  std::string arc;
  std::optional<Slope> arc_slope;
  std::vector<std::string> witness_triple;
  int genus_after = 0;
};

bool operator==(const StabMove& x, const StabMove& y);

// Move plan carrying one derived splitting to the other through stabilized
// intermediates, together with the data an independent checker needs: the
// underived base spec and both derived endpoints.
struct StabilizationCertificate {
  std::string variant;  // "single" | "double"
  SplittingSpec base;
  SplittingSpec start, end;
  std::vector<StabMove> moves;
};

// Single-stabilization plan: tube the back-side curve into the front side,
// then destabilize with the drilled-triple witness. Families MH and Hybrid
// always; product family only when the Farey criterion holds (the tube then
// follows the witness arc). Throws otherwise.
StabilizationCertificate emit_single_stab_certificate(
    const SplittingSpec& spec);
// Two-stabilization plan for the product family: tube both curves, then
// destabilize both symmetrically. Throws on other families.
StabilizationCertificate emit_double_stab_certificate(
    const SplittingSpec& spec);

// Independent checker: re-derives the endpoints from the base spec,
// re-checks the genus ledger and every move precondition (tube labels,
// witness basis triple and its projection to the slot words, arc slope
// adjacency). Empty list means the certificate passes.
std::vector<std::string> verify_stab_certificate(
    const StabilizationCertificate& cert);

}  // namespace heegaard
