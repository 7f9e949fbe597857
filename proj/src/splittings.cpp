#include "heegaard/splittings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "heegaard/fixtures.hpp"
#include "heegaard/stallings.hpp"
#include "heegaard/whitehead.hpp"

namespace heegaard {

Word side_word(const ChordCurve& c, const SideModel& side) {
  if (side.kind == SideKind::Product) return word_of_product(c);
  return word_of(c, side.meridians);
}

bool operator==(const ChordCurve& x, const ChordCurve& y) {
  if (x.essential_tag != y.essential_tag) return false;
  if (x.chords.size() != y.chords.size()) return false;
  for (size_t i = 0; i < x.chords.size(); ++i) {
    if (x.chords[i].from != y.chords[i].from) return false;
    if (x.chords[i].to != y.chords[i].to) return false;
    if (x.chords[i].bends != y.chords[i].bends) return false;
  }
  return true;
}

bool operator==(const SurgerySlot& x, const SurgerySlot& y) {
  return x.label == y.label && x.host == y.host && x.word_a == y.word_a &&
         x.word_b == y.word_b && x.rep_a == y.rep_a && x.rep_b == y.rep_b &&
         x.slope == y.slope;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::MH: return "mh";
    case Family::MxI: return "mxi";
    case Family::Hybrid: return "hybrid";
    default: return "generic";
  }
}

Family family_from_name(const std::string& s) {
  if (s == "mh") return Family::MH;
  if (s == "mxi") return Family::MxI;
  if (s == "hybrid") return Family::Hybrid;
  if (s == "generic") return Family::Generic;
  throw std::invalid_argument("Unknown family name: " + s);
}

const SurgerySlot* SplittingSpec::find(const std::string& label) const {
  for (const auto& s : slots)
    if (s.label == label) return &s;
  return nullptr;
}

bool operator==(const SplittingSpec& x, const SplittingSpec& y) {
  return x.family == y.family && x.side_a == y.side_a &&
         x.side_b == y.side_b && x.gluing_tag == y.gluing_tag &&
         x.slots == y.slots;
}

namespace {

// Slots carrying a representative in the given chart, for disjointness.
struct ChartRep {
  const SurgerySlot* slot;
  const ChordCurve* rep;
};

std::vector<ChartRep> chart_reps(const SplittingSpec& spec, bool side_a) {
  std::vector<ChartRep> out;
  for (const auto& s : spec.slots) {
    const auto& rep = side_a ? s.rep_a : s.rep_b;
    if (rep) out.push_back({&s, &*rep});
  }
  return out;
}

}  // namespace

std::vector<std::string> validate_spec(const SplittingSpec& spec) {
  std::vector<std::string> out;
  std::set<std::string> labels;
  for (const auto& s : spec.slots) {
    if (!labels.insert(s.label).second)
      out.push_back("duplicate-label(" + s.label + ")");
    if (s.host != "a" && s.host != "b" && s.host != "none")
      out.push_back("bad-host(" + s.label + ")");
    for (int side = 0; side < 2; ++side) {
      const auto& word = side ? s.word_b : s.word_a;
      const auto& rep = side ? s.rep_b : s.rep_a;
      const auto& model = side ? spec.side_b : spec.side_a;
      const char* name = side ? "B-side" : "A-side";
      if (!rep) continue;
      auto problems = validate(*rep);
      if (!problems.empty()) {
        out.push_back("bad-rep(" + s.label + "," + name + "): " +
                      problems.front());
        continue;
      }
      if (!word) {
        out.push_back("missing-word(" + s.label + "," + name + ")");
        continue;
      }
      if (canonical_cyclic(*word) != canonical_cyclic(side_word(*rep, model)))
        out.push_back("word-mismatch(" + s.label + "," + name + ")");
    }
  }
  for (int side = 0; side < 2; ++side) {
    auto reps = chart_reps(spec, side == 0);
    const char* name = side ? "B-side" : "A-side";
    for (size_t i = 0; i < reps.size(); ++i)
      for (size_t j = i + 1; j < reps.size(); ++j) {
        if (shares_boundary_point(*reps[i].rep, *reps[j].rep) ||
            crossings(*reps[i].rep, *reps[j].rep) > 0)
          out.push_back("overlap(" + reps[i].slot->label + "," +
                        reps[j].slot->label + "," + name + ")");
      }
  }
  return out;
}

namespace {

bool chord_less(const Chord& x, const Chord& y) {
  if (x.from != y.from) return x.from < y.from;
  if (x.to != y.to) return x.to < y.to;
  return x.bends.size() < y.bends.size();
}

ChordCurve rotate_canonical(const ChordCurve& c) {
  if (c.chords.size() < 2) return c;
  size_t best = 0;
  for (size_t i = 1; i < c.chords.size(); ++i)
    if (chord_less(c.chords[i], c.chords[best])) best = i;
  ChordCurve out;
  out.essential_tag = c.essential_tag;
  for (size_t i = 0; i < c.chords.size(); ++i)
    out.chords.push_back(c.chords[(best + i) % c.chords.size()]);
  return out;
}

}  // namespace

SplittingSpec normalize(const SplittingSpec& spec) {
  SplittingSpec out = spec;
  for (auto& s : out.slots) {
    if (!s.slope) s.host = "none";  // pushing without surgery changes nothing
    if (s.word_a) s.word_a = canonical_cyclic(*s.word_a);
    if (s.word_b) s.word_b = canonical_cyclic(*s.word_b);
    if (s.rep_a) s.rep_a = rotate_canonical(*s.rep_a);
    if (s.rep_b) s.rep_b = rotate_canonical(*s.rep_b);
  }
  std::sort(out.slots.begin(), out.slots.end(),
            [](const SurgerySlot& x, const SurgerySlot& y) {
              return x.label < y.label;
            });
  return out;
}

std::pair<SplittingSpec, SplittingSpec> dehn_derive(
    const SplittingSpec& spec) {
  auto problems = validate_spec(spec);
  if (!problems.empty())
    throw std::runtime_error("invalid-spec: " + problems.front());

  std::vector<size_t> open;
  for (size_t i = 0; i < spec.slots.size(); ++i)
    if (spec.slots[i].host == "none") open.push_back(i);
  if (open.size() != 2)
    throw std::runtime_error("expected exactly two unassigned slots, found " +
                             std::to_string(open.size()));
  if (spec.slots[open[1]].label < spec.slots[open[0]].label)
    std::swap(open[0], open[1]);

  const SurgerySlot& s1 = spec.slots[open[0]];
  const SurgerySlot& s2 = spec.slots[open[1]];
  for (const SurgerySlot* s : {&s1, &s2}) {
    if (!s->word_a || !is_primitive(*s->word_a, 2))
      throw std::runtime_error("doubly-primitive(" + s->label + ",A-side)");
    if (!s->word_b || !is_primitive(*s->word_b, 2))
      throw std::runtime_error("doubly-primitive(" + s->label + ",B-side)");
  }
  for (int side = 0; side < 2; ++side) {
    const auto& r1 = side ? s1.rep_b : s1.rep_a;
    const auto& r2 = side ? s2.rep_b : s2.rep_a;
    if (!r1 || !r2) continue;
    if (shares_boundary_point(*r1, *r2) || crossings(*r1, *r2) > 0)
      throw std::runtime_error("not-disjoint(" + s1.label + "," + s2.label +
                               "," + (side ? "B-side)" : "A-side)"));
  }

  SplittingSpec first = spec, second = spec;
  first.slots[open[0]].host = "a";
  first.slots[open[1]].host = "b";
  second.slots[open[0]].host = "b";
  second.slots[open[1]].host = "a";
  return {first, second};
}

namespace {

SurgerySlot make_slot(const std::string& label, const std::string& host,
                      const std::optional<ChordCurve>& rep_a,
                      const std::optional<ChordCurve>& rep_b,
                      const SideModel& side_a, const SideModel& side_b,
                      const std::optional<Slope>& slope) {
  SurgerySlot s;
  s.label = label;
  s.host = host;
  s.rep_a = rep_a;
  s.rep_b = rep_b;
  if (rep_a) s.word_a = canonical_cyclic(side_word(*rep_a, side_a));
  if (rep_b) s.word_b = canonical_cyclic(side_word(*rep_b, side_b));
  s.slope = slope;
  return s;
}

}  // namespace

SplittingSpec build_mh(const std::optional<Slope>& l1,
                       const std::optional<Slope>& l2,
                       const std::optional<Slope>& ra,
                       const std::optional<Slope>& rb,
                       const std::string& gluing_tag) {
  SplittingSpec spec;
  spec.family = Family::MH;
  spec.side_a = {SideKind::Handlebody, kSideA};
  spec.side_b = {SideKind::Handlebody, kSideB};
  spec.gluing_tag = gluing_tag;
  // Both sides read the same chart; the fixture curves represent the slots
  // in each.
  spec.slots.push_back(make_slot("l1", "none", lambda1(), lambda1(),
                                 spec.side_a, spec.side_b, l1));
  spec.slots.push_back(make_slot("l2", "none", lambda2(), lambda2(),
                                 spec.side_a, spec.side_b, l2));
  spec.slots.push_back(make_slot("ra", "a", lambda3(), std::nullopt,
                                 spec.side_a, spec.side_b, ra));
  spec.slots.push_back(make_slot("rb", "b", std::nullopt, lambda3(),
                                 spec.side_a, spec.side_b, rb));
  return spec;
}

SplittingSpec build_mxi(const Slope& a0, const Slope& a1, const Slope& b0,
                        const Slope& b1, const std::optional<Slope>& sl0,
                        const std::optional<Slope>& sl1,
                        const std::string& gluing_tag) {
  SplittingSpec spec;
  spec.family = Family::MxI;
  spec.side_a = {SideKind::Product, {}};
  spec.side_b = {SideKind::Product, {}};
  spec.gluing_tag = gluing_tag;
  spec.slots.push_back(make_slot("l0", "none", curve_T1(a0), curve_T1(b0),
                                 spec.side_a, spec.side_b, sl0));
  spec.slots.push_back(make_slot("l1", "none", curve_T2(a1), curve_T2(b1),
                                 spec.side_a, spec.side_b, sl1));
  return spec;
}

SplittingSpec build_hybrid(const std::optional<Slope>& l3,
                           const std::optional<Slope>& l1,
                           const std::optional<Slope>& l2, const Slope& b0,
                           const Slope& b1, const std::string& gluing_tag) {
  SplittingSpec spec;
  spec.family = Family::Hybrid;
  spec.side_a = {SideKind::Handlebody, kSideA};
  spec.side_b = {SideKind::Product, {}};
  spec.gluing_tag = gluing_tag;
  spec.slots.push_back(make_slot("l1", "none", lambda1(), curve_T1(b0),
                                 spec.side_a, spec.side_b, l1));
  spec.slots.push_back(make_slot("l2", "none", lambda2(), curve_T2(b1),
                                 spec.side_a, spec.side_b, l2));
  spec.slots.push_back(make_slot("ra", "a", lambda3(), std::nullopt,
                                 spec.side_a, spec.side_b, l3));
  return spec;
}

std::optional<Slope> slope_of_word(const Word& w) {
  Word c = canonical_cyclic(w);
  if (c.empty()) return std::nullopt;
  auto ab = abelianize(c, 2);
  if (ab[0] == 0 && ab[1] == 0) return std::nullopt;
  long long g = std::gcd(ab[0] < 0 ? -ab[0] : ab[0],
                         ab[1] < 0 ? -ab[1] : ab[1]);
  if (g != 1) return std::nullopt;
  Slope s = make_slope(ab[0], ab[1]);
  if (c != slope_word(s)) return std::nullopt;
  return s;
}

namespace {

// Curve confined to one product end: front (sides 0..3) or back (4..7).
bool confined(const ChordCurve& c, bool front) {
  for (const auto& ch : c.chords)
    for (const auto& p : {ch.from, ch.to}) {
      bool f = p.side < 4;
      if (f != front) return false;
    }
  return !c.chords.empty();
}

PairType type_b_from_slopes(const Word& u, const Word& v) {
  PairType out;
  out.tag = PairTag::TypeB;
  out.witness_end0 = format_word(canonical_cyclic(u));
  out.witness_end1 = format_word(canonical_cyclic(v));
  out.witness_slope0 = slope_of_word(u);
  out.witness_slope1 = slope_of_word(v);
  return out;
}

}  // namespace

PairType classify_pair(const Word& u, const Word& v, const ChordCurve* ru,
                       const ChordCurve* rv) {
  Word cu = canonical_cyclic(u), cv = canonical_cyclic(v);
  if (cu.empty() || cv.empty())
    throw std::runtime_error("precondition: trivial word");
  if (!is_primitive(cu, 2))
    throw std::runtime_error("precondition: first word not primitive");
  if (!is_primitive(cv, 2))
    throw std::runtime_error("precondition: second word not primitive");
  if (cu == cv) throw std::runtime_error("precondition: words are parallel");
  if (ru && rv) {
    require_valid(*ru);
    require_valid(*rv);
    if (shares_boundary_point(*ru, *rv) || crossings(*ru, *rv) > 0)
      throw std::runtime_error("precondition: representatives not disjoint");
  }

  // Representatives confined to opposite ends witness a product structure.
  if (ru && rv) {
    if (confined(*ru, true) && confined(*rv, false))
      return type_b_from_slopes(u, v);
    if (confined(*ru, false) && confined(*rv, true))
      return type_b_from_slopes(v, u);
  }

  // Carry v to a generator; u then lands on x^n y^(+-1) exactly when the
  // pair is a band sum over a third curve rho = (carried x), with winding n.
  TrackedDescent d = descend_to_generator(cv, 2);
  Automorphism swap = Automorphism::identity(2);
  if (d.target.idx == 1) {
    swap.images[0] = {Letter(2, 1)};
    swap.images[1] = {Letter(1, 1)};
  }
  Word image = canonical_cyclic(swap.apply(d.phi.apply(cu)));
  int n1 = 0, n2 = 0, sign_sum = 0;
  for (const auto& l : image) {
    if (l.idx == 1) {
      ++n1;
      sign_sum += l.sign;
    } else {
      ++n2;
    }
  }
  if (n2 == 1 && n1 >= 1 && (sign_sum == n1 || sign_sum == -n1)) {
    PairType out;
    out.tag = PairTag::TypeA;
    out.witness_winding = sign_sum > 0 ? n1 : -n1;
    Word x = {Letter(1, 1)};
    out.witness_rho =
        format_word(canonical_cyclic(d.phi_inv.apply(swap.apply(x))));
    return out;
  }

  // Any primitive pair embeds on opposite product ends along its slopes.
  auto su = slope_of_word(cu), sv = slope_of_word(cv);
  if (su && sv) return type_b_from_slopes(cu, cv);

  PairType out;
  out.diagnostics = "no pattern matched: " + format_word(cu) + " vs " +
                    format_word(cv);
  return out;
}

namespace {

// Bezout neighbor: some slope adjacent to s.
Slope adjacent_slope(const Slope& s) {
  long long r0 = s.p, r1 = s.q, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    std::swap(r0 -= q * r1, r1);
    std::swap(x0 -= q * x1, x1);
    std::swap(y0 -= q * y1, y1);
  }
  // x0*p + y0*q == +-1, so p*x0 - q*(-y0) is a unimodular pairing.
  return make_slope(-y0, x0);
}

}  // namespace

SingleStabAnswer single_stab_possible_mxi(const Slope& a0, const Slope& a1) {
  SingleStabAnswer out;
  if (a0 == a1) {
    out.possible = true;
    out.witness = adjacent_slope(a0);
    return out;
  }
  int d = farey_distance(a0, a1);
  if (d > 2) return out;
  out.possible = true;
  out.witness = common_neighbor(a0, a1);
  return out;
}

bool operator==(const StabMove& x, const StabMove& y) {
  return x.move == y.move && x.label == y.label && x.arc == y.arc &&
         x.arc_slope == y.arc_slope && x.witness_triple == y.witness_triple &&
         x.genus_after == y.genus_after;
}

namespace {

// The two unassigned slots, sorted by label; throws on any other count.
std::pair<const SurgerySlot*, const SurgerySlot*> open_pair(
    const SplittingSpec& spec) {
  std::vector<const SurgerySlot*> open;
  for (const auto& s : spec.slots)
    if (s.host == "none") open.push_back(&s);
  if (open.size() != 2)
    throw std::runtime_error("expected exactly two unassigned slots, found " +
                             std::to_string(open.size()));
  if (open[1]->label < open[0]->label) std::swap(open[0], open[1]);
  return {open[0], open[1]};
}

std::vector<std::string> triple_words() {
  std::vector<std::string> out;
  for (const auto& w : drilled_triple()) out.push_back(format_word(w));
  return out;
}

}  // namespace

StabilizationCertificate emit_single_stab_certificate(
    const SplittingSpec& spec) {
  StabilizationCertificate cert;
  cert.variant = "single";
  cert.base = spec;
  auto derived = dehn_derive(spec);
  cert.start = derived.first;
  cert.end = derived.second;
  auto [s1, s2] = open_pair(spec);

  if (spec.family == Family::MH || spec.family == Family::Hybrid) {
    StabMove tube;
    tube.move = "tube-add";
    tube.label = s2->label;
    tube.arc = "straight-from-boundary";
    tube.genus_after = 3;
    StabMove destab;
    destab.move = "destabilize";
    destab.witness_triple = triple_words();
    destab.genus_after = 2;
    cert.moves = {tube, destab};
    return cert;
  }
  if (spec.family == Family::MxI) {
    if (!s1->word_a || !s2->word_a)
      throw std::runtime_error("missing front-end words");
    auto sa0 = slope_of_word(*s1->word_a);
    auto sa1 = slope_of_word(*s2->word_a);
    if (!sa0 || !sa1)
      throw std::runtime_error("front-end words are not slope words");
    auto ans = single_stab_possible_mxi(*sa0, *sa1);
    if (!ans.possible)
      throw std::runtime_error(
          "single-stabilization criterion fails: front-end slopes " +
          format_slope(*sa0) + " and " + format_slope(*sa1) +
          " are more than two apart");
    StabMove tube;
    tube.move = "tube-add";
    tube.label = "tube0";
    tube.arc = "arc-of-slope";
    tube.arc_slope = ans.witness;
    tube.genus_after = 3;
    StabMove destab;
    destab.move = "destabilize";
    destab.label = "tube0";
    destab.genus_after = 2;
    cert.moves = {tube, destab};
    return cert;
  }
  throw std::runtime_error("no single-stabilization plan for this family");
}

StabilizationCertificate emit_double_stab_certificate(
    const SplittingSpec& spec) {
  if (spec.family != Family::MxI)
    throw std::runtime_error(
        "double-stabilization plan is defined for the product family");
  StabilizationCertificate cert;
  cert.variant = "double";
  cert.base = spec;
  auto derived = dehn_derive(spec);
  cert.start = derived.first;
  cert.end = derived.second;
  auto [s1, s2] = open_pair(spec);

  StabMove t0, t1, d0, d1;
  t0.move = "tube-add";
  t0.label = s1->label;
  t0.arc = "straight-to-end-0";
  t0.genus_after = 3;
  t1.move = "tube-add";
  t1.label = s2->label;
  t1.arc = "straight-to-end-1";
  t1.genus_after = 4;
  d0.move = "destabilize";
  d0.label = s1->label;
  d0.genus_after = 3;
  d1.move = "destabilize";
  d1.label = s2->label;
  d1.genus_after = 2;
  cert.moves = {t0, t1, d0, d1};
  return cert;
}

std::vector<std::string> verify_stab_certificate(
    const StabilizationCertificate& cert) {
  std::vector<std::string> out;
  if (cert.variant != "single" && cert.variant != "double") {
    out.push_back("variant: unknown");
    return out;
  }

  SplittingSpec first, second;
  try {
    auto derived = dehn_derive(cert.base);
    first = derived.first;
    second = derived.second;
  } catch (const std::exception& e) {
    out.push_back(std::string("derive: ") + e.what());
    return out;
  }
  if (normalize(first) != normalize(cert.start))
    out.push_back("derive-start: mismatch");
  if (normalize(second) != normalize(cert.end))
    out.push_back("derive-end: mismatch");

  const bool single = cert.variant == "single";
  const std::vector<std::string> kinds =
      single ? std::vector<std::string>{"tube-add", "destabilize"}
             : std::vector<std::string>{"tube-add", "tube-add", "destabilize",
                                        "destabilize"};
  const std::vector<int> genus = single ? std::vector<int>{3, 2}
                                        : std::vector<int>{3, 4, 3, 2};
  if (cert.moves.size() != kinds.size()) {
    out.push_back("genus-ledger: wrong move count");
    return out;
  }
  for (size_t i = 0; i < kinds.size(); ++i)
    if (cert.moves[i].move != kinds[i] ||
        cert.moves[i].genus_after != genus[i])
      out.push_back("genus-ledger: move " + std::to_string(i));

  std::pair<const SurgerySlot*, const SurgerySlot*> open;
  try {
    open = open_pair(cert.base);
  } catch (const std::exception& e) {
    out.push_back(std::string("derive: ") + e.what());
    return out;
  }

  if (single && cert.base.family == Family::MxI) {
    auto sa0 = open.first->word_a ? slope_of_word(*open.first->word_a)
                                  : std::nullopt;
    auto sa1 = open.second->word_a ? slope_of_word(*open.second->word_a)
                                   : std::nullopt;
    if (!sa0 || !sa1) {
      out.push_back("farey-criterion: front-end words are not slope words");
      return out;
    }
    if (*sa0 != *sa1 && farey_distance(*sa0, *sa1) > 2)
      out.push_back("farey-criterion: front-end slopes more than two apart");
    if (!cert.moves[0].arc_slope) {
      out.push_back("arc-witness: missing");
    } else if (!farey_adjacent(*cert.moves[0].arc_slope, *sa0) ||
               !farey_adjacent(*cert.moves[0].arc_slope, *sa1)) {
      out.push_back("arc-witness: not adjacent to both slopes");
    }
    if (cert.moves[1].label != cert.moves[0].label)
      out.push_back("destabilize-witness: tube not matched");
  } else if (single) {
    if (cert.base.family != Family::MH && cert.base.family != Family::Hybrid)
      out.push_back("family-variant: no single plan for this family");
    if (cert.moves[0].label != open.second->label)
      out.push_back("tube-label: not the back-side slot");
    const auto& triple = cert.moves[1].witness_triple;
    if (triple.size() != 3) {
      out.push_back("witness-basis: wrong size");
      return out;
    }
    std::vector<Word> words;
    try {
      for (const auto& t : triple) words.push_back(parse_word(t, 3));
    } catch (const std::exception&) {
      out.push_back("witness-basis: unparsable");
      return out;
    }
    if (!is_basis_tuple(words, 3)) out.push_back("witness-basis: not a basis");
    // Erasing the drilled handle's generator must recover the front words.
    std::multiset<std::string> proj, expect;
    for (const auto& w : words) {
      Word p;
      for (const auto& l : w)
        if (l.idx != 3) p.push_back(l);
      proj.insert(format_word(canonical_cyclic(p)));
    }
    for (const auto& s : cert.base.slots)
      if (s.word_a) expect.insert(format_word(canonical_cyclic(*s.word_a)));
    if (proj != expect) out.push_back("witness-projection: mismatch");
  } else {
    if (cert.base.family != Family::MxI)
      out.push_back("family-variant: double plan requires the product family");
    if (cert.moves[0].label != open.first->label)
      out.push_back("tube-label: move 0");
    if (cert.moves[1].label != open.second->label)
      out.push_back("tube-label: move 1");
    std::multiset<std::string> tubes{cert.moves[0].label,
                                     cert.moves[1].label};
    std::multiset<std::string> undone{cert.moves[2].label,
                                      cert.moves[3].label};
    if (tubes != undone)
      out.push_back("destabilize-witness: tubes not matched");
  }
  return out;
}

}  // namespace heegaard
