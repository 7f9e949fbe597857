#include "heegaard/json_io.hpp"

#include <stdexcept>

namespace heegaard {

using nlohmann::json;

Rational parse_rational(const std::string& s) {
  try {
    size_t used = 0;
    auto pos = s.find('/');
    if (pos == std::string::npos) {
      long long n = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Rational(n);
    }
    long long n = std::stoll(s.substr(0, pos), &used);
    if (used != pos) throw std::invalid_argument(s);
    long long d = std::stoll(s.substr(pos + 1), &used);
    if (used != s.size() - pos - 1) throw std::invalid_argument(s);
    return Rational(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: " + s);
  }
}

namespace {

json point_to_json(const BoundaryPoint& p) {
  return json{{"side", p.side}, {"t", p.t.str()}};
}

BoundaryPoint point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("side") || !j.contains("t"))
    throw std::invalid_argument("bad boundary point");
  BoundaryPoint p;
  p.side = j.at("side").get<int>();
  p.t = parse_rational(j.at("t").get<std::string>());
  return p;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing field: ") + key);
  return j.at(key);
}

std::string require_schema(const json& j, const std::string& schema) {
  if (field(j, "schema").get<std::string>() != schema)
    throw std::invalid_argument("expected schema " + schema);
  return schema;
}

json side_to_json(const SideModel& s) {
  if (s.kind == SideKind::Product) return json{{"model", "product"}};
  return json{{"model", "handlebody"},
              {"meridians", json::array({s.meridians.cls1, s.meridians.cls2})}};
}

SideModel side_from_json(const json& j) {
  SideModel s;
  auto model = field(j, "model").get<std::string>();
  if (model == "product") {
    s.kind = SideKind::Product;
    return s;
  }
  if (model != "handlebody") throw std::invalid_argument("bad side model");
  s.kind = SideKind::Handlebody;
  const auto& m = field(j, "meridians");
  if (!m.is_array() || m.size() != 2)
    throw std::invalid_argument("bad meridian list");
  s.meridians.cls1 = m[0].get<int>();
  s.meridians.cls2 = m[1].get<int>();
  return s;
}

json slope_to_json(const std::optional<Slope>& s) {
  return s ? json(format_slope(*s)) : json("none");
}

std::optional<Slope> slope_from_json(const json& j) {
  auto s = j.get<std::string>();
  if (s == "none") return std::nullopt;
  return parse_slope(s);
}

json opt_curve_to_json(const std::optional<ChordCurve>& c) {
  return c ? curve_to_json(*c) : json(nullptr);
}

std::optional<ChordCurve> opt_curve_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return curve_from_json(j);
}

json opt_word_to_json(const std::optional<Word>& w) {
  return w ? json(format_word(*w)) : json(nullptr);
}

std::optional<Word> opt_word_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  try {
    return parse_word(j.get<std::string>(), 2);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad word: ") + e.what());
  }
}

}  // namespace

json curve_to_json(const ChordCurve& c) {
  json chords = json::array();
  for (const auto& ch : c.chords) {
    json jc{{"from", point_to_json(ch.from)}, {"to", point_to_json(ch.to)}};
    if (!ch.bends.empty()) {
      json bends = json::array();
      for (const auto& b : ch.bends)
        bends.push_back(json::array({b.x.str(), b.y.str()}));
      jc["bends"] = bends;
    }
    chords.push_back(jc);
  }
  json out{{"chords", chords}};
  if (!c.essential_tag.empty()) out["tag"] = c.essential_tag;
  return out;
}

ChordCurve curve_from_json(const json& j) {
  ChordCurve c;
  const auto& chords = field(j, "chords");
  if (!chords.is_array()) throw std::invalid_argument("bad chord list");
  for (const auto& ch : chords) {
    Chord chord;
    chord.from = point_from_json(field(ch, "from"));
    chord.to = point_from_json(field(ch, "to"));
    if (ch.contains("bends")) {
      const auto& bends = ch.at("bends");
      if (!bends.is_array()) throw std::invalid_argument("bad bend list");
      for (const auto& b : bends) {
        if (!b.is_array() || b.size() != 2)
          throw std::invalid_argument("bad bend point");
        chord.bends.push_back({parse_rational(b.at(0).get<std::string>()),
                               parse_rational(b.at(1).get<std::string>())});
      }
    }
    c.chords.push_back(chord);
  }
  c.essential_tag = j.value("tag", std::string());
  return c;
}

json spec_to_json(const SplittingSpec& spec) {
  json slots = json::array();
  for (const auto& s : spec.slots)
    slots.push_back(json{{"label", s.label},
                         {"host", s.host},
                         {"word_a", opt_word_to_json(s.word_a)},
                         {"word_b", opt_word_to_json(s.word_b)},
                         {"rep_a", opt_curve_to_json(s.rep_a)},
                         {"rep_b", opt_curve_to_json(s.rep_b)},
                         {"slope", slope_to_json(s.slope)}});
  return json{{"schema", "heegaard-spec/1"},
              {"family", family_name(spec.family)},
              {"side_a", side_to_json(spec.side_a)},
              {"side_b", side_to_json(spec.side_b)},
              {"gluing_tag", spec.gluing_tag},
              {"slots", slots}};
}

SplittingSpec spec_from_json(const json& j) {
  require_schema(j, "heegaard-spec/1");
  SplittingSpec spec;
  spec.family = family_from_name(field(j, "family").get<std::string>());
  spec.side_a = side_from_json(field(j, "side_a"));
  spec.side_b = side_from_json(field(j, "side_b"));
  spec.gluing_tag = field(j, "gluing_tag").get<std::string>();
  const auto& slots = field(j, "slots");
  if (!slots.is_array()) throw std::invalid_argument("bad slot list");
  for (const auto& s : slots) {
    SurgerySlot slot;
    slot.label = field(s, "label").get<std::string>();
    slot.host = field(s, "host").get<std::string>();
    slot.word_a = opt_word_from_json(field(s, "word_a"));
    slot.word_b = opt_word_from_json(field(s, "word_b"));
    slot.rep_a = opt_curve_from_json(field(s, "rep_a"));
    slot.rep_b = opt_curve_from_json(field(s, "rep_b"));
    slot.slope = slope_from_json(field(s, "slope"));
    spec.slots.push_back(slot);
  }
  return spec;
}

namespace {

json cert_header(const char* kind) {
  return json{{"schema", "heegaard-cert/1"}, {"kind", kind}};
}

void require_cert(const json& j, const char* kind) {
  require_schema(j, "heegaard-cert/1");
  if (field(j, "kind").get<std::string>() != kind)
    throw std::invalid_argument(std::string("expected certificate kind ") +
                                kind);
}

}  // namespace

json distance_cert_to_json(const DistanceCertificate& cert) {
  json out = cert_header("distance");
  out["side_a"] = side_to_json(cert.side_a);
  out["side_b"] = side_to_json(cert.side_b);
  json curves = json::array();
  for (const auto& c : cert.curves)
    curves.push_back(json{{"label", c.label},
                          {"rep_a", opt_curve_to_json(c.rep_a)},
                          {"rep_b", opt_curve_to_json(c.rep_b)}});
  out["curves"] = curves;
  return out;
}

DistanceCertificate distance_cert_from_json(const json& j) {
  require_cert(j, "distance");
  DistanceCertificate cert;
  cert.side_a = side_from_json(field(j, "side_a"));
  cert.side_b = side_from_json(field(j, "side_b"));
  const auto& curves = field(j, "curves");
  if (!curves.is_array()) throw std::invalid_argument("bad curve list");
  for (const auto& c : curves) {
    CertCurve cc;
    cc.label = field(c, "label").get<std::string>();
    cc.rep_a = opt_curve_from_json(field(c, "rep_a"));
    cc.rep_b = opt_curve_from_json(field(c, "rep_b"));
    cert.curves.push_back(cc);
  }
  return cert;
}

json dcp_cert_to_json(const DcpCertificate& cert) {
  json out = cert_header("dcp");
  out["side_a"] = side_to_json(cert.side_a);
  out["side_b"] = side_to_json(cert.side_b);
  out["seam"] = curve_to_json(cert.seam);
  out["disk1"] = curve_to_json(cert.disk1);
  out["disk2"] = curve_to_json(cert.disk2);
  return out;
}

DcpCertificate dcp_cert_from_json(const json& j) {
  require_cert(j, "dcp");
  DcpCertificate cert;
  cert.side_a = side_from_json(field(j, "side_a"));
  cert.side_b = side_from_json(field(j, "side_b"));
  cert.seam = curve_from_json(field(j, "seam"));
  cert.disk1 = curve_from_json(field(j, "disk1"));
  cert.disk2 = curve_from_json(field(j, "disk2"));
  return cert;
}

json stab_cert_to_json(const StabilizationCertificate& cert) {
  json out = cert_header("stab");
  out["variant"] = cert.variant;
  out["family"] = family_name(cert.base.family);
  out["base_spec"] = spec_to_json(cert.base);
  out["start"] = spec_to_json(cert.start);
  out["end"] = spec_to_json(cert.end);
  json moves = json::array();
  for (const auto& m : cert.moves) {
    json mv{{"move", m.move}, {"genus_after", m.genus_after}};
    if (!m.label.empty()) mv["label"] = m.label;
    if (!m.arc.empty()) mv["arc"] = m.arc;
    if (m.arc_slope) mv["arc_slope"] = format_slope(*m.arc_slope);
    if (!m.witness_triple.empty()) mv["witness"] = m.witness_triple;
    moves.push_back(mv);
  }
  out["moves"] = moves;
  return out;
}

StabilizationCertificate stab_cert_from_json(const json& j) {
  require_cert(j, "stab");
  StabilizationCertificate cert;
  cert.variant = field(j, "variant").get<std::string>();
  cert.base = spec_from_json(field(j, "base_spec"));
  cert.start = spec_from_json(field(j, "start"));
  cert.end = spec_from_json(field(j, "end"));
  const auto& moves = field(j, "moves");
  if (!moves.is_array()) throw std::invalid_argument("bad move list");
  for (const auto& m : moves) {
    StabMove mv;
    mv.move = field(m, "move").get<std::string>();
    mv.genus_after = field(m, "genus_after").get<int>();
    mv.label = m.value("label", std::string());
    mv.arc = m.value("arc", std::string());
    if (m.contains("arc_slope") && !m.at("arc_slope").is_null())
      mv.arc_slope = parse_slope(m.at("arc_slope").get<std::string>());
    if (m.contains("witness"))
      mv.witness_triple = m.at("witness").get<std::vector<std::string>>();
    cert.moves.push_back(mv);
  }
  return cert;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace heegaard
