#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "heegaard/distance.hpp"
#include "heegaard/json_io.hpp"
#include "heegaard/splittings.hpp"
#include "heegaard/whitehead.hpp"
#include "heegaard/stallings.hpp"

namespace {

using heegaard::SplittingSpec;
using nlohmann::json;

std::optional<heegaard::Slope> opt_slope(const std::string& s) {
  if (s == "none") return std::nullopt;
  return heegaard::parse_slope(s);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

void emit(const json& j, const std::string& output) {
  std::string text = heegaard::dump_json(j);
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw std::invalid_argument("cannot write " + output);
  out << text;
}

// generate options
struct GenOpts {
  std::string l1 = "none", l2 = "none", ra = "none", rb = "none";
  std::string a0 = "0/1", a1 = "1/0", b0 = "1/0", b1 = "0/1";
  std::string s0 = "none", s1 = "none";
  std::string l3 = "none";
  std::string tag = "standard";
  std::string output;
};

int run_generate(const std::string& family, const GenOpts& o) {
  SplittingSpec spec;
  if (family == "mh") {
    spec = heegaard::build_mh(opt_slope(o.l1), opt_slope(o.l2),
                              opt_slope(o.ra), opt_slope(o.rb), o.tag);
  } else if (family == "mxi") {
    spec = heegaard::build_mxi(heegaard::parse_slope(o.a0),
                               heegaard::parse_slope(o.a1),
                               heegaard::parse_slope(o.b0),
                               heegaard::parse_slope(o.b1), opt_slope(o.s0),
                               opt_slope(o.s1), o.tag);
  } else {
    spec = heegaard::build_hybrid(opt_slope(o.l3), opt_slope(o.l1),
                                  opt_slope(o.l2), heegaard::parse_slope(o.b0),
                                  heegaard::parse_slope(o.b1), o.tag);
  }
  auto problems = heegaard::validate_spec(spec);
  if (!problems.empty()) {
    for (const auto& p : problems) std::cerr << "invalid: " << p << "\n";
    return 1;
  }
  emit(heegaard::spec_to_json(spec), o.output);
  std::cerr << "generated " << family << " spec with " << spec.slots.size()
            << " slots\n";
  return 0;
}

int run_derive(const std::string& path, std::string prefix) {
  SplittingSpec spec = heegaard::spec_from_json(load_json(path));
  auto derived = heegaard::dehn_derive(spec);
  if (prefix.empty()) {
    prefix = path;
    auto pos = prefix.rfind(".json");
    if (pos != std::string::npos && pos == prefix.size() - 5)
      prefix.resize(pos);
    prefix += ".derived";
  }
  std::string first = prefix + ".1.json";
  std::string second = prefix + ".2.json";
  emit(heegaard::spec_to_json(derived.first), first);
  emit(heegaard::spec_to_json(derived.second), second);
  bool equal = heegaard::normalize(derived.first) ==
               heegaard::normalize(derived.second);
  json report{{"first", first}, {"second", second},
              {"equal_normalized", equal}};
  std::cout << heegaard::dump_json(report);
  std::cerr << "derived two splittings" << (equal ? " (equal after normalization)" : "")
            << "\n";
  return 0;
}

int run_verify(const std::string& kind, const std::string& path,
               const std::string& output) {
  json j = load_json(path);
  json result;
  bool ok = false;
  if (kind == "distance") {
    auto r = heegaard::verify_certificate(heegaard::distance_cert_from_json(j));
    ok = r.ok;
    result = json{{"ok", r.ok}};
    if (r.ok)
      result["distance_bound"] = r.distance_bound;
    else {
      result["reason"] = r.reason;
      result["index"] = r.index;
    }
  } else if (kind == "dcp") {
    auto r = heegaard::verify_dcp(heegaard::dcp_cert_from_json(j));
    ok = r.ok;
    result = json{{"ok", r.ok}};
    if (!r.ok) result["reason"] = r.reason;
  } else {
    auto problems =
        heegaard::verify_stab_certificate(heegaard::stab_cert_from_json(j));
    ok = problems.empty();
    result = json{{"ok", ok}, {"problems", problems}};
  }
  emit(result, output);
  std::cerr << (ok ? "certificate verified\n" : "certificate rejected\n");
  return ok ? 0 : 1;
}

int run_cert(const std::string& kind, const std::string& path, bool second,
             const std::string& variant, const std::string& output) {
  json out;
  if (kind == "dcp") {
    out = heegaard::dcp_cert_to_json(heegaard::build_dcp_certificate());
  } else {
    SplittingSpec spec = heegaard::spec_from_json(load_json(path));
    if (kind == "distance") {
      out = heegaard::distance_cert_to_json(
          heegaard::build_distance3_certificate(spec, second));
    } else {
      auto cert = variant == "double"
                      ? heegaard::emit_double_stab_certificate(spec)
                      : heegaard::emit_single_stab_certificate(spec);
      out = heegaard::stab_cert_to_json(cert);
    }
  }
  emit(out, output);
  std::cerr << "emitted " << kind << " certificate\n";
  return 0;
}

int run_check_primitive(const std::string& text, int rank) {
  heegaard::Word w = heegaard::parse_word(text, rank);
  auto r = heegaard::check_primitive(w, rank);
  json trace = json::array();
  for (const auto& s : r.trace)
    trace.push_back(json{{"move", s.move}, {"result", s.result}});
  emit(json{{"word", heegaard::format_word(w)},
            {"primitive", r.primitive},
            {"trace", trace}},
       "");
  return r.primitive ? 0 : 1;
}

int run_check_basis(const std::vector<std::string>& texts, int rank) {
  if (rank == 0) rank = (int)texts.size();
  std::vector<heegaard::Word> words;
  for (const auto& t : texts) words.push_back(heegaard::parse_word(t, rank));
  bool basis = heegaard::is_basis_tuple(words, rank);
  emit(json{{"rank", rank}, {"basis", basis}}, "");
  return basis ? 0 : 1;
}

int run_check_farey(const std::string& s1, const std::string& s2) {
  auto a = heegaard::parse_slope(s1);
  auto b = heegaard::parse_slope(s2);
  json out{{"distance", heegaard::farey_distance(a, b)}};
  if (a != b) {
    auto mid = heegaard::common_neighbor(a, b);
    out["common_neighbor"] =
        mid ? json(heegaard::format_slope(*mid)) : json(nullptr);
  }
  emit(out, "");
  return 0;
}

int run_check_classify(const std::string& u, const std::string& v) {
  auto p = heegaard::classify_pair(heegaard::parse_word(u, 2),
                                   heegaard::parse_word(v, 2));
  json out;
  switch (p.tag) {
    case heegaard::PairTag::TypeA:
      out["type"] = "A";
      out["rho"] = p.witness_rho;
      out["winding"] = p.witness_winding;
      break;
    case heegaard::PairTag::TypeB:
      out["type"] = "B";
      out["end0"] = p.witness_end0;
      out["end1"] = p.witness_end1;
      if (p.witness_slope0)
        out["slope0"] = heegaard::format_slope(*p.witness_slope0);
      if (p.witness_slope1)
        out["slope1"] = heegaard::format_slope(*p.witness_slope1);
      break;
    default:
      out["type"] = "unknown";
      out["diagnostics"] = p.diagnostics;
  }
  emit(out, "");
  return p.tag == heegaard::PairTag::Unknown ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genus 2 splitting families: specs, derivation, certificates"};
  app.require_subcommand(1);

  GenOpts gen;
  auto* generate = app.add_subcommand("generate", "emit a family spec");
  generate->require_subcommand(1);
  auto* gen_mh = generate->add_subcommand("mh", "three-handle family");
  gen_mh->add_option("--l1", gen.l1, "surgery slope of slot l1");
  gen_mh->add_option("--l2", gen.l2, "surgery slope of slot l2");
  gen_mh->add_option("--ra", gen.ra, "surgery slope of the side-a curve");
  gen_mh->add_option("--rb", gen.rb, "surgery slope of the side-b curve");
  auto* gen_mxi = generate->add_subcommand("mxi", "product family");
  gen_mxi->add_option("--a0", gen.a0, "side-a front end slope");
  gen_mxi->add_option("--a1", gen.a1, "side-a back end slope");
  gen_mxi->add_option("--b0", gen.b0, "side-b front end slope");
  gen_mxi->add_option("--b1", gen.b1, "side-b back end slope");
  gen_mxi->add_option("--s0", gen.s0, "surgery slope of slot l0");
  gen_mxi->add_option("--s1", gen.s1, "surgery slope of slot l1");
  auto* gen_hy = generate->add_subcommand("hybrid", "handlebody/product family");
  gen_hy->add_option("--l3", gen.l3, "surgery slope of the side-a curve");
  gen_hy->add_option("--l1", gen.l1, "surgery slope of slot l1");
  gen_hy->add_option("--l2", gen.l2, "surgery slope of slot l2");
  gen_hy->add_option("--b0", gen.b0, "side-b front end slope");
  gen_hy->add_option("--b1", gen.b1, "side-b back end slope");
  for (auto* sub : {gen_mh, gen_mxi, gen_hy}) {
    sub->add_option("--tag", gen.tag, "gluing tag");
    sub->add_option("-o,--output", gen.output, "output file (default stdout)");
  }

  std::string derive_path, derive_prefix;
  auto* derive = app.add_subcommand("derive", "push the two unassigned slots");
  derive->add_option("spec", derive_path, "spec JSON file")->required();
  derive->add_option("--out-prefix", derive_prefix, "output file prefix");

  std::string cert_kind, cert_path, cert_variant = "single", cert_output;
  bool cert_second = false;
  auto* cert = app.add_subcommand("cert", "emit a certificate");
  cert->add_option("--kind", cert_kind, "distance, dcp, or stab")
      ->required()
      ->check(CLI::IsMember({"distance", "dcp", "stab"}));
  cert->add_option("spec", cert_path, "spec JSON file (unused for dcp)");
  cert->add_flag("--second", cert_second,
                 "distance: mirror chain for the second derived splitting");
  cert->add_option("--variant", cert_variant, "stab: single or double")
      ->check(CLI::IsMember({"single", "double"}));
  cert->add_option("-o,--output", cert_output, "output file (default stdout)");

  std::string verify_kind, verify_path, verify_output;
  auto* verify = app.add_subcommand("verify", "check a certificate");
  verify->add_option("--kind", verify_kind, "distance, dcp, or stab")
      ->required()
      ->check(CLI::IsMember({"distance", "dcp", "stab"}));
  verify->add_option("cert", verify_path, "certificate JSON file")->required();
  verify->add_option("-o,--output", verify_output, "result file");

  auto* check = app.add_subcommand("check", "word and slope queries");
  check->require_subcommand(1);
  std::string word_text;
  int rank = 2;
  auto* primitive = check->add_subcommand("primitive", "primitivity of a word");
  primitive->add_option("word", word_text, "free group word")->required();
  primitive->add_option("--rank", rank, "free group rank");
  std::vector<std::string> basis_words;
  int basis_rank = 0;
  auto* basis = check->add_subcommand("basis", "is the tuple a free basis");
  basis->add_option("words", basis_words, "tuple of words")->required();
  basis->add_option("--rank", basis_rank, "free group rank (default: tuple size)");
  std::string slope1, slope2;
  auto* farey = check->add_subcommand("farey-dist", "slope distance");
  farey->add_option("first", slope1, "slope")->required();
  farey->add_option("second", slope2, "slope")->required();
  std::string pair_u, pair_v;
  auto* classify = check->add_subcommand("classify", "disjoint primitive pair type");
  classify->add_option("first", pair_u, "word")->required();
  classify->add_option("second", pair_v, "word")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_mh->parsed()) return run_generate("mh", gen);
    if (gen_mxi->parsed()) return run_generate("mxi", gen);
    if (gen_hy->parsed()) return run_generate("hybrid", gen);
    if (derive->parsed()) return run_derive(derive_path, derive_prefix);
    if (cert->parsed())
      return run_cert(cert_kind, cert_path, cert_second, cert_variant,
                      cert_output);
    if (verify->parsed())
      return run_verify(verify_kind, verify_path, verify_output);
    if (primitive->parsed()) return run_check_primitive(word_text, rank);
    if (basis->parsed()) return run_check_basis(basis_words, basis_rank);
    if (farey->parsed()) return run_check_farey(slope1, slope2);
    if (classify->parsed()) return run_check_classify(pair_u, pair_v);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
