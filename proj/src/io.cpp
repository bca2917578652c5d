#include "ctv/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

namespace ctv::io {

namespace {

using ojson = nlohmann::ordered_json;
using json = nlohmann::json;

constexpr const char* kInstanceFormat = "colorful-tverberg-instance";
constexpr const char* kCertificateFormat = "colorful-tverberg-certificate";
constexpr const char* kSweepFormat = "colorful-tverberg-sweep";

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

ojson rationals(const Vector& v) {
  ojson out = ojson::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

ojson rational_rows(const std::vector<Vector>& rows) {
  ojson out = ojson::array();
  for (const auto& row : rows) out.push_back(rationals(row));
  return out;
}

ojson index_sets(const std::vector<IndexSet>& sets) {
  ojson out = ojson::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object()) fail("expected an object");
  const auto it = obj.find(name);
  if (it == obj.end()) fail(std::string("missing field \"") + name + "\"");
  return *it;
}

Rational rational_of(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(v.dump());
  fail("rationals must be strings \"p/q\" or integers, got " + v.dump());
}

Vector vector_of(const json& v) {
  if (!v.is_array()) fail("expected an array of rationals");
  Vector out;
  for (const auto& x : v) out.push_back(rational_of(x));
  return out;
}

std::vector<Vector> vectors_of(const json& v) {
  if (!v.is_array()) fail("expected an array of rational arrays");
  std::vector<Vector> out;
  for (const auto& x : v) out.push_back(vector_of(x));
  return out;
}

std::size_t size_of(const json& v) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    fail("expected a nonnegative integer, got " + v.dump());
  }
  return v.get<std::size_t>();
}

std::vector<IndexSet> index_sets_of(const json& v) {
  if (!v.is_array()) fail("expected an array of index arrays");
  std::vector<IndexSet> out;
  for (const auto& s : v) {
    if (!s.is_array()) fail("expected an index array");
    IndexSet set;
    for (const auto& i : s) set.push_back(size_of(i));
    out.push_back(std::move(set));
  }
  return out;
}

void check_header(const json& doc, const char* format) {
  const auto& f = field(doc, "format");
  if (!f.is_string() || f.get<std::string>() != format) fail(std::string("expected format \"") + format + "\"");
  const auto& v = field(doc, "version");
  if (!v.is_number_integer() || v.get<int>() != kFormatVersion) {
    fail("unsupported version " + v.dump());
  }
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

ojson tverberg_json(const TverbergCertificate& cert) {
  ojson doc;
  doc["format"] = kCertificateFormat;
  doc["version"] = kFormatVersion;
  doc["kind"] = "tverberg";
  doc["partition"] = index_sets(cert.partition.pieces);
  doc["weights"] = rational_rows(cert.witness.weights);
  doc["point"] = rationals(cert.witness.point);
  return doc;
}

ojson transversal_json(const TransversalCertificate& cert) {
  ojson doc;
  doc["format"] = kCertificateFormat;
  doc["version"] = kFormatVersion;
  doc["kind"] = "transversal";
  doc["plane"] = {{"base", rationals(cert.plane.base)}, {"directions", rational_rows(cert.plane.directions)}};
  ojson parts = ojson::array();
  for (const auto& p : cert.partitions) parts.push_back(index_sets(p.pieces));
  doc["partitions"] = parts;
  ojson witnesses = ojson::array();
  for (const auto& per : cert.witnesses) {
    ojson list = ojson::array();
    for (const auto& w : per) list.push_back({{"weights", rationals(w.weights)}, {"params", rationals(w.plane_params)}});
    witnesses.push_back(list);
  }
  doc["witnesses"] = witnesses;
  return doc;
}

Certificate certificate_of(const json& doc) {
  check_header(doc, kCertificateFormat);
  const auto& kind = field(doc, "kind");
  Certificate out;
  if (kind == "tverberg") {
    TverbergCertificate c;
    c.partition.pieces = index_sets_of(field(doc, "partition"));
    c.witness.weights = vectors_of(field(doc, "weights"));
    c.witness.point = vector_of(field(doc, "point"));
    out.tverberg = std::move(c);
  } else if (kind == "transversal") {
    TransversalCertificate c;
    const auto& plane = field(doc, "plane");
    c.plane.base = vector_of(field(plane, "base"));
    c.plane.directions = vectors_of(field(plane, "directions"));
    const auto& parts = field(doc, "partitions");
    if (!parts.is_array()) fail("\"partitions\" must be an array");
    for (const auto& p : parts) c.partitions.push_back(PartitionTuple{index_sets_of(p)});
    const auto& ws = field(doc, "witnesses");
    if (!ws.is_array()) fail("\"witnesses\" must be an array");
    for (const auto& per : ws) {
      if (!per.is_array()) fail("witness lists must be arrays");
      std::vector<PieceWitness> list;
      for (const auto& w : per) list.push_back({vector_of(field(w, "weights")), vector_of(field(w, "params"))});
      c.witnesses.push_back(std::move(list));
    }
    out.transversal = std::move(c);
  } else {
    fail("unknown certificate kind " + kind.dump());
  }
  return out;
}

}  // namespace

ProblemInstance parse_instance(const std::string& text) {
  const auto doc = parse_json(text);
  check_header(doc, kInstanceFormat);
  ProblemInstance inst;
  inst.d = size_of(field(doc, "d"));
  inst.k = size_of(field(doc, "k"));
  const auto& cols = field(doc, "collections");
  if (!cols.is_array()) fail("\"collections\" must be an array");
  for (const auto& c : cols) {
    inst.r.push_back(size_of(field(c, "r")));
    ColoredConfig cfg;
    cfg.dim = inst.d;
    cfg.points = vectors_of(field(c, "points"));
    cfg.classes = index_sets_of(field(c, "classes"));
    inst.collections.push_back(std::move(cfg));
  }
  return inst;
}

std::string emit_instance(const ProblemInstance& instance) {
  ojson doc;
  doc["format"] = kInstanceFormat;
  doc["version"] = kFormatVersion;
  doc["d"] = instance.d;
  doc["k"] = instance.k;
  ojson cols = ojson::array();
  for (std::size_t l = 0; l < instance.collections.size(); ++l) {
    const auto& c = instance.collections[l];
    ojson col;
    col["r"] = l < instance.r.size() ? instance.r[l] : 0;
    col["points"] = rational_rows(c.points);
    col["classes"] = index_sets(c.classes);
    cols.push_back(col);
  }
  doc["collections"] = cols;
  return dump(doc);
}

Certificate parse_certificate(const std::string& text) { return certificate_of(parse_json(text)); }

std::string emit_certificate(const TverbergCertificate& cert) { return dump(tverberg_json(cert)); }
std::string emit_certificate(const TransversalCertificate& cert) { return dump(transversal_json(cert)); }

std::string emit_certificate(const Certificate& cert) {
  if (cert.tverberg) return emit_certificate(*cert.tverberg);
  if (cert.transversal) return emit_certificate(*cert.transversal);
  throw Error(ErrorKind::InvalidParameter, "empty certificate");
}

Verdict verify_certificate(const ProblemInstance& instance, const Certificate& cert) {
  if (cert.tverberg) {
    if (instance.k != 0 || instance.collections.size() != 1 || instance.r.size() != 1) {
      return Verdict::fail("tverberg certificates need a k = 0 instance");
    }
    return verify_tverberg(instance.collections[0], instance.r[0], *cert.tverberg);
  }
  if (cert.transversal) return verify_transversal(instance, *cert.transversal);
  return Verdict::fail("empty certificate");
}

std::string emit_sweep_report(const SweepReport& report) {
  const auto& p = report.params;
  ojson doc;
  doc["format"] = kSweepFormat;
  doc["version"] = kFormatVersion;
  doc["params"] = {{"d", p.d},
                   {"k", p.k},
                   {"r", p.r},
                   {"profiles", p.profiles},
                   {"samples", p.budget.grassmannian_samples},
                   {"refine", p.budget.refinement_depth},
                   {"exact_hyperplane", p.exact_hyperplane},
                   {"grid_bound", p.random.grid_bound},
                   {"jitter_den", p.random.jitter_den}};
  doc["seed"] = report.seed;
  doc["trials"] = report.trials.size();
  doc["found"] = report.found;
  doc["exhausted"] = report.exhausted;
  doc["proven_infeasible"] = report.proven_infeasible;
  doc["verified"] = report.verified;
  doc["status"] = report.beyond_proven ? "inconclusive: outside the proven range" : "within the proven range";
  ojson trials = ojson::array();
  for (const auto& t : report.trials) {
    ojson row;
    row["index"] = t.index;
    row["seed"] = t.seed;
    row["outcome"] = to_string(t.outcome);
    row["verified"] = t.verified;
    row["beyond_proven"] = t.beyond_proven;
    row["lps"] = t.lps_solved;
    if (t.tverberg) row["certificate"] = tverberg_json(*t.tverberg);
    if (t.transversal) row["certificate"] = transversal_json(*t.transversal);
    trials.push_back(row);
  }
  doc["results"] = trials;
  return dump(doc);
}

std::string emit_hypothesis_report(const HypothesisReport& report) {
  auto flag = [](const HypothesisFlag& f) { return ojson{{"ok", f.ok}, {"message", f.message}}; };
  ojson doc;
  doc["size"] = flag(report.size);
  doc["class_bound"] = flag(report.class_bound);
  doc["parity"] = flag(report.parity);
  doc["prime"] = flag(report.prime);
  doc["uniform_r"] = report.uniform_r;
  doc["all_ok"] = report.all_ok();
  doc["theorem_applies"] = report.theorem_applies();
  return dump(doc);
}

std::string emit_degree_report(const topology::DegreeReport& report) {
  ojson doc;
  doc["r"] = report.r;
  doc["d"] = report.d;
  doc["abs_degree"] = report.abs_degree;
  doc["residue"] = report.residue;
  doc["expected"] = report.expected;
  doc["check_degree_agrees"] = report.check_degree == report.degree;
  doc["preimages"] = report.preimages;
  doc["facets"] = report.facets;
  doc["perturbations"] = report.perturbations;
  doc["regular_value"] = rationals(report.regular_value);
  doc["free_action"] = report.free_action;
  return dump(doc);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::filesystem::path target(path);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace ctv::io
