#pragma once

#include <optional>
#include <string>

#include "ctv/config.hpp"
#include "ctv/solver.hpp"
#include "ctv/topology.hpp"

namespace ctv::io {

constexpr int kFormatVersion = 1;

/// Either kind of solution file.
struct Certificate {
  std::optional<TverbergCertificate> tverberg;
  std::optional<TransversalCertificate> transversal;
};

/// Parsers throw Error{Parse} on malformed input (bad JSON, bad rationals such as
/// "1/0", missing fields, wrong format tag or version) and return structurally
/// unchecked values; call check() / the verifiers afterwards.
ProblemInstance parse_instance(const std::string& text);
std::string emit_instance(const ProblemInstance& instance);

Certificate parse_certificate(const std::string& text);
std::string emit_certificate(const TverbergCertificate& cert);
std::string emit_certificate(const TransversalCertificate& cert);
std::string emit_certificate(const Certificate& cert);

/// Dispatches to verify_tverberg (k = 0 instances only) or verify_transversal.
Verdict verify_certificate(const ProblemInstance& instance, const Certificate& cert);

std::string emit_sweep_report(const SweepReport& report);
std::string emit_hypothesis_report(const HypothesisReport& report);
std::string emit_degree_report(const topology::DegreeReport& report);

std::string read_file(const std::string& path);

/// Writes to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& contents);

/// Deterministic SVG 1.1 drawing of a d = 2 instance and optional certificate.
/// Throws Error{InvalidParameter} unless d = 2.
std::string render_svg(const ProblemInstance& instance, const Certificate* cert = nullptr);

}  // namespace ctv::io
