#include "ctv/solver.hpp"

namespace ctv {

TverbergSearch search_tverberg(const ColoredConfig& config, std::size_t r) {
  if (r < 2) throw Error(ErrorKind::InvalidParameter, "r must be at least 2");
  config.check();
  TverbergSearch out;
  ColorfulPartitionEnumerator tuples(config, r);
  while (auto tuple = tuples.next()) {
    ++out.tuples_examined;
    // An empty piece has an empty hull, so such tuples can never win.
    if (tuple->has_empty_piece()) continue;
    ++out.lps_solved;
    auto witness = lp_feasible_common_point(piece_points(config, *tuple));
    if (witness) {
      out.certificate = TverbergCertificate{std::move(*tuple), std::move(*witness)};
      return out;
    }
  }
  return out;
}

std::optional<TverbergCertificate> solve_tverberg(const ColoredConfig& config, std::size_t r) {
  return search_tverberg(config, r).certificate;
}

Verdict verify_tverberg(const ColoredConfig& config, std::size_t r, const TverbergCertificate& cert) {
  if (auto v = check_partition(config, r, cert.partition); !v) return v;
  if (cert.partition.has_empty_piece()) return Verdict::fail("partition has an empty piece");
  if (cert.witness.point.size() != config.dim) return Verdict::fail("witness point has wrong dimension");
  return verify_common_point_witness(piece_points(config, cert.partition), cert.witness);
}

TransversalCertificate as_transversal(const TverbergCertificate& cert, const ColoredConfig& config) {
  (void)config;
  TransversalCertificate out;
  out.plane.base = cert.witness.point;
  out.partitions.push_back(cert.partition);
  std::vector<PieceWitness> pieces;
  for (const auto& w : cert.witness.weights) pieces.push_back({w, {}});
  out.witnesses.push_back(std::move(pieces));
  return out;
}

}  // namespace ctv
