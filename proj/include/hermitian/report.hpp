#pragma once

#include <vector>

#include "hermitian/eo.hpp"
#include "json.hpp"

namespace hermitian {

struct PartitionPart {
  u64 part = 0;
  u64 count = 0;

  friend bool operator==(const PartitionPart&, const PartitionPart&) = default;
};

struct ReportBundle {
  Verdict verdict;
  std::vector<u64> cartier_ranks;  // rank of V^i on the omegas, i = 1..n
  u64 elliptic_rank_bound = 0;
  u64 selmer_ordinary = 0;
  u64 selmer_supersingular = 0;
  std::vector<PartitionPart> partition_eta_d;  // largest part first
  u64 supersingular_locus_index = 0;           // s = ceil(g/2)
  u64 nu_s = 0;
  bool supersingular_locus_flag = false;       // nu_s == 0
};

/// Rank of V^i restricted to the omega blocks, read off the orbit module.
u64 orbit_cartier_rank(const WeightedPermutationModule& m, unsigned iterations);

/// Throws verification_failed unless the verdict is verified.
ReportBundle applications_report(const Verdict& verdict);
ReportBundle applications_report(u64 p, unsigned n);

nlohmann::json to_json(const EOType& type);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const ReportBundle& bundle);

}  // namespace hermitian
