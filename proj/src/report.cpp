#include "hermitian/report.hpp"

#include <algorithm>
#include <map>

#include "hermitian/error.hpp"

namespace hermitian {

u64 orbit_cartier_rank(const WeightedPermutationModule& m, unsigned iterations) {
  u64 rank = 0;
  for (std::size_t node = 0; node < m.size(); node += 2) {
    Arrow at = static_cast<std::uint32_t>(node);
    for (unsigned k = 0; k < iterations && at; ++k) at = m.v(*at);
    if (at) rank += m.weight(node);
  }
  return rank;
}

ReportBundle applications_report(const Verdict& verdict) {
  if (!verdict.verified()) {
    fail(ErrorCode::verification_failed,
         "refusing to report on unverified cell p=" + std::to_string(verdict.params.p) +
             " n=" + std::to_string(verdict.params.n));
  }
  const u64 p = verdict.params.p;
  const unsigned n = verdict.params.n;
  const u64 g = verdict.params.genus;

  ReportBundle bundle;
  bundle.verdict = verdict;

  const WeightedPermutationModule m = from_orbits(enumerate_orbits(n), p, n);
  for (unsigned i = 1; i <= n; ++i) bundle.cartier_ranks.push_back(orbit_cartier_rank(m, i));

  const u64 superspecial_part = n % 2 == 1 ? checked_pow(p * (p - 1) / 2, n) : 0;
  bundle.elliptic_rank_bound = superspecial_part;
  bundle.selmer_supersingular = superspecial_part;
  bundle.selmer_ordinary = 2 * bundle.cartier_ranks.front();

  std::map<u64, u64, std::greater<>> parts;
  for (const Factor& factor : verdict.factors) parts[factor.orbit.length() / 2] += factor.multiplicity;
  for (const auto& [part, count] : parts) bundle.partition_eta_d.push_back({part, count});

  bundle.supersingular_locus_index = (g + 1) / 2;
  bundle.nu_s = verdict.orbit.nu_at(bundle.supersingular_locus_index);
  bundle.supersingular_locus_flag = bundle.nu_s == 0;
  return bundle;
}

ReportBundle applications_report(u64 p, unsigned n) {
  return applications_report(verify_main_theorem(p, n));
}

nlohmann::json to_json(const EOType& type) {
  nlohmann::json rle = nlohmann::json::array();
  for (const Fragment& f : type.fragments) {
    rle.push_back({{"first", f.first}, {"last", f.last}, {"step", f.step}, {"base", f.base}});
  }
  nlohmann::json out = {{"genus", type.genus},
                        {"a_number", type.a_number},
                        {"p_rank", type.p_rank},
                        {"key_values", type.key_values},
                        {"eo_type_rle", rle}};
  if (!type.nu.empty()) out["nu"] = type.nu;
  return out;
}

nlohmann::json to_json(const Verdict& verdict) {
  nlohmann::json factors = nlohmann::json::array();
  for (const Factor& f : verdict.factors) {
    factors.push_back({{"orbit", f.orbit.elements},
                       {"relation_word", f.presentation.relation_word()},
                       {"multiplicity", f.multiplicity}});
  }
  nlohmann::json rle = nlohmann::json::array();
  for (const Fragment& f : verdict.orbit.fragments) {
    rle.push_back({{"first", f.first}, {"last", f.last}, {"step", f.step}, {"base", f.base}});
  }
  nlohmann::json out = {{"p", verdict.params.p},
                        {"n", verdict.params.n},
                        {"q", verdict.params.q},
                        {"genus", verdict.params.genus},
                        {"a_number", verdict.orbit.a_number},
                        {"p_rank", verdict.orbit.p_rank},
                        {"key_values", verdict.orbit.key_values},
                        {"eo_type_rle", rle},
                        {"factors", factors},
                        {"verified", verdict.verified()}};
  if (!verdict.diffs.empty()) out["diffs"] = verdict.diffs;
  return out;
}

nlohmann::json to_json(const ReportBundle& bundle) {
  nlohmann::json out = to_json(bundle.verdict);
  nlohmann::json partition = nlohmann::json::array();
  for (const PartitionPart& part : bundle.partition_eta_d) {
    partition.push_back({{"part", part.part}, {"count", part.count}});
  }
  out["cartier_ranks"] = bundle.cartier_ranks;
  out["elliptic_rank_bound"] = bundle.elliptic_rank_bound;
  out["selmer_ranks"] = {{"ordinary", bundle.selmer_ordinary},
                         {"supersingular", bundle.selmer_supersingular}};
  out["partition_eta_D"] = partition;
  out["supersingular_locus_index"] = bundle.supersingular_locus_index;
  out["nu_s"] = bundle.nu_s;
  out["supersingular_locus_flag"] = bundle.supersingular_locus_flag;
  return out;
}

}  // namespace hermitian
