#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hermitian/blocks.hpp"
#include "hermitian/derham.hpp"
#include "hermitian/eo.hpp"
#include "hermitian/error.hpp"
#include "hermitian/orbits.hpp"
#include "hermitian/report.hpp"
#include "json.hpp"

namespace hermitian::cli {

namespace {

using nlohmann::json;

constexpr u64 kDefaultMaxGenus = 1'000'000;

struct Options {
  std::string format = "table";
  u64 max_genus = kDefaultMaxGenus;
  u64 p = 0;
  unsigned n = 0;
  bool check_oracle = false;
  std::string method = "both";
  std::string grid_p = "2,3,5";
  std::string grid_n = "1..4";
  unsigned jobs = 1;
};

u64 default_max_genus() {
  const char* env = std::getenv("HERMITIAN_EO_MAX_GENUS");
  if (env == nullptr || *env == '\0') return kDefaultMaxGenus;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    fail(ErrorCode::invalid_argument, "HERMITIAN_EO_MAX_GENUS is not a number");
  }
}

CurveParams guarded(u64 p, unsigned n, u64 max_genus) {
  const CurveParams params = CurveParams::make(p, n);
  if (params.genus > max_genus) {
    fail(ErrorCode::size_guard, "genus " + std::to_string(params.genus) +
                                    " exceeds --max-genus " + std::to_string(max_genus));
  }
  return params;
}

u64 parse_number(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit)) {
    fail(ErrorCode::invalid_argument, "expected a number, got '" + text + "'");
  }
  return std::stoull(text);
}

/// "2,3,5", "1..4", or a mix such as "1..3,6".
std::vector<u64> parse_list(const std::string& text) {
  std::vector<u64> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const std::size_t dots = item.find("..");
    if (dots == std::string::npos) {
      values.push_back(parse_number(item));
      continue;
    }
    const u64 lo = parse_number(item.substr(0, dots));
    const u64 hi = parse_number(item.substr(dots + 2));
    if (lo > hi || hi - lo > 64) fail(ErrorCode::invalid_argument, "bad range '" + item + "'");
    for (u64 v = lo; v <= hi; ++v) values.push_back(v);
  }
  if (values.empty()) fail(ErrorCode::invalid_argument, "empty list");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::string join(const std::vector<u64>& values, const char* sep = " ") {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(values[k]);
  }
  return out;
}

std::string join(const std::vector<std::uint32_t>& values, const char* sep = " ") {
  return join(std::vector<u64>(values.begin(), values.end()), sep);
}

json element_json(const BasisElement& e) {
  return {{"kind", kind_name(e.kind)}, {"i", e.point.i}, {"j", e.point.j}};
}

std::string factor_name(const Factor& f) {
  const FactorPresentation& pres = f.presentation;
  if (pres.relations.size() == 1) return "(E/E(" + pres.relation_word() + "))";
  return "D(" + join(f.orbit.elements, ",") + ")";
}

void print_eo_table(std::ostream& out, const EOType& type) {
  out << "genus " << type.genus << "\n";
  out << "a-number " << type.a_number << "\n";
  out << "p-rank " << type.p_rank << "\n";
  out << "key values " << join(type.key_values) << "\n";
  out << "fragments";
  for (const Fragment& f : type.fragments) {
    out << " [" << f.first << ".." << f.last << " " << (f.step ? "rising" : "flat") << " from "
        << f.base << "]";
  }
  out << "\n";
}

void print_factors_table(std::ostream& out, const std::vector<Factor>& factors) {
  for (const Factor& f : factors) {
    out << "  " << factor_name(f) << "^" << f.multiplicity << "  orbit {"
        << join(f.orbit.elements) << "}";
    if (f.presentation.relations.size() > 1) out << "  relations " << f.presentation.relation_word();
    out << "\n";
  }
}

void print_verdict_table(std::ostream& out, const Verdict& v) {
  out << "p " << v.params.p << "  n " << v.params.n << "  q " << v.params.q << "\n";
  print_eo_table(out, v.orbit);
  out << "factors\n";
  print_factors_table(out, v.factors);
  for (const std::string& diff : v.diffs) out << "mismatch: " << diff << "\n";
  out << "verified " << (v.verified() ? "yes" : "no") << "\n";
}

int cmd_orbits(const Options& o, std::ostream& out) {
  if (o.p != 0 && !is_prime(o.p)) fail(ErrorCode::invalid_argument, std::to_string(o.p) + " is not prime");
  const std::vector<Orbit> orbits = enumerate_orbits(o.n);
  json list = json::array();
  for (const Orbit& orbit : orbits) {
    const OrbitStats stats = orbit_stats(orbit);
    const FactorPresentation pres = factor_presentation(orbit);
    json relations = json::array();
    for (const Relation& r : pres.relations) {
      relations.push_back({{"left_parent", r.left_parent},
                           {"left_distance", r.left_distance},
                           {"right_parent", r.right_parent},
                           {"right_distance", r.right_distance}});
    }
    json entry = {{"elements", orbit.elements},
                  {"length", orbit.length()},
                  {"a_number", stats.a_number},
                  {"signature", orbit_signature(orbit)},
                  {"presentation",
                   {{"generators", pres.generators},
                    {"relations", relations},
                    {"relation_word", pres.relation_word()}}}};
    if (o.p != 0) entry["multiplicity"] = multiplicity(orbit, o.p);
    if (o.format == "json") {
      list.push_back(std::move(entry));
      continue;
    }
    out << "{" << join(orbit.elements) << "}  length " << orbit.length() << "  a " << stats.a_number
        << "  " << orbit_signature(orbit) << "  " << pres.relation_word();
    if (o.p != 0) out << "  m " << multiplicity(orbit, o.p);
    out << "\n";
  }
  if (o.format == "json") out << list.dump(2) << "\n";
  return 0;
}

int cmd_derham(const Options& o, std::ostream& out) {
  const CurveParams params = guarded(o.p, o.n, o.max_genus);
  const DeRhamOperators ops = build_operators(o.p, o.n);

  std::optional<bool> oracle_agrees;
  std::vector<std::string> oracle_mismatches;
  if (o.check_oracle) {
    oracle_agrees = true;
    for (const LatticePoint& pt : delta_points(o.p, o.n)) {
      const BasisElement e{BasisKind::Omega, pt};
      const MaybeImage expected = v_on_omega(e, params);
      const MaybeImage oracle = cartier_oracle(e, params);
      const bool same = expected.has_value() == oracle.has_value() &&
                        (!expected || (expected->target == oracle->target &&
                                       expected->scalar == oracle->scalar));
      if (!same) {
        oracle_agrees = false;
        oracle_mismatches.push_back(to_string(e));
      }
    }
  }

  auto dump = [&](const SemilinearMap& map) {
    json rows = json::array();
    std::string text;
    for (u64 index = 0; index < ops.basis.size(); ++index) {
      const BasisElement source = ops.basis.element_at(index);
      const auto& image = map[index];
      std::string line = std::string(kind_name(source.kind)) + " " + std::to_string(source.point.i) +
                         " " + std::to_string(source.point.j) + " -> ";
      json row = {{"source", element_json(source)}, {"image", nullptr}};
      if (image) {
        const BasisElement target = ops.basis.element_at(image->target);
        line += std::string(kind_name(target.kind)) + " " + std::to_string(target.point.i) + " " +
                std::to_string(target.point.j) + " " + std::to_string(image->scalar);
        row["image"] = element_json(target);
        row["image"]["scalar"] = image->scalar;
      } else {
        line += "0";
      }
      text += line + "\n";
      rows.push_back(std::move(row));
    }
    return std::make_pair(text, rows);
  };
  const auto [f_text, f_rows] = dump(ops.frobenius);
  const auto [v_text, v_rows] = dump(ops.verschiebung);

  if (o.format == "json") {
    json doc = {{"p", params.p}, {"n", params.n}, {"q", params.q}, {"genus", params.genus},
                {"frobenius", f_rows}, {"verschiebung", v_rows}};
    if (oracle_agrees) {
      doc["oracle_agrees"] = *oracle_agrees;
      doc["oracle_mismatches"] = oracle_mismatches;
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "F\n" << f_text << "V\n" << v_text;
    if (oracle_agrees) {
      out << "oracle " << (*oracle_agrees ? "agrees" : "disagrees");
      for (const std::string& e : oracle_mismatches) out << " " << e;
      out << "\n";
    }
  }
  return oracle_agrees.value_or(true) ? 0 : 1;
}

int cmd_blocks(const Options& o, std::ostream& out) {
  const CurveParams params = guarded(o.p, o.n, o.max_genus);
  const DeRhamBasis basis(params);
  const std::vector<BlockId> blocks = assign_blocks(basis);
  const std::uint32_t count = std::uint32_t{1} << o.n;
  std::vector<std::vector<std::string>> members(count + 1);
  for (u64 index = 0; index < basis.size(); ++index) {
    members[blocks[index].t].push_back(to_string(basis.element_at(index)));
  }
  json list = json::array();
  for (std::uint32_t t = 1; t <= count; ++t) {
    const BlockId id{t};
    const std::string vector = to_string(vector_of_t(id, o.n));
    const u64 dim = block_dim(id, o.p, o.n);
    if (o.format == "json") {
      list.push_back({{"t", t}, {"dim", dim}, {"vector", vector}, {"members", members[t]}});
      continue;
    }
    out << t << " " << dim << " " << vector;
    for (const std::string& m : members[t]) out << " " << m;
    out << "\n";
  }
  if (o.format == "json") out << list.dump(2) << "\n";
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const CurveParams params = guarded(o.p, o.n, o.max_genus);
  const std::vector<Factor> factors = orbit_decomposition(o.p, o.n);
  if (o.format == "json") {
    json list = json::array();
    for (const Factor& f : factors) {
      list.push_back({{"orbit", f.orbit.elements},
                      {"relation_word", f.presentation.relation_word()},
                      {"multiplicity", f.multiplicity}});
    }
    out << json{{"p", params.p}, {"n", params.n}, {"q", params.q}, {"genus", params.genus},
                {"factors", list}}
               .dump(2)
        << "\n";
    return 0;
  }
  std::string product;
  for (const Factor& f : factors) {
    if (!product.empty()) product += " + ";
    product += factor_name(f) + "^" + std::to_string(f.multiplicity);
  }
  out << product << "\n";
  print_factors_table(out, factors);
  return 0;
}

int cmd_eo(const Options& o, std::ostream& out) {
  const CurveParams params = guarded(o.p, o.n, o.max_genus);
  std::optional<EOType> brute;
  std::optional<EOType> orbit;
  if (o.method != "orbit") brute = eo_type(from_derham(build_operators(o.p, o.n)));
  if (o.method != "brute") orbit = eo_type(from_orbits(enumerate_orbits(o.n), o.p, o.n));
  const bool match = !brute || !orbit || *brute == *orbit;

  if (o.format == "json") {
    json doc = {{"p", params.p}, {"n", params.n}, {"q", params.q}, {"method", o.method}};
    if (brute) doc["brute"] = to_json(*brute);
    if (orbit) doc["orbit"] = to_json(*orbit);
    if (brute && orbit) doc["match"] = match;
    out << doc.dump(2) << "\n";
  } else {
    if (brute) {
      out << "de Rham path\n";
      print_eo_table(out, *brute);
    }
    if (orbit) {
      out << "orbit path\n";
      print_eo_table(out, *orbit);
    }
    if (brute && orbit) out << "match " << (match ? "yes" : "no") << "\n";
  }
  return match ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
  guarded(o.p, o.n, o.max_genus);
  const Verdict verdict = verify_main_theorem(o.p, o.n);
  if (o.format == "json") {
    out << to_json(verdict).dump(2) << "\n";
  } else {
    print_verdict_table(out, verdict);
  }
  return verdict.verified() ? 0 : 1;
}

int cmd_report(const Options& o, std::ostream& out) {
  guarded(o.p, o.n, o.max_genus);
  const ReportBundle bundle = applications_report(o.p, o.n);
  if (o.format == "json") {
    out << to_json(bundle).dump(2) << "\n";
    return 0;
  }
  print_verdict_table(out, bundle.verdict);
  out << "cartier ranks " << join(bundle.cartier_ranks) << "\n";
  out << "elliptic rank bound " << bundle.elliptic_rank_bound << "\n";
  out << "selmer ranks ordinary " << bundle.selmer_ordinary << " supersingular "
      << bundle.selmer_supersingular << "\n";
  out << "partition";
  for (const PartitionPart& part : bundle.partition_eta_d) out << " " << part.part << "^" << part.count;
  out << "\n";
  out << "nu_" << bundle.supersingular_locus_index << " = " << bundle.nu_s
      << (bundle.supersingular_locus_flag ? "  (criterion holds)" : "  (criterion fails)") << "\n";
  return 0;
}

struct GridCell {
  u64 p = 0;
  unsigned n = 0;
  std::optional<Verdict> verdict;
  std::optional<Error> error;
};

int cmd_grid(const Options& o, std::ostream& out) {
  std::vector<GridCell> cells;
  for (u64 p : parse_list(o.grid_p)) {
    for (u64 n : parse_list(o.grid_n)) {
      if (n == 0 || n > 64) fail(ErrorCode::invalid_argument, "n out of range in grid");
      cells.push_back({p, static_cast<unsigned>(n), std::nullopt, std::nullopt});
    }
  }
  for (const GridCell& cell : cells) {
    if (!is_prime(cell.p)) fail(ErrorCode::invalid_argument, std::to_string(cell.p) + " is not prime");
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cells.size(); k = next++) {
      GridCell& cell = cells[k];
      try {
        guarded(cell.p, cell.n, o.max_genus);
        cell.verdict = verify_main_theorem(cell.p, cell.n);
      } catch (const Error& e) {
        cell.error = e;
      }
    }
  };
  const unsigned jobs = std::clamp<unsigned>(o.jobs, 1, static_cast<unsigned>(cells.size()));
  std::vector<std::thread> threads;
  for (unsigned k = 1; k < jobs; ++k) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();

  bool all_ok = true;
  json list = json::array();
  for (const GridCell& cell : cells) {
    const bool ok = cell.verdict && cell.verdict->verified();
    all_ok = all_ok && ok;
    if (o.format == "json") {
      if (cell.verdict) {
        list.push_back(to_json(*cell.verdict));
      } else {
        list.push_back({{"p", cell.p},
                        {"n", cell.n},
                        {"verified", false},
                        {"error", cell.error->reason()},
                        {"message", cell.error->what()}});
      }
      continue;
    }
    out << "p " << cell.p << "  n " << cell.n << "  ";
    if (cell.verdict) {
      out << "g " << cell.verdict->params.genus << "  a " << cell.verdict->orbit.a_number
          << "  keys " << cell.verdict->orbit.key_values.size() << "  "
          << (ok ? "verified" : "FAILED") << "\n";
    } else {
      out << "error " << cell.error->reason() << ": " << cell.error->what() << "\n";
    }
  }
  if (o.format == "json") out << list.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

void report_error(std::ostream& err, const char* reason, const std::string& message) {
  err << json{{"error", reason}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.max_genus = default_max_genus();
  } catch (const Error& e) {
    report_error(err, e.reason(), e.what());
    return 2;
  }

  CLI::App app{"Dieudonne modules and Ekedahl-Oort types of Hermitian curves", "hermitian-eo"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--max-genus", o.max_genus, "Refuse cells of larger genus");

  auto add_pn = [&](CLI::App* sub, bool p_required) {
    auto* p = sub->add_option("--p", o.p, "Characteristic");
    if (p_required) p->required();
    sub->add_option("--n", o.n, "Exponent, q = p^n")->required()->check(CLI::Range(1u, 30u));
  };

  CLI::App* orbits = app.add_subcommand("orbits", "Orbits of doubling on Z/(2^n+1) - {0}");
  add_pn(orbits, false);
  CLI::App* derham = app.add_subcommand("derham", "F and V on the de Rham basis");
  add_pn(derham, true);
  derham->add_flag("--check-oracle", o.check_oracle, "Compare V on omegas with the direct Cartier computation");
  CLI::App* blocks = app.add_subcommand("blocks", "Block decomposition of the de Rham basis");
  add_pn(blocks, true);
  CLI::App* decompose = app.add_subcommand("decompose", "Factors of the Dieudonne module");
  add_pn(decompose, true);
  CLI::App* eo = app.add_subcommand("eo", "Ekedahl-Oort type");
  add_pn(eo, true);
  eo->add_option("--method", o.method, "brute, orbit or both")
      ->check(CLI::IsMember({"brute", "orbit", "both"}));
  CLI::App* verify = app.add_subcommand("verify", "Compare the de Rham and orbit computations");
  add_pn(verify, true);
  CLI::App* report = app.add_subcommand("report", "Verified cell with derived applications");
  add_pn(report, true);
  CLI::App* grid = app.add_subcommand("grid", "Verify a grid of cells");
  grid->add_option("--p", o.grid_p, "Primes, e.g. 2,3,5");
  grid->add_option("--n", o.grid_n, "Exponents, e.g. 1..4");
  grid->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, reason_string(ErrorCode::invalid_argument), e.what());
    return 2;
  }

  try {
    if (*orbits) return cmd_orbits(o, out);
    if (*derham) return cmd_derham(o, out);
    if (*blocks) return cmd_blocks(o, out);
    if (*decompose) return cmd_decompose(o, out);
    if (*eo) return cmd_eo(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*report) return cmd_report(o, out);
    return cmd_grid(o, out);
  } catch (const Error& e) {
    report_error(err, e.reason(), e.what());
    const bool bad_input = e.code() == ErrorCode::invalid_argument || e.code() == ErrorCode::size_guard;
    return bad_input ? 2 : 1;
  } catch (const std::bad_alloc&) {
    report_error(err, reason_string(ErrorCode::size_guard), "out of memory");
    return 2;
  }
}

}  // namespace hermitian::cli
