#include "modrep/commands.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "modrep/meataxe.hpp"

namespace modrep {

namespace fs = std::filesystem;

// ---- group specs -----------------------------------------------------------

GroupSpec GroupSpec::parse(const Json& j) {
  if (!j.is_object()) throw UsageError("group spec must be a JSON object");
  GroupSpec spec;
  if (j.contains("family")) {
    spec.is_family = true;
    spec.family = j.at("family").get<std::string>();
    if (spec.family != "sl2")
      throw UsageError("unknown family '" + spec.family + "'");
    if (!j.contains("p") || !j.at("p").is_number_integer())
      throw UsageError("family spec needs an integer prime p");
    spec.p = j.at("p").get<std::int64_t>();
    if (!j.contains("n") || !j.at("n").is_number_integer())
      throw UsageError("family spec needs an integer level n");
    spec.n = j.at("n").get<int>();
    if (spec.p < 2 || spec.n < 1) throw UsageError("need p >= 2 and n >= 1");
    return spec;
  }
  if (!j.contains("modulus") || !j.contains("dim") || !j.contains("generators"))
    throw UsageError("explicit spec needs modulus, dim and generators");
  spec.modulus = j.at("modulus").get<std::int64_t>();
  spec.dim = j.at("dim").get<int>();
  if (spec.modulus < 2 || spec.dim < 1)
    throw UsageError("need modulus >= 2 and dim >= 1");
  const Json& gens = j.at("generators");
  if (!gens.is_array() || gens.empty())
    throw UsageError("generators must be a nonempty array of matrices");
  for (const Json& gm : gens) {
    std::vector<std::vector<std::int64_t>> rows;
    if (!gm.is_array() || static_cast<int>(gm.size()) != spec.dim)
      throw UsageError("generator matrix must be dim x dim");
    for (const Json& row : gm) {
      if (!row.is_array() || static_cast<int>(row.size()) != spec.dim)
        throw UsageError("generator matrix must be dim x dim");
      std::vector<std::int64_t> r;
      for (const Json& v : row) {
        if (!v.is_number_integer()) throw UsageError("entries must be integers");
        r.push_back(v.get<std::int64_t>());
      }
      rows.push_back(std::move(r));
    }
    spec.generators.push_back(std::move(rows));
  }
  return spec;
}

Json GroupSpec::canonical() const {
  Json j;
  if (is_family) {
    j["family"] = family;
    j["p"] = p;
    j["n"] = n;
  } else {
    j["modulus"] = modulus;
    j["dim"] = dim;
    j["generators"] = generators;
  }
  return j;
}

FiniteGroup GroupSpec::build(std::int64_t cap) const {
  if (is_family) return sl2_over(p, n, cap);
  std::vector<ResidueMatrix> gens;
  for (const auto& g : generators)
    gens.push_back(ResidueMatrix::from_rows(modulus, g));
  return generate_group(gens, cap);
}

// ---- serialization ----------------------------------------------------------

Json bigint_to_json(const BigInt& v) {
  static const BigInt kMax = (BigInt(1) << 53) - 1;
  if (v <= kMax && v >= -kMax) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

Json int_matrix_to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (const auto& v : m.a) entries.push_back(bigint_to_json(v));
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

IntMatrix int_matrix_from_json(const Json& j) {
  IntMatrix m(j.at("rows").get<size_t>(), j.at("cols").get<size_t>());
  const Json& entries = j.at("entries");
  if (entries.size() != m.a.size()) throw UsageError("matrix entry count");
  for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = bigint_from_json(entries[i]);
  return m;
}

Json cyclotomic_to_json(const Cyclotomic& v) {
  Json coords = Json::array();
  for (const auto& c : v.canonical_coords())
    coords.push_back(rational_to_string(c));
  return Json{{"order", v.order()}, {"coords", coords}};
}

std::string digest_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

// ---- cache -------------------------------------------------------------------

std::optional<Json> ResultCache::load(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  fs::path file = fs::path(dir_) / (key + ".json");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    return j;
  } catch (...) {
    return std::nullopt;  // corrupted entries are recomputed
  }
}

void ResultCache::store(const std::string& key, const Json& payload) const {
  if (!enabled()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  fs::path final_path = fs::path(dir_) / (key + ".json");
  fs::path tmp_path = fs::path(dir_) / (key + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp_path);
    if (!out) return;
    out << payload.dump();
  }
  fs::rename(tmp_path, final_path, ec);
  if (ec) fs::remove(tmp_path, ec);
}

std::string resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("MODREP_CACHE_DIR")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
    return (fs::path(xdg) / "modrep").string();
  if (const char* home = std::getenv("HOME"))
    return (fs::path(home) / ".cache" / "modrep").string();
  return {};
}

// ---- shared pipeline ---------------------------------------------------------

namespace {

void validate_modular_args(std::int64_t p, int field_degree) {
  if (p < 2) throw UsageError("p must be a prime");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw UsageError("p must be a prime");
  if (field_degree < 1) throw UsageError("field degree must be positive");
}

struct CdePipeline {
  std::shared_ptr<FiniteGroup> group;
  CharacterTable ct;
  BrauerCharacterTable bt;
  DecompositionMatrix d;
  CartanMatrix c;
  BlockPartition blocks;
};

CdePipeline run_cde(std::shared_ptr<FiniteGroup> group, std::int64_t p,
                    int field_degree, std::uint64_t seed) {
  CdePipeline pipe;
  pipe.group = std::move(group);
  pipe.ct = dixon_character_table(*pipe.group);
  pipe.bt = brauer_character_table(*pipe.group, make_field(p, field_degree),
                                   seed);
  pipe.d = decomposition_matrix(pipe.ct, pipe.bt);
  pipe.c = cartan_matrix(pipe.d, p);
  pipe.blocks = block_partition(pipe.d);
  return pipe;
}

Json classes_to_json(const FiniteGroup& g) {
  const ConjugacyClassData& ccd = g.classes();
  Json reps = Json::array();
  for (int rep : ccd.reps) {
    const ResidueMatrix& m = g.element(rep);
    Json rows = Json::array();
    for (int i = 0; i < m.dim; ++i) {
      Json row = Json::array();
      for (int j = 0; j < m.dim; ++j) row.push_back(m.at(i, j));
      rows.push_back(row);
    }
    reps.push_back(rows);
  }
  return Json{{"count", ccd.count()},
              {"sizes", ccd.sizes},
              {"element_orders", ccd.element_orders},
              {"centralizer_orders", ccd.centralizer_orders},
              {"exponent", ccd.exponent},
              {"representatives", reps}};
}

Json class_function_rows_to_json(const std::vector<ClassFunction>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json vals = Json::array();
    for (const auto& v : row.values) vals.push_back(cyclotomic_to_json(v));
    out.push_back(vals);
  }
  return out;
}

Json brauertable_to_json(const BrauerCharacterTable& bt) {
  return Json{{"p", bt.p},
              {"field",
               {{"p", bt.field->characteristic()},
                {"degree", bt.field->degree()},
                {"modulus", bt.field->modulus()}}},
              {"p_regular_classes", bt.p_regular},
              {"dims", bt.dims},
              {"value_order", bt.value_order},
              {"values", class_function_rows_to_json(bt.rows)}};
}

Json blocks_to_json(const BlockPartition& blocks) {
  Json per_block = Json::array();
  for (int b = 0; b < blocks.block_count; ++b) {
    Json ord = Json::array(), sim = Json::array();
    for (size_t i = 0; i < blocks.ordinary_block.size(); ++i)
      if (blocks.ordinary_block[i] == b) ord.push_back(i);
    for (size_t i = 0; i < blocks.simple_block.size(); ++i)
      if (blocks.simple_block[i] == b) sim.push_back(i);
    per_block.push_back(Json{{"ordinary", ord}, {"simples", sim}});
  }
  return Json{{"count", blocks.block_count},
              {"ordinary_block", blocks.ordinary_block},
              {"simple_block", blocks.simple_block},
              {"members", per_block}};
}

// the worked-example matrices, in the paper's ordering of the three simples
IntMatrix paper_c1() {
  return IntMatrix::from_rows({{3, 0, 0}, {0, 1, 0}, {0, 0, 3}});
}
IntMatrix paper_c2() {
  return IntMatrix::from_rows({{27, 18, 0}, {18, 21, 0}, {0, 0, 81}});
}
IntMatrix paper_c3() {
  return IntMatrix::from_rows({{567, 540, 0}, {540, 549, 0}, {0, 0, 2187}});
}
IntMatrix paper_b() {
  return IntMatrix::from_rows({{9, 18, 0}, {6, 21, 0}, {0, 0, 27}});
}

IntMatrix apply_perm(const IntMatrix& m, const std::vector<size_t>& perm) {
  IntMatrix out(m.rows, m.cols);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j)
      out.at(perm[i], perm[j]) = m.at(i, j);
  return out;
}

std::optional<std::vector<size_t>> find_simultaneous_perm(
    const std::vector<std::pair<IntMatrix, IntMatrix>>& pairs) {
  std::vector<size_t> perm{0, 1, 2};
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    for (const auto& [ours, paper] : pairs)
      if (!(apply_perm(ours, perm) == paper)) {
        ok = false;
        break;
      }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace

// ---- payloads -----------------------------------------------------------------

Json payload_chartable(const GroupSpec& spec) {
  auto group = std::make_shared<FiniteGroup>(spec.build());
  CharacterTable ct = dixon_character_table(*group);
  return Json{{"group_order", group->order()},
              {"classes", classes_to_json(*group)},
              {"degrees", ct.degrees},
              {"value_order", ct.value_order},
              {"values", class_function_rows_to_json(ct.rows)}};
}

Json payload_brauertable(const GroupSpec& spec, std::int64_t p, int field_degree,
                         std::uint64_t seed) {
  auto group = std::make_shared<FiniteGroup>(spec.build());
  BrauerCharacterTable bt =
      brauer_character_table(*group, make_field(p, field_degree), seed);
  Json j = brauertable_to_json(bt);
  j["group_order"] = group->order();
  return j;
}

Json payload_decomp(const GroupSpec& spec, std::int64_t p, int field_degree,
                    std::uint64_t seed) {
  auto pipe = run_cde(std::make_shared<FiniteGroup>(spec.build()), p,
                      field_degree, seed);
  return Json{{"group_order", pipe.group->order()},
              {"ordinary_degrees", pipe.ct.degrees},
              {"simple_dims", pipe.bt.dims},
              {"decomposition", int_matrix_to_json(pipe.d.d)}};
}

Json payload_cartan(const GroupSpec& spec, std::int64_t p, int field_degree,
                    std::uint64_t seed) {
  auto pipe = run_cde(std::make_shared<FiniteGroup>(spec.build()), p,
                      field_degree, seed);
  return Json{{"group_order", pipe.group->order()},
              {"ordinary_degrees", pipe.ct.degrees},
              {"simple_dims", pipe.bt.dims},
              {"ordinary_value_order", pipe.ct.value_order},
              {"brauer_value_order", pipe.bt.value_order},
              {"decomposition", int_matrix_to_json(pipe.d.d)},
              {"cartan", int_matrix_to_json(pipe.c.c)},
              {"cartan_det", bigint_to_json(int_det(pipe.c.c))},
              {"blocks", blocks_to_json(pipe.blocks)}};
}

Json payload_blocks(const GroupSpec& spec, std::int64_t p, int field_degree,
                    std::uint64_t seed) {
  auto pipe = run_cde(std::make_shared<FiniteGroup>(spec.build()), p,
                      field_degree, seed);
  Json j = blocks_to_json(pipe.blocks);
  j["group_order"] = pipe.group->order();
  j["simple_dims"] = pipe.bt.dims;
  j["ordinary_degrees"] = pipe.ct.degrees;
  return j;
}

Json payload_tower(std::int64_t p, int depth, int n_max, std::uint64_t seed) {
  if (depth < 2) throw UsageError("tower needs depth >= 2 to compute B");
  TowerDescriptor t = build_sl2_tower(p, depth);

  auto pipe1 = run_cde(t.levels[0], p, 2, seed);
  BrauerCharacterTable bt2 = brauer_character_table(*t.levels[1],
                                                    make_field(p, 2), seed);
  IntMatrix b = b_matrix(t, 0, bt2);

  Json levels = Json::array();
  for (const auto& g : t.levels) levels.push_back(g->order());
  Json section_orders = Json::array();
  for (size_t i = 0; i + 1 < t.levels.size(); ++i)
    section_orders.push_back(t.section(i).size());

  Json cs = Json::array(), dets = Json::array();
  for (int n = 1; n <= n_max; ++n) {
    IntMatrix cn = tower_cartan(pipe1.c.c, b, n);
    dets.push_back(bigint_to_json(int_det(cn)));
    cs.push_back(int_matrix_to_json(cn));
  }

  Json uniform;
  if (depth >= 3) {
    UniformWitness w = verify_uniform(t, 0);
    BrauerCharacterTable bt3 = brauer_character_table(*t.levels[2],
                                                      make_field(p, 2), seed);
    IntMatrix b2 = b_matrix(t, 1, bt3);
    uniform = Json{{"checked", true},
                   {"section_pairs", w.bijection.size()},
                   {"b_matrices_equal", b == b2}};
  } else {
    uniform = Json{{"checked", false}};
  }

  Json paper_cmp;
  if (p == 3) {
    auto perm = find_simultaneous_perm(
        {{pipe1.c.c, paper_c1()}, {b, paper_b()}});
    if (perm)
      paper_cmp = Json{{"matches", true}, {"permutation", *perm}};
    else
      paper_cmp = Json{{"matches", false}};
  }

  Json out{{"p", p},
           {"depth", depth},
           {"levels", levels},
           {"section_orders", section_orders},
           {"c1", int_matrix_to_json(pipe1.c.c)},
           {"b", int_matrix_to_json(b)},
           {"cartan_matrices", cs},
           {"determinants", dets},
           {"uniformity", uniform}};
  if (!paper_cmp.is_null()) out["paper_comparison"] = paper_cmp;
  return out;
}

// ---- verify-paper-example -------------------------------------------------------

Perturbation Perturbation::parse(const std::string& s) {
  // MATRIX:i,j:delta
  auto c1 = s.find(':');
  auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw UsageError("perturbation must look like B:0,1:+1");
  Perturbation p;
  p.matrix = s.substr(0, c1);
  std::string ij = s.substr(c1 + 1, c2 - c1 - 1);
  auto comma = ij.find(',');
  if (comma == std::string::npos)
    throw UsageError("perturbation must look like B:0,1:+1");
  p.row = static_cast<size_t>(std::stoul(ij.substr(0, comma)));
  p.col = static_cast<size_t>(std::stoul(ij.substr(comma + 1)));
  p.delta = std::stol(s.substr(c2 + 1));
  if (p.matrix != "C1" && p.matrix != "C2" && p.matrix != "C3" &&
      p.matrix != "B")
    throw UsageError("perturbation matrix must be one of C1, C2, C3, B");
  if (p.row > 2 || p.col > 2) throw UsageError("perturbation index out of range");
  return p;
}

Json payload_verify_paper_example(std::uint64_t seed,
                                  const std::optional<Perturbation>& perturb,
                                  bool& all_pass) {
  Json checks = Json::array();
  all_pass = true;
  auto add = [&](const std::string& name, bool pass, Json expected,
                 Json computed) {
    all_pass = all_pass && pass;
    checks.push_back(Json{{"name", name},
                          {"pass", pass},
                          {"expected", std::move(expected)},
                          {"computed", std::move(computed)}});
  };
  auto add_matrix_check = [&](const std::string& name, const IntMatrix& expected,
                              const IntMatrix& computed) {
    Json diff = Json::array();
    for (size_t i = 0; i < expected.rows; ++i)
      for (size_t j = 0; j < expected.cols; ++j)
        if (!(expected.at(i, j) == computed.at(i, j)))
          diff.push_back(Json{{"row", i},
                              {"col", j},
                              {"expected", bigint_to_json(expected.at(i, j))},
                              {"computed", bigint_to_json(computed.at(i, j))}});
    bool pass = diff.empty();
    all_pass = all_pass && pass;
    checks.push_back(Json{{"name", name},
                          {"pass", pass},
                          {"expected", int_matrix_to_json(expected)},
                          {"computed", int_matrix_to_json(computed)},
                          {"entry_diff", diff}});
  };

  // expected matrices (the perturbation, when present, is the negative
  // control for the harness)
  IntMatrix exp_c1 = paper_c1(), exp_c2 = paper_c2(), exp_c3 = paper_c3(),
            exp_b = paper_b();
  if (perturb) {
    IntMatrix* target = perturb->matrix == "C1"   ? &exp_c1
                        : perturb->matrix == "C2" ? &exp_c2
                        : perturb->matrix == "C3" ? &exp_c3
                                                  : &exp_b;
    target->at(perturb->row, perturb->col) += perturb->delta;
  }

  // full cde pipelines at levels 1 and 2
  TowerDescriptor t = build_sl2_tower(3, 2);
  auto pipe1 = run_cde(t.levels[0], 3, 2, seed);
  auto pipe2 = run_cde(t.levels[1], 3, 2, seed);
  BrauerCharacterTable& bt2 = pipe2.bt;
  IntMatrix b_sec = b_matrix(t, 0, bt2);

  // one simultaneous permutation aligns our canonical simple order with the
  // paper's (searched against the pristine constants)
  auto perm = find_simultaneous_perm({{pipe1.c.c, paper_c1()},
                                      {pipe2.c.c, paper_c2()},
                                      {b_sec, paper_b()}});
  add("simple_order_permutation_found", perm.has_value(),
      Json("one permutation aligning C1, C2 and B"),
      perm ? Json(*perm) : Json("none"));
  std::vector<size_t> sigma = perm ? *perm : std::vector<size_t>{0, 1, 2};

  add_matrix_check("C1_from_cde_pipeline", exp_c1, apply_perm(pipe1.c.c, sigma));
  add_matrix_check("C2_from_cde_pipeline", exp_c2, apply_perm(pipe2.c.c, sigma));
  add_matrix_check("B_from_section_module", exp_b, apply_perm(b_sec, sigma));

  // B agrees with C2·C1^{-1} over Q
  {
    auto q = divide_right(pipe2.c.c, pipe1.c.c);
    bool pass = q.has_value() && *q == b_sec.to_rational();
    add("B_equals_C2_times_C1_inverse", pass, Json("C2*C1^-1 == B"),
        Json(pass ? "equal" : "different"));
  }

  // recursion C_n = B^{n-1} C_1
  add_matrix_check("C2_from_recursion", exp_c2,
                   apply_perm(tower_cartan(pipe1.c.c, b_sec, 2), sigma));
  add_matrix_check("C3_from_recursion", exp_c3,
                   apply_perm(tower_cartan(pipe1.c.c, b_sec, 3), sigma));

  // closed form against the recursion, and the determinant formula
  for (int n = 1; n <= 8; ++n) {
    ClosedFormResult cf = sl2_closed_form(n);
    IntMatrix rec = apply_perm(tower_cartan(pipe1.c.c, b_sec, n), sigma);
    bool entries_match = cf.cartan == rec;
    BigInt det = int_det(cf.cartan);
    bool det_match = det == cf.determinant &&
                     cf.determinant == int_pow(BigInt(3),
                                               static_cast<std::uint64_t>(7 * n - 5));
    add("closed_form_n" + std::to_string(n), entries_match && det_match,
        Json{{"det", bigint_to_json(cf.determinant)}},
        Json{{"det", bigint_to_json(det)},
             {"entries_match", entries_match}});
  }
  {
    // the two printed determinants
    bool p1 = int_det(apply_perm(pipe1.c.c, sigma)) == 9;
    add("det_C1", p1, Json(9), bigint_to_json(int_det(pipe1.c.c)));
    bool p2 = int_det(pipe2.c.c) == int_pow(BigInt(3), 9);
    add("det_C2", p2, bigint_to_json(int_pow(BigInt(3), 9)),
        bigint_to_json(int_det(pipe2.c.c)));
  }

  // Brauer reciprocity on every basis pair, both levels
  for (const CdePipeline* pipe : {&pipe1, &pipe2}) {
    bool ok = true;
    const IntMatrix& d = pipe->d.d;
    for (size_t s = 0; s < d.cols && ok; ++s)
      for (size_t i = 0; i < d.rows && ok; ++i) {
        auto ps = GrothendieckVector::basis_vector(
            BasisTag::ProjectiveIndecomposables, d.cols, s);
        auto chi = GrothendieckVector::basis_vector(
            BasisTag::OrdinaryIrreducibles, d.rows, i);
        BigInt lhs = pairing(apply_e(ps, pipe->d), chi);
        BigInt rhs = pairing(ps, apply_d(chi, pipe->d));
        ok = lhs == rhs;
      }
    add(pipe == &pipe1 ? "reciprocity_level1" : "reciprocity_level2", ok,
        Json("<e(P),chi> == <P,d(chi)> for all basis pairs"),
        Json(ok ? "holds" : "fails"));
  }

  // block structure of level 2 matches the 2+1 zero pattern
  {
    const BlockPartition& blocks = pipe2.blocks;
    // canonical simple order is by dimension (1, 2, 3): the dim-2 simple
    // sits alone, the dim-1 and dim-3 simples share a block
    const auto& sb = blocks.simple_block;
    bool pattern =
        blocks.block_count == 2 && sb[0] == sb[2] && sb[1] != sb[0];
    // blocks refine the Cartan zero pattern
    bool refine = true;
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j)
        if (blocks.simple_block[i] != blocks.simple_block[j] &&
            pipe2.c.c.at(i, j) != 0)
          refine = false;
    add("blocks_level2_zero_pattern", pattern && refine,
        Json("simples split 2+1 consistently with C(G2)"),
        blocks_to_json(blocks));
  }

  // simples count equals the number of p-regular classes at both levels
  add("brauer_count_level1", pipe1.bt.rows.size() == 3, Json(3),
      Json(pipe1.bt.rows.size()));
  add("brauer_count_level2", pipe2.bt.rows.size() == 3, Json(3),
      Json(pipe2.bt.rows.size()));

  return Json{{"pass", all_pass},
              {"perturbation", perturb ? Json(perturb->matrix + ":" +
                                              std::to_string(perturb->row) + "," +
                                              std::to_string(perturb->col) + ":" +
                                              std::to_string(perturb->delta))
                                       : Json()},
              {"checks", checks}};
}

// ---- envelopes --------------------------------------------------------------------

Json Envelope::to_json() const {
  return Json{{"command", command},
              {"artifact_version", kArtifactVersion},
              {"input", input},
              {"input_digest", input_digest},
              {"cache_hit", cache_hit},
              {"timing_ms", timing_ms},
              {"payload", payload}};
}

Envelope run_command(const std::string& command, const Json& canonical_input,
                     const ResultCache& cache,
                     const std::function<Json()>& compute) {
  Envelope env;
  env.command = command;
  env.input = canonical_input;
  env.input_digest = digest_hex(command + "\n" + canonical_input.dump() + "\n" +
                                kArtifactVersion);
  auto start = std::chrono::steady_clock::now();
  if (auto cached = cache.load(env.input_digest)) {
    env.payload = std::move(*cached);
    env.cache_hit = true;
  } else {
    env.payload = compute();
    cache.store(env.input_digest, env.payload);
  }
  env.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return env;
}

}  // namespace modrep
