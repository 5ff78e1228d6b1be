#include "kantor/catalog.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <sstream>

#include "kantor/bridge.hpp"
#include "kantor/chevalley.hpp"
#include "kantor/corpus.hpp"
#include "kantor/errors.hpp"

namespace kantor {

namespace {

SystemFile algebra_file(InvolutiveAlgebra a, std::string provenance) {
  SystemFile f;
  f.label = a.label();
  f.provenance = std::move(provenance);
  f.payload = std::move(a);
  return f;
}

SystemFile map_file(std::string label, Mat m, std::string provenance) {
  SystemFile f;
  f.label = std::move(label);
  f.provenance = std::move(provenance);
  f.payload = std::move(m);
  return f;
}

SystemFile triple_file(TripleSystem ts, SignPair signs, Vec unit, std::string provenance) {
  SystemFile f;
  f.label = ts.label();
  f.provenance = std::move(provenance);
  f.signs = signs;
  f.unit = std::move(unit);
  f.payload = std::move(ts);
  return f;
}

SystemFile graded_file(GradedSuperalgebra g, std::string provenance) {
  SystemFile f;
  f.label = g.label();
  f.provenance = std::move(provenance);
  f.payload = std::move(g);
  return f;
}

SystemFile chevalley_file(SimpleType type) {
  const ChevalleyAlgebra alg = chevalley_algebra(type);
  const HighestRootGrading grading = highest_root_grading(alg);
  return graded_file(to_graded(alg, grading),
                     "chevalley basis of " + simple_type_name(type) +
                         " with the highest-root 5-grading");
}

struct Item {
  CatalogEntry entry;
  std::function<SystemFile()> build;
};

std::vector<Item> make_items() {
  std::vector<Item> items;
  auto add = [&](std::string id, std::string kind, size_t dim, std::string summary,
                 std::vector<std::string> suites, std::function<SystemFile()> build) {
    items.push_back({{std::move(id), std::move(kind), dim, std::move(summary),
                      std::move(suites)},
                     std::move(build)});
  };

  const std::vector<std::string> alg_suites = {"structurable", "kantor"};
  const std::vector<std::string> kts_suites = {"kantor", "lemmas-kantor", "star"};
  const std::vector<std::string> mm_suites = {"fkts:-1,-1", "lemmas-mm", "special-unitary"};

  add("unit-field", "involutive-algebra", 1, "the ground field, trivial involution",
      alg_suites, [] { return algebra_file(make_unit_field(), "built-in"); });
  add("split-pair", "involutive-algebra", 2, "F x F with the exchange involution",
      alg_suites, [] { return algebra_file(make_split_pair(), "built-in"); });
  add("quat", "involutive-algebra", 4, "rational quaternions with conjugation",
      alg_suites, [] { return algebra_file(make_quat(), "built-in"); });
  add("mat2-transpose", "involutive-algebra", 4, "2x2 matrices with transposition",
      alg_suites, [] { return algebra_file(make_mat2_transpose(), "built-in"); });

  add("split-pair.sigma", "linear-map", 2, "component exchange on split-pair", {},
      [] { return map_file("split-pair.sigma", swap_map(), "built-in"); });
  add("quat.sigma", "linear-map", 4, "conjugation by i on quat", {},
      [] { return map_file("quat.sigma", quat_conj_i(), "built-in"); });
  add("mat2-transpose.sigma", "linear-map", 4, "conjugation by diag(1,-1) on mat2", {},
      [] { return map_file("mat2-transpose.sigma", mat2_conj_diag(), "built-in"); });

  struct AlgSpec {
    const char* id;
    InvolutiveAlgebra (*make)();
    Mat (*sigma)();
  };
  static const AlgSpec alg_specs[] = {
      {"unit-field", make_unit_field, nullptr},
      {"split-pair", make_split_pair, swap_map},
      {"quat", make_quat, quat_conj_i},
      {"mat2-transpose", make_mat2_transpose, mat2_conj_diag},
  };
  for (const auto& spec : alg_specs) {
    const std::string base = spec.id;
    add(base + "-kts", "triple-system", spec.make().dim(),
        "Kantor triple system of " + base, kts_suites, [spec, base] {
          const InvolutiveAlgebra a = spec.make();
          return triple_file(kts_from_structurable(a), SignPair(-1, 1), a.unit(),
                             "kts-from-structurable(" + base + ")");
        });
    if (spec.sigma) {
      add(base + "-kts-tw", "triple-system", spec.make().dim(),
          "Kantor triple system of " + base + " twisted by its automorphism", kts_suites,
          [spec, base] {
            const InvolutiveAlgebra a = spec.make();
            return triple_file(twisted_kts(a, spec.sigma()), SignPair(-1, 1), a.unit(),
                               "twisted-kts(" + base + ", " + base + ".sigma)");
          });
    }
  }

  add("scalar-fkts", "triple-system", 1, "one-dimensional (-1,-1) system", mm_suites, [] {
    Vec unit(1);
    unit[0] = 1;
    return triple_file(make_scalar_fkts(), SignPair(-1, -1), unit, "built-in");
  });
  add("swap-fkts", "triple-system", 2,
      "componentwise pair twisted by the exchange, a (-1,-1) system", mm_suites, [] {
        Vec unit(2);
        unit[0] = 1;
        unit[1] = 1;
        return triple_file(make_swap_fkts(), SignPair(-1, -1), unit,
                           "twist(componentwise-pair, swap)");
      });

  add("osp12", "graded-superalgebra", 5, "orthosymplectic model inside gl(1|2)",
      {"graded"}, [] { return graded_file(osp12_model().g, "matrix model in gl(1|2)"); });
  add("osp12.phi", "linear-map", 5, "degree-reversing automorphism of osp12", {},
      [] { return map_file("osp12.phi", osp12_model().phi.matrix, "conjugation inside gl(1|2)"); });

  add("chevalley-A2", "graded-superalgebra", 8, "sl3 with the highest-root grading",
      {"graded", "chevalley"}, [] { return chevalley_file(SimpleType::A2); });
  add("chevalley-A3", "graded-superalgebra", 15, "sl4 with the highest-root grading",
      {"graded", "chevalley"}, [] { return chevalley_file(SimpleType::A3); });
  add("chevalley-C2", "graded-superalgebra", 10, "sp4 with the highest-root grading",
      {"graded", "chevalley"}, [] { return chevalley_file(SimpleType::C2); });
  return items;
}

const std::vector<Item>& items() {
  static const std::vector<Item> all = make_items();
  return all;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& item : items()) out.push_back(item.entry);
    return out;
  }();
  return entries;
}

bool catalog_has(const std::string& id) {
  for (const auto& item : items())
    if (item.entry.id == id) return true;
  return false;
}

SystemFile catalog_item(const std::string& id) {
  for (const auto& item : items())
    if (item.entry.id == id) return item.build();
  throw InputError("unknown catalog id '" + id + "'");
}

SystemFile resolve_input(const std::string& path_or_id) {
  if (std::filesystem::exists(path_or_id)) return read_system_file(path_or_id);
  if (catalog_has(path_or_id)) return catalog_item(path_or_id);
  throw InputError("'" + path_or_id + "' is neither a file nor a catalog id");
}

namespace {

TripleSystem triple_of(const SystemFile& file, std::string* note) {
  if (const auto* ts = std::get_if<TripleSystem>(&file.payload)) return *ts;
  if (const auto* alg = std::get_if<InvolutiveAlgebra>(&file.payload)) {
    if (note) *note = "derived the Kantor triple system {xyz} = V_{x,y}(z)";
    return kts_from_structurable(*alg);
  }
  throw InputError("suite needs a triple system (or an algebra to derive one from)");
}

Vec unit_of(const SystemFile& file) {
  if (file.unit) return *file.unit;
  if (const auto* alg = std::get_if<InvolutiveAlgebra>(&file.payload)) return alg->unit();
  throw InputError("suite needs a left unit: none declared and none supplied");
}

SignPair signs_of(const SystemFile& file) {
  if (file.signs) return *file.signs;
  throw InputError("suite needs a declared signature (signs field)");
}

Report chevalley_suite(const SystemFile& file) {
  Report rep;
  rep.subject = file.label;
  rep.suite = "chevalley";
  const std::string prefix = "chevalley-";
  if (file.label.rfind(prefix, 0) != 0)
    throw InputError("chevalley suite runs on the chevalley-* catalog items");
  const SimpleType type = parse_simple_type(file.label.substr(prefix.size()));
  const ChevalleyAlgebra alg = chevalley_algebra(type);
  const HighestRootGrading grading = highest_root_grading(alg);

  const auto* g = std::get_if<GradedSuperalgebra>(&file.payload);
  if (!g) throw InputError("chevalley suite needs a graded payload");
  rep.add_item("file matches the rebuilt graded algebra", *g == to_graded(alg, grading),
               std::nullopt);
  {
    std::ostringstream os;
    for (size_t i = 0; i < 5; ++i) os << (i ? "," : "") << grading.dims[i];
    rep.add_info("component dims (-2..2)", os.str());
  }
  if (grading.degenerate) {
    rep.add_info("grading", "degenerate (g_1 = 0); triple-system checks skipped");
    return rep;
  }
  const Mat phi = chevalley_phi(alg);
  rep.add_pass("phi is an order-two automorphism with x_a -> -x_{-a}");
  const KantorOnG1 kantor = kantor_on_g1(alg, grading, phi);
  rep.add_pass("g_1 carries a (-1,1) system with sigma^2 = -id and K(u,v) = <u|v> sigma");
  const TripleSystem balanced = balanced_twist(kantor);
  rep.add_pass("twist by sigma is (1,1) and balanced: K*(u,v) = -<u|v> id");
  freudenthal_product(balanced, kantor.form);
  rep.add_pass("derived product is symmetric in its first two arguments");
  return rep;
}

}  // namespace

Report run_suite(const SystemFile& file, const std::string& suite, int jobs) {
  std::string note;
  Report rep;
  if (suite == "gjts") {
    rep = check_gjts(triple_of(file, &note), jobs);
  } else if (suite == "kantor") {
    rep = check_fkts(triple_of(file, &note), SignPair(-1, 1), jobs);
    rep.suite = "kantor";
  } else if (suite.rfind("fkts:", 0) == 0) {
    rep = check_fkts(triple_of(file, &note), parse_signs(suite.substr(5)), jobs);
  } else if (suite == "structurable") {
    const auto* alg = std::get_if<InvolutiveAlgebra>(&file.payload);
    if (!alg) throw InputError("structurable suite needs an involutive algebra");
    rep = check_structurable(*alg, jobs);
  } else if (suite == "lemmas-kantor") {
    rep = check_unit_identities_kantor(triple_of(file, &note), unit_of(file));
  } else if (suite == "lemmas-mm") {
    rep = check_unit_identities_mm(triple_of(file, &note), unit_of(file));
  } else if (suite == "star") {
    rep = check_star_identities(triple_of(file, &note), unit_of(file));
  } else if (suite == "special-unitary") {
    const TripleSystem ts = triple_of(file, &note);
    const SignPair signs = signs_of(file);
    rep.suite = "special-unitary";
    rep.subject = ts.label().empty() ? file.label : ts.label();
    const bool special = check_special(ts, signs);
    const bool unitary = check_unitary(ts, signs);  // throws if inconsistent
    rep.add_info("special", special ? "true" : "false");
    rep.add_info("unitary", unitary ? "true" : "false");
    rep.add_pass("unitary => (eps == del and special)");
  } else if (suite == "graded") {
    const auto* g = std::get_if<GradedSuperalgebra>(&file.payload);
    if (!g) throw InputError("graded suite needs a graded-superalgebra payload");
    rep = check_super_jacobi(*g, jobs);
    Report gr = check_grading(*g);
    for (auto& item : gr.items) rep.items.push_back(std::move(item));
    rep.suite = "graded";
  } else if (suite == "chevalley") {
    rep = chevalley_suite(file);
  } else {
    throw InputError("unknown suite '" + suite + "'");
  }
  if (rep.subject.empty() || rep.subject == "triple-system") rep.subject = file.label;
  if (!note.empty()) rep.add_info("input", note);
  return rep;
}

}  // namespace kantor
