#include <iostream>
#include <variant>

#include "CLI11.hpp"
#include "kantor/bridge.hpp"
#include "kantor/catalog.hpp"
#include "kantor/errors.hpp"
#include "kantor/io.hpp"
#include "kantor/lie.hpp"

namespace {

using namespace kantor;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

void emit(const SystemFile& file, const std::string& out_path) {
  if (out_path.empty())
    std::cout << save_system_file(file);
  else
    write_system_file(file, out_path);
}

TripleSystem need_triple(const SystemFile& file) {
  if (const auto* ts = std::get_if<TripleSystem>(&file.payload)) return *ts;
  if (const auto* alg = std::get_if<InvolutiveAlgebra>(&file.payload))
    return kts_from_structurable(*alg);
  throw InputError("this command needs a triple system input");
}

Vec need_unit(const SystemFile& file, const std::string& unit_arg) {
  if (!unit_arg.empty()) return parse_vector(unit_arg);
  if (file.unit) return *file.unit;
  if (const auto* alg = std::get_if<InvolutiveAlgebra>(&file.payload)) return alg->unit();
  throw InputError("supply --unit: no left unit declared for this input");
}

SignPair signs_of_or_throw(const SystemFile& file) {
  if (file.signs) return *file.signs;
  throw InputError("supply --signs: no signature declared for this input");
}

Mat need_map(const std::string& map_arg) {
  const SystemFile f = resolve_input(map_arg);
  if (const auto* m = std::get_if<Mat>(&f.payload)) return *m;
  throw InputError("'" + map_arg + "' is not a linear-map input");
}

int cmd_catalog(const std::string& out_dir) {
  for (const auto& entry : catalog()) {
    std::cout << entry.id << "  [" << entry.kind << ", dim " << entry.dim << "]  "
              << entry.summary << "\n";
    if (!out_dir.empty())
      write_system_file(catalog_item(entry.id), out_dir + "/" + entry.id + ".json");
  }
  return kExitPass;
}

int cmd_verify(const std::string& input, const std::string& suite, const std::string& signs,
               const std::string& unit, int jobs) {
  SystemFile file = resolve_input(input);
  if (!signs.empty()) file.signs = parse_signs(signs);
  if (!unit.empty()) file.unit = parse_vector(unit);
  const Report rep = run_suite(file, suite, jobs);
  std::cout << rep.str();
  return rep.passed() ? kExitPass : kExitCheckFailed;
}

int cmd_convert(const std::string& input, const std::string& direction,
                const std::string& unit_arg, const std::string& map_arg,
                const std::string& skew_arg, const std::string& square_arg,
                const std::string& signs_arg, const std::string& out_path,
                const std::string& map_out) {
  SystemFile file = resolve_input(input);
  SystemFile result;
  if (direction == "kts-to-structurable") {
    const TripleSystem ts = need_triple(file);
    const Vec e = need_unit(file, unit_arg);
    StructurableResult sr = structurable_of_left_unital(ts, e);
    result.label = sr.algebra.label();
    result.provenance = "structurable-of-left-unital(" + file.label + ")";
    result.payload = std::move(sr.algebra);
    if (!map_out.empty()) {
      SystemFile mf;
      mf.label = result.label + ".sigma";
      mf.provenance = "involutive automorphism recovered with " + result.label;
      mf.payload = sr.sigma;
      write_system_file(mf, map_out);
    }
  } else if (direction == "structurable-to-kts") {
    const auto* alg = std::get_if<InvolutiveAlgebra>(&file.payload);
    if (!alg) throw InputError("structurable-to-kts needs an involutive algebra");
    TripleSystem ts =
        map_arg.empty() ? kts_from_structurable(*alg) : twisted_kts(*alg, need_map(map_arg));
    result.label = ts.label();
    result.provenance = map_arg.empty()
                            ? "kts-from-structurable(" + file.label + ")"
                            : "twisted-kts(" + file.label + ", " + map_arg + ")";
    result.signs = SignPair(-1, 1);
    result.unit = alg->unit();
    result.payload = std::move(ts);
  } else if (direction == "twist") {
    const TripleSystem ts = need_triple(file);
    if (map_arg.empty()) throw InputError("twist needs --map");
    SignPair signs = signs_arg.empty() ? (file.signs ? *file.signs : SignPair(-1, 1))
                                       : parse_signs(signs_arg);
    std::optional<Scalar> square;
    if (!square_arg.empty()) square = Scalar::parse(square_arg);
    TwistResult tw = twist(ts, need_map(map_arg), signs, square);
    result.label = tw.system.label();
    result.provenance = "twist(" + file.label + ", " + map_arg + ")";
    result.signs = tw.signs;
    result.unit = file.unit;
    result.payload = std::move(tw.system);
  } else if (direction == "double-m21") {
    const TripleSystem ts = need_triple(file);
    const SignPair signs =
        signs_arg.empty() ? signs_of_or_throw(file) : parse_signs(signs_arg);
    TripleSystem doubled = double_m21(ts, signs);
    result.label = doubled.label();
    result.provenance = "double-m21(" + file.label + ")";
    result.signs = SignPair(-signs.epsilon, signs.delta);
    result.payload = std::move(doubled);
  } else if (direction == "mu-normalize") {
    const TripleSystem ts = need_triple(file);
    const Vec e = need_unit(file, unit_arg);
    TripleSystem normalized = mu_normalize(ts, e);
    result.label = normalized.label();
    result.provenance = "mu-normalize(" + file.label + ")";
    result.signs = SignPair(-1, -1);
    result.unit = e;
    result.payload = std::move(normalized);
  } else if (direction == "skew-twist-11") {
    const auto* alg = std::get_if<InvolutiveAlgebra>(&file.payload);
    if (!alg) throw InputError("skew-twist-11 needs an involutive algebra");
    if (skew_arg.empty()) throw InputError("skew-twist-11 needs --skew");
    TripleSystem ts = skew_element_twist(*alg, parse_vector(skew_arg));
    result.label = ts.label();
    result.provenance = "skew-twist-11(" + file.label + ", f=" + skew_arg + ")";
    result.signs = SignPair(1, 1);
    result.payload = std::move(ts);
  } else {
    throw InputError("unknown direction '" + direction + "'");
  }
  emit(result, out_path);
  return kExitPass;
}

int cmd_build_lie(const std::string& input, const std::string& signs_arg,
                  const std::string& out_path, int jobs) {
  SystemFile file = resolve_input(input);
  const TripleSystem ts = need_triple(file);
  const SignPair signs = signs_arg.empty() ? signs_of_or_throw(file) : parse_signs(signs_arg);
  (void)jobs;
  const LieBuild build = build_gU(ts, signs);
  SystemFile result;
  result.label = build.g.label();
  result.provenance = "g(" + file.label + ") with signs " + signs.str();
  result.payload = build.g;
  const auto dims = build.g.dims_by_degree();
  std::cerr << "dims by degree (-2..2): " << dims[0] << "," << dims[1] << "," << dims[2]
            << "," << dims[3] << "," << dims[4] << "\n"
            << "note: root-system grading bookkeeping (BC1 / B(0,1) labels) is not "
               "independently checked\n";
  emit(result, out_path);
  return kExitPass;
}

int cmd_decompose(const std::string& input, const std::string& unit_arg,
                  const std::string& map_arg) {
  SystemFile file = resolve_input(input);
  GradedSuperalgebra g;
  PhiMap phi;
  Vec e_g;

  if (const auto* graded = std::get_if<GradedSuperalgebra>(&file.payload)) {
    g = *graded;
    if (!map_arg.empty()) {
      phi = {need_map(map_arg)};
    } else if (file.label == "osp12") {
      phi = osp12_model().phi;
    } else {
      throw InputError("decompose of a graded input needs --map with its phi");
    }
    const auto u = g.degree_indices(1);
    Vec e_u(u.size());
    if (!unit_arg.empty()) {
      e_u = parse_vector(unit_arg);
      if (e_u.dim() != u.size()) throw InputError("--unit must have the g_1 dimension");
    } else if (file.label == "osp12") {
      e_u[0] = 1;  // e = X
    } else {
      throw InputError("decompose of a graded input needs --unit in g_1 coordinates");
    }
    e_g = Vec(g.dim());
    for (size_t a = 0; a < u.size(); ++a) e_g[u[a]] = e_u[a];
  } else {
    TripleSystem ts = need_triple(file);
    Vec e = need_unit(file, unit_arg);
    bool normalized = true;
    for (size_t i = 0; i < ts.dim() && normalized; ++i) {
      const Vec ei = Vec::unit(ts.dim(), i);
      normalized = ts.product(e, ei, e) == ei;
    }
    if (!normalized) {
      std::cerr << "input is not mu-normalized; normalizing first\n";
      ts = mu_normalize(ts, e);
    }
    const LieBuild build = build_gU(ts, SignPair(-1, -1));
    phi = phi_of_gU(build);
    e_g = build.embed_g1(e);
    g = build.g;
  }

  const B01Decomposition dec = b01_decompose(g, phi, e_g);
  std::cout << dec.report.str();
  std::cout << "adjoint x" << dec.adjoint_count << ", natural x" << dec.natural_count
            << ", trivial dim " << dec.trivial_dim << "\n";
  return dec.report.passed() ? kExitPass : kExitCheckFailed;
}

int cmd_report(int jobs) {
  bool all_ok = true;
  for (const auto& entry : catalog()) {
    const SystemFile file = catalog_item(entry.id);
    for (const auto& suite : entry.suites) {
      const Report rep = run_suite(file, suite, jobs);
      all_ok = all_ok && rep.passed();
      std::cout << (rep.passed() ? "PASS " : "FAIL ") << entry.id << " " << suite << "\n";
      if (!rep.passed()) std::cout << rep.str();
    }
  }
  return all_ok ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for Kantor-type triple systems"};
  app.require_subcommand(1);

  std::string input, suite, signs, unit, out_path, direction, map_arg, skew_arg, square_arg,
      map_out, out_dir;
  int jobs = 1;

  auto* c_catalog = app.add_subcommand("catalog", "list built-in systems");
  c_catalog->add_option("--out", out_dir, "export every item into this directory");

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("input", input, "file path or catalog id")->required();
  c_verify->add_option("--suite", suite, "suite name")->required();
  c_verify->add_option("--signs", signs, "override the declared signature, e.g. -1,1");
  c_verify->add_option("--unit", unit, "override the declared left unit, e.g. 1,0");
  c_verify->add_option("--jobs", jobs, "worker threads for the sweeps");

  auto* c_convert = app.add_subcommand("convert", "run a construction");
  c_convert->add_option("input", input)->required();
  c_convert->add_option("--direction", direction,
                        "kts-to-structurable | structurable-to-kts | twist | double-m21 | "
                        "mu-normalize | skew-twist-11")
      ->required();
  c_convert->add_option("--unit", unit);
  c_convert->add_option("--map", map_arg, "linear-map file or catalog id");
  c_convert->add_option("--skew", skew_arg, "skew element for skew-twist-11");
  c_convert->add_option("--square", square_arg, "square scalar for the scalar twist");
  c_convert->add_option("--signs", signs);
  c_convert->add_option("--out", out_path);
  c_convert->add_option("--map-out", map_out, "where to write the recovered automorphism");

  auto* c_build = app.add_subcommand("build-lie", "build the 5-graded Lie (super)algebra");
  c_build->add_option("input", input)->required();
  c_build->add_option("--signs", signs);
  c_build->add_option("--out", out_path);
  c_build->add_option("--jobs", jobs);

  auto* c_decompose = app.add_subcommand("decompose", "B(0,1) module decomposition");
  c_decompose->add_option("input", input)->required();
  c_decompose->add_option("--unit", unit);
  c_decompose->add_option("--map", map_arg, "phi for graded inputs");

  auto* c_report = app.add_subcommand("report", "run every catalog self-test");
  c_report->add_option("--jobs", jobs);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_catalog->parsed()) return cmd_catalog(out_dir);
    if (c_verify->parsed()) return cmd_verify(input, suite, signs, unit, jobs);
    if (c_convert->parsed())
      return cmd_convert(input, direction, unit, map_arg, skew_arg, square_arg, signs,
                         out_path, map_out);
    if (c_build->parsed()) return cmd_build_lie(input, signs, out_path, jobs);
    if (c_decompose->parsed()) return cmd_decompose(input, unit, map_arg);
    if (c_report->parsed()) return cmd_report(jobs);
  } catch (const kantor::ConstructionError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const kantor::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
