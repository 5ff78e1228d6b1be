#include "kantor/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kantor/errors.hpp"

namespace kantor {

using ojson = nlohmann::ordered_json;

namespace {

constexpr const char* kFormatTag = "kantor-sc/1";

ojson vec_to_json(const Vec& v) {
  ojson a = ojson::array();
  for (size_t i = 0; i < v.dim(); ++i) a.push_back(v[i].str());
  return a;
}

ojson mat_to_json(const Mat& m) {
  ojson rows = ojson::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Vec vec_from_json(const ojson& a, size_t dim, const char* what) {
  if (!a.is_array() || a.size() != dim)
    throw ParseError(std::string(what) + ": expected an array of length " +
                     std::to_string(dim));
  Vec v(dim);
  for (size_t i = 0; i < dim; ++i) {
    if (!a[i].is_string()) throw ParseError(std::string(what) + ": entries must be strings");
    v[i] = Scalar::parse(a[i].get<std::string>());
  }
  return v;
}

Mat mat_from_json(const ojson& a, size_t dim, const char* what) {
  if (!a.is_array() || a.size() != dim)
    throw ParseError(std::string(what) + ": expected " + std::to_string(dim) + " rows");
  Mat m(dim, dim);
  for (size_t i = 0; i < dim; ++i) {
    const Vec row = vec_from_json(a[i], dim, what);
    for (size_t j = 0; j < dim; ++j) m.at(i, j) = row[j];
  }
  return m;
}

size_t index_from_json(const ojson& v, size_t dim, const char* what) {
  if (!v.is_number_integer())
    throw ParseError(std::string(what) + ": index must be an integer");
  const long long raw = v.get<long long>();
  if (raw < 0 || static_cast<size_t>(raw) >= dim)
    throw ParseError(std::string(what) + ": index " + std::to_string(raw) +
                     " out of range for dim " + std::to_string(dim));
  return static_cast<size_t>(raw);
}

Scalar value_from_json(const ojson& v, const char* what) {
  if (!v.is_string()) throw ParseError(std::string(what) + ": value must be a string");
  const Scalar s = Scalar::parse(v.get<std::string>());
  if (s.is_zero()) throw ParseError(std::string(what) + ": zero entries must be omitted");
  return s;
}

void require_keys(const ojson& j, const std::set<std::string>& required,
                  const std::set<std::string>& optional) {
  for (const auto& item : j.items()) {
    if (!required.count(item.key()) && !optional.count(item.key()))
      throw ParseError("unknown field '" + item.key() + "'");
  }
  for (const auto& k : required)
    if (!j.contains(k)) throw ParseError("missing field '" + k + "'");
}

}  // namespace

const char* SystemFile::kind() const {
  switch (payload.index()) {
    case 0: return "triple-system";
    case 1: return "involutive-algebra";
    case 2: return "graded-superalgebra";
    default: return "linear-map";
  }
}

size_t SystemFile::dim() const {
  switch (payload.index()) {
    case 0: return std::get<TripleSystem>(payload).dim();
    case 1: return std::get<InvolutiveAlgebra>(payload).dim();
    case 2: return std::get<GradedSuperalgebra>(payload).dim();
    default: return std::get<Mat>(payload).rows();
  }
}

std::string save_system_file(const SystemFile& f) {
  ojson j;
  j["format"] = kFormatTag;
  j["kind"] = f.kind();
  j["label"] = f.label;
  if (!f.provenance.empty()) j["provenance"] = f.provenance;
  j["dim"] = f.dim();
  if (f.signs) j["signs"] = ojson::array({f.signs->epsilon, f.signs->delta});
  if (f.unit && f.payload.index() == 0) j["unit"] = vec_to_json(*f.unit);

  if (const auto* ts = std::get_if<TripleSystem>(&f.payload)) {
    ojson records = ojson::array();
    const size_t n = ts->dim();
    for (size_t i = 0; i < n; ++i)
      for (size_t jj = 0; jj < n; ++jj)
        for (size_t k = 0; k < n; ++k)
          for (size_t l = 0; l < n; ++l)
            if (!ts->t(i, jj, k, l).is_zero())
              records.push_back(ojson::array({i, jj, k, l, ts->t(i, jj, k, l).str()}));
    j["tensor"] = std::move(records);
  } else if (const auto* alg = std::get_if<InvolutiveAlgebra>(&f.payload)) {
    ojson records = ojson::array();
    const size_t n = alg->dim();
    for (size_t i = 0; i < n; ++i)
      for (size_t jj = 0; jj < n; ++jj)
        for (size_t k = 0; k < n; ++k)
          if (!alg->c(i, jj, k).is_zero())
            records.push_back(ojson::array({i, jj, k, alg->c(i, jj, k).str()}));
    j["product"] = std::move(records);
    j["involution"] = mat_to_json(alg->involution());
    j["unit"] = vec_to_json(alg->unit());
  } else if (const auto* g = std::get_if<GradedSuperalgebra>(&f.payload)) {
    ojson elems = ojson::array();
    for (size_t i = 0; i < g->dim(); ++i) {
      ojson e;
      e["label"] = g->elem(i).label;
      e["degree"] = g->elem(i).degree;
      e["parity"] = g->elem(i).odd ? "odd" : "even";
      elems.push_back(std::move(e));
    }
    j["elements"] = std::move(elems);
    ojson records = ojson::array();
    for (size_t i = 0; i < g->dim(); ++i)
      for (size_t jj = 0; jj < g->dim(); ++jj)
        for (size_t k = 0; k < g->dim(); ++k)
          if (!g->b(i, jj, k).is_zero())
            records.push_back(ojson::array({i, jj, k, g->b(i, jj, k).str()}));
    j["bracket"] = std::move(records);
  } else {
    j["matrix"] = mat_to_json(std::get<Mat>(f.payload));
  }
  return j.dump(2) + "\n";
}

SystemFile load_system_file(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level must be an object");
  if (!j.contains("format") || j["format"] != kFormatTag)
    throw ParseError("missing or unsupported format tag");
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("missing kind");
  const std::string kind = j["kind"].get<std::string>();
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
    throw ParseError("missing or invalid dim");
  const size_t dim = j["dim"].get<size_t>();

  SystemFile f;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("label must be a string");
    f.label = j["label"].get<std::string>();
  }
  if (j.contains("provenance")) {
    if (!j["provenance"].is_string()) throw ParseError("provenance must be a string");
    f.provenance = j["provenance"].get<std::string>();
  }
  if (j.contains("signs")) {
    const auto& s = j["signs"];
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() ||
        !s[1].is_number_integer())
      throw ParseError("signs must be a pair of integers");
    f.signs = SignPair(s[0].get<int>(), s[1].get<int>());
  }

  const std::set<std::string> common = {"format", "kind", "label", "provenance", "dim"};
  if (kind == "triple-system") {
    std::set<std::string> req = common;
    req.insert("tensor");
    require_keys(j, req, {"signs", "unit"});
    TripleSystem ts(dim, f.label);
    std::set<std::array<size_t, 4>> seen;
    for (const auto& rec : j["tensor"]) {
      if (!rec.is_array() || rec.size() != 5)
        throw ParseError("tensor records must be [i,j,k,l,value]");
      const size_t i = index_from_json(rec[0], dim, "tensor");
      const size_t jj = index_from_json(rec[1], dim, "tensor");
      const size_t k = index_from_json(rec[2], dim, "tensor");
      const size_t l = index_from_json(rec[3], dim, "tensor");
      if (!seen.insert({i, jj, k, l}).second) throw ParseError("duplicate tensor record");
      ts.t(i, jj, k, l) = value_from_json(rec[4], "tensor");
    }
    if (j.contains("unit")) f.unit = vec_from_json(j["unit"], dim, "unit");
    f.payload = std::move(ts);
  } else if (kind == "involutive-algebra") {
    std::set<std::string> req = common;
    req.insert({"product", "involution", "unit"});
    require_keys(j, req, {});
    std::vector<Scalar> prod(dim * dim * dim);
    std::set<std::array<size_t, 3>> seen;
    for (const auto& rec : j["product"]) {
      if (!rec.is_array() || rec.size() != 4)
        throw ParseError("product records must be [i,j,k,value]");
      const size_t i = index_from_json(rec[0], dim, "product");
      const size_t jj = index_from_json(rec[1], dim, "product");
      const size_t k = index_from_json(rec[2], dim, "product");
      if (!seen.insert({i, jj, k}).second) throw ParseError("duplicate product record");
      prod[(i * dim + jj) * dim + k] = value_from_json(rec[3], "product");
    }
    f.payload = InvolutiveAlgebra(dim, std::move(prod),
                                  mat_from_json(j["involution"], dim, "involution"),
                                  vec_from_json(j["unit"], dim, "unit"), f.label);
  } else if (kind == "graded-superalgebra") {
    std::set<std::string> req = common;
    req.insert({"elements", "bracket"});
    require_keys(j, req, {});
    if (!j["elements"].is_array() || j["elements"].size() != dim)
      throw ParseError("elements must list one entry per basis element");
    std::vector<GradedElement> elems;
    for (const auto& e : j["elements"]) {
      if (!e.is_object()) throw ParseError("elements entries must be objects");
      for (const auto& item : e.items())
        if (item.key() != "label" && item.key() != "degree" && item.key() != "parity")
          throw ParseError("unknown element field '" + item.key() + "'");
      if (!e.contains("label") || !e["label"].is_string() || !e.contains("degree") ||
          !e["degree"].is_number_integer() || !e.contains("parity") ||
          !e["parity"].is_string())
        throw ParseError("element entries need label, degree, parity");
      const std::string parity = e["parity"].get<std::string>();
      if (parity != "even" && parity != "odd") throw ParseError("parity must be even|odd");
      const int deg = e["degree"].get<int>();
      if (deg < -2 || deg > 2) throw ParseError("degree outside -2..2");
      elems.push_back({e["label"].get<std::string>(), deg, parity == "odd"});
    }
    GradedSuperalgebra g(std::move(elems), f.label);
    std::set<std::array<size_t, 3>> seen;
    for (const auto& rec : j["bracket"]) {
      if (!rec.is_array() || rec.size() != 4)
        throw ParseError("bracket records must be [i,j,k,value]");
      const size_t i = index_from_json(rec[0], dim, "bracket");
      const size_t jj = index_from_json(rec[1], dim, "bracket");
      const size_t k = index_from_json(rec[2], dim, "bracket");
      if (!seen.insert({i, jj, k}).second) throw ParseError("duplicate bracket record");
      g.b(i, jj, k) = value_from_json(rec[3], "bracket");
    }
    f.payload = std::move(g);
  } else if (kind == "linear-map") {
    std::set<std::string> req = common;
    req.insert("matrix");
    require_keys(j, req, {});
    f.payload = mat_from_json(j["matrix"], dim, "matrix");
  } else {
    throw ParseError("unknown kind '" + kind + "'");
  }
  return f;
}

SystemFile read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_system_file(buf.str());
}

void write_system_file(const SystemFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << save_system_file(f);
  if (!out) throw InputError("failed writing '" + path + "'");
}

Vec parse_vector(const std::string& text) {
  std::vector<Scalar> entries;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) entries.push_back(Scalar::parse(cur));
  if (entries.empty()) throw ParseError("empty vector literal");
  return Vec(std::move(entries));
}

SignPair parse_signs(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("signs must look like '-1,1'");
  auto parse_sign = [](const std::string& s) {
    if (s == "1" || s == "+1") return 1;
    if (s == "-1") return -1;
    throw ParseError("sign entries must be +1 or -1, got '" + s + "'");
  };
  return SignPair(parse_sign(text.substr(0, comma)), parse_sign(text.substr(comma + 1)));
}

}  // namespace kantor
