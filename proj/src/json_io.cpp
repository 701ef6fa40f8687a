#include "seif/json_io.hpp"

namespace seif {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

bool bool_field(const Json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) bad(std::string("field '") + key + "' must be a boolean");
  return j.at(key).get<bool>();
}

bool is_exact(const Json& j) { return j.is_number_integer() || j.is_string(); }

void check_rows(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a nonempty list of rows");
  std::size_t c = 0;
  for (const auto& r : j) {
    if (!r.is_array() || r.empty()) bad("matrix rows must be nonempty lists");
    if (c && r.size() != c) bad("ragged matrix");
    c = r.size();
  }
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("expected an exact number, got " + j.dump());
}

Frac frac_from_json(const Json& j) {
  Rational q = rational_from_json(j);
  BigInt n = numerator(q), d = denominator(q);
  if (abs(n) > BigInt(1) << 62 || d > BigInt(1) << 62) bad("rational out of range: " + j.dump());
  return Frac(n.convert_to<long long>(), d.convert_to<long long>());
}

Cx scalar_from_json(const Json& j) {
  if (is_exact(j)) return to_double(rational_from_json(j));
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2) return {scalar_from_json(j[0]).real(), scalar_from_json(j[1]).real()};
  bad("expected a number, got " + j.dump());
}

Mat matrix_from_json(const Json& j) {
  check_rows(j);
  Mat a(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r)
    for (std::size_t c = 0; c < j[r].size(); ++c) a(r, c) = scalar_from_json(j[r][c]);
  return a;
}

std::optional<MatrixQ> exact_matrix_from_json(const Json& j) {
  check_rows(j);
  MatrixQ a(int(j.size()), int(j[0].size()));
  for (std::size_t r = 0; r < j.size(); ++r)
    for (std::size_t c = 0; c < j[r].size(); ++c) {
      if (!is_exact(j[r][c])) return std::nullopt;
      a(int(r), int(c)) = rational_from_json(j[r][c]);
    }
  return a;
}

Vec vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("vector must be a nonempty list");
  Vec v(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) v(k) = scalar_from_json(j[k]);
  return v;
}

Json to_json(const MatrixQ& a) {
  Json rows = Json::array();
  for (int r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(to_string(a(r, c)));
    rows.push_back(row);
  }
  return rows;
}

namespace {

Json scalar_json(Cx x) {
  if (x.imag() == 0) return x.real();
  return Json::array({x.real(), x.imag()});
}

}  // namespace

Json to_json(const Mat& a) {
  Json rows = Json::array();
  for (int r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(scalar_json(a(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (int k = 0; k < v.size(); ++k) out.push_back(scalar_json(v(k)));
  return out;
}

void check_document(const Json& j, const std::string& kind) {
  if (!j.is_object()) bad("expected a JSON object");
  const Json& v = field(j, "schema_version");
  if (!v.is_string() || v.get<std::string>() != kSchemaVersion) bad("unsupported schema_version " + v.dump());
  const Json& k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) bad("expected kind '" + kind + "', got " + k.dump());
}

Json document(const std::string& kind) { return Json{{"schema_version", kSchemaVersion}, {"kind", kind}}; }

SeifertForm seifert_from_json(const Json& j) {
  const Json* g = &j;
  if (j.is_object()) {
    check_document(j, "seifert");
    g = &field(j, "gram");
  }
  if (auto q = exact_matrix_from_json(*g)) {
    if (q->rows() != q->cols()) bad("Gram matrix must be square");
    return SeifertForm::from_exact(*q);
  }
  Mat a = matrix_from_json(*g);
  if (a.rows() != a.cols()) bad("Gram matrix must be square");
  return SeifertForm::from_numeric(a);
}

Json to_json(const SeifertForm& l) {
  Json j = document("seifert");
  j["gram"] = l.exact ? to_json(*l.exact) : to_json(l.gram);
  return j;
}

IsometricTriple triple_from_json(const Json& j) {
  check_document(j, "triple");
  IsometricTriple t;
  t.m = matrix_from_json(field(j, "m"));
  t.s = matrix_from_json(field(j, "s"));
  t.sym = int_field(j, "sym");
  if (t.m.rows() != t.m.cols() || t.s.rows() != t.s.cols() || t.m.rows() != t.s.rows()) bad("M and S must be square of equal size");
  if (t.sym != 0 && t.sym != 1) bad("sym must be 0 or 1");
  return t;
}

Json to_json(const IsometricTriple& t) {
  Json j = document("triple");
  j["m"] = to_json(t.m);
  j["s"] = to_json(t.s);
  j["sym"] = t.sym;
  return j;
}

SteenbrinkPMHS pmhs_from_json(const Json& j) {
  check_document(j, "pmhs");
  SteenbrinkPMHS p;
  p.m = matrix_from_json(field(j, "m"));
  p.s = matrix_from_json(field(j, "s"));
  p.weight = int_field(j, "weight");
  p.is_signed = bool_field(j, "signed", false);
  int d = int(p.m.rows());
  if (p.m.cols() != d || p.s.rows() != d || p.s.cols() != d) bad("M and S must be square of equal size");
  if (j.contains("dim") && int_field(j, "dim") != d) bad("dim does not match M");
  p.f.top = Subspace::full(d);
  const Json& f = field(j, "f");
  if (!f.is_array()) bad("f must be a list of steps");
  for (const auto& step : f) {
    int q = int_field(step, "p");
    const Json& b = field(step, "basis");
    if (!b.is_array()) bad("basis must be a list of vectors");
    Mat cols(d, b.size());
    for (std::size_t c = 0; c < b.size(); ++c) {
      Vec v = vector_from_json(b[c]);
      if (v.size() != d) bad("basis vector of the wrong length");
      cols.col(c) = v;
    }
    p.f.steps[q] = b.empty() ? Subspace::zero(d) : Subspace::span(cols);
  }
  return p;
}

Json to_json(const SteenbrinkPMHS& p) {
  Json j = document("pmhs");
  j["dim"] = p.dim();
  j["weight"] = p.weight;
  j["signed"] = p.is_signed;
  j["m"] = to_json(p.m);
  j["s"] = to_json(p.s);
  Json f = Json::array();
  for (const auto& [q, sp] : p.f.steps) {
    Json b = Json::array();
    for (int c = 0; c < sp.dim(); ++c) b.push_back(to_json(Vec(sp.basis().col(c))));
    f.push_back({{"p", q}, {"basis", b}});
  }
  j["f"] = f;
  return j;
}

LatticeBasis lattice_from_json(const Json& j) {
  LatticeBasis b;
  b.z_side = bool_field(j, "z_side", false);
  const Json& g = field(j, "generators");
  if (!g.is_array()) bad("generators must be a list");
  for (const auto& gen : g) {
    if (!gen.is_array() || gen.empty()) bad("each generator must be a nonempty list of terms");
    Section s;
    for (const auto& t : gen) s.push_back({vector_from_json(field(t, "a")), frac_from_json(field(t, "alpha"))});
    b.generators.push_back(s);
  }
  return b;
}

Json to_json(const LatticeBasis& b) {
  Json g = Json::array();
  for (const auto& gen : b.generators) {
    Json terms = Json::array();
    for (const auto& t : gen) terms.push_back({{"a", to_json(t.a)}, {"alpha", frac_string(t.alpha)}});
    g.push_back(terms);
  }
  return Json{{"z_side", b.z_side}, {"generators", g}};
}

TEZPData tezp_from_json(const Json& j) {
  check_document(j, "tezp");
  TEZPData t;
  t.m = int_field(j, "m");
  t.l = seifert_from_json(field(j, "seifert"));
  if (j.contains("pmhs")) t.hodge = pmhs_from_json(j.at("pmhs"));
  if (j.contains("lattice")) t.fl = lattice_from_json(j.at("lattice"));
  validate_tezp(t);
  return t;
}

Json to_json(const TEZPData& t) {
  Json j = document("tezp");
  j["m"] = t.m;
  j["seifert"] = t.l.exact ? to_json(*t.l.exact) : to_json(t.l.gram);
  if (t.hodge) j["pmhs"] = to_json(*t.hodge);
  if (t.fl) j["lattice"] = to_json(*t.fl);
  return j;
}

SplitSpec split_spec_from_json(const Json& j) {
  check_document(j, "split_spec");
  SplitSpec s;
  s.weight = int_field(j, "weight");
  s.is_signed = bool_field(j, "signed", false);
  if (j.contains("seed")) s.seed = unsigned(int_field(j, "seed"));
  const Json& ls = field(j, "ladders");
  if (!ls.is_array()) bad("ladders must be a list");
  for (const auto& l : ls) {
    LadderSpec x;
    x.p = int_field(l, "p");
    x.q = int_field(l, "q");
    x.angle = frac_from_json(field(l, "angle"));
    x.dim = l.contains("dim") ? int_field(l, "dim") : 1;
    s.ladders.push_back(x);
  }
  return s;
}

namespace {

template <class T>
Json decomposition_json(const Decomposition<T>& d) {
  Json types = Json::array();
  for (const auto& [t, k] : d) types.push_back({{"type", t.to_string()}, {"mult", k}});
  Json j = document("decomposition");
  j["types"] = types;
  return j;
}

}  // namespace

Json to_json(const Decomposition<SeifType>& d) { return decomposition_json(d); }
Json to_json(const Decomposition<IsoType>& d) { return decomposition_json(d); }

Json to_json(const SpectralPairs& spp) {
  Json list = Json::array();
  for (const auto& [ak, k] : spp) list.push_back({ak.first.numerator(), ak.first.denominator(), ak.second, k});
  Json j = document("spectral_pairs");
  j["pairs"] = list;
  return j;
}

Json to_json(const Report& r) {
  Json items = Json::array();
  for (const auto& i : r.items) items.push_back({{"name", i.name}, {"pass", i.pass}, {"residual", i.residual}, {"detail", i.detail}});
  Json j = document("report");
  j["ok"] = r.ok();
  j["items"] = items;
  return j;
}

}  // namespace seif
