#include <functional>

#include "doctest.h"
#include "helpers.hpp"
#include "seif/json_io.hpp"

using namespace seif;
using namespace seif::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::SingularMatrix;
}

}  // namespace

TEST_CASE("scalars and matrices") {
  CHECK(rational_from_json(Json("3/4")) == Rational(3, 4));
  CHECK(rational_from_json(Json("-0.25")) == Rational(-1, 4));
  CHECK(rational_from_json(Json(7)) == 7);
  CHECK(frac_from_json(Json("-2/6")) == Frac(-1, 3));
  CHECK(scalar_from_json(Json(0.5)) == Cx(0.5));
  CHECK(scalar_from_json(Json::parse("[1, \"1/2\"]")) == Cx(1, 0.5));
  CHECK(code_of([] { rational_from_json(Json(0.5)); }) == ErrorCode::BadInput);
  CHECK(code_of([] { rational_from_json(Json("1/0")); }) == ErrorCode::BadInput);

  MatrixQ q{{Rational(1, 3), -2}, {Rational(5, 7), 0}};
  auto back = exact_matrix_from_json(Json::parse(to_json(q).dump()));
  REQUIRE(back);
  CHECK(*back == q);
  CHECK(!exact_matrix_from_json(Json::parse("[[1, 0.5]]")));
  CHECK(code_of([] { matrix_from_json(Json::parse("[[1, 2], [3]]")); }) == ErrorCode::BadInput);
  CHECK(code_of([] { matrix_from_json(Json::parse("[]")); }) == ErrorCode::BadInput);

  Mat a(2, 2);
  a << Cx(0.1, 0), Cx(1.0 / 3.0, -2.5), Cx(-1e-17, 0), Cx(12345.678901234567, 1);
  CHECK(matrix_from_json(Json::parse(to_json(a).dump())) == a);
}

TEST_CASE("documents") {
  auto l = seifert_from_json(Json::parse("[[1,0],[2,1]]"));
  REQUIRE(l.exact);
  CHECK(*seifert_from_json(Json::parse(to_json(l).dump())).exact == *l.exact);
  auto ln = seifert_from_json(Json::parse("[[1.5,0],[2,1]]"));
  CHECK(!ln.exact);
  CHECK(code_of([] { seifert_from_json(Json::parse("[[1,0]]")); }) == ErrorCode::BadInput);

  Json bad = to_json(l);
  bad["schema_version"] = "2";
  CHECK(code_of([&] { seifert_from_json(bad); }) == ErrorCode::BadInput);
  bad = to_json(l);
  bad["kind"] = "triple";
  CHECK(code_of([&] { seifert_from_json(bad); }) == ErrorCode::BadInput);

  IsometricTriple t{Mat::Identity(2, 2), -Mat::Identity(2, 2), 0};
  auto t2 = triple_from_json(Json::parse(to_json(t).dump()));
  CHECK(t2.m == t.m);
  CHECK(t2.s == t.s);
  CHECK(t2.sym == 0);

  auto p = make_split_pmhs({{1, 0, Frac(1, 3), 1}, {0, 1, Frac(2, 3), 1}, {1, 1, Frac(0), 1}}, 1, true, 5);
  auto p2 = pmhs_from_json(Json::parse(to_json(p).dump()));
  CHECK(p2.m == p.m);
  CHECK(p2.s == p.s);
  CHECK(p2.weight == 1);
  CHECK(p2.is_signed);
  CHECK(p2.f.equals(p.f, 1e-12));
  CHECK(spectral_pairs(p2) == spectral_pairs(p));

  auto tz = p1_mirror();
  auto tz2 = tezp_from_json(Json::parse(to_json(tz).dump()));
  CHECK(*tz2.l.exact == *tz.l.exact);
  CHECK(tz2.m == 0);
  CHECK(tz2.hodge->f.equals(tz.hodge->f, 1e-12));
  CHECK(!tz2.fl);

  auto x2 = x_squared();
  auto x3 = tezp_from_json(Json::parse(to_json(x2).dump()));
  REQUIRE(x3.fl);
  CHECK(x3.fl->z_side);
  CHECK(x3.fl->generators[0][0].alpha == Frac(1, 2));
  CHECK(x3.fl->generators[0][0].a == x2.fl->generators[0][0].a);

  Json spec = Json::parse(R"({"schema_version":"1","kind":"split_spec","weight":0,"signed":false,
    "ladders":[{"p":0,"q":0,"angle":"1/4"},{"p":0,"q":0,"angle":"3/4"}]})");
  auto s = split_spec_from_json(spec);
  CHECK(s.ladders.size() == 2);
  CHECK(s.ladders[1].angle == Frac(3, 4));
  CHECK(s.ladders[0].dim == 1);

  auto spp = to_json(spectral_pairs(*x2.hodge));
  CHECK(spp["pairs"].dump() == "[[-1,2,0,1]]");
  Report r;
  r.items.push_back({"a", true, 0, ""});
  r.items.push_back({"b", false, 0.5, "x"});
  auto rj = to_json(r);
  CHECK(rj["ok"] == false);
  CHECK(rj["items"][1]["residual"] == 0.5);
}
