#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "stringy/io.hpp"

using namespace stringy;

namespace {

std::string path(const std::string& n) { return std::string(DATA_DIR) + "/" + n; }

std::vector<std::string> smooth_set() {
  std::vector<std::string> v;
  for (auto& e : std::filesystem::directory_iterator(path("smooth"))) v.push_back(e.path().string());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("canonical divisor of the worked example") {
  auto f = load_fan(path("hypersurface.json"));
  CHECK(invariant_divisors(f).entries.size() == 4);
  auto g = KCGauge::on_points(f.curve, {{"0", -5}, {"1", 2}, {"inf", 1}});
  std::map<std::string, Rat> want{{"D(0, (1,0))", -5}, {"D(0, (1,1))", -5}, {"D(1, (-1/2,0))", 5}, {"D(inf, (-1/3,0))", 5}};
  auto k = canonical_divisor(f, g);
  REQUIRE(k.entries.size() == want.size());
  for (auto& e : k.entries) CHECK(want.at(e.label()) == e.coefficient);
}

TEST_CASE("support functions of the worked example") {
  auto f = load_fan(path("hypersurface.json"));
  Engine e = prepare(f);
  CHECK(e.lt.ok);
  CHECK(e.omega.m == 1);
  CHECK(e.omega.piece(0, "0").functional() == RatVec{-5, 0, 4});
  CHECK(e.omega.piece(0, kGeneric).functional() == RatVec{-5, 0, -1});
  // omega is -1 on vertical Cayley rays and on free tail rays
  CHECK(*e.omega.value(f, "1", {-1, 0}, 2) == -1);
  CHECK(*e.omega.value(f, "inf", {-1, 0}, 3) == -1);
  CHECK(*e.omega.value(f, "0", {1, 0}, 1) == -1);
  CHECK(*e.omega.value(f, "0", {1, 1}, 1) == -1);
}

TEST_CASE("stringy volume of the worked example") {
  auto f = load_fan(path("hypersurface.json"));
  Engine e = prepare(f);
  auto r = stringy_volume(f, e.omega);
  REQUIRE(r.volume);
  LatticeSeries want;
  want.num = {{-3, 1}, {-1, 1}, {0, -1}, {3, -1}};
  want.den = {{5, 1}};
  CHECK(r.volume->equals(want));
  CHECK(*r.e_st == Rat(7, 5));
  CHECK(r.poles == std::vector<Rat>{-5, -1});
  CHECK(r.remaining_poles == std::vector<Rat>{-5});
}

TEST_CASE("point sums agree with direct sums over the hypercone") {
  auto f = load_fan(path("hypersurface.json"));
  Engine e = prepare(f);
  auto r = stringy_volume(f, e.omega);
  long K = 6;
  // -omega <= K forces l <= 3K and |b| <= 2K at every point
  std::map<std::string, Poly1> direct;
  Poly1 tail;
  for (auto& xi : support_points(f, 20)) {
    Rat w = *e.omega.value(f, xi.y, xi.nu, xi.l);
    REQUIRE(w.get_den() == 1);
    long ex = -w.get_num().get_si();
    if (ex > K) continue;
    if (xi.l == 0)
      tail[ex] += 1;
    else
      direct[xi.y][ex] += 1;
  }
  CHECK(r.tail_sum.expand(K) == tail);
  for (auto y : {"0", "1", "inf"}) {
    Poly1 got = r.point_sums[y].expand(K);
    CHECK_MESSAGE(got == direct[y], std::string(y) << ": " << poly_str(got, "t", 1, false) << " vs " << poly_str(direct[y], "t", 1, false));
  }
}

TEST_CASE("A1 singularity over the line: one crepant divisor") {
  Engine e = prepare(load_fan(path("a1_tail.json")));
  auto res = resolve(e);
  REQUIRE(res.exceptional.size() == 1);
  CHECK(res.exceptional[0].nu == IntVec{1, 1});
  CHECK(res.exceptional[0].discrepancy == 0);
  CHECK(res.exceptional[0].via_omega == 0);
}

TEST_CASE("Stanley-Reisner form") {
  auto sr = stanley_reisner(Cone(3, {{1, 0, 0}}), RatVec{-1, 0, 0}, 1);
  CHECK(sr.P == Poly1{{0, 1}});
  CHECK(sr.eta == 1);
  // A1 cone with omega = -1 on both rays: P = 1 + t, eta = 1/2 * 2
  auto a1 = stanley_reisner(Cone(2, {{1, 0}, {1, 2}}), RatVec{-1, 0}, 1);
  Int total = 0;
  for (auto& [k, c] : a1.P) total += c;
  CHECK(total == 2);
  CHECK_THROWS_AS(cone_series(Cone(1, {{1}}), RatVec{1}, 1), Error);
}

TEST_CASE("simplicial shortcut agrees with the full computation") {
  std::vector<std::string> files = smooth_set();
  files.push_back(path("a1_tail.json"));
  int used = 0;
  for (auto& p : files) {
    auto f = load_fan(p);
    Engine e = prepare(f);
    auto r = stringy_volume(f, e.omega);
    auto s = euler_shortcut(f, e.omega);
    if (!s) continue;
    ++used;
    CHECK_MESSAGE(r.e_st == s, p);
  }
  CHECK(used >= 5);
}

TEST_CASE("smooth toric variety: volume is the class") {
  auto f = load_fan(path("smooth/torus_orthant.json"));
  Engine e = prepare(f);
  auto r = stringy_volume(f, e.omega);
  REQUIRE(r.volume);
  CHECK(r.volume->equals(LatticeSeries::monomial(1, -3)));
  CHECK(fiber_volume(f, HyperPoint{kGeneric, {1, 0}, 0}).equals(MotiveExpr::from_L_poly({1, -2, 1})));
}

TEST_CASE("stringy volume is independent of the gauge") {
  auto f = load_fan(path("hypersurface.json"));
  auto a = stringy_volume(f, prepare(f).omega);
  auto b = stringy_volume(f, prepare(f, KCGauge::on_points(f.curve, {{"1", -2}})).omega);
  CHECK(a.volume->equals(*b.volume));
}

TEST_CASE("non log terminal input") {
  auto f = load_fan(path("not_log_terminal.json"));
  Engine e = prepare(f);
  CHECK_FALSE(e.lt.ok);
  CHECK_THROWS_AS(stringy_volume(f, e.omega), Error);
}

TEST_CASE("orbits") {
  auto f = load_fan(path("smooth/a3_colored.json"));
  auto o = orbits(f);
  CHECK(o.size() == 2);
  CHECK(euler_from_orbits(f) == 1);
  CHECK_THROWS_AS(orbits(load_fan(path("hypersurface.json"))), Error);
  for (auto& p : smooth_set()) {
    auto g = load_fan(p);
    auto s = euler_and_smoothness(g);
    if (s.applicable()) CHECK_MESSAGE(euler_from_orbits(g) == s.e, p);
  }
}

TEST_CASE("local factoriality") {
  CHECK(locally_factorial(load_fan(path("smooth/torus_orthant.json"))).ok);
  CHECK_FALSE(locally_factorial(load_fan(path("a1_tail.json"))).ok);
}

TEST_CASE("smoothness criterion refuses a punctured base") {
  auto s = euler_and_smoothness(load_fan(path("punctured_base.json")));
  CHECK_FALSE(s.applicable());
}
