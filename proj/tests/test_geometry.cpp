#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "s2flow/constructions/icosidodecahedron.hpp"
#include "s2flow/geometry/sphere.hpp"

using namespace s2flow;

namespace {

// O(n^3) reference for zero-sum triple detection.
template <class S>
std::vector<Triple> brute_force_triples(const std::vector<Vec3<S>>& pts, const GeometryConfig& cfg) {
  std::vector<Triple> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        auto s = pts[i] + pts[j] + pts[k];
        if (near_zero(s[0], cfg) && near_zero(s[1], cfg) && near_zero(s[2], cfg)) out.push_back({i, j, k});
      }
  return out;
}

Vec3<double> random_unit(std::mt19937& rng) {
  std::normal_distribution<double> n;
  Vec3<double> v{n(rng), n(rng), n(rng)};
  double len = std::sqrt(dot(v, v));
  return (1.0 / len) * v;
}

double dist(const Vec3<double>& a, const Vec3<double>& b) { return chebyshev_distance(a, b); }

}  // namespace

TEST(Triples, MatchBruteForceOnIcosidodecahedron) {
  GeometryConfig cfg;
  auto exact = build_icosidodecahedron(FieldArithmetic(fields::f1()));
  EXPECT_EQ(find_zero_sum_triples(exact.points, cfg), brute_force_triples(exact.points, cfg));
  auto approx = build_icosidodecahedron(FloatArithmetic{});
  EXPECT_EQ(find_zero_sum_triples(approx.points, cfg), brute_force_triples(approx.points, cfg));
  EXPECT_EQ(find_zero_sum_triples(exact.points, cfg), find_zero_sum_triples(approx.points, cfg));
}

TEST(Triples, MatchBruteForceOnRandomRotatedSets) {
  std::mt19937 rng(5);
  GeometryConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec3<double>> pts;
    // a few planted equilateral great-circle triples plus noise points
    for (int t = 0; t < 4; ++t) {
      auto a = random_unit(rng), b = random_unit(rng);
      auto n = cross(a, b);
      n = (1.0 / std::sqrt(dot(n, n))) * n;
      auto v = cross(n, a);
      pts.push_back(a);
      pts.push_back(-0.5 * a + (std::sqrt(3.0) / 2) * v);
      pts.push_back(-0.5 * a - (std::sqrt(3.0) / 2) * v);
    }
    for (int t = 0; t < 10; ++t) pts.push_back(random_unit(rng));
    std::shuffle(pts.begin(), pts.end(), rng);
    auto fast = find_zero_sum_triples(pts, cfg);
    EXPECT_EQ(fast, brute_force_triples(pts, cfg));
    EXPECT_GE(fast.size(), 4U);
  }
}

TEST(Triples, ZeroSumIffPairwiseDotMinusHalf) {
  std::mt19937 rng(12345);
  GeometryConfig cfg;
  cfg.epsilon = 1e-9;
  int positives = 0;
  for (int i = 0; i < 10000; ++i) {
    Vec3<double> a, b, c;
    if (i % 2 == 0) {
      a = random_unit(rng);
      auto n = cross(a, random_unit(rng));
      n = (1.0 / std::sqrt(dot(n, n))) * n;
      auto v = cross(n, a);
      b = -0.5 * a + (std::sqrt(3.0) / 2) * v;
      c = -(a + b);
    } else {
      a = random_unit(rng);
      b = random_unit(rng);
      c = random_unit(rng);
    }
    auto s = a + b + c;
    bool zero_sum = near_zero(s[0], cfg) && near_zero(s[1], cfg) && near_zero(s[2], cfg);
    bool equidistant = is_equidistant_great_circle(a, b, c, cfg);
    EXPECT_EQ(zero_sum, equidistant) << "trial " << i;
    positives += zero_sum;
  }
  EXPECT_EQ(positives, 5000);
}

TEST(Triples, NeverContainAntipodesOrRepeats) {
  auto ps = build_icosidodecahedron(FieldArithmetic(fields::f1()));
  for (const auto& t : ps.triples) {
    EXPECT_LT(t[0], t[1]);
    EXPECT_LT(t[1], t[2]);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) EXPECT_FALSE(ps.points[t[i]] == -ps.points[t[j]]);
  }
}

TEST(SphericalDistance, SixtyPairsAtTwoFifthsOfPi) {
  auto exact = build_icosidodecahedron(FieldArithmetic(fields::f1()));
  FieldElement phi(fields::f1(), Rational(1, 2), 0, Rational(1, 2), 0);
  FieldElement target = (phi - FieldElement(fields::f1(), 1)) / Rational(2);
  GeometryConfig cfg;
  int exact_pairs = 0, angle_pairs = 0;
  for (std::size_t i = 0; i < 30; ++i)
    for (std::size_t j = i + 1; j < 30; ++j) {
      bool hit = spherical_distance_is(exact.points[i], exact.points[j], target, cfg);
      exact_pairs += hit;
      // independent check through the angle itself
      auto a = to_doubles(exact.points[i]), b = to_doubles(exact.points[j]);
      double angle = std::acos(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
      bool near72 = std::abs(angle - 2 * M_PI / 5) < 1e-9;
      angle_pairs += near72;
      EXPECT_EQ(hit, near72);
    }
  EXPECT_EQ(exact_pairs, 60);
  EXPECT_EQ(angle_pairs, 60);
}

TEST(SphericalDistance, AdjacentDecagonVerticesAtPiOverFive) {
  auto exact = build_icosidodecahedron(FieldArithmetic(fields::f1()));
  FieldElement phi(fields::f1(), Rational(1, 2), 0, Rational(1, 2), 0);
  GeometryConfig cfg;
  int count = 0;
  for (std::size_t i = 0; i < 30; ++i) {
    EXPECT_TRUE(spherical_distance_is(exact.points[i], exact.points[i], FieldElement(fields::f1(), 1), cfg));
    for (std::size_t j = i + 1; j < 30; ++j) count += spherical_distance_is(exact.points[i], exact.points[j], phi / Rational(2), cfg);
  }
  // every vertex has 4 neighbours on the polyhedron: 30 * 4 / 2
  EXPECT_EQ(count, 60);
}

TEST(SmallCircle, DegenerateCentres) {
  FieldArithmetic ctx(fields::f1());
  auto z = ctx.from_rational(0), o = ctx.from_rational(1);
  Vec3<FieldElement> p{z, z, o};
  EXPECT_THROW(small_circle_intersection(ctx, p, -p, Rational(0), GeometryConfig{}), DegenerateConfiguration);
  EXPECT_THROW(small_circle_intersection(ctx, p, p, Rational(0), GeometryConfig{}), DegenerateConfiguration);
}

TEST(SmallCircle, EquatorsMeetAtThePoles) {
  FieldArithmetic ctx(fields::f1());
  auto z = ctx.from_rational(0), o = ctx.from_rational(1);
  auto out = small_circle_intersection(ctx, Vec3<FieldElement>{o, z, z}, Vec3<FieldElement>{z, o, z}, Rational(0), {});
  ASSERT_EQ(out.size(), 2U);
  EXPECT_EQ(out[0], (Vec3<FieldElement>{z, z, o}));
  EXPECT_EQ(out[1], (Vec3<FieldElement>{z, z, -o}));
}

TEST(SmallCircle, NoRealSolutionsIsEmpty) {
  FloatArithmetic ctx;
  // two circles of angular radius ~ 8 degrees around centres 90 degrees apart
  auto out = small_circle_intersection(ctx, Vec3<double>{1, 0, 0}, Vec3<double>{0, 1, 0}, Rational(99, 100), {});
  EXPECT_TRUE(out.empty());
}

TEST(SmallCircle, FailsLoudlyOutsideTheField) {
  FieldArithmetic ctx(fields::f1());
  auto z = ctx.from_rational(0), o = ctx.from_rational(1);
  // gamma^2 = 7/9 and sqrt(7) is not in F1
  EXPECT_THROW(small_circle_intersection(ctx, Vec3<FieldElement>{o, z, z}, Vec3<FieldElement>{z, o, z}, Rational(1, 3), {}),
               NotInField);
}

TEST(SmallCircle, ExactOutputsSatisfyBothPlanesAndTheSphere) {
  FieldArithmetic ctx(fields::f1());
  auto icosi = build_icosidodecahedron(ctx);
  FieldElement phi(fields::f1(), Rational(1, 2), 0, Rational(1, 2), 0);
  FieldElement target = (phi - ctx.from_rational(1)) / Rational(2);
  GeometryConfig cfg;
  int pairs = 0;
  for (std::size_t i = 0; i < 30; ++i)
    for (std::size_t j = i + 1; j < 30; ++j) {
      if (!spherical_distance_is(icosi.points[i], icosi.points[j], target, cfg)) continue;
      ++pairs;
      auto out = small_circle_intersection(ctx, icosi.points[i], icosi.points[j], Rational(-1, 2), cfg);
      ASSERT_EQ(out.size(), 2U);
      for (const auto& x : out) {
        EXPECT_EQ(dot(x, icosi.points[i]), ctx.from_rational(Rational(-1, 2)));
        EXPECT_EQ(dot(x, icosi.points[j]), ctx.from_rational(Rational(-1, 2)));
        EXPECT_EQ(dot(x, x), ctx.from_rational(1));
      }
    }
  EXPECT_EQ(pairs, 60);
}

TEST(Dedup, ExactDuplicates) {
  FieldArithmetic ctx(fields::f1());
  auto z = ctx.from_rational(0), o = ctx.from_rational(1);
  std::vector<Vec3<FieldElement>> raw{{z, z, o}, {o, z, z}, {z, z, o}};
  auto r = dedup_points(raw, GeometryConfig{});
  ASSERT_EQ(r.points.size(), 2U);
  EXPECT_EQ(r.index_of, (std::vector<std::size_t>{0, 1, 0}));
  EXPECT_TRUE(dedup_points(std::vector<Vec3<FieldElement>>{}, GeometryConfig{}).points.empty());
}

TEST(Dedup, ApproximateMergesTransitivelyAndKeepsFirst) {
  GeometryConfig cfg;
  std::vector<Vec3<double>> raw{{0, 0, 1}, {1, 0, 0}, {0, 0, 1 + 0.6e-7}, {0, 0, 1 + 1.2e-7}, {1, 0, 0}};
  auto r = dedup_points(raw, cfg);
  ASSERT_EQ(r.points.size(), 2U);
  EXPECT_EQ(r.points[0][2], 1.0);
  EXPECT_EQ(r.index_of, (std::vector<std::size_t>{0, 1, 0, 0, 1}));
}

TEST(Dedup, NearMissesProduceDiagnostics) {
  GeometryConfig cfg;
  std::vector<Vec3<double>> raw{{0, 0, 1}, {0, 0, 1 + 5e-7}};
  auto r = dedup_points(raw, cfg);
  EXPECT_EQ(r.points.size(), 2U);
  ASSERT_EQ(r.diagnostics.size(), 1U);
  EXPECT_NE(r.diagnostics[0].find("within 10*epsilon"), std::string::npos);
  EXPECT_GT(dist(r.points[0], r.points[1]), cfg.epsilon);
}

TEST(Config, RejectsBadEpsilon) {
  GeometryConfig cfg;
  cfg.epsilon = 0;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg.epsilon = -1;
  EXPECT_THROW(cfg.validate(), DomainError);
}
