#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "kpspan/geometry.hpp"
#include "kpspan/point_io.hpp"
#include "test_support.hpp"

using namespace kpspan;
using kpspan::testing::make_points;

TEST(BoundingBox, SinglePointIsDegenerate) {
  const auto pts = make_points({{0, 0}});
  const BoundingBox box = bounding_box(pts);
  EXPECT_EQ(box.lo, (std::vector<double>{0, 0}));
  EXPECT_EQ(box.hi, (std::vector<double>{0, 0}));
}

TEST(BoundingBox, CoordinateWiseMinMax) {
  const auto pts = make_points({{0, 0}, {1, 2}, {-1, 1}});
  const BoundingBox box = bounding_box(pts);
  EXPECT_EQ(box.lo, (std::vector<double>{-1, 0}));
  EXPECT_EQ(box.hi, (std::vector<double>{1, 2}));
}

TEST(BoundingBox, NearDegenerateKeptExactly) {
  const auto pts = make_points({{3, 3}, {3, 3 + 1e-9}});
  const BoundingBox box = bounding_box(pts);
  EXPECT_EQ(box.lo, (std::vector<double>{3, 3}));
  EXPECT_EQ(box.hi, (std::vector<double>{3, 3 + 1e-9}));
}

TEST(BoundingBox, EmptyInputThrows) {
  std::vector<Point> none;
  try {
    bounding_box(none);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_STREQ(e.what(), "empty point set");
  }
}

TEST(BoundingBox, RandomSetsAreTight) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 1 + trial % 4;
    std::vector<std::vector<double>> coords(1 + trial % 17, std::vector<double>(d));
    for (auto& p : coords)
      for (double& x : p) x = u(rng);
    const auto pts = make_points(coords);
    const BoundingBox box = bounding_box(pts);
    for (const Point& p : pts) EXPECT_TRUE(box.contains(p));
    for (std::size_t i = 0; i < d; ++i) {
      bool lo_hit = false, hi_hit = false;
      for (const Point& p : pts) {
        lo_hit |= p.coords[i] == box.lo[i];
        hi_hit |= p.coords[i] == box.hi[i];
      }
      EXPECT_TRUE(lo_hit && hi_hit);
    }
  }
}

TEST(LMax, Examples) {
  EXPECT_EQ(l_max({{0, 0}, {0, 0}}), 0.0);
  EXPECT_EQ(l_max({{-1, 0}, {1, 2}}), 2.0);
  EXPECT_EQ(l_max({{0, 0, 0}, {1, 5, 2}}), 5.0);
}

TEST(CenterDistance, Examples) {
  const BoundingBox a{{0, 0}, {1, 1}};
  const BoundingBox b{{9, 9}, {10, 10}};
  EXPECT_EQ(center_distance(a, a), 0.0);
  EXPECT_NEAR(center_distance(a, b), 9.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(center_distance(a, b), 12.727922, 1e-6);
  EXPECT_EQ(center_distance({{0, 0}, {0, 0}}, {{3, 4}, {3, 4}}), 5.0);
}

TEST(CenterDistance, DimensionMismatchThrows) {
  EXPECT_THROW(center_distance({{0}, {1}}, {{0, 0}, {1, 1}}), InputError);
}

TEST(CenterDistance, SymmetricAndTriangle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3, 3);
  auto box = [&] {
    BoundingBox b{{u(rng), u(rng)}, {0, 0}};
    b.hi = {b.lo[0] + std::abs(u(rng)), b.lo[1] + std::abs(u(rng))};
    return b;
  };
  for (int i = 0; i < 200; ++i) {
    const BoundingBox a = box(), b = box(), c = box();
    EXPECT_EQ(center_distance(a, b), center_distance(b, a));
    EXPECT_LE(center_distance(a, c), (center_distance(a, b) + center_distance(b, c)) * (1 + 1e-12));
  }
}

TEST(Distance, Metric) {
  const Point a{{1, 2, 3}, 0}, b{{4, 6, 3}, 1};
  EXPECT_EQ(distance(a, b), 5.0);
  EXPECT_EQ(distance(b, a), 5.0);
  EXPECT_EQ(distance(a, a), 0.0);
}

TEST(ColoredPointSet, Validation) {
  EXPECT_THROW(ColoredPointSet({}, {}), InputError);
  EXPECT_THROW(ColoredPointSet({{0, 0}, {1}}, {1, 2}), InputError);
  EXPECT_THROW(ColoredPointSet({{0, 0}, {0, 0}}, {1, 2}), InputError);
  EXPECT_THROW(ColoredPointSet({{0, 0}, {1, 0}}, {1, 3}), InputError);  // class 2 empty
  EXPECT_THROW(ColoredPointSet({{0, 0}, {1, 0}}, {0, 1}), InputError);
  EXPECT_THROW(ColoredPointSet({{0, std::nan("")}}, {1}), InputError);
  EXPECT_THROW(ColoredPointSet({{std::numeric_limits<double>::infinity()}}, {1}), InputError);
  EXPECT_THROW(ColoredPointSet({{}}, {1}), InputError);

  const ColoredPointSet ok({{0, 0}, {1, 0}, {0, 1}}, {2, 1, 2});
  EXPECT_EQ(ok.size(), 3u);
  EXPECT_EQ(ok.dim(), 2u);
  EXPECT_EQ(ok.num_colors(), 2);
  EXPECT_EQ(ok[2].index, 2u);
}

TEST(PointIo, CsvRoundTripIsBitExact) {
  const ColoredPointSet pts = kpspan::testing::random_set(60, 3, 3, 9);
  std::stringstream buf;
  write_points_csv(buf, pts);
  const ColoredPointSet back = read_points_csv(buf);
  ASSERT_EQ(back.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_EQ(back[i].coords, pts[i].coords);
    EXPECT_EQ(back.color_of(i), pts.color_of(i));
  }
}

TEST(PointIo, JsonRoundTripIsBitExact) {
  const ColoredPointSet pts = kpspan::testing::random_set(40, 4, 2, 5);
  std::stringstream buf;
  write_points_json(buf, pts);
  const ColoredPointSet back = read_points_json(buf);
  ASSERT_EQ(back.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_EQ(back[i].coords, pts[i].coords);
    EXPECT_EQ(back.color_of(i), pts.color_of(i));
  }
}

TEST(PointIo, CsvSkipsCommentsAndBlankLines) {
  std::istringstream in("# header\n\n1,0,0\n2,1.5,-2\n");
  const ColoredPointSet pts = read_points_csv(in);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[1].coords, (std::vector<double>{1.5, -2}));
}

TEST(PointIo, MalformedInputs) {
  std::istringstream empty("");
  EXPECT_THROW(read_points_csv(empty), InputError);
  std::istringstream bad_number("1,0,abc\n");
  EXPECT_THROW(read_points_csv(bad_number), InputError);
  std::istringstream bad_json("{\"d\": 2, \"points\": [");
  EXPECT_THROW(read_points_json(bad_json), InputError);
  std::istringstream wrong_d(R"({"d": 3, "k": 1, "points": [{"color": 1, "coords": [0, 0]}]})");
  EXPECT_THROW(read_points_json(wrong_d), InputError);
}

TEST(PointIo, FormatDoubleShortest) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(2.0), "2");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(parse_double(format_double(x)), x);
}
