#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "pascube/extbinom.hpp"
#include "pascube/pyramid.hpp"

using namespace pascube;

namespace {

BigCount pow3(unsigned long e) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, e);
  return out;
}

}  // namespace

TEST(BuildLayer, Apex) {
  const LayerGrid layer = build_layer(1);
  ASSERT_EQ(layer.rows().size(), 1u);
  EXPECT_EQ(layer.entry(0, 0), 1);
}

TEST(BuildLayer, ThirdLayer) {
  const LayerGrid layer = build_layer(3);
  const std::vector<std::vector<BigCount>> expected{{1}, {2, 2}, {1, 2, 1}};
  EXPECT_EQ(layer.rows(), expected);
}

TEST(BuildLayer, FifthLayerEntry) {
  EXPECT_EQ(build_layer(5).entry(2, 1), 12);
}

TEST(BuildLayer, RejectsNonPositive) {
  EXPECT_THROW(build_layer(0), std::invalid_argument);
  EXPECT_THROW(build_layer(-3), std::invalid_argument);
  EXPECT_THROW(layer_to_cube(0), std::invalid_argument);
}

TEST(BuildLayer, EntryBoundsChecked) {
  const LayerGrid layer = build_layer(4);
  EXPECT_THROW(layer.entry(4, 0), std::out_of_range);
  EXPECT_THROW(layer.entry(2, 3), std::out_of_range);
}

TEST(LayerGrid, RejectsRaggedRows) {
  EXPECT_THROW(LayerGrid(2, {{1}, {2}}), std::invalid_argument);
  EXPECT_THROW(LayerGrid(3, {{1}, {2, 2}}), std::invalid_argument);
}

TEST(CoeffAtCube, Examples) {
  EXPECT_EQ(coeff_at_cube({0, 0, 0}), 1);
  EXPECT_EQ(coeff_at_cube({1, 1, 1}), 6);
  EXPECT_EQ(coeff_at_cube({2, 0, 0}), 1);
  for (const auto route : {Route::recurrence, Route::closed, Route::convolution})
    EXPECT_EQ(coeff_at_cube({1, 1, 1}, route), 6);
}

TEST(LayerToCube, Examples) {
  EXPECT_EQ(layer_to_cube(1).at({0, 0}), (CubeCoord{0, 0, 0}));

  const CubeCoord c = layer_to_cube(3).at({2, 1});
  EXPECT_EQ(c, (CubeCoord{1, 1, 0}));
  EXPECT_EQ(coeff_at_cube(c), build_layer(3).entry(2, 1));
  EXPECT_EQ(coeff_at_cube(c), 2);

  std::set<CubeCoord> image;
  for (const auto& [pos, coord] : layer_to_cube(4)) image.insert(coord);
  std::set<CubeCoord> diagonal;
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; x + y <= 3; ++y) diagonal.insert({x, y, 3 - x - y});
  EXPECT_EQ(diagonal.size(), 10u);
  EXPECT_EQ(image, diagonal);
}

TEST(LayerSum, Examples) {
  EXPECT_EQ(layer_sum(1), 1);
  EXPECT_EQ(layer_sum(4), 27);
  EXPECT_EQ(layer_sum(10), 19683);
}

TEST(PyramidProperties, StaibMatchesCubeAndSumsToPowerOfThree) {
  for (int n = 1; n <= 25; ++n) {
    const LayerGrid layer = build_layer(n);
    ASSERT_EQ(layer.sum(), pow3(static_cast<unsigned long>(n - 1))) << n;
    const auto mapping = layer_to_cube(n);
    ASSERT_EQ(mapping.size(), static_cast<std::size_t>(n * (n + 1) / 2));
    std::set<CubeCoord> image;
    for (const auto& [pos, coord] : mapping) {
      ASSERT_EQ(coeff_at_cube(coord), layer.entry(pos.r, pos.k)) << n;
      ASSERT_EQ(coeff_at_cube(coord, Route::closed), layer.entry(pos.r, pos.k)) << n;
      image.insert(coord);
    }
    ASSERT_EQ(image.size(), mapping.size()) << "layer_to_cube not injective at n=" << n;
  }
}

TEST(PyramidProperties, ThreeWaySymmetry) {
  // Entry (r, k) has trinomial parts (k, n-1-r, r-k); any permutation of the
  // parts must name an entry with the same value.
  for (int n = 1; n <= 25; ++n) {
    const LayerGrid layer = build_layer(n);
    for (int r = 0; r < n; ++r) {
      for (int k = 0; k <= r; ++k) {
        std::array<std::int64_t, 3> parts{k, n - 1 - r, r - k};
        std::sort(parts.begin(), parts.end());
        do {
          // parts = (k', n-1-r', r'-k')
          const std::int64_t r2 = n - 1 - parts[1];
          const std::int64_t k2 = parts[0];
          ASSERT_EQ(layer.entry(r2, k2), layer.entry(r, k)) << n << ' ' << r << ' ' << k;
        } while (std::next_permutation(parts.begin(), parts.end()));
      }
    }
  }
}
