#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "pascube/types.hpp"

namespace pascube {

/// Cartesian position on the Pascal's cube; carries C(x+y, y; z).
struct CubeCoord {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  friend auto operator<=>(const CubeCoord&, const CubeCoord&) = default;
};

/// Position inside a pyramid layer: row r, column k, 0 <= k <= r.
struct LayerPos {
  std::int64_t r = 0;
  std::int64_t k = 0;

  friend auto operator<=>(const LayerPos&, const LayerPos&) = default;
};

/// One layer of Pascal's pyramid. Layers are numbered from 1 (the apex); the
/// n-th layer is a triangle of n rows holding the trinomial coefficients of
/// order n-1.
class LayerGrid {
 public:
  LayerGrid(std::int64_t layer_number, std::vector<std::vector<BigCount>> rows);

  std::int64_t layer_number() const { return n_; }
  const std::vector<std::vector<BigCount>>& rows() const { return rows_; }
  const BigCount& entry(std::int64_t r, std::int64_t k) const;
  BigCount sum() const;

  friend bool operator==(const LayerGrid&, const LayerGrid&) = default;

 private:
  std::int64_t n_;
  std::vector<std::vector<BigCount>> rows_;
};

/// Staib's construction: row r of the layer is row r of Pascal's triangle
/// scaled by C(n-1, r). Throws std::invalid_argument for n < 1.
LayerGrid build_layer(std::int64_t n);

BigCount coeff_at_cube(const CubeCoord& coord, Route route = Route::recurrence);

/// Places layer n on the cube anti-diagonal x + y + z = n - 1 via
/// (r, k) -> (r - k, k, n - 1 - r).
CubeCoord layer_position_to_cube(std::int64_t n, const LayerPos& pos);
std::map<LayerPos, CubeCoord> layer_to_cube(std::int64_t n);

BigCount layer_sum(std::int64_t n);

}  // namespace pascube
