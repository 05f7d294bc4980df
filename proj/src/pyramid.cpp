#include "pascube/pyramid.hpp"

#include <stdexcept>
#include <string>

#include "pascube/extbinom.hpp"

namespace pascube {

namespace {

void require_layer(std::int64_t n) {
  if (n < 1)
    throw std::invalid_argument("layer number must be >= 1, got " + std::to_string(n));
}

}  // namespace

LayerGrid::LayerGrid(std::int64_t layer_number,
                     std::vector<std::vector<BigCount>> rows)
    : n_(layer_number), rows_(std::move(rows)) {
  require_layer(n_);
  if (static_cast<std::int64_t>(rows_.size()) != n_)
    throw std::invalid_argument("layer " + std::to_string(n_) + " needs " +
                                std::to_string(n_) + " rows");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != r + 1)
      throw std::invalid_argument("row " + std::to_string(r) + " must have " +
                                  std::to_string(r + 1) + " entries");
  }
}

const BigCount& LayerGrid::entry(std::int64_t r, std::int64_t k) const {
  if (r < 0 || r >= n_ || k < 0 || k > r)
    throw std::out_of_range("layer position (" + std::to_string(r) + ", " +
                            std::to_string(k) + ") outside layer " +
                            std::to_string(n_));
  return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
}

BigCount LayerGrid::sum() const {
  BigCount total{0};
  for (const auto& row : rows_)
    for (const auto& v : row) total += v;
  return total;
}

LayerGrid build_layer(std::int64_t n) {
  require_layer(n);
  std::vector<std::vector<BigCount>> rows(static_cast<std::size_t>(n));
  for (std::int64_t r = 0; r < n; ++r) {
    const BigCount scale = binomial(n - 1, r);
    auto& row = rows[static_cast<std::size_t>(r)];
    row.reserve(static_cast<std::size_t>(r + 1));
    for (std::int64_t k = 0; k <= r; ++k) row.push_back(scale * binomial(r, k));
  }
  return LayerGrid(n, std::move(rows));
}

BigCount coeff_at_cube(const CubeCoord& coord, Route route) {
  if (coord.x < 0 || coord.y < 0 || coord.z < 0) return BigCount{0};
  const CoeffIndex idx{coord.x + coord.y, coord.y, coord.z};
  // The convolution route has no layer below the base triangle.
  if (route == Route::convolution && idx.c == 0) return ext_binom_closed(idx);
  return ext_binom(idx, route);
}

CubeCoord layer_position_to_cube(std::int64_t n, const LayerPos& pos) {
  return {pos.r - pos.k, pos.k, n - 1 - pos.r};
}

std::map<LayerPos, CubeCoord> layer_to_cube(std::int64_t n) {
  require_layer(n);
  std::map<LayerPos, CubeCoord> out;
  for (std::int64_t r = 0; r < n; ++r)
    for (std::int64_t k = 0; k <= r; ++k)
      out.emplace(LayerPos{r, k}, layer_position_to_cube(n, {r, k}));
  return out;
}

BigCount layer_sum(std::int64_t n) { return build_layer(n).sum(); }

}  // namespace pascube
