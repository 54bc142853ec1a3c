#include "coalloc/tabular_game.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "coalloc/errors.hpp"

#include <json.hpp>

namespace coalloc {

namespace {

double max_abs(const std::vector<double>& values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

TabularGame::TabularGame(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n < 1) {
    throw std::invalid_argument("TabularGame: player count must be >= 1, got " +
                                std::to_string(n));
  }
  if (n > kMaxPlayers) {
    throw GuardViolation("TabularGame: enumeration guard n <= " +
                         std::to_string(kMaxPlayers) + " violated (n=" +
                         std::to_string(n) + ")");
  }
  const std::size_t expected = std::size_t{1} << n;
  if (values_.size() != expected) {
    throw std::invalid_argument("TabularGame: expected " + std::to_string(expected) +
                                " values for n=" + std::to_string(n) + ", got " +
                                std::to_string(values_.size()));
  }
  if (values_[0] != 0.0) {
    throw std::invalid_argument("TabularGame: value of the empty coalition must be 0");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("TabularGame: non-finite coalition value");
    }
  }
  scale_ = 1.0 + max_abs(values_);
}

TabularGame TabularGame::linear_combination(double a, const TabularGame& lhs, double b,
                                            const TabularGame& rhs) {
  if (lhs.n() != rhs.n()) {
    throw std::invalid_argument("linear_combination: player counts differ");
  }
  std::vector<double> out(lhs.values_.size());
  for (std::size_t m = 0; m < out.size(); ++m) {
    out[m] = a * lhs.values_[m] + b * rhs.values_[m];
  }
  return TabularGame(lhs.n(), std::move(out));
}

TabularGame additive_game(const std::vector<double>& singleton_values) {
  const int n = static_cast<int>(singleton_values.size());
  if (n < 1 || n > TabularGame::kMaxPlayers) {
    throw std::invalid_argument("additive_game: need between 1 and 24 singleton values");
  }
  std::vector<double> values(std::size_t{1} << n, 0.0);
  for (CoalitionBits mask = 1; mask < values.size(); ++mask) {
    values[mask] = values[mask & (mask - 1)] +
                   singleton_values[static_cast<std::size_t>(std::countr_zero(mask))];
  }
  return TabularGame(n, std::move(values));
}

std::string tabular_game_to_json(const TabularGame& game) {
  nlohmann::ordered_json doc;
  doc["n"] = game.n();
  doc["values"] = game.values();
  return doc.dump();
}

TabularGame tabular_game_from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("values")) {
    throw std::invalid_argument("tabular_game_from_json: expected {\"n\":..., \"values\":[...]}");
  }
  const int n = doc.at("n").get<int>();
  auto values = doc.at("values").get<std::vector<double>>();
  return TabularGame(n, std::move(values));
}

}  // namespace coalloc
