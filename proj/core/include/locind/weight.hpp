#ifndef LOCIND_WEIGHT_HPP
#define LOCIND_WEIGHT_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace locind {

/// Integer weight: a character of a torus (one coordinate per torus factor),
/// or the highest weight of an SL2 K-type.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<int> c) : coords(c) {}

  std::size_t rank() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  bool is_zero() const;

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;
};

std::string to_string(const Weight& w);

}  // namespace locind

#endif  // LOCIND_WEIGHT_HPP
