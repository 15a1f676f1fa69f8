#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wps/errors.hpp"

namespace wps {

/// Number of rational points of P^r(F_q): q^r + ... + q + 1, and 0 for r < 0.
inline std::uint64_t projective_count(std::uint64_t q, int r) {
  if (r < 0) return 0;
  std::uint64_t total = 0, power = 1;
  for (int i = 0; i <= r; ++i, power *= q) total += power;
  return total;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

inline long double ipow_ld(long double base, unsigned exp) {
  long double out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

inline long gcd_of(std::span<const int> values) {
  long g = 0;
  for (int v : values) g = std::gcd(g, static_cast<long>(v));
  return g;
}

inline long lcm_of(std::span<const int> values) {
  long l = 1;
  for (int v : values) l = std::lcm(l, static_cast<long>(v));
  return l;
}

/// The weights (a_0, ..., a_m) of a weighted projective space. All weights are
/// positive and jointly coprime.
class WeightSystem {
 public:
  explicit WeightSystem(std::vector<int> weights) : weights_(std::move(weights)) {
    if (weights_.empty())
      throw InvalidArgument("weight system needs at least one weight");
    for (int a : weights_)
      if (a < 1) throw InvalidArgument("weights must be positive integers");
    if (gcd_of(weights_) != 1)
      throw InvalidArgument("weights (" + to_string() +
                            ") are not jointly coprime");
  }

  /// All-ones weights of P^m.
  static WeightSystem classical(int m) {
    return WeightSystem(std::vector<int>(static_cast<std::size_t>(m + 1), 1));
  }

  /// Parses a comma separated list such as "1,2,3".
  static WeightSystem parse(std::string_view text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string item(text.substr(start, end - start));
      item.erase(0, item.find_first_not_of(' '));
      item.erase(item.find_last_not_of(' ') + 1);
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos ||
          item.size() > 6)
        throw InvalidArgument("malformed weight list '" + std::string(text) + "'");
      out.push_back(std::stoi(item));
      start = end + 1;
    }
    return WeightSystem(std::move(out));
  }

  const std::vector<int>& weights() const { return weights_; }
  int operator[](std::size_t i) const { return weights_[i]; }
  std::size_t size() const { return weights_.size(); }
  /// Dimension m of P(a_0, ..., a_m).
  int dim() const { return static_cast<int>(weights_.size()) - 1; }
  long lcm() const { return lcm_of(weights_); }
  bool is_classical() const {
    for (int a : weights_)
      if (a != 1) return false;
    return true;
  }
  /// True when the characteristic p divides some weight; results computed in
  /// that configuration are reported with a flag.
  bool char_divides_weight(std::uint32_t p) const {
    for (int a : weights_)
      if (a % static_cast<long>(p) == 0) return true;
    return false;
  }

  std::string to_string(char sep = ',') const {
    std::string out;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (i) out += sep;
      out += std::to_string(weights_[i]);
    }
    return out;
  }

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::vector<int> weights_;
};

}  // namespace wps
