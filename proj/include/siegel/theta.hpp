#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "siegel/qexp.hpp"

namespace siegel {

/// Characteristic (eps, delta) in {0,1}^g x {0,1}^g.
class ThetaChar {
 public:
  ThetaChar() = default;
  ThetaChar(std::vector<int> eps, std::vector<int> delta);

  int genus() const noexcept { return static_cast<int>(eps_.size()); }
  const std::vector<int>& eps() const noexcept { return eps_; }
  const std::vector<int>& delta() const noexcept { return delta_; }
  /// <eps, delta> mod 2 == 0.
  bool is_even() const noexcept;

  /// "e1e2,d1d2", e.g. "11,10".
  std::string to_string() const;
  static ThetaChar parse(std::string_view text);

  friend auto operator<=>(const ThetaChar&, const ThetaChar&) = default;

 private:
  std::vector<int> eps_, delta_;
};

/// All 4^g characteristics, eps-major in binary order.
std::vector<ThetaChar> all_chars(int g);
std::vector<ThetaChar> even_chars(int g);
std::vector<ThetaChar> odd_chars(int g);

/// Theta constant at z = 0 as an exact expansion (scale 8, weight 1/2).
/// Odd characteristics give the zero expansion.
QExp1 theta_qexp1(const ThetaChar& c, int trunc);
QExp2 theta_qexp2(const ThetaChar& c, int trunc);

/// Product of the ten even genus-2 theta constants; weight 5, character set.
QExp2 tnull_qexp(int trunc);

/// (1/2^g) sum theta^16 - (1/2^{2g}) (sum theta^8)^2 over even characteristics.
/// With `drop_square_factor` the second coefficient is replaced by -1.
QExp2 schottky_qexp2(int trunc, bool drop_square_factor = false);
QExp1 schottky_qexp1(int trunc, bool drop_square_factor = false);

/// Sum of theta^8 over the even genus-2 characteristics (weight 4).
QExp2 theta8_sum_qexp2(int trunc);

}  // namespace siegel
