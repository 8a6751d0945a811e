#include "siegel/theta.hpp"

#include <cmath>

#include "siegel/errors.hpp"

namespace siegel {

ThetaChar::ThetaChar(std::vector<int> eps, std::vector<int> delta) : eps_(std::move(eps)), delta_(std::move(delta)) {
  if (eps_.size() != delta_.size() || eps_.empty()) throw Error("ThetaChar: eps and delta must have equal positive length");
  for (int v : eps_)
    if (v != 0 && v != 1) throw Error("ThetaChar: entries must be 0 or 1");
  for (int v : delta_)
    if (v != 0 && v != 1) throw Error("ThetaChar: entries must be 0 or 1");
}

bool ThetaChar::is_even() const noexcept {
  int s = 0;
  for (std::size_t i = 0; i < eps_.size(); ++i) s += eps_[i] * delta_[i];
  return s % 2 == 0;
}

std::string ThetaChar::to_string() const {
  std::string out;
  for (int v : eps_) out += static_cast<char>('0' + v);
  out += ',';
  for (int v : delta_) out += static_cast<char>('0' + v);
  return out;
}

ThetaChar ThetaChar::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == text.npos) throw ParseError("characteristic '" + std::string(text) + "' lacks ','");
  auto digits = [&](std::string_view s) {
    std::vector<int> v;
    for (char ch : s) {
      if (ch != '0' && ch != '1') throw ParseError("characteristic '" + std::string(text) + "' has a non-binary digit");
      v.push_back(ch - '0');
    }
    return v;
  };
  return ThetaChar(digits(text.substr(0, comma)), digits(text.substr(comma + 1)));
}

std::vector<ThetaChar> all_chars(int g) {
  if (g < 1 || g > 8) throw Error("all_chars: genus out of range");
  std::vector<ThetaChar> out;
  for (int e = 0; e < (1 << g); ++e) {
    for (int d = 0; d < (1 << g); ++d) {
      std::vector<int> ev(static_cast<std::size_t>(g)), dv(static_cast<std::size_t>(g));
      for (int i = 0; i < g; ++i) {
        ev[static_cast<std::size_t>(i)] = (e >> (g - 1 - i)) & 1;
        dv[static_cast<std::size_t>(i)] = (d >> (g - 1 - i)) & 1;
      }
      out.emplace_back(std::move(ev), std::move(dv));
    }
  }
  return out;
}

std::vector<ThetaChar> even_chars(int g) {
  std::vector<ThetaChar> out;
  for (auto& c : all_chars(g))
    if (c.is_even()) out.push_back(std::move(c));
  return out;
}

std::vector<ThetaChar> odd_chars(int g) {
  std::vector<ThetaChar> out;
  for (auto& c : all_chars(g))
    if (!c.is_even()) out.push_back(std::move(c));
  return out;
}

namespace {

// Values of 2n + eps with (2n + eps)^2 <= trunc.
std::vector<int> shifted_range(int eps, int trunc) {
  std::vector<int> out;
  const int bound = static_cast<int>(std::sqrt(static_cast<double>(trunc))) + 1;
  for (int v = -bound; v <= bound; ++v) {
    if (((v - eps) % 2 + 2) % 2 == 0 && v * v <= trunc) out.push_back(v);
  }
  return out;
}

// Phase exp(pi i (n.delta + eps.delta / 2)) for an even characteristic, with n_i = (m_i - eps_i)/2.
int phase(const std::vector<int>& m, const ThetaChar& c) {
  int s = 0, ed = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += ((m[i] - c.eps()[i]) / 2) * c.delta()[i];
    ed += c.eps()[i] * c.delta()[i];
  }
  if (ed % 2) throw Error("phase: odd characteristic has a non-real phase");
  s += ed / 2;
  return (s % 2 + 2) % 2 ? -1 : 1;
}

}  // namespace

QExp1 theta_qexp1(const ThetaChar& c, int trunc) {
  if (c.genus() != 1) throw Error("theta_qexp1: genus-1 characteristic required");
  QExp1 f(BigRational(1, 2), trunc, 8);
  if (!c.is_even()) return f;
  for (int m : shifted_range(c.eps()[0], trunc)) f.add_term(m * m, BigRational(phase({m}, c)));
  return f;
}

QExp2 theta_qexp2(const ThetaChar& c, int trunc) {
  if (c.genus() != 2) throw Error("theta_qexp2: genus-2 characteristic required");
  QExp2 f(BigRational(1, 2), trunc);
  if (!c.is_even()) return f;
  for (int m1 : shifted_range(c.eps()[0], trunc)) {
    for (int m2 : shifted_range(c.eps()[1], trunc - m1 * m1)) {
      f.add_term({m1 * m1, 2 * m1 * m2, m2 * m2}, BigRational(phase({m1, m2}, c)));
    }
  }
  return f;
}

QExp2 tnull_qexp(int trunc) {
  std::vector<QExp2> factors;
  for (const auto& c : even_chars(2)) factors.push_back(theta_qexp2(c, trunc));
  QExp2 t = product_tree(std::move(factors));
  t.set_character(true);
  return t;
}

QExp2 theta8_sum_qexp2(int trunc) {
  QExp2 sum(BigRational(4), trunc);
  for (const auto& c : even_chars(2)) sum += theta_qexp2(c, trunc).pow(8);
  return sum;
}

QExp2 schottky_qexp2(int trunc, bool drop_square_factor) {
  QExp2 s16(BigRational(8), trunc), s8(BigRational(4), trunc);
  for (const auto& c : even_chars(2)) {
    const QExp2 t8 = theta_qexp2(c, trunc).pow(8);
    s8 += t8;
    s16 += t8 * t8;
  }
  const BigRational second = drop_square_factor ? BigRational(-1) : BigRational(-1, 16);
  return s16.scaled(BigRational(1, 4)) + (s8 * s8).scaled(second);
}

QExp1 schottky_qexp1(int trunc, bool drop_square_factor) {
  QExp1 s16(BigRational(8), trunc, 8), s8(BigRational(4), trunc, 8);
  for (const auto& c : even_chars(1)) {
    const QExp1 t8 = theta_qexp1(c, trunc).pow(8);
    s8 += t8;
    s16 += t8 * t8;
  }
  const BigRational second = drop_square_factor ? BigRational(-1) : BigRational(-1, 4);
  return s16.scaled(BigRational(1, 2)) + (s8 * s8).scaled(second);
}

}  // namespace siegel
