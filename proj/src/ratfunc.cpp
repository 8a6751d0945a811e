#include "siegel/ratfunc.hpp"

#include <cctype>

#include "siegel/errors.hpp"

namespace siegel {

namespace {

std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(BigRational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::a() { return UPoly(std::vector<BigRational>{BigRational(0), BigRational(1)}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BigRational UPoly::coeff(int e) const {
  if (e < 0 || e >= static_cast<int>(c_.size())) return BigRational(0);
  return c_[static_cast<std::size_t>(e)];
}

const BigRational& UPoly::leading() const {
  if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
  return c_.back();
}

BigRational UPoly::eval(const BigRational& a0) const {
  BigRational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= a0;
    acc += *it;
  }
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& x, const UPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<BigRational> out(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) out[i + j] += x.c_[i] * y.c_[j];
  }
  return UPoly(std::move(out));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly UPoly::scaled(const BigRational& s) const {
  if (s.is_zero()) return {};
  UPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.degree() < den.degree()) return {UPoly(), num};
  std::vector<BigRational> rem = num.c_;
  std::vector<BigRational> quo(num.c_.size() - den.c_.size() + 1);
  const BigRational inv_lead = den.leading().inverse();
  for (int k = num.degree() - den.degree(); k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + den.degree());
    if (rem[top].is_zero()) continue;
    BigRational q = rem[top] * inv_lead;
    for (std::size_t j = 0; j < den.c_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * den.c_[j];
    quo[static_cast<std::size_t>(k)] = std::move(q);
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return scaled(leading().inverse());
}

UPoly UPoly::gcd(UPoly x, UPoly y) {
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string UPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int e = degree(); e >= 0; --e) {
    const auto& c = c_[static_cast<std::size_t>(e)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c.to_string();
    if (e >= 1) out += "*a^" + std::to_string(e);
  }
  return out;
}

UPoly UPoly::parse(std::string_view text) {
  text = trim_ws(text);
  if (text.empty()) throw ParseError("empty polynomial");
  UPoly out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find(" + ", pos);
    const auto piece = trim_ws(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
    const auto star = piece.find("*a^");
    int e = 0;
    BigRational c;
    if (star == std::string_view::npos) {
      c = BigRational::parse(piece);
    } else {
      c = BigRational::parse(piece.substr(0, star));
      const auto exp_text = piece.substr(star + 3);
      if (exp_text.empty()) throw ParseError("missing exponent in '" + std::string(piece) + "'");
      for (char ch : exp_text) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad exponent in '" + std::string(piece) + "'");
      }
      e = std::stoi(std::string(exp_text));
    }
    std::vector<BigRational> mono(static_cast<std::size_t>(e) + 1);
    mono[static_cast<std::size_t>(e)] = c;
    out += UPoly(std::move(mono));
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  return out;
}

std::size_t UPoly::hash() const noexcept {
  std::size_t h = c_.size();
  for (const auto& c : c_) h = h * 1000003u ^ c.hash();
  return h;
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(BigRational c) : num_(std::move(c)), den_(BigRational(1)) {}

RatFunc::RatFunc(UPoly p) : num_(std::move(p)), den_(BigRational(1)) {}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(BigRational(1));
    return;
  }
  if (!den_.is_constant()) {
    UPoly g = UPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = UPoly::divmod(num_, g).first;
      den_ = UPoly::divmod(den_, g).first;
    }
  }
  const BigRational lead = den_.leading();
  if (!lead.is_one()) {
    const BigRational inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

BigRational RatFunc::eval_at(const BigRational& a0) const {
  const BigRational d = den_.eval(a0);
  if (d.is_zero()) throw PoleError(a0.to_string());
  return num_.eval(a0) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc acc(1);
  for (int i = 0; i < e; ++i) acc *= *this;
  return acc;
}

std::string RatFunc::to_string() const { return num_.to_string() + " ; " + den_.to_string(); }

RatFunc RatFunc::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) return RatFunc(UPoly::parse(text));
  return RatFunc(UPoly::parse(text.substr(0, semi)), UPoly::parse(text.substr(semi + 1)));
}

}  // namespace siegel
