#include "conetutte/poly.hpp"

#include <algorithm>
#include <limits>

namespace conetutte {

namespace checked {

Coeff add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Coeff sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Coeff mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Coeff neg(Coeff a) { return sub(0, a); }

}  // namespace checked

std::string to_string(Coeff c) {
  if (c == 0) return "0";
  // Work in the negative range so the minimum value needs no special case.
  bool negative = c < 0;
  Coeff v = negative ? c : -c;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Coeff parse_coeff(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw ParseError("malformed integer '" + std::string(text) + "'");
  Coeff v = 0;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch < '0' || ch > '9') throw ParseError("malformed integer '" + std::string(text) + "'");
    v = checked::sub(checked::mul(v, 10), ch - '0');
  }
  return negative ? v : checked::neg(v);
}

std::int64_t to_int64(Coeff c) {
  if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("coefficient " + to_string(c) + " does not fit in 64 bits");
  return static_cast<std::int64_t>(c);
}

// ---------------------------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<Coeff> ascending) : coeffs_(std::move(ascending)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<Coeff> ascending) : coeffs_(ascending) {
  normalize();
}

IntPolynomial IntPolynomial::constant(Coeff c) { return IntPolynomial(std::vector<Coeff>{c}); }

IntPolynomial IntPolynomial::monomial(std::size_t k, Coeff c) {
  std::vector<Coeff> v(k + 1, 0);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = checked::neg(c);
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = checked::add(coeffs_[i], rhs.coeffs_[i]);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = checked::sub(coeffs_[i], rhs.coeffs_[i]);
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r[i + j] = checked::add(r[i + j], checked::mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b) {
  if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i] ? std::strong_ordering::less
                                                                          : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Coeff> r(k, 0);
  r.insert(r.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::scaled(Coeff c) const {
  std::vector<Coeff> r(coeffs_);
  for (auto& x : r) x = checked::mul(x, c);
  return IntPolynomial(std::move(r));
}

Coeff IntPolynomial::eval_at(Coeff t) const {
  Coeff acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = checked::add(checked::mul(acc, t), coeffs_[i]);
  return acc;
}

bool IntPolynomial::has_negative_coefficient() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c < 0; });
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Coeff c = coeffs_[i];
    if (c == 0) continue;
    bool negative = c < 0;
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    std::string mag = conetutte::to_string(negative ? checked::neg(c) : c);
    if (i == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") out += mag;
    out += 'y';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

std::string IntPolynomial::to_json() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += conetutte::to_string(coeffs_[i]);
  }
  return out + "]";
}

std::vector<std::int64_t> IntPolynomial::to_int64_vector() const {
  std::vector<std::int64_t> r;
  r.reserve(coeffs_.size());
  for (Coeff c : coeffs_) r.push_back(to_int64(c));
  return r;
}

bool coeffwise_leq(const IntPolynomial& p, const IntPolynomial& q) {
  return !(q - p).has_negative_coefficient();
}

IntPolynomial exact_div(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (dividend.is_zero()) return {};
  if (dividend.degree() < divisor.degree())
    throw DivisionError("non-exact division: " + dividend.to_string() + " by " + divisor.to_string());

  std::vector<Coeff> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  const auto d = divisor.coeffs();
  const Coeff lead = d.back();
  const std::size_t qdeg = rem.size() - d.size();
  std::vector<Coeff> quot(qdeg + 1, 0);
  for (std::size_t k = qdeg + 1; k-- > 0;) {
    Coeff top = rem[k + d.size() - 1];
    if (top % lead != 0)
      throw DivisionError("non-exact division: " + dividend.to_string() + " by " + divisor.to_string());
    Coeff qk = top / lead;
    quot[k] = qk;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] = checked::sub(rem[k + j], checked::mul(qk, d[j]));
  }
  if (std::any_of(rem.begin(), rem.end(), [](Coeff c) { return c != 0; }))
    throw DivisionError("non-exact division: " + dividend.to_string() + " by " + divisor.to_string());
  return IntPolynomial(std::move(quot));
}

// ---------------------------------------------------------------------------

void BivarPolynomial::add_term(int x_exp, int y_exp, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({x_exp, y_exp}, c);
  if (inserted) return;
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Coeff BivarPolynomial::coeff(int x_exp, int y_exp) const {
  auto it = terms_.find({x_exp, y_exp});
  return it == terms_.end() ? 0 : it->second;
}

BivarPolynomial& BivarPolynomial::operator+=(const BivarPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivarPolynomial operator*(const BivarPolynomial& a, const BivarPolynomial& b) {
  BivarPolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, checked::mul(ca, cb));
  return r;
}

IntPolynomial BivarPolynomial::at_x(Coeff value) const {
  std::vector<Coeff> acc;
  for (const auto& [e, c] : terms_) {
    Coeff xv = 1;
    for (int i = 0; i < e.first; ++i) xv = checked::mul(xv, value);
    auto k = static_cast<std::size_t>(e.second);
    if (acc.size() <= k) acc.resize(k + 1, 0);
    acc[k] = checked::add(acc[k], checked::mul(c, xv));
  }
  return IntPolynomial(std::move(acc));
}

Coeff BivarPolynomial::eval(Coeff x, Coeff y) const { return at_x(x).eval_at(y); }

std::string BivarPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [xe, ye] = it->first;
    Coeff c = it->second;
    bool negative = c < 0;
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    std::string mag = conetutte::to_string(negative ? checked::neg(c) : c);
    if (xe == 0 && ye == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") out += mag;
    if (xe > 0) out += xe == 1 ? "x" : "x^" + std::to_string(xe);
    if (ye > 0) out += ye == 1 ? "y" : "y^" + std::to_string(ye);
  }
  return out;
}

}  // namespace conetutte
