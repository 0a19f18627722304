#include "fano/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "fano/errors.hpp"

namespace fano {

Monomial::Monomial(Var v, std::uint32_t exponent) {
  if (exponent > 0) {
    factors_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
    m.degree_ += e;
  }
  return m;
}

std::uint32_t Monomial::exponent(Var v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, Var x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  for (const auto& [v, e] : other.factors_) {
    while (a != factors_.end() && a->first < v) out.factors_.push_back(*a++);
    if (a == factors_.end() || a->first != v || a->second < e) return std::nullopt;
    if (a->second > e) out.factors_.emplace_back(v, a->second - e);
    ++a;
  }
  while (a != factors_.end()) out.factors_.push_back(*a++);
  out.degree_ = degree_ - other.degree_;
  return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first != fb[j].first) return fa[i].first < fb[j].first;  // a has the earlier variable
    if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
    ++i;
    ++j;
  }
  return i < fa.size() && j == fb.size();
}

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial(), constant);
}

Polynomial::Polynomial(Var v) { terms_.emplace(Monomial(v), Rational(1)); }

Polynomial::Polynomial(const Monomial& m, const Rational& coefficient) {
  if (!coefficient.is_zero()) terms_.emplace(m, coefficient);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidInput, "leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidInput, "leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

std::vector<Var> Polynomial::variables() const {
  std::vector<Var> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag.is_one();
    if (!unit || m.is_one()) os << mag;
    bool need_star = !unit;
    for (const auto& [v, e] : m.factors()) {
      if (need_star) os << "*";
      os << v.name();
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

Polynomial scale(const Polynomial& p, const Rational& s) { return p * s; }

Polynomial derivative(const Polynomial& p, Var v) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const auto e = m.exponent(v);
    if (e == 0) continue;
    std::vector<Monomial::Factor> f(m.factors().begin(), m.factors().end());
    for (auto& [w, k] : f)
      if (w == v) k -= 1;
    out.add_term(Monomial::from_factors(std::move(f)), c * Rational(static_cast<long>(e)));
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& images) {
  // powers[v][k] = images[v]^k, filled lazily
  std::map<Var, std::vector<Polynomial>> powers;
  auto power = [&](Var v, std::uint32_t k) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= k) cache.push_back(cache.back() * images.at(v));
    return cache[k];
  };
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> kept;
    std::vector<std::pair<Var, std::uint32_t>> replaced;
    for (const auto& f : m.factors()) {
      if (images.count(f.first))
        replaced.push_back(f);
      else
        kept.push_back(f);
    }
    Polynomial term(Monomial::from_factors(std::move(kept)), c);
    for (const auto& [v, e] : replaced) term = term * power(v, e);
    out += term;
  }
  return out;
}

std::optional<Polynomial> exact_division(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "exact division by the zero polynomial");
  Polynomial remainder = p;
  Polynomial quotient;
  const Monomial& lm = q.leading_monomial();
  const Rational& lc = q.leading_coefficient();
  // If q | p then every leading term of the running remainder is divisible by
  // LT(q); a non-divisible leading term proves q does not divide p.
  while (!remainder.is_zero()) {
    auto m = remainder.leading_monomial().divide(lm);
    if (!m) return std::nullopt;
    Polynomial t(*m, remainder.leading_coefficient() / lc);
    remainder -= t * q;
    quotient += t;
  }
  return quotient;
}

bool divides(const Polynomial& q, const Polynomial& p) { return exact_division(p, q).has_value(); }

}  // namespace fano
