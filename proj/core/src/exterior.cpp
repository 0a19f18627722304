#include "fano/exterior.hpp"

#include <bit>
#include <sstream>

namespace fano {
namespace {

using Mask = std::uint32_t;

int popcount(Mask m) { return std::popcount(m); }

// Sign of e_a ^ e_b for disjoint masks: (-1)^(#pairs i in a, j in b, i > j).
int wedge_sign(Mask a, Mask b) {
  int inversions = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += popcount(a & ~((Mask{1} << (j + 1)) - 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

// i_{e_k}(e_mask) = sign * e_{mask without k}; sign = (-1)^(#bits of mask below k).
int insertion_sign(Mask mask, int k) {
  return (popcount(mask & ((Mask{1} << k) - 1)) % 2 == 0) ? 1 : -1;
}

void require_same_context(const ChartPtr& a, const ChartPtr& b) {
  if (a != b) throw Error(ErrorCode::ContextMismatch, "operands live on different charts");
}

Polynomial denominator_power(const ChartContext& ctx, int e) {
  return e <= 0 ? Polynomial(1) : ctx.denominator().pow(static_cast<unsigned>(e));
}

Mask full_mask(const ChartContext& ctx) { return (Mask{1} << ctx.dimension()) - 1; }

}  // namespace

ChartPtr ChartContext::affine(std::vector<Var> coordinates) {
  if (coordinates.empty() || coordinates.size() > 4)
    throw Error(ErrorCode::InvalidInput, "affine chart needs 1..4 coordinates");
  auto ctx = std::shared_ptr<ChartContext>(new ChartContext());
  ctx->coordinates_ = coordinates;
  ctx->basis_ = std::move(coordinates);
  return ctx;
}

ChartPtr ChartContext::hypersurface(std::vector<Var> coordinates, Polynomial relation, int volume_sign) {
  if (coordinates.size() != 4)
    throw Error(ErrorCode::InvalidInput, "hypersurface chart needs exactly 4 coordinates");
  if (volume_sign != 1 && volume_sign != -1)
    throw Error(ErrorCode::InvalidInput, "volume sign must be +1 or -1");
  auto ctx = std::shared_ptr<ChartContext>(new ChartContext());
  ctx->coordinates_ = coordinates;
  ctx->basis_.assign(coordinates.begin(), coordinates.begin() + 3);
  ctx->dependent_ = coordinates[3];
  for (Var v : coordinates) ctx->relation_gradient_.push_back(derivative(relation, v));
  ctx->denominator_ = ctx->relation_gradient_[3];
  if (ctx->denominator_.is_zero())
    throw Error(ErrorCode::ChartDegenerate, "derivative of the relation in the dependent coordinate vanishes");
  ctx->relation_ = std::move(relation);
  ctx->volume_sign_ = volume_sign;
  return ctx;
}

std::vector<Polynomial> ChartContext::scaled_gradient(const Polynomial& p) const {
  std::vector<Polynomial> out;
  out.reserve(basis_.size());
  if (!dependent_) {
    for (Var v : basis_) out.push_back(derivative(p, v));
    return out;
  }
  const Polynomial dp_dep = derivative(p, *dependent_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    out.push_back(denominator_ * derivative(p, basis_[i]) - relation_gradient_[i] * dp_dep);
  return out;
}

std::optional<int> ChartContext::basis_index(Var v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == v) return static_cast<int>(i);
  return std::nullopt;
}

template <class Kind>
Graded<Kind>::Graded(ChartPtr context, int degree, int denominator_exponent)
    : context_(std::move(context)), degree_(degree), exponent_(denominator_exponent) {
  if (!context_) throw Error(ErrorCode::InvalidInput, "null chart context");
  if (degree < 0 || degree > context_->dimension())
    throw Error(ErrorCode::DegreeOverflow, "degree exceeds chart dimension");
  if (exponent_ < 0) throw Error(ErrorCode::InvalidInput, "negative denominator exponent");
  if (exponent_ > 0 && !context_->has_relation())
    throw Error(ErrorCode::InvalidInput, "denominators only exist on hypersurface charts");
}

template <class Kind>
Graded<Kind> Graded<Kind>::scalar(ChartPtr context, Polynomial value, int denominator_exponent) {
  Graded g(std::move(context), 0, denominator_exponent);
  g.add(0, value);
  return g;
}

template <class Kind>
Graded<Kind> Graded<Kind>::monomial(ChartPtr context, std::vector<int> positions, Polynomial coefficient) {
  Graded g(std::move(context), static_cast<int>(positions.size()));
  int sign = 1;
  for (std::size_t i = 0; i < positions.size(); ++i)
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      if (positions[i] == positions[j]) return g;
      if (positions[i] > positions[j]) sign = -sign;
    }
  Mask mask = 0;
  for (int p : positions) {
    if (p < 0 || p >= g.context_->dimension()) throw Error(ErrorCode::InvalidInput, "basis position out of range");
    mask |= Mask{1} << p;
  }
  g.add(mask, sign == 1 ? coefficient : -coefficient);
  return g;
}

template <class Kind>
Polynomial Graded<Kind>::coefficient(Mask mask) const {
  auto it = coefficients_.find(mask);
  return it == coefficients_.end() ? Polynomial() : it->second;
}

template <class Kind>
void Graded<Kind>::add(Mask mask, const Polynomial& p) {
  if (popcount(mask) != degree_ || mask > full_mask(*context_))
    throw Error(ErrorCode::DegreeMismatch, "basis element does not match the degree");
  if (p.is_zero()) return;
  auto [it, inserted] = coefficients_.try_emplace(mask, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) coefficients_.erase(it);
  }
}

template <class Kind>
Graded<Kind> Graded<Kind>::raised_to(int exponent) const {
  if (exponent < exponent_) throw Error(ErrorCode::InvalidInput, "cannot lower a denominator exponent");
  if (exponent == exponent_) return *this;
  Graded out(context_, degree_, exponent);
  const Polynomial factor = denominator_power(*context_, exponent - exponent_);
  for (const auto& [m, c] : coefficients_) out.add(m, c * factor);
  return out;
}

template <class Kind>
Graded<Kind> Graded<Kind>::reduced() const {
  Graded current = *this;
  while (current.exponent_ > 0) {
    Graded next(context_, degree_, current.exponent_ - 1);
    for (const auto& [m, c] : current.coefficients_) {
      auto q = exact_division(c, context_->denominator());
      if (!q) return current;
      next.add(m, *q);
    }
    current = std::move(next);
  }
  return current;
}

template <class Kind>
bool Graded<Kind>::structurally_equal(const Graded& other) const {
  if (context_ != other.context_ || degree_ != other.degree_) return false;
  const int e = std::max(exponent_, other.exponent_);
  return raised_to(e).coefficients_ == other.raised_to(e).coefficients_;
}

template <class Kind>
Graded<Kind> Graded<Kind>::operator-() const {
  Graded out = *this;
  for (auto& [m, c] : out.coefficients_) c = -c;
  return out;
}

template <class Kind>
Graded<Kind>& Graded<Kind>::operator+=(const Graded& other) {
  require_same_context(context_, other.context_);
  if (degree_ != other.degree_) throw Error(ErrorCode::DegreeMismatch, "adding elements of different degree");
  const int e = std::max(exponent_, other.exponent_);
  *this = raised_to(e);
  for (const auto& [m, c] : other.raised_to(e).coefficients_) add(m, c);
  return *this;
}

template <class Kind>
Graded<Kind>& Graded<Kind>::operator-=(const Graded& other) {
  return *this += -other;
}

template <class Kind>
Graded<Kind>& Graded<Kind>::operator*=(const Polynomial& factor) {
  Coefficients next;
  for (const auto& [m, c] : coefficients_) {
    Polynomial p = c * factor;
    if (!p.is_zero()) next.emplace(m, std::move(p));
  }
  coefficients_ = std::move(next);
  return *this;
}

template <class Kind>
std::string Graded<Kind>::str() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream os;
  const char* prefix = std::is_same_v<Kind, FormKind> ? "d" : "D";
  bool first = true;
  for (const auto& [m, c] : coefficients_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (const auto& name : mask_names(*context_, m)) os << (m ? "*" : "") << prefix << name;
  }
  if (exponent_ > 0) os << " / (" << context_->denominator().str() << ")^" << exponent_;
  return os.str();
}

template class Graded<FormKind>;
template class Graded<MultivectorKind>;

std::vector<std::string> mask_names(const ChartContext& context, std::uint32_t mask) {
  std::vector<std::string> out;
  for (int i = 0; i < context.dimension(); ++i)
    if (mask & (Mask{1} << i)) out.emplace_back(context.basis()[i].name());
  return out;
}

ChartForm volume_form(const ChartPtr& context) {
  ChartForm vol(context, context->dimension(), context->has_relation() ? 1 : 0);
  vol.add(full_mask(*context), Polynomial(context->volume_sign()));
  return vol;
}

ChartForm differential(const ChartPtr& context, const Polynomial& p) {
  return exterior_derivative(ChartForm::scalar(context, p));
}

ChartForm coordinate_differential(const ChartPtr& context, Var v) {
  if (auto i = context->basis_index(v)) return ChartForm::monomial(context, {*i}, Polynomial(1));
  return differential(context, Polynomial(v));
}

ChartForm wedge(const ChartForm& a, const ChartForm& b) {
  require_same_context(a.context(), b.context());
  const auto& ctx = a.context();
  if (a.degree() + b.degree() > ctx->dimension())
    throw Error(ErrorCode::DegreeOverflow, "wedge degree exceeds chart dimension");
  ChartForm out(ctx, a.degree() + b.degree(), a.denominator_exponent() + b.denominator_exponent());
  for (const auto& [ma, ca] : a.coefficients())
    for (const auto& [mb, cb] : b.coefficients()) {
      if (ma & mb) continue;
      const Polynomial p = ca * cb;
      out.add(ma | mb, wedge_sign(ma, mb) == 1 ? p : -p);
    }
  return out;
}

ChartForm exterior_derivative(const ChartForm& a) {
  const auto& ctx = a.context();
  if (a.degree() >= ctx->dimension()) return ChartForm(ctx, ctx->dimension());
  const int e = a.denominator_exponent();
  // Affine: d(c) coefficientwise. Hypersurface: with G = f_4 * d,
  //   d(c / f_4^e) = (f_4 G(c) - e c G(f_4)) / f_4^(e+2).
  const bool hyper = ctx->has_relation();
  const int out_exponent = hyper ? (e == 0 ? 1 : e + 2) : 0;
  std::vector<Polynomial> grad_den;
  if (hyper && e > 0) grad_den = ctx->scaled_gradient(ctx->denominator());
  ChartForm out(ctx, a.degree() + 1, out_exponent);
  for (const auto& [m, c] : a.coefficients()) {
    const auto g = ctx->scaled_gradient(c);
    for (int i = 0; i < ctx->dimension(); ++i) {
      const Mask bit = Mask{1} << i;
      if (m & bit) continue;
      Polynomial comp = g[static_cast<std::size_t>(i)];
      if (hyper && e > 0)
        comp = ctx->denominator() * comp - Rational(e) * c * grad_den[static_cast<std::size_t>(i)];
      out.add(m | bit, wedge_sign(bit, m) == 1 ? comp : -comp);
    }
  }
  return out.reduced();
}

ChartForm contract(const ChartMultivector& a, const ChartForm& w) {
  require_same_context(a.context(), w.context());
  if (a.degree() > w.degree()) throw Error(ErrorCode::DegreeMismatch, "multivector degree exceeds form degree");
  const auto& ctx = a.context();
  ChartForm out(ctx, w.degree() - a.degree(), a.denominator_exponent() + w.denominator_exponent());
  for (const auto& [ma, ca] : a.coefficients())
    for (const auto& [mw, cw] : w.coefficients()) {
      if ((ma & mw) != ma) continue;
      int sign = 1;
      Mask rest = mw;
      for (Mask bits = ma; bits != 0; bits &= bits - 1) {
        const int k = std::countr_zero(bits);
        sign *= insertion_sign(rest, k);
        rest &= ~(Mask{1} << k);
      }
      const Polynomial p = ca * cw;
      out.add(rest, sign == 1 ? p : -p);
    }
  return out;
}

ChartForm divide_by_volume(const ChartForm& top) {
  const auto& ctx = top.context();
  if (top.degree() != ctx->dimension()) throw Error(ErrorCode::DegreeMismatch, "division by Vol needs a top form");
  const Polynomial h = top.coefficient(full_mask(*ctx)) * Rational(ctx->volume_sign());
  if (!ctx->has_relation()) return ChartForm::scalar(ctx, h);
  const int e = top.denominator_exponent();
  if (e == 0) return ChartForm::scalar(ctx, h * ctx->denominator());
  return ChartForm::scalar(ctx, h, e - 1).reduced();
}

ChartForm form_from_bivector(const ChartMultivector& a) {
  if (a.degree() != 2 || a.context()->dimension() != 3)
    throw Error(ErrorCode::DegreeMismatch, "form_from_bivector needs a bivector on a 3-dimensional chart");
  return contract(a, volume_form(a.context())).reduced();
}

ChartMultivector bivector_from_form(const ChartForm& w) {
  const auto& ctx = w.context();
  if (w.degree() != 1 || ctx->dimension() != 3)
    throw Error(ErrorCode::DegreeMismatch, "bivector_from_form needs a one-form on a 3-dimensional chart");
  const ChartForm vol = volume_form(ctx);
  const int vol_exponent = vol.denominator_exponent();
  // i_{e_P}(Vol) = s_P e_{c(P)} / f_4^v with s_P = +-1; invert termwise.
  const int e = w.denominator_exponent();
  ChartMultivector out(ctx, 2, std::max(0, e - vol_exponent));
  const Polynomial lift = denominator_power(*ctx, vol_exponent - e);
  for (const auto& [m, c] : w.coefficients()) {
    const Mask pair = full_mask(*ctx) & ~m;
    ChartMultivector unit(ctx, 2);
    unit.add(pair, Polynomial(1));
    const Polynomial s = contract(unit, vol).coefficient(m);  // +-1, the volume numerator
    out.add(pair, c * lift * s);
  }
  return out;
}

ChartMultivector schouten_vector_bivector(const ChartMultivector& v, const ChartMultivector& b) {
  require_same_context(v.context(), b.context());
  const auto& ctx = v.context();
  if (ctx->has_relation()) throw Error(ErrorCode::ContextMismatch, "vector-bivector bracket needs an affine chart");
  if (v.degree() != 1 || b.degree() != 2) throw Error(ErrorCode::DegreeMismatch, "expected a vector and a bivector");
  ChartMultivector out(ctx, 2);
  auto put = [&](int i, int j, const Polynomial& p) {
    if (i == j || p.is_zero()) return;
    const Mask m = (Mask{1} << i) | (Mask{1} << j);
    out.add(m, i < j ? p : -p);
  };
  // [a d_i, b d_j ^ d_k] = a (d_i b) d_j^d_k - b (d_j a) d_i^d_k + b (d_k a) d_i^d_j
  for (const auto& [mv, a] : v.coefficients()) {
    const int i = std::countr_zero(mv);
    const Var xi = ctx->basis()[static_cast<std::size_t>(i)];
    for (const auto& [mb, coeff] : b.coefficients()) {
      const int j = std::countr_zero(mb);
      const int k = std::countr_zero(mb & (mb - 1));
      const Var xj = ctx->basis()[static_cast<std::size_t>(j)];
      const Var xk = ctx->basis()[static_cast<std::size_t>(k)];
      put(j, k, a * derivative(coeff, xi));
      put(i, k, -(coeff * derivative(a, xj)));
      put(i, j, coeff * derivative(a, xk));
    }
  }
  return out;
}

ChartForm schouten_bivector_bivector(const ChartForm& a, const ChartForm& b) {
  require_same_context(a.context(), b.context());
  if (a.degree() != 1 || b.degree() != 1 || a.context()->dimension() != 3)
    throw Error(ErrorCode::DegreeMismatch, "expected two one-forms on a 3-dimensional chart");
  ChartForm top = wedge(a, exterior_derivative(b)) + wedge(exterior_derivative(a), b);
  return divide_by_volume(top);
}

ChartForm bondal_evaluate(const ChartMultivector& a, const ChartMultivector& b, const ChartForm& w) {
  const int n = a.degree();
  const int m = b.degree();
  if (w.degree() != n + m - 1) throw Error(ErrorCode::DegreeMismatch, "form degree must be n+m-1");
  const int s1 = (m * (n - 1)) % 2 == 0 ? 1 : -1;
  const int s2 = n % 2 == 0 ? 1 : -1;
  ChartForm out = contract(a, exterior_derivative(contract(b, w))) * Polynomial(s1);
  out += contract(b, exterior_derivative(contract(a, w))) * Polynomial(s2);
  if (w.degree() < w.context()->dimension()) out -= contract(a, contract(b, exterior_derivative(w)));
  return out.reduced();
}

ChartForm schouten_bondal_oracle(const ChartMultivector& a, const ChartMultivector& b) {
  if (a.degree() != 2 || b.degree() != 2 || a.context()->dimension() != 3)
    throw Error(ErrorCode::DegreeMismatch, "oracle expects two bivectors on a 3-dimensional chart");
  // dVol = 0, so only the first two Bondal terms contribute.
  return bondal_evaluate(a, b, volume_form(a.context()));
}

namespace {

template <class Kind>
bool equal_mod_relation_impl(const Graded<Kind>& a, const Graded<Kind>& b) {
  require_same_context(a.context(), b.context());
  if (a.degree() != b.degree()) return false;
  const auto& ctx = a.context();
  const int e = std::max(a.denominator_exponent(), b.denominator_exponent());
  const Graded<Kind> diff = a.raised_to(e) - b.raised_to(e);
  if (!ctx->has_relation()) return diff.is_zero();
  for (const auto& [m, c] : diff.coefficients())
    if (!divides(*ctx->relation(), c)) return false;
  return true;
}

}  // namespace

bool equal_mod_relation(const ChartForm& a, const ChartForm& b) { return equal_mod_relation_impl(a, b); }
bool equal_mod_relation(const ChartMultivector& a, const ChartMultivector& b) {
  return equal_mod_relation_impl(a, b);
}

}  // namespace fano
