#include "gkm/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gkm {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
  }
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Monomial Monomial::variable(std::size_t varCount, std::size_t index) {
  if (index >= varCount) throw std::invalid_argument("variable index out of range");
  std::vector<int> e(varCount, 0);
  e[index] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::without(std::size_t index) const {
  Monomial m = *this;
  m.degree_ -= m.exponents_[index];
  m.exponents_[index] = 0;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.varCount() != b.varCount()) throw std::invalid_argument("variable-count mismatch");
  Monomial m = a;
  for (std::size_t i = 0; i < m.exponents_.size(); ++i) m.exponents_[i] += b.exponents_[i];
  m.degree_ += b.degree_;
  return m;
}

std::string Monomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 't' + std::to_string(i + 1);
    if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                      a.exponents().begin(), a.exponents().end());
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t varCount, const Rational& c) {
  Polynomial p(varCount);
  p.addTerm(Monomial::one(varCount), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t varCount, std::size_t index) {
  return monomial(Monomial::variable(varCount, index));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.varCount());
  p.addTerm(m, c);
  return p;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();  // grlex puts the highest degree first
}

bool Polynomial::isHomogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

bool Polynomial::isHomogeneous() const {
  return terms_.empty() || isHomogeneous(terms_.begin()->first.degree());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

void Polynomial::addTerm(const Monomial& m, const Rational& c) {
  if (m.varCount() != varCount_) throw std::invalid_argument("variable-count mismatch");
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

void Polynomial::requireSameRing(const Polynomial& o) const {
  if (varCount_ != o.varCount_) {
    throw std::invalid_argument("variable-count mismatch: " + std::to_string(varCount_) + " vs " +
                                std::to_string(o.varCount_));
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  requireSameRing(o);
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  requireSameRing(o);
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.requireSameRing(b);
  Polynomial out(a.varCount_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.addTerm(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  Polynomial result = constant(varCount_, Rational(1));
  for (int i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    std::string body;
    if (m.degree() == 0) {
      body = magnitude.str();
    } else if (magnitude == Rational(1)) {
      body = m.str();
    } else {
      body = magnitude.str() + "*" + m.str();
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

LinearForm::LinearForm(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw std::invalid_argument("linear form needs at least one variable");
  if (std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational& c) { return c.isZero(); })) {
    throw std::invalid_argument("linear form must be nonzero");
  }
}

LinearForm LinearForm::fromPolynomial(const Polynomial& p) {
  if (p.isZero() || !p.isHomogeneous(1)) {
    throw std::invalid_argument("'" + p.str() + "' is not a nonzero degree-one form");
  }
  std::vector<Rational> c(p.varCount());
  for (std::size_t i = 0; i < p.varCount(); ++i) c[i] = p.coefficient(Monomial::variable(p.varCount(), i));
  return LinearForm(std::move(c));
}

LinearForm LinearForm::variable(std::size_t varCount, std::size_t index) {
  std::vector<Rational> c(varCount);
  c.at(index) = Rational(1);
  return LinearForm(std::move(c));
}

std::size_t LinearForm::pivot() const {
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    if (!coefficients_[i].isZero()) return i;
  }
  return 0;  // unreachable: the form is nonzero
}

Polynomial LinearForm::toPolynomial() const {
  Polynomial p(coefficients_.size());
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    p.addTerm(Monomial::variable(coefficients_.size(), i), coefficients_[i]);
  }
  return p;
}

Rational LinearForm::evaluate(std::span<const Rational> point) const {
  if (point.size() != coefficients_.size()) throw std::invalid_argument("dimension mismatch in pairing");
  Rational sum;
  for (std::size_t i = 0; i < point.size(); ++i) sum += coefficients_[i] * point[i];
  return sum;
}

bool LinearForm::isProportionalTo(const LinearForm& o) const {
  if (o.varCount() != varCount()) return false;
  // all 2x2 minors vanish
  const std::size_t p = pivot();
  for (std::size_t i = 0; i < varCount(); ++i) {
    if (coefficients_[i] * o.coefficients_[p] != coefficients_[p] * o.coefficients_[i]) return false;
  }
  return true;
}

LinearForm operator-(const LinearForm& a) {
  std::vector<Rational> c = a.coefficients_;
  for (auto& x : c) x = -x;
  return LinearForm(std::move(c));
}

// ---------------------------------------------------------------------------

namespace {

// Solved expression for the pivot variable on alpha = 0.
Polynomial pivotSubstitution(const LinearForm& alpha) {
  const std::size_t k = alpha.varCount();
  const std::size_t p = alpha.pivot();
  Polynomial s(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (i == p || alpha[i].isZero()) continue;
    s.addTerm(Monomial::variable(k, i), -alpha[i] / alpha[p]);
  }
  return s;
}

}  // namespace

Polynomial restrictToHyperplane(const Polynomial& f, const LinearForm& alpha) {
  if (f.varCount() != alpha.varCount()) throw std::invalid_argument("variable-count mismatch");
  const std::size_t p = alpha.pivot();
  const Polynomial s = pivotSubstitution(alpha);
  std::vector<Polynomial> powers{Polynomial::constant(f.varCount(), Rational(1))};
  Polynomial out(f.varCount());
  for (const auto& [m, c] : f.terms()) {
    const int e = m[p];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * s);
    out += Polynomial::monomial(m.without(p), c) * powers[e];
  }
  return out;
}

bool dividesLinear(const LinearForm& alpha, const Polynomial& f) {
  return restrictToHyperplane(f, alpha).isZero();
}

namespace {

void fillBasis(std::size_t k, std::size_t var, int remaining, std::vector<int>& current,
               std::vector<Monomial>& out) {
  if (var + 1 == k) {
    current[var] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = e;
    fillBasis(k, var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomialBasis(std::size_t k, int d) {
  if (k == 0) throw std::invalid_argument("monomial basis needs k >= 1");
  std::vector<Monomial> out;
  if (d < 0) return out;
  out.reserve(monomialCount(k, d));
  std::vector<int> current(k, 0);
  fillBasis(k, 0, d, current, out);
  return out;
}

std::size_t monomialCount(std::size_t k, int d) {
  if (d < 0 || k == 0) return 0;
  // C(d+k-1, k-1), computed incrementally so intermediates stay exact
  std::size_t result = 1;
  for (std::size_t i = 1; i < k; ++i) result = result * (static_cast<std::size_t>(d) + i) / i;
  return result;
}

Rational evalAtZero(const Polynomial& f) {
  if (f.varCount() == 0) return f.isZero() ? Rational() : f.terms().begin()->second;
  return f.coefficient(Monomial::one(f.varCount()));
}

// ---------------------------------------------------------------------------

HyperplaneRestriction::HyperplaneRestriction(const LinearForm& alpha, int degree)
    : alpha_(alpha), degree_(degree) {
  const std::size_t k = alpha.varCount();
  const std::size_t p = alpha.pivot();
  const auto basis = monomialBasis(k, degree);
  for (const auto& m : basis) {
    if (m[p] == 0) {
      targetIndex_.emplace(m, targets_.size());
      targets_.push_back(m);
    }
  }
  images_.reserve(basis.size());
  for (const auto& m : basis) {
    const Polynomial r = restrictToHyperplane(Polynomial::monomial(m), alpha);
    std::vector<std::pair<std::size_t, Rational>> row;
    row.reserve(r.termCount());
    for (const auto& [tm, c] : r.terms()) row.emplace_back(targetIndex_.at(tm), c);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    images_.push_back(std::move(row));
  }
}

std::vector<Rational> HyperplaneRestriction::restrictCoordinates(const Polynomial& f) const {
  std::vector<Rational> out(targets_.size());
  if (!f.isHomogeneous(degree_)) throw std::invalid_argument("restriction expects a homogeneous polynomial");
  const Polynomial r = restrictToHyperplane(f, alpha_);
  for (const auto& [m, c] : r.terms()) out[targetIndex_.at(m)] = c;
  return out;
}

}  // namespace gkm
