#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

/// Exponent vector t1^e1 ... tk^ek.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(std::size_t varCount) { return Monomial(std::vector<int>(varCount, 0)); }
  static Monomial variable(std::size_t varCount, std::size_t index);

  [[nodiscard]] std::size_t varCount() const { return exponents_.size(); }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] int operator[](std::size_t i) const { return exponents_[i]; }
  [[nodiscard]] const std::vector<int>& exponents() const { return exponents_; }

  /// Same monomial with the exponent of `index` set to zero.
  [[nodiscard]] Monomial without(std::size_t index) const;

  /// Throws std::invalid_argument on variable-count mismatch.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  /// `t1^2*t3`; "1" for the unit monomial.
  [[nodiscard]] std::string str() const;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

/// Graded lexicographic order, t1 > t2 > ... > tk. `operator()` is "a before b",
/// i.e. a is the larger monomial, so maps iterate from the leading term down.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over Q in a fixed number of variables. Never stores zero terms.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexDescending>;

  Polynomial() = default;
  explicit Polynomial(std::size_t varCount) : varCount_(varCount) {}
  static Polynomial constant(std::size_t varCount, const Rational& c);
  static Polynomial variable(std::size_t varCount, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c = Rational(1));

  [[nodiscard]] std::size_t varCount() const { return varCount_; }
  [[nodiscard]] bool isZero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t termCount() const { return terms_.size(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }

  /// Total degree; std::nullopt stands for the degree of the zero polynomial.
  [[nodiscard]] std::optional<int> degree() const;
  /// True for zero, or when every term has total degree d.
  [[nodiscard]] bool isHomogeneous(int d) const;
  [[nodiscard]] bool isHomogeneous() const;

  /// Coefficient of m (zero when absent).
  [[nodiscard]] Rational coefficient(const Monomial& m) const;

  /// Adds c*m in place.
  void addTerm(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  [[nodiscard]] Polynomial pow(int e) const;

  /// Text in the interchange syntax, terms in grlex order: `3/2*t1^2*t2 - t3`.
  [[nodiscard]] std::string str() const;

 private:
  void requireSameRing(const Polynomial& o) const;

  std::size_t varCount_ = 0;
  Terms terms_;
};

/// Nonzero homogeneous degree-one form c1*t1 + ... + ck*tk.
class LinearForm {
 public:
  /// Throws std::invalid_argument when every coefficient is zero or the list is empty.
  explicit LinearForm(std::vector<Rational> coefficients);
  /// Throws std::invalid_argument unless p is a nonzero homogeneous degree-one polynomial.
  static LinearForm fromPolynomial(const Polynomial& p);
  /// t_i (0-based index) in k variables.
  static LinearForm variable(std::size_t varCount, std::size_t index);

  [[nodiscard]] std::size_t varCount() const { return coefficients_.size(); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coefficients_; }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return coefficients_[i]; }

  /// Largest index with a nonzero coefficient; the variable eliminated by restriction.
  [[nodiscard]] std::size_t pivot() const;

  [[nodiscard]] Polynomial toPolynomial() const;
  /// Pairing with a vector of the dual space.
  [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;
  /// Proportional over Q (same line in the dual).
  [[nodiscard]] bool isProportionalTo(const LinearForm& o) const;

  friend LinearForm operator-(const LinearForm& a);
  friend bool operator==(const LinearForm& a, const LinearForm& b) = default;

  [[nodiscard]] std::string str() const { return toPolynomial().str(); }

 private:
  std::vector<Rational> coefficients_;
};

/// Restriction of f to the hyperplane alpha = 0: the pivot variable of alpha is
/// replaced by its solved expression. Zero exactly when alpha divides f.
Polynomial restrictToHyperplane(const Polynomial& f, const LinearForm& alpha);

/// alpha | f in Q[t1..tk].
bool dividesLinear(const LinearForm& alpha, const Polynomial& f);

/// All monomials of total degree d in k variables, grlex descending.
std::vector<Monomial> monomialBasis(std::size_t k, int d);

/// Number of monomials of degree d in k variables, C(d+k-1, k-1); 0 for d < 0.
std::size_t monomialCount(std::size_t k, int d);

/// Constant term (the image in S/M).
Rational evalAtZero(const Polynomial& f);

/// Precomputed restriction of every degree-d monomial to a hyperplane, as sparse
/// rows over the restricted degree-d monomials. Used to assemble linear systems.
class HyperplaneRestriction {
 public:
  HyperplaneRestriction(const LinearForm& alpha, int degree);

  /// Number of degree-d monomials that survive restriction (pivot exponent zero).
  [[nodiscard]] std::size_t targetCount() const { return targets_.size(); }
  /// Image of the i-th monomial of monomialBasis(k, d) as (target index, coefficient) pairs.
  [[nodiscard]] const std::vector<std::pair<std::size_t, Rational>>& image(std::size_t i) const {
    return images_[i];
  }
  /// Coordinates of restrict(f) in the target basis; f must be homogeneous of this degree.
  [[nodiscard]] std::vector<Rational> restrictCoordinates(const Polynomial& f) const;

 private:
  std::vector<Monomial> targets_;
  std::map<Monomial, std::size_t, GrlexDescending> targetIndex_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> images_;
  LinearForm alpha_;
  int degree_;
};

}  // namespace gkm
