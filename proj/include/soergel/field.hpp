#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "soergel/common.hpp"

namespace soergel {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// An element of Q[th]/(p(th)), stored as a coefficient vector of length
// deg(p) over the rationals.  Elements carry a non-owning pointer to their
// field; the field object outlives every element (it is held by the
// session context).
class FieldElem {
 public:
  FieldElem() : fld_(nullptr) {}
  FieldElem(const NumberField* fld, std::vector<mpq_class> c);

  const NumberField* field() const { return fld_; }
  bool is_zero() const;
  bool is_rational() const;
  const mpq_class& rat_part() const { return c_[0]; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  FieldElem operator-() const;
  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  bool operator==(const FieldElem& o) const { return cmp(o) == 0; }
  bool operator!=(const FieldElem& o) const { return cmp(o) != 0; }
  bool operator<(const FieldElem& o) const { return cmp(o) < 0; }  // key order, not embedding order

  FieldElem inverse() const;
  // Sign under the designated real embedding: -1, 0 or +1.  Exact.
  int sign() const;
  double approx() const;
  std::string to_string() const;  // canonical, e.g. "1/2+3/4*th"

 private:
  int cmp(const FieldElem& o) const;  // lexicographic on coefficients
  const NumberField* fld_;
  std::vector<mpq_class> c_;
  friend class NumberField;
};

// The exact base field: either the rationals or a simple real extension
// Q[th]/(p) with a designated isolating interval for the chosen real root.
// Bond cosines cos(pi/m) are registered as field elements and validated
// exactly (Chebyshev identity + separation of the largest root).
class NumberField {
 public:
  static FieldPtr rationals();
  // minpoly in ascending coefficient order; must be squarefree and pass the
  // small-degree irreducibility checks.  If no interval is given the largest
  // real root is isolated with a Sturm chain.
  static FieldPtr make(std::vector<mpq_class> minpoly,
                       std::optional<std::pair<mpq_class, mpq_class>> interval = std::nullopt);

  int degree() const { return degree_; }
  bool is_rationals() const { return degree_ == 1; }
  std::pair<mpq_class, mpq_class> interval() const { return {lo_, hi_}; }
  const std::vector<mpq_class>& minpoly() const { return minpoly_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem rational(const mpq_class& q) const;
  FieldElem integer(long n) const { return rational(mpq_class(n)); }
  FieldElem theta() const;
  FieldElem from_coeffs(std::vector<mpq_class> c) const;

  // Registers cos(pi/m).  Throws BadInput unless the element satisfies
  // T_m(x) = -1 exactly and is the largest root of that equation.
  void register_cos(int m, const FieldElem& value) const;
  bool has_cos(int m) const;
  FieldElem cos_pi_over(int m) const;  // throws FieldMissingConstant

  // Tiny expression parser for field elements: integers, "th"/"theta"/UTF-8
  // theta, + - * / ^ and parentheses.
  FieldElem parse(const std::string& expr) const;

  std::string describe() const;

  static const NumberField* rationals_helper();

 private:
  NumberField() = default;
  void check_irreducible() const;
  void isolate_largest_root();
  // refines [lo,hi] once by bisection
  void refine(mpq_class& lo, mpq_class& hi) const;
  int sign_at(const std::vector<mpq_class>& poly, const mpq_class& x) const;

  int degree_ = 1;
  std::vector<mpq_class> minpoly_;              // ascending, monic (degree_ entries + leading 1)
  std::vector<std::vector<mpq_class>> redtab_;  // th^k for k in [degree_, 2*degree_-2]
  mpq_class lo_, hi_;                           // isolating interval for th
  mutable std::map<int, FieldElem> cos_;        // bond label -> cos(pi/m)

  friend class FieldElem;
};

// Small dense exact linear algebra over a field, used for the graded
// slice solves and for specialization ranks.
using FVec = std::vector<FieldElem>;
using FMat = std::vector<FVec>;

FMat fmat_identity(const NumberField* f, int n);
FMat fmat_mul(const FMat& a, const FMat& b);
FVec fmat_apply(const FMat& a, const FVec& v);
bool fmat_equal(const FMat& a, const FMat& b);
FMat fmat_inverse(const FMat& a);  // throws SingularPairing if singular
int fmat_rank(FMat a);
// Solves a*x = b; returns nullopt if inconsistent; if underdetermined returns
// one solution with free variables set to zero.
std::optional<FVec> fmat_solve(FMat a, FVec b);
// Basis of the right nullspace of a.
std::vector<FVec> fmat_nullspace(FMat a);

}  // namespace soergel
