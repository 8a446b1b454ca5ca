#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "soergel/field.hpp"

namespace soergel {

// Monomials in up to 6 variables, packed into a uint64 key:
// bits 48..63 hold the total exponent degree, below that 8 bits per variable
// with variable 0 highest.  Comparing keys numerically is graded lex.
using Mono = uint64_t;
constexpr int kMaxVars = 6;

inline Mono mono_one() { return 0; }
inline int mono_total(Mono m) { return (int)(m >> 48); }
inline int mono_exp(Mono m, int v) { return (int)((m >> (8 * (kMaxVars - 1 - v))) & 0xff); }
inline Mono mono_var(int v) { return (uint64_t(1) << 48) | (uint64_t(1) << (8 * (kMaxVars - 1 - v))); }
inline Mono mono_mul(Mono a, Mono b) { return a + b; }
Mono mono_from_exps(const std::vector<int>& e);
std::string mono_to_string(Mono m, const std::vector<std::string>& var_names);

// Multivariate polynomial over the base field.  Terms are kept sorted with
// the leading (graded-lex largest) monomial first; zero coefficients never
// appear.  The *graded* degree of a variable is 2, so a homogeneous
// polynomial of graded degree d has total exponent d/2 in every term.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial zero() { return {}; }
  static Polynomial term(Mono m, FieldElem c);
  static Polynomial constant(FieldElem c) { return term(mono_one(), std::move(c)); }

  bool is_zero() const { return t_.empty(); }
  size_t n_terms() const { return t_.size(); }
  const std::vector<std::pair<Mono, FieldElem>>& terms() const { return t_; }

  // graded degree of the leading term (-1 for the zero polynomial)
  int graded_degree() const { return t_.empty() ? -1 : 2 * mono_total(t_.front().first); }
  bool is_homogeneous() const;
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == mono_one()); }
  FieldElem coeff(Mono m, const NumberField* f) const;
  FieldElem constant_term(const NumberField* f) const { return coeff(mono_one(), f); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial scaled(const FieldElem& c) const;
  Polynomial mul_mono(Mono m) const;
  Polynomial homogeneous_part(int graded_deg) const;

  // substitute variable v by an arbitrary polynomial (used by the W-action)
  // all variables substituted simultaneously: y_i -> images[i]
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  // exact division by a linear form (graded degree 2); throws
  // InternalDivisionFailure if not divisible
  Polynomial divide_by_linear(const Polynomial& ell) const;

  FieldElem eval(const std::vector<FieldElem>& point, const NumberField* f) const;

  std::string to_string(const std::vector<std::string>& var_names) const;

  // builder: accumulate then normalize
  static Polynomial from_map(std::map<Mono, FieldElem, std::greater<Mono>>&& acc);

 private:
  std::vector<std::pair<Mono, FieldElem>> t_;
};

// Shared ring context: number of variables, their print names, the field,
// and a memoized monomial enumerator.
class PolyRing {
 public:
  PolyRing(int nvars, FieldPtr field, std::vector<std::string> var_names);

  int nvars() const { return nvars_; }
  const NumberField* field() const { return field_.get(); }
  FieldPtr field_ptr() const { return field_; }
  const std::vector<std::string>& var_names() const { return var_names_; }

  Polynomial var(int v) const;
  Polynomial constant(const FieldElem& c) const { return Polynomial::constant(c); }
  Polynomial constant(long n) const { return Polynomial::constant(field()->integer(n)); }

  // all exponent-monomials of total exponent d (graded degree 2d)
  const std::vector<Mono>& monomials_of_exp(int d) const;
  int slice_dim(int graded_degree) const;  // dim of R_d (0 if odd/negative)

  Polynomial random(std::mt19937_64& rng, int max_exp, bool homogeneous) const;

 private:
  int nvars_;
  FieldPtr field_;
  std::vector<std::string> var_names_;
  mutable std::mutex mu_;
  mutable std::vector<std::vector<Mono>> mono_cache_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

}  // namespace soergel
