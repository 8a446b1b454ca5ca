#include "soergel/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace soergel {

const char* err_name(Err e) {
  switch (e) {
    case Err::NonSymmetric: return "NonSymmetric";
    case Err::DiagonalNotOne: return "DiagonalNotOne";
    case Err::BondTooSmall: return "BondTooSmall";
    case Err::NotExtraLarge: return "NotExtraLarge";
    case Err::InfiniteBondUnsupported: return "InfiniteBondUnsupported";
    case Err::FieldMissingConstant: return "FieldMissingConstant";
    case Err::InternalDivisionFailure: return "InternalDivisionFailure";
    case Err::NotReduced: return "NotReduced";
    case Err::SingularPairing: return "SingularPairing";
    case Err::TruncationInsufficient: return "TruncationInsufficient";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::NotBimoduleMap: return "NotBimoduleMap";
    case Err::ZeroNormalizer: return "ZeroNormalizer";
    case Err::CoverageFailure: return "CoverageFailure";
    case Err::SelectionAmbiguous: return "SelectionAmbiguous";
    case Err::NotIdempotent: return "NotIdempotent";
    case Err::DifferentElements: return "DifferentElements";
    case Err::TriangularityViolation: return "TriangularityViolation";
    case Err::NegativeCoefficient: return "NegativeCoefficient";
    case Err::IndexNotBruhatClosed: return "IndexNotBruhatClosed";
    case Err::BadInput: return "BadInput";
  }
  return "Unknown";
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  bool onechar = true;
  for (const auto& n : names) onechar = onechar && n.size() == 1;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!onechar && i) out += ".";
    out += names.at(w[i]);
  }
  if (w.empty()) out = "e";
  return out;
}

// ---------------------------------------------------------------- FieldElem

FieldElem::FieldElem(const NumberField* fld, std::vector<mpq_class> c) : fld_(fld), c_(std::move(c)) {
  c_.resize(fld->degree());
}

bool FieldElem::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool FieldElem::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

int FieldElem::cmp(const FieldElem& o) const {
  for (size_t i = 0; i < c_.size(); ++i) {
    int c = ::cmp(c_[i], o.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

FieldElem FieldElem::operator-() const {
  FieldElem r(*this);
  for (auto& q : r.c_) q = -q;
  return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  FieldElem r(*this);
  r += o;
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  FieldElem r(*this);
  r -= o;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  const int d = fld_->degree_;
  if (d == 1) {
    FieldElem r(*this);
    r.c_[0] *= o.c_[0];
    return r;
  }
  std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<mpq_class> red(d, mpq_class(0));
  for (int k = 0; k < d; ++k) red[k] = prod[k];
  for (int k = d; k <= 2 * d - 2; ++k) {
    if (prod[k] == 0) continue;
    const auto& row = fld_->redtab_[k - d];
    for (int j = 0; j < d; ++j) red[j] += prod[k] * row[j];
  }
  return FieldElem(fld_, std::move(red));
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  *this = *this * o;
  return *this;
}

FieldElem FieldElem::inverse() const {
  require(!is_zero(), Err::BadInput, "division by zero field element");
  const int d = fld_->degree_;
  if (d == 1) {
    return FieldElem(fld_, {mpq_class(1) / c_[0]});
  }
  // Solve M_a * x = e_0 where M_a is multiplication by *this.
  FMat m(d, FVec(d));
  for (int j = 0; j < d; ++j) {
    std::vector<mpq_class> ej(d, mpq_class(0));
    ej[j] = 1;
    FieldElem col = *this * FieldElem(fld_, std::move(ej));
    for (int i = 0; i < d; ++i) m[i][j] = FieldElem(fld_->rationals_helper(), {col.c_[i]});
  }
  // Work over plain rationals for the solve.
  // (reuse fmat machinery with a rational field)
  FVec rhs(d);
  const NumberField* Q = fld_->rationals_helper();
  for (int i = 0; i < d; ++i) rhs[i] = FieldElem(Q, {mpq_class(i == 0 ? 1 : 0)});
  auto sol = fmat_solve(m, rhs);
  require(sol.has_value(), Err::BadInput, "field inverse failed");
  std::vector<mpq_class> out(d);
  for (int i = 0; i < d; ++i) out[i] = (*sol)[i].rat_part();
  return FieldElem(fld_, std::move(out));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

static void interval_mul(const mpq_class& alo, const mpq_class& ahi, const mpq_class& blo,
                         const mpq_class& bhi, mpq_class& lo, mpq_class& hi) {
  mpq_class v1 = alo * blo, v2 = alo * bhi, v3 = ahi * blo, v4 = ahi * bhi;
  lo = std::min(std::min(v1, v2), std::min(v3, v4));
  hi = std::max(std::max(v1, v2), std::max(v3, v4));
}

int FieldElem::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(c_[0]);
  mpq_class tlo = fld_->lo_, thi = fld_->hi_;
  for (int iter = 0; iter < 512; ++iter) {
    // Evaluate by Horner in interval arithmetic.
    mpq_class lo = c_.back(), hi = c_.back();
    for (int i = (int)c_.size() - 2; i >= 0; --i) {
      mpq_class plo, phi;
      interval_mul(lo, hi, tlo, thi, plo, phi);
      lo = plo + c_[i];
      hi = phi + c_[i];
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    fld_->refine(tlo, thi);
  }
  fail(Err::BadInput, "field element sign did not resolve (is the minimal polynomial irreducible?)");
}

double FieldElem::approx() const {
  mpq_class tlo = fld_->lo_, thi = fld_->hi_;
  for (int i = 0; i < 40; ++i) fld_->refine(tlo, thi);
  double th = mpq_class((tlo + thi) / 2).get_d();
  double acc = 0, pw = 1;
  for (const auto& q : c_) {
    acc += q.get_d() * pw;
    pw *= th;
  }
  return acc;
}

std::string FieldElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class q = c_[i];
    if (first) {
      if (q < 0) { os << "-"; q = -q; }
    } else {
      os << (q < 0 ? "-" : "+");
      if (q < 0) q = -q;
    }
    bool unit = (q == 1) && i > 0;
    if (!unit) os << q.get_str();
    if (i >= 1) {
      if (!unit) os << "*";
      os << "th";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// --------------------------------------------------------------- NumberField

namespace {
std::shared_ptr<const NumberField>& rationals_singleton() {
  static std::shared_ptr<const NumberField> q = [] {
    return NumberField::make({mpq_class(0), mpq_class(1)});  // th - 0, degree 1: plain Q
  }();
  return q;
}
}  // namespace

// A degree-1 "extension" is plain Q; theta plays no role there.
FieldPtr NumberField::rationals() { return rationals_singleton(); }

const NumberField* rationals_raw() { return NumberField::rationals().get(); }

FieldPtr NumberField::make(std::vector<mpq_class> minpoly,
                           std::optional<std::pair<mpq_class, mpq_class>> interval) {
  require(minpoly.size() >= 2, Err::BadInput, "minimal polynomial must have degree >= 1");
  while (minpoly.size() > 2 && minpoly.back() == 0) minpoly.pop_back();
  require(minpoly.back() != 0, Err::BadInput, "zero leading coefficient");
  // normalize monic
  mpq_class lead = minpoly.back();
  for (auto& c : minpoly) c /= lead;

  auto* f = new NumberField();
  f->degree_ = (int)minpoly.size() - 1;
  f->minpoly_ = std::move(minpoly);
  if (f->degree_ > 1) {
    f->check_irreducible();
    // reduction table: th^k = -(sum_{j<d} p_j th^j) * th^{k-d} reduced
    std::vector<mpq_class> cur(f->degree_);  // th^d reduced
    for (int j = 0; j < f->degree_; ++j) cur[j] = -f->minpoly_[j];
    f->redtab_.push_back(cur);
    for (int k = f->degree_ + 1; k <= 2 * f->degree_ - 2; ++k) {
      std::vector<mpq_class> nxt(f->degree_, mpq_class(0));
      // multiply cur by th
      for (int j = 0; j < f->degree_ - 1; ++j) nxt[j + 1] = cur[j];
      if (cur[f->degree_ - 1] != 0) {
        for (int j = 0; j < f->degree_; ++j) nxt[j] += cur[f->degree_ - 1] * f->redtab_[0][j];
      }
      f->redtab_.push_back(nxt);
      cur = nxt;
    }
    if (interval) {
      f->lo_ = interval->first;
      f->hi_ = interval->second;
      require(f->sign_at(f->minpoly_, f->lo_) * f->sign_at(f->minpoly_, f->hi_) < 0, Err::BadInput,
              "embedding interval does not isolate a root (no sign change)");
    } else {
      f->isolate_largest_root();
    }
  } else {
    f->lo_ = 0;
    f->hi_ = 0;
  }
  return FieldPtr(f);
}

const NumberField* NumberField::rationals_helper() { return rationals_singleton().get(); }

int NumberField::sign_at(const std::vector<mpq_class>& poly, const mpq_class& x) const {
  mpq_class acc = 0;
  for (int i = (int)poly.size() - 1; i >= 0; --i) acc = acc * x + poly[i];
  return sgn(acc);
}

void NumberField::refine(mpq_class& lo, mpq_class& hi) const {
  mpq_class mid = (lo + hi) / 2;
  int sm = sign_at(minpoly_, mid);
  require(sm != 0, Err::BadInput, "rational root encountered; minimal polynomial reducible");
  if (sm == sign_at(minpoly_, lo))
    lo = mid;
  else
    hi = mid;
}

namespace {
// polynomial helpers over mpq (ascending coeffs)
std::vector<mpq_class> poly_deriv(const std::vector<mpq_class>& p) {
  std::vector<mpq_class> d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * (long)i);
  if (d.empty()) d.push_back(mpq_class(0));
  return d;
}
std::vector<mpq_class> poly_rem(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    mpq_class c = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    if (a.size() < b.size()) break;
  }
  return a;
}
bool poly_is_zero(const std::vector<mpq_class>& p) {
  for (const auto& c : p)
    if (c != 0) return false;
  return true;
}
int eval_sign(const std::vector<mpq_class>& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (int i = (int)p.size() - 1; i >= 0; --i) acc = acc * x + p[i];
  return sgn(acc);
}
}  // namespace

void NumberField::check_irreducible() const {
  const auto& p = minpoly_;
  // squarefree: gcd(p, p') constant
  {
    std::vector<mpq_class> a = p, b = poly_deriv(p);
    while (!poly_is_zero(b)) {
      auto r = poly_rem(a, b);
      a = b;
      b = r;
    }
    require(a.size() == 1, Err::BadInput, "minimal polynomial is not squarefree");
  }
  // rational roots: scale to integer coefficients, check p/q candidates
  {
    mpz_class den(1);
    for (const auto& c : p) den = den * c.get_den() / gcd(den, mpz_class(c.get_den()));
    std::vector<mpz_class> ip;
    for (const auto& c : p) ip.push_back(mpz_class(c * den));
    mpz_class a0 = ip.front(), an = ip.back();
    require(a0 != 0, Err::BadInput, "zero is a root; minimal polynomial reducible");
    auto divisors = [](mpz_class n) {
      n = abs(n);
      std::vector<mpz_class> ds;
      for (mpz_class d(1); d * d <= n; ++d)
        if (n % d == 0) {
          ds.push_back(d);
          ds.push_back(n / d);
        }
      return ds;
    };
    for (const auto& pnum : divisors(a0))
      for (const auto& qden : divisors(an))
        for (int s : {1, -1}) {
          mpq_class cand = mpq_class(s * pnum) / qden;
          cand.canonicalize();
          require(eval_sign(p, cand) != 0, Err::BadInput,
                  "minimal polynomial has rational root " + cand.get_str());
        }
  }
  // degree-4 monic integer: search for quadratic factors (Gauss)
  if (degree_ == 4) {
    bool monic_int = minpoly_.back() == 1;
    std::vector<mpz_class> ic;
    for (const auto& c : minpoly_) {
      if (c.get_den() != 1) monic_int = false;
      ic.push_back(c.get_num());
    }
    if (monic_int) {
      // x^4+c3x^3+c2x^2+c1x+c0 = (x^2+ax+b)(x^2+cx+d)
      mpz_class c0 = ic[0], c1 = ic[1], c2 = ic[2], c3 = ic[3];
      std::vector<mpz_class> bs;
      mpz_class n = abs(c0);
      for (mpz_class d(1); d * d <= n; ++d)
        if (n % d == 0) {
          bs.push_back(d);
          bs.push_back(-d);
          bs.push_back(n / d);
          bs.push_back(-n / d);
        }
      for (const auto& b : bs) {
        if (b == 0 || c0 % b != 0) continue;
        mpz_class d = c0 / b;
        // a+c=c3 ; b+d+ac=c2 ; ad+bc=c1
        if (b == d) {
          // a+c=c3, ac=c2-2b, a(d)+b(c)=b(a+c)=b*c3 must equal c1
          if (b * c3 != c1) continue;
          // a,c integer roots of t^2 - c3 t + (c2-2b)
          mpz_class disc = c3 * c3 - 4 * (c2 - 2 * b);
          if (disc < 0) continue;
          mpz_class s = sqrt(disc);
          if (s * s != disc) continue;
          if ((c3 + s) % 2 == 0)
            fail(Err::BadInput, "minimal polynomial factors into quadratics");
        } else {
          // a(d-b) = c1 - b*c3
          mpz_class num = c1 - b * c3, den2 = d - b;
          if (num % den2 != 0) continue;
          mpz_class a = num / den2, c = c3 - a;
          if (b + d + a * c == c2 && a * d + b * c == c1)
            fail(Err::BadInput, "minimal polynomial factors into quadratics");
        }
      }
    }
  }
}

void NumberField::isolate_largest_root() {
  // Sturm chain
  std::vector<std::vector<mpq_class>> chain;
  chain.push_back(minpoly_);
  chain.push_back(poly_deriv(minpoly_));
  while (!poly_is_zero(chain.back()) && chain.back().size() > 1) {
    auto r = poly_rem(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (poly_is_zero(r)) break;
    chain.push_back(r);
  }
  auto variations = [&](const mpq_class& x) {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
      int s = eval_sign(p, x);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  // Cauchy bound
  mpq_class M(1);
  for (size_t i = 0; i + 1 < minpoly_.size(); ++i) M = std::max(M, abs(minpoly_[i]));
  M += 1;
  auto count = [&](const mpq_class& a, const mpq_class& b) { return variations(a) - variations(b); };
  require(count(-M, M) >= 1, Err::BadInput, "minimal polynomial has no real root");
  mpq_class lo = -M, hi = M;
  // descend into the rightmost root
  while (count(lo, hi) > 1) {
    mpq_class mid = (lo + hi) / 2;
    if (eval_sign(minpoly_, mid) == 0) {
      fail(Err::BadInput, "rational root; reducible");
    }
    if (count(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  // ensure endpoints have opposite signs
  while (eval_sign(minpoly_, lo) == 0 || eval_sign(minpoly_, lo) == eval_sign(minpoly_, hi)) {
    mpq_class mid = (lo + hi) / 2;
    if (count(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  lo_ = lo;
  hi_ = hi;
}

FieldElem NumberField::zero() const { return FieldElem(this, std::vector<mpq_class>(degree_, mpq_class(0))); }
FieldElem NumberField::one() const { return rational(mpq_class(1)); }

FieldElem NumberField::rational(const mpq_class& q) const {
  std::vector<mpq_class> c(degree_, mpq_class(0));
  c[0] = q;
  return FieldElem(this, std::move(c));
}

FieldElem NumberField::theta() const {
  require(degree_ > 1, Err::BadInput, "rationals have no generator th");
  std::vector<mpq_class> c(degree_, mpq_class(0));
  c[1] = 1;
  return FieldElem(this, std::move(c));
}

FieldElem NumberField::from_coeffs(std::vector<mpq_class> c) const {
  c.resize(degree_);
  return FieldElem(this, std::move(c));
}

void NumberField::register_cos(int m, const FieldElem& value) const {
  require(m >= 2, Err::BadInput, "bond label must be >= 2");
  require(value.field() == this, Err::BadInput, "cosine from a different field");
  // exact: T_m(value) == -1 with T the Chebyshev recurrence
  FieldElem t0 = one(), t1 = value;
  for (int k = 2; k <= m; ++k) {
    FieldElem t2 = rational(2) * value * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  require(t1 == rational(-1), Err::BadInput,
          "declared cos(pi/" + std::to_string(m) + ") fails the Chebyshev identity");
  // separation: must be the largest root of T_m(x)=-1, i.e. > midpoint of
  // cos(pi/m) and cos(3pi/m).  The gap is far larger than double error.
  double gap_mid = (std::cos(M_PI / m) + std::cos(3.0 * M_PI / m)) / 2.0;
  mpq_class bound(gap_mid);  // exact binary rational from double
  require((value - rational(bound)).sign() > 0, Err::BadInput,
          "declared cos(pi/" + std::to_string(m) + ") is not the largest Chebyshev root");
  cos_[m] = value;
}

bool NumberField::has_cos(int m) const { return m == 2 || m == 3 || cos_.count(m) > 0; }

FieldElem NumberField::cos_pi_over(int m) const {
  if (m == 2) return zero();
  if (m == 3) return rational(mpq_class(1, 2));
  auto it = cos_.find(m);
  if (it == cos_.end())
    fail(Err::FieldMissingConstant,
         "cos(pi/" + std::to_string(m) + ") is not expressible in the configured field");
  return it->second;
}

std::string NumberField::describe() const {
  if (is_rationals()) return "Q";
  std::ostringstream os;
  os << "Q[th]/(";
  bool first = true;
  for (int i = degree_; i >= 0; --i) {
    const mpq_class& c = minpoly_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "");
    os << c.get_str();
    if (i >= 1) os << "*th";
    if (i > 1) os << "^" << i;
    first = false;
  }
  os << "), th in [" << lo_.get_str() << ", " << hi_.get_str() << "]";
  return os.str();
}

// ------------------------------------------------------------ expr parsing

namespace {
struct Parser {
  const NumberField* f;
  const std::string& s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && isspace((unsigned char)s[i])) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  FieldElem expr() {
    FieldElem v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  FieldElem term() {
    FieldElem v = factor();
    for (;;) {
      if (eat('*'))
        v *= factor();
      else if (eat('/'))
        v = v / factor();
      else
        return v;
    }
  }
  FieldElem factor() {
    FieldElem v = atom();
    if (eat('^')) {
      skip();
      size_t j = i;
      while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
      require(j > i, Err::BadInput, "exponent expected in field expression");
      long e = std::stol(s.substr(i, j - i));
      i = j;
      FieldElem r = f->one();
      for (long k = 0; k < e; ++k) r *= v;
      return r;
    }
    return v;
  }
  FieldElem atom() {
    skip();
    if (eat('(')) {
      FieldElem v = expr();
      require(eat(')'), Err::BadInput, "missing ')' in field expression");
      return v;
    }
    if (eat('-')) return -atom();
    // theta spellings: "th", "theta", UTF-8 theta
    static const std::string utf8_theta = "\xce\xb8";
    if (s.compare(i, utf8_theta.size(), utf8_theta) == 0) {
      i += utf8_theta.size();
      return f->theta();
    }
    if (s.compare(i, 5, "theta") == 0) {
      i += 5;
      return f->theta();
    }
    if (s.compare(i, 2, "th") == 0) {
      i += 2;
      return f->theta();
    }
    size_t j = i;
    while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
    require(j > i, Err::BadInput, "number expected in field expression at '" + s.substr(i) + "'");
    mpq_class q(s.substr(i, j - i));
    i = j;
    return f->rational(q);
  }
};
}  // namespace

FieldElem NumberField::parse(const std::string& expr) const {
  Parser p{this, expr};
  FieldElem v = p.expr();
  p.skip();
  require(p.i == expr.size(), Err::BadInput, "trailing input in field expression: " + expr);
  return v;
}

// -------------------------------------------------------- dense linear algebra

FMat fmat_identity(const NumberField* f, int n) {
  FMat m(n, FVec(n, f->zero()));
  for (int i = 0; i < n; ++i) m[i][i] = f->one();
  return m;
}

FMat fmat_mul(const FMat& a, const FMat& b) {
  int n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  require((int)a[0].size() == k, Err::ShapeMismatch, "fmat_mul shapes");
  const NumberField* f = a[0][0].field();
  FMat c(n, FVec(p, f->zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (int l = 0; l < p; ++l) {
        if (b[j][l].is_zero()) continue;
        c[i][l] += a[i][j] * b[j][l];
      }
    }
  return c;
}

FVec fmat_apply(const FMat& a, const FVec& v) {
  const NumberField* f = v[0].field();
  FVec out(a.size(), f->zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
  return out;
}

bool fmat_equal(const FMat& a, const FMat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

namespace {
// in-place row reduction; returns pivot columns
std::vector<int> row_reduce(FMat& m) {
  std::vector<int> pivots;
  int rows = m.size(), cols = rows ? m[0].size() : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    FieldElem inv = m[r][c].inverse();
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      FieldElem f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}
}  // namespace

int fmat_rank(FMat a) { return (int)row_reduce(a).size(); }

FMat fmat_inverse(const FMat& a) {
  int n = a.size();
  const NumberField* f = a[0][0].field();
  FMat aug(n, FVec(2 * n, f->zero()));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = f->one();
  }
  auto piv = row_reduce(aug);
  require((int)piv.size() == n && piv[n - 1] == n - 1, Err::SingularPairing, "matrix not invertible");
  FMat inv(n, FVec(n, f->zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::optional<FVec> fmat_solve(FMat a, FVec b) {
  int rows = a.size(), cols = rows ? a[0].size() : 0;
  const NumberField* f = b.empty() ? (rows ? a[0][0].field() : nullptr) : b[0].field();
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto piv = row_reduce(a);
  for (int i = 0; i < rows; ++i) {
    bool zero = true;
    for (int j = 0; j < cols; ++j)
      if (!a[i][j].is_zero()) {
        zero = false;
        break;
      }
    if (zero && !a[i][cols].is_zero()) return std::nullopt;
  }
  FVec x(cols, f->zero());
  for (size_t p = 0; p < piv.size(); ++p)
    if (piv[p] < cols) x[piv[p]] = a[p][cols];
  return x;
}

std::vector<FVec> fmat_nullspace(FMat a) {
  int rows = a.size(), cols = rows ? a[0].size() : 0;
  if (rows == 0) return {};
  const NumberField* f = a[0][0].field();
  auto piv = row_reduce(a);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<FVec> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_piv[fc]) continue;
    FVec v(cols, f->zero());
    v[fc] = f->one();
    for (size_t p = 0; p < piv.size(); ++p) v[piv[p]] = -a[p][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace soergel
