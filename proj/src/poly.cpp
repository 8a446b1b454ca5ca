#include "soergel/poly.hpp"

#include <algorithm>
#include <sstream>

namespace soergel {

Mono mono_from_exps(const std::vector<int>& e) {
  require((int)e.size() <= kMaxVars, Err::BadInput, "too many variables");
  uint64_t m = 0;
  int tot = 0;
  for (size_t v = 0; v < e.size(); ++v) {
    require(e[v] >= 0 && e[v] < 256, Err::BadInput, "exponent out of range");
    m |= (uint64_t)e[v] << (8 * (kMaxVars - 1 - v));
    tot += e[v];
  }
  return m | ((uint64_t)tot << 48);
}

std::string mono_to_string(Mono m, const std::vector<std::string>& names) {
  if (m == mono_one()) return "1";
  std::string s;
  for (size_t v = 0; v < names.size(); ++v) {
    int e = mono_exp(m, v);
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += names[v];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Polynomial Polynomial::term(Mono m, FieldElem c) {
  Polynomial p;
  if (!c.is_zero()) p.t_.push_back({m, std::move(c)});
  return p;
}

bool Polynomial::is_homogeneous() const {
  if (t_.empty()) return true;
  int d = mono_total(t_.front().first);
  for (const auto& [m, c] : t_)
    if (mono_total(m) != d) return false;
  return true;
}

FieldElem Polynomial::coeff(Mono m, const NumberField* f) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), m,
                             [](const auto& a, Mono key) { return a.first > key; });
  if (it != t_.end() && it->first == m) return it->second;
  return f->zero();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r;
  r.t_.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j >= o.t_.size() || (i < t_.size() && t_[i].first > o.t_[j].first)) {
      r.t_.push_back(t_[i++]);
    } else if (i >= t_.size() || o.t_[j].first > t_[i].first) {
      r.t_.push_back(o.t_[j++]);
    } else {
      FieldElem c = t_[i].second + o.t_[j].second;
      if (!c.is_zero()) r.t_.push_back({t_[i].first, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }
Polynomial& Polynomial::operator+=(const Polynomial& o) { return *this = *this + o; }
Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this = *this - o; }

bool Polynomial::operator==(const Polynomial& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].first != o.t_[i].first || t_[i].second != o.t_[i].second) return false;
  return true;
}

Polynomial Polynomial::from_map(std::map<Mono, FieldElem, std::greater<Mono>>&& acc) {
  Polynomial r;
  r.t_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.t_.push_back({m, std::move(c)});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  // single-term fast paths
  if (o.t_.size() == 1) return mul_mono(o.t_[0].first).scaled(o.t_[0].second);
  if (t_.size() == 1) return o.mul_mono(t_[0].first).scaled(t_[0].second);
  std::map<Mono, FieldElem, std::greater<Mono>> acc;
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) {
      Mono m = mono_mul(ma, mb);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, ca * cb);
      else
        it->second += ca * cb;
    }
  return from_map(std::move(acc));
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
  if (c.is_zero()) return {};
  Polynomial r(*this);
  for (auto& [m, a] : r.t_) a *= c;
  return r;
}

Polynomial Polynomial::mul_mono(Mono m) const {
  Polynomial r(*this);
  for (auto& [mm, c] : r.t_) mm = mono_mul(mm, m);
  return r;
}

Polynomial Polynomial::homogeneous_part(int gd) const {
  Polynomial r;
  for (const auto& [m, c] : t_)
    if (2 * mono_total(m) == gd) r.t_.push_back({m, c});
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (is_zero()) return {};
  // cache powers of each image
  std::vector<std::vector<Polynomial>> pow(images.size());
  auto power = [&](size_t v, int e) -> const Polynomial& {
    auto& pv = pow[v];
    if (pv.empty()) {
      pv.push_back(Polynomial::constant(images[v].is_zero()
                                            ? FieldElem()
                                            : images[v].terms()[0].second.field()->one()));
    }
    while ((int)pv.size() <= e) pv.push_back(pv.back() * images[v]);
    return pv[e];
  };
  Polynomial out;
  for (const auto& [m, c] : t_) {
    Polynomial termp = Polynomial::constant(c);
    for (size_t v = 0; v < images.size(); ++v) {
      int e = mono_exp(m, v);
      if (e) termp = termp * power(v, e);
    }
    out += termp;
  }
  return out;
}

Polynomial Polynomial::divide_by_linear(const Polynomial& ell) const {
  if (is_zero()) return {};
  require(ell.graded_degree() == 2 && ell.is_homogeneous(), Err::InternalDivisionFailure,
          "divisor is not a linear form");
  // pivot variable: first variable with nonzero coefficient in ell
  int pv = -1;
  FieldElem cv;
  for (const auto& [m, c] : ell.t_) {
    for (int v = 0; v < kMaxVars; ++v)
      if (mono_exp(m, v) == 1) {
        if (pv == -1 || v < pv) {
          pv = v;
          cv = c;
        }
        break;
      }
  }
  // actually take the *smallest-index* variable present
  pv = -1;
  for (int v = 0; v < kMaxVars && pv < 0; ++v)
    for (const auto& [m, c] : ell.t_)
      if (mono_exp(m, v) == 1) {
        pv = v;
        cv = c;
        break;
      }
  require(pv >= 0, Err::InternalDivisionFailure, "zero divisor");
  FieldElem cinv = cv.inverse();
  Polynomial rem = *this, quot;
  while (!rem.is_zero()) {
    // find max exponent of pv in rem
    int emax = 0;
    for (const auto& [m, c] : rem.t_) emax = std::max(emax, mono_exp(m, pv));
    if (emax == 0) fail(Err::InternalDivisionFailure, "polynomial not divisible by linear form");
    // collect terms with exponent emax, divide by y_pv^1 * cv
    Polynomial part;
    for (const auto& [m, c] : rem.t_)
      if (mono_exp(m, pv) == emax) {
        Mono m2 = m - mono_var(pv);
        part.t_.push_back({m2, c * cinv});
      }
    std::sort(part.t_.begin(), part.t_.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    quot += part;
    rem -= part * ell;
    // check progress: max exponent strictly decreased
    int emax2 = 0;
    for (const auto& [m, c] : rem.t_) emax2 = std::max(emax2, mono_exp(m, pv));
    if (!rem.is_zero() && emax2 >= emax)
      fail(Err::InternalDivisionFailure, "division by linear form did not terminate");
  }
  return quot;
}

FieldElem Polynomial::eval(const std::vector<FieldElem>& point, const NumberField* f) const {
  FieldElem acc = f->zero();
  std::vector<std::vector<FieldElem>> pow(point.size());
  auto power = [&](size_t v, int e) -> const FieldElem& {
    auto& pv = pow[v];
    if (pv.empty()) pv.push_back(f->one());
    while ((int)pv.size() <= e) pv.push_back(pv.back() * point[v]);
    return pv[e];
  };
  for (const auto& [m, c] : t_) {
    FieldElem t = c;
    for (size_t v = 0; v < point.size(); ++v) {
      int e = mono_exp(m, v);
      if (e) t *= power(v, e);
    }
    acc += t;
  }
  return acc;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    std::string cs = c.to_string();
    bool neg = cs.size() && cs[0] == '-';
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (neg) cs = cs.substr(1);
    bool needs_paren = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
    std::string ms = mono_to_string(m, names);
    if (ms == "1") {
      os << (needs_paren ? "(" + cs + ")" : cs);
    } else if (cs == "1") {
      os << ms;
    } else {
      os << (needs_paren ? "(" + cs + ")" : cs) << "*" << ms;
    }
    first = false;
  }
  return os.str();
}

// ----------------------------------------------------------------- PolyRing

PolyRing::PolyRing(int nvars, FieldPtr field, std::vector<std::string> var_names)
    : nvars_(nvars), field_(std::move(field)), var_names_(std::move(var_names)) {
  require(nvars_ >= 1 && nvars_ <= kMaxVars, Err::BadInput, "variable count out of range");
  if (var_names_.empty())
    for (int i = 0; i < nvars_; ++i) var_names_.push_back("y" + std::to_string(i));
}

Polynomial PolyRing::var(int v) const { return Polynomial::term(mono_var(v), field()->one()); }

const std::vector<Mono>& PolyRing::monomials_of_exp(int d) const {
  std::lock_guard<std::mutex> lk(mu_);
  while ((int)mono_cache_.size() <= d) {
    int dd = mono_cache_.size();
    std::vector<Mono> ms;
    std::vector<int> e(nvars_, 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
      if (v == nvars_ - 1) {
        e[v] = left;
        ms.push_back(mono_from_exps(e));
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[v] = k;
        rec(v + 1, left - k);
      }
    };
    if (nvars_ == 1) {
      ms.push_back(mono_from_exps({dd}));
    } else {
      rec(0, dd);
    }
    std::sort(ms.begin(), ms.end(), std::greater<Mono>());
    mono_cache_.push_back(std::move(ms));
  }
  return mono_cache_[d];
}

int PolyRing::slice_dim(int gd) const {
  if (gd < 0 || gd % 2) return 0;
  return (int)monomials_of_exp(gd / 2).size();
}

Polynomial PolyRing::random(std::mt19937_64& rng, int max_exp, bool homogeneous) const {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> pick(0, 99);
  Polynomial p;
  int dlo = homogeneous ? max_exp : 0;
  for (int d = dlo; d <= max_exp; ++d) {
    for (Mono m : monomials_of_exp(d)) {
      if (pick(rng) < 55) continue;  // keep them sparse
      long c = coeff(rng);
      if (!c) continue;
      FieldElem fc = field()->integer(c);
      if (field()->degree() > 1 && pick(rng) < 25) fc = fc * field()->theta();
      p += Polynomial::term(m, fc);
    }
  }
  return p;
}

}  // namespace soergel
