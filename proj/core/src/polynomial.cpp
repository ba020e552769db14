#include "unipoint/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "unipoint/error.hpp"

namespace unipoint {

ComplexPoint ComplexPoint::max_normalized() const {
  size_t best = 0;
  double best_abs = -1.0;
  for (size_t i = 0; i < coords.size(); ++i) {
    double a = std::abs(coords[i]);
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  if (best_abs <= 0.0) throw Error(ErrorKind::input, "cannot normalize the zero point");
  ComplexPoint out;
  out.coords.reserve(coords.size());
  Cplx pivot = coords[best];
  for (const Cplx& c : coords) out.coords.push_back(c / pivot);
  return out;
}

double ComplexPoint::max_abs() const {
  double m = 0.0;
  for (const Cplx& c : coords) m = std::max(m, std::abs(c));
  return m;
}

HomogeneousPoly::HomogeneousPoly(int num_vars, int degree)
    : num_vars_(num_vars), degree_(degree) {
  if (num_vars < 3) throw Error(ErrorKind::input, "forms need at least 3 variables");
  if (degree < 1) throw Error(ErrorKind::input, "form degree must be >= 1");
}

HomogeneousPoly::HomogeneousPoly(int num_vars, int degree, TermMap terms)
    : HomogeneousPoly(num_vars, degree) {
  for (auto it = terms.begin(); it != terms.end();) {
    validate_exponents(it->first);
    if (it->second == Cplx(0.0)) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  terms_ = std::move(terms);
}

void HomogeneousPoly::validate_exponents(const Exponents& exponents) const {
  if (static_cast<int>(exponents.size()) != num_vars_)
    throw Error(ErrorKind::input, "exponent vector length mismatch");
  int sum = 0;
  for (int e : exponents) {
    if (e < 0) throw Error(ErrorKind::input, "negative exponent");
    sum += e;
  }
  if (sum != degree_)
    throw Error(ErrorKind::input, "term breaks homogeneity: exponent sum != degree");
}

void HomogeneousPoly::set_term(const Exponents& exponents, Cplx coeff) {
  validate_exponents(exponents);
  if (coeff == Cplx(0.0)) {
    terms_.erase(exponents);
  } else {
    terms_[exponents] = coeff;
  }
}

Cplx HomogeneousPoly::coeff(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Cplx(0.0) : it->second;
}

double HomogeneousPoly::max_coeff() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

HomogeneousPoly HomogeneousPoly::unit_scaled() const {
  double m = max_coeff();
  if (m <= 0.0) throw Error(ErrorKind::input, "cannot scale the zero form");
  return scaled(Cplx(1.0 / m));
}

HomogeneousPoly HomogeneousPoly::scaled(Cplx factor) const {
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Cplx v = c * factor;
    if (v != Cplx(0.0)) out.emplace(e, v);
  }
  return HomogeneousPoly(num_vars_, degree_, std::move(out));
}

HomogeneousPoly HomogeneousPoly::partial(int var) const {
  if (var < 0 || var >= num_vars_) throw Error(ErrorKind::input, "variable index out of range");
  if (degree_ == 1) {
    // Degree-0 forms are not representable; callers treat partials of linear
    // forms through eval only. Encode as a degree-1 form times nothing is not
    // possible, so we reject instead.
    throw Error(ErrorKind::input, "partial of a linear form is constant");
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    int k = e[static_cast<size_t>(var)];
    if (k == 0) continue;
    Exponents d = e;
    d[static_cast<size_t>(var)] = k - 1;
    out[d] += c * static_cast<double>(k);
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == Cplx(0.0) ? out.erase(it) : std::next(it);
  }
  return HomogeneousPoly(num_vars_, degree_ - 1, std::move(out));
}

HomogeneousPoly HomogeneousPoly::operator*(const HomogeneousPoly& other) const {
  if (other.num_vars_ != num_vars_) throw Error(ErrorKind::input, "variable count mismatch");
  TermMap out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e(static_cast<size_t>(num_vars_));
      for (int i = 0; i < num_vars_; ++i)
        e[static_cast<size_t>(i)] = ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == Cplx(0.0) ? out.erase(it) : std::next(it);
  }
  return HomogeneousPoly(num_vars_, degree_ + other.degree_, std::move(out));
}

HomogeneousPoly HomogeneousPoly::operator+(const HomogeneousPoly& other) const {
  return linear_combination(1.0, *this, 1.0, other);
}

std::vector<HomogeneousPoly::Exponents> HomogeneousPoly::monomial_basis(int num_vars, int degree) {
  std::vector<Exponents> out;
  Exponents cur(static_cast<size_t>(num_vars), 0);
  // Lexicographic enumeration, first variable most significant.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == num_vars - 1) {
      cur[static_cast<size_t>(var)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[static_cast<size_t>(var)] = e;
      self(self, var + 1, remaining - e);
    }
    cur[static_cast<size_t>(var)] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

Cplx eval(const HomogeneousPoly& f, const ComplexPoint& x) {
  if (x.dim() != static_cast<size_t>(f.num_vars()))
    throw Error(ErrorKind::input, "point dimension does not match the form");
  Cplx acc = 0.0;
  for (const auto& [e, c] : f.terms()) {
    Cplx term = c;
    for (size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= x.coords[i];
    }
    acc += term;
  }
  return acc;
}

std::vector<HomogeneousPoly> gradient(const HomogeneousPoly& f) {
  std::vector<HomogeneousPoly> out;
  out.reserve(static_cast<size_t>(f.num_vars()));
  for (int v = 0; v < f.num_vars(); ++v) out.push_back(f.partial(v));
  return out;
}

HomogeneousPoly linear_combination(Cplx alpha, const HomogeneousPoly& f,
                                   Cplx beta, const HomogeneousPoly& g) {
  if (f.num_vars() != g.num_vars() || f.degree() != g.degree())
    throw Error(ErrorKind::input, "forms have different shape");
  HomogeneousPoly::TermMap out;
  for (const auto& [e, c] : f.terms()) out[e] += alpha * c;
  for (const auto& [e, c] : g.terms()) out[e] += beta * c;
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == Cplx(0.0) ? out.erase(it) : std::next(it);
  }
  return HomogeneousPoly(f.num_vars(), f.degree(), std::move(out));
}

UnivariatePoly::UnivariatePoly(std::vector<Cplx> coeffs, double zero_threshold)
    : coeffs_(std::move(coeffs)) {
  double m = 0.0;
  for (const Cplx& c : coeffs_) m = std::max(m, std::abs(c));
  double cut = zero_threshold * m;
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= cut) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::constant(Cplx value) {
  return UnivariatePoly(std::vector<Cplx>{value});
}

UnivariatePoly UnivariatePoly::from_roots(const std::vector<Cplx>& roots, Cplx lead) {
  std::vector<Cplx> c{lead};
  for (const Cplx& r : roots) {
    c.push_back(0.0);
    for (size_t k = c.size() - 1; k >= 1; --k) c[k] = c[k - 1] - r * c[k];
    c[0] *= -r;
    std::reverse(c.begin(), c.end());
    std::reverse(c.begin(), c.end());
  }
  return UnivariatePoly(std::move(c), 0.0);
}

double UnivariatePoly::max_coeff() const {
  double m = 0.0;
  for (const Cplx& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Cplx UnivariatePoly::operator()(Cplx t) const {
  Cplx acc = 0.0;
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
  return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
  if (coeffs_.size() <= 1) return UnivariatePoly();
  std::vector<Cplx> out(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k)
    out[k - 1] = coeffs_[k] * static_cast<double>(k);
  return UnivariatePoly(std::move(out), 0.0);
}

UnivariatePoly UnivariatePoly::unit_scaled() const {
  double m = max_coeff();
  if (m <= 0.0) throw Error(ErrorKind::input, "cannot scale the zero polynomial");
  return scaled(Cplx(1.0 / m));
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& other) const {
  std::vector<Cplx> out(std::max(coeffs_.size(), other.coeffs_.size()), Cplx(0.0));
  for (size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
  for (size_t k = 0; k < other.coeffs_.size(); ++k) out[k] += other.coeffs_[k];
  return UnivariatePoly(std::move(out), 0.0);
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& other) const {
  std::vector<Cplx> out(std::max(coeffs_.size(), other.coeffs_.size()), Cplx(0.0));
  for (size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
  for (size_t k = 0; k < other.coeffs_.size(); ++k) out[k] -= other.coeffs_[k];
  return UnivariatePoly(std::move(out), 0.0);
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return UnivariatePoly();
  std::vector<Cplx> out(coeffs_.size() + other.coeffs_.size() - 1, Cplx(0.0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  return UnivariatePoly(std::move(out), 0.0);
}

UnivariatePoly UnivariatePoly::scaled(Cplx factor) const {
  std::vector<Cplx> out = coeffs_;
  for (Cplx& c : out) c *= factor;
  return UnivariatePoly(std::move(out), 0.0);
}

}  // namespace unipoint
