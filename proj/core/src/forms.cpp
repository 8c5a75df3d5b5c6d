#include "liftings/forms.hpp"

#include <algorithm>
#include <cmath>

namespace liftings {

Tolerances& tolerances() {
  static Tolerances tol;
  return tol;
}

int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < idx.size(); ++i) {
    int v = idx[i];
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > v) {
      idx[j] = idx[j - 1];
      --j;
      sign = -sign;
    }
    idx[j] = v;
  }
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (idx[i] == idx[i - 1]) return 0;
  }
  return sign;
}

MForm::MForm(int ambient_dim, int degree) : n_(ambient_dim), m_(degree) {
  if (ambient_dim < 1) throw DimensionError("MForm: ambient dimension must be >= 1");
  if (degree < 0 || degree > ambient_dim)
    throw DimensionError("MForm: degree must satisfy 0 <= m <= n");
}

MForm MForm::covector(const Vec& v) {
  MForm f(static_cast<int>(v.size()), 1);
  for (int k = 0; k < v.size(); ++k) {
    if (v[k] != 0.0) f.coeffs_[{k}] = v[k];
  }
  return f;
}

MForm MForm::basis(int ambient_dim, const Key& idx, double coeff) {
  MForm f(ambient_dim, static_cast<int>(idx.size()));
  f.add_term(idx, coeff);
  return f;
}

void MForm::add_term(Key idx, double coeff) {
  if (static_cast<int>(idx.size()) != m_)
    throw DimensionError("MForm::add_term: tuple length != degree");
  for (int k : idx) {
    if (k < 0 || k >= n_) throw DimensionError("MForm::add_term: index out of range");
  }
  int sign = sort_sign(idx);
  if (sign == 0 || coeff == 0.0) return;
  double& slot = coeffs_[idx];
  slot += sign * coeff;
  if (slot == 0.0) coeffs_.erase(idx);
}

double MForm::coeff(Key idx) const {
  int sign = sort_sign(idx);
  if (sign == 0) return 0.0;
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? 0.0 : sign * it->second;
}

bool MForm::is_zero(double eps) const { return max_abs_coeff() <= eps; }

double MForm::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [k, c] : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double MForm::approx_distance(const MForm& other) const {
  MForm d = *this - other;
  return d.max_abs_coeff();
}

MForm& MForm::operator+=(const MForm& other) {
  if (other.n_ != n_ || other.m_ != m_)
    throw DimensionError("MForm: mismatched dimension or degree in +");
  for (const auto& [k, c] : other.coeffs_) {
    double& slot = coeffs_[k];
    slot += c;
    if (slot == 0.0) coeffs_.erase(k);
  }
  return *this;
}

MForm& MForm::operator-=(const MForm& other) {
  if (other.n_ != n_ || other.m_ != m_)
    throw DimensionError("MForm: mismatched dimension or degree in -");
  for (const auto& [k, c] : other.coeffs_) {
    double& slot = coeffs_[k];
    slot -= c;
    if (slot == 0.0) coeffs_.erase(k);
  }
  return *this;
}

MForm& MForm::operator*=(double scalar) {
  if (scalar == 0.0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, c] : coeffs_) c *= scalar;
  return *this;
}

Vec MForm::as_covector() const {
  if (m_ != 1) throw DimensionError("MForm::as_covector: degree must be 1");
  Vec v = Vec::Zero(n_);
  for (const auto& [k, c] : coeffs_) v[k[0]] = c;
  return v;
}

MForm wedge(const MForm& a, const MForm& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("wedge: mismatched ambient dimensions");
  if (a.degree() + b.degree() > a.ambient_dim())
    throw DimensionError("wedge: degree overflow");
  MForm out(a.ambient_dim(), a.degree() + b.degree());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      MForm::Key merged = ka;
      merged.insert(merged.end(), kb.begin(), kb.end());
      out.add_term(std::move(merged), ca * cb);
    }
  }
  return out;
}

MForm hodge_star(const MForm& a) {
  const int n = a.ambient_dim();
  const int m = a.degree();
  MForm out(n, n - m);
  for (const auto& [key, c] : a.terms()) {
    MForm::Key comp;
    comp.reserve(n - m);
    std::size_t pos = 0;
    for (int k = 0; k < n; ++k) {
      if (pos < key.size() && key[pos] == k) {
        ++pos;
      } else {
        comp.push_back(k);
      }
    }
    // sign of the permutation (key, comp) of (0..n-1)
    MForm::Key full = key;
    full.insert(full.end(), comp.begin(), comp.end());
    int sign = sort_sign(full);
    out.add_term(std::move(comp), sign * c);
  }
  return out;
}

double gram_volume(std::span<const Vec> vectors) {
  if (vectors.empty()) throw DegenerateInput("gram_volume: empty input");
  const auto n = vectors.front().size();
  Eigen::MatrixXd M(n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != n)
      throw DimensionError("gram_volume: mixed ambient dimensions");
    M.col(static_cast<Eigen::Index>(k)) = vectors[k];
  }
  Eigen::MatrixXd G = M.transpose() * M;
  double det = G.determinant();
  return det <= 0.0 ? 0.0 : std::sqrt(det);
}

double signed_det(std::span<const Vec> vectors) {
  if (vectors.empty()) throw DegenerateInput("signed_det: empty input");
  const auto n = vectors.front().size();
  if (static_cast<Eigen::Index>(vectors.size()) != n)
    throw DimensionError("signed_det: need exactly n vectors in R^n");
  Eigen::MatrixXd M(n, n);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != n)
      throw DimensionError("signed_det: mixed ambient dimensions");
    M.col(static_cast<Eigen::Index>(k)) = vectors[k];
  }
  return M.determinant();
}

Vec make_vec(std::initializer_list<double> coords) {
  Vec v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) v[i++] = c;
  return v;
}

} // namespace liftings
