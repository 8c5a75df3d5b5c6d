#pragma once

#include <Eigen/Dense>
#include <map>
#include <span>
#include <vector>

#include "liftings/errors.hpp"

namespace liftings {

/// Euclidean point/vector in the ambient space.
using Vec = Eigen::VectorXd;

/// Global tolerance policy. All thresholds are strictly positive.
struct Tolerances {
  double eps_geom = 1e-9; ///< geometric predicate threshold
  double eps_form = 1e-8; ///< form-coefficient comparison threshold
  double eps_rank = 1e-10; ///< relative singular-value cutoff
};

/// Process-wide tolerances, overridable from the CLI.
Tolerances& tolerances();

/// Constant differential m-form on R^n, stored sparsely over strictly
/// increasing index tuples (0-based). Absent tuple means coefficient 0.
class MForm {
public:
  using Key = std::vector<int>;

  MForm(int ambient_dim, int degree);

  /// The 1-form dv = v_0 dx_0 + ... + v_{n-1} dx_{n-1}.
  static MForm covector(const Vec& v);

  /// Basis m-form dx_{idx_0} ^ ... ^ dx_{idx_{m-1}}; indices need not be
  /// sorted, the sign of the sorting permutation is absorbed.
  static MForm basis(int ambient_dim, const Key& idx, double coeff = 1.0);

  int ambient_dim() const { return n_; }
  int degree() const { return m_; }

  /// Adds coeff on the (possibly unsorted) index tuple; repeated indices
  /// contribute zero.
  void add_term(Key idx, double coeff);

  double coeff(Key idx) const;
  const std::map<Key, double>& terms() const { return coeffs_; }

  bool is_zero(double eps) const;
  double max_abs_coeff() const;
  double approx_distance(const MForm& other) const;

  MForm& operator+=(const MForm& other);
  MForm& operator-=(const MForm& other);
  MForm& operator*=(double scalar);
  friend MForm operator+(MForm a, const MForm& b) { return a += b; }
  friend MForm operator-(MForm a, const MForm& b) { return a -= b; }
  friend MForm operator*(MForm a, double s) { return a *= s; }
  friend MForm operator*(double s, MForm a) { return a *= s; }
  friend MForm operator-(MForm a) { return a *= -1.0; }

  /// Coefficients of a degree-1 form as a vector.
  Vec as_covector() const;

private:
  int n_;
  int m_;
  std::map<Key, double> coeffs_;
};

/// Exterior product with the standard sign rule from merging sorted
/// index tuples.
MForm wedge(const MForm& a, const MForm& b);

/// Hodge star with respect to the standard orientation and metric:
/// each basis term f * dx_I maps to sgn(I, I^c) * f * dx_{I^c}.
MForm hodge_star(const MForm& a);

/// Nonnegative k-dimensional volume sqrt(det(G^T G)) of the
/// parallelepiped spanned by the vectors.
double gram_volume(std::span<const Vec> vectors);

/// Determinant of the square matrix whose columns are the n vectors.
double signed_det(std::span<const Vec> vectors);

inline double gram_volume(const std::vector<Vec>& v) {
  return gram_volume(std::span<const Vec>(v));
}
inline double signed_det(const std::vector<Vec>& v) {
  return signed_det(std::span<const Vec>(v));
}

/// Sign of the permutation sorting `idx` ascending; 0 if a repeat occurs.
int sort_sign(std::vector<int>& idx);

Vec make_vec(std::initializer_list<double> coords);

} // namespace liftings
