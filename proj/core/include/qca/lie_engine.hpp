#pragma once

#include <span>
#include <vector>

#include "qca/density.hpp"
#include "qca/matcore.hpp"

namespace qca {

/// Orthonormal (under hs_inner) real basis of a subspace of u(n).
///
/// Instances are immutable. The closure flag is set only by lie_closure (and
/// carried through operations that preserve it); it certifies that every
/// pairwise bracket of the elements lies in their span.
class LieBasis {
 public:
  /// The zero subspace of u(n).
  explicit LieBasis(int n);

  /// Orthonormal basis of span(elements). Elements must be skew-Hermitian.
  static LieBasis span_of(std::span<const ComplexMatrix> elements, const Tolerances& tol = {});

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int dim() const { return static_cast<int>(elements_.size()); }
  [[nodiscard]] bool closed() const { return closed_; }
  [[nodiscard]] const std::vector<ComplexMatrix>& elements() const { return elements_; }
  /// 2n^2 x dim matrix whose orthonormal columns are real_coords of the elements.
  [[nodiscard]] const RealMatrix& coords() const { return coords_; }

  /// Orthogonal projection of x onto the span.
  [[nodiscard]] ComplexMatrix project(const ComplexMatrix& x) const;
  /// |x - project(x)|_F.
  [[nodiscard]] double residual(const ComplexMatrix& x) const;
  /// Checks that every bracket [e_i, e_j] has residual <= rel * (1 + |[e_i, e_j]|).
  [[nodiscard]] bool brackets_close(double rel = 1e-8) const;

 private:
  friend LieBasis lie_closure(std::span<const ComplexMatrix>, const Tolerances&);
  friend LieBasis conjugate_basis(const LieBasis&, const ComplexMatrix&);

  int n_;
  std::vector<ComplexMatrix> elements_;
  RealMatrix coords_;
  bool closed_ = false;
};

enum class FormSymmetry { symmetric, antisymmetric };

/// A bilinear form M with X M + M X^T = 0 for every X of some algebra.
struct BilinearForm {
  int n = 0;
  ComplexMatrix matrix;
  FormSymmetry symmetry = FormSymmetry::symmetric;
  bool nondegenerate = false;
};

/// Smallest real Lie algebra containing the generators (breadth-first bracket closure).
LieBasis lie_closure(std::span<const ComplexMatrix> generators, const Tolerances& tol = {});

/// The full u(n) as a standard orthonormal basis (closed).
LieBasis unitary_algebra(int n);
/// su(n) as a standard orthonormal basis (closed).
LieBasis special_unitary_algebra(int n);

/// dim of the centralizer of iD in u(n): sum of squared eigenvalue multiplicities.
int centralizer_in_full(const DensityMatrix& d, const Tolerances& tol = {});

/// dim(L intersect C_D) = dim L - rank(ad_D restricted to L).
int centralizer_intersection_dim(const LieBasis& l, const DensityMatrix& d,
                                 const Tolerances& tol = {});

/// True iff iI lies in span(L).
bool contains_scalar(const LieBasis& l);

/// L intersect su(n) when L contains iI; L itself otherwise.
LieBasis without_scalar(const LieBasis& l, const Tolerances& tol = {});

/// Basis of {M : X M + M X^T = 0 for all X in L} within the given symmetry class.
/// Returned forms are complex-linearly independent, unit Frobenius norm.
std::vector<BilinearForm> find_invariant_form(const LieBasis& l, FormSymmetry symmetry,
                                              const Tolerances& tol = {});

/// True if some member of the solution space is nondegenerate. Tests each
/// basis form and one fixed generic combination of them.
bool has_nondegenerate_form(std::span<const BilinearForm> forms, const Tolerances& tol = {});

/// {U e U*}; requires U unitary (ValidationError otherwise).
LieBasis conjugate_basis(const LieBasis& l, const ComplexMatrix& u);

}  // namespace qca
