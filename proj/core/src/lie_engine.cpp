#include "qca/lie_engine.hpp"

#include <cmath>
#include <deque>
#include <sstream>
#include <utility>

namespace qca {
namespace {

const Complex kI{0.0, 1.0};

// Incremental orthonormal basis in real coordinates. Classical Gram-Schmidt
// applied twice before the acceptance decision.
class SpanBuilder {
 public:
  SpanBuilder(int n, double accept) : n_(n), accept_(accept) {
    const Eigen::Index len = 2 * static_cast<Eigen::Index>(n) * n;
    q_.resize(len, 0);
  }

  // Returns true if x contributed a new direction.
  bool add(const ComplexMatrix& x) {
    RealVector v = real_coords(x);
    const double norm = v.norm();
    if (dim() > 0) {
      for (int pass = 0; pass < 2; ++pass) {
        v.noalias() -= q_ * (q_.transpose() * v);
      }
    }
    const double res = v.norm();
    if (!(res > accept_ * (1.0 + norm))) {
      return false;
    }
    q_.conservativeResize(Eigen::NoChange, q_.cols() + 1);
    q_.col(q_.cols() - 1) = v / res;
    elements_.push_back(from_real_coords(q_.col(q_.cols() - 1), n_));
    return true;
  }

  [[nodiscard]] int dim() const { return static_cast<int>(q_.cols()); }
  [[nodiscard]] const ComplexMatrix& element(int k) const {
    return elements_[static_cast<std::size_t>(k)];
  }

  std::vector<ComplexMatrix> take_elements() { return std::move(elements_); }
  RealMatrix take_coords() { return std::move(q_); }

 private:
  int n_;
  double accept_;
  RealMatrix q_;
  std::vector<ComplexMatrix> elements_;
};

int common_dimension(std::span<const ComplexMatrix> mats) {
  if (mats.empty()) {
    throw PreconditionError("need at least one matrix");
  }
  const auto n = mats.front().rows();
  for (const auto& m : mats) {
    require_square(m, "generator");
    if (m.rows() != n) {
      std::ostringstream msg;
      msg << "generators have mixed dimensions (" << n << " and " << m.rows() << ")";
      throw ShapeError(msg.str());
    }
  }
  return static_cast<int>(n);
}

ComplexMatrix unit_scalar(int n) {
  return (kI / std::sqrt(static_cast<double>(n))) * ComplexMatrix::Identity(n, n);
}

// Real-parameter basis of complex n x n matrices with M^T = +/- M.
std::vector<ComplexMatrix> form_parameter_basis(int n, FormSymmetry symmetry) {
  std::vector<ComplexMatrix> out;
  const double sign = symmetry == FormSymmetry::symmetric ? 1.0 : -1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (i == j && symmetry == FormSymmetry::antisymmetric) {
        continue;
      }
      ComplexMatrix e = ComplexMatrix::Zero(n, n);
      e(i, j) += 1.0;
      e(j, i) += sign;
      out.push_back(e);
      out.push_back(kI * e);
    }
  }
  return out;
}

bool form_nondegenerate(const ComplexMatrix& m, const Tolerances& tol) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  return smax > 0.0 && smin > static_cast<double>(m.rows()) * smax * tol.rank_rel;
}

}  // namespace

LieBasis::LieBasis(int n) : n_(n), coords_(2 * static_cast<Eigen::Index>(n) * n, 0) {
  if (n < 1) {
    throw PreconditionError("matrix dimension must be positive");
  }
}

LieBasis LieBasis::span_of(std::span<const ComplexMatrix> elements, const Tolerances& tol) {
  const int n = common_dimension(elements);
  SpanBuilder sb(n, tol.closure_accept);
  for (const auto& e : elements) {
    sb.add(validated_skew(e, tol, "basis element"));
  }
  LieBasis out(n);
  out.elements_ = sb.take_elements();
  out.coords_ = sb.take_coords();
  return out;
}

ComplexMatrix LieBasis::project(const ComplexMatrix& x) const {
  const RealVector v = real_coords(x);
  if (v.size() != coords_.rows()) {
    throw ShapeError("projection operand has the wrong dimension");
  }
  if (dim() == 0) {
    return ComplexMatrix::Zero(n_, n_);
  }
  return from_real_coords(coords_ * (coords_.transpose() * v), n_);
}

double LieBasis::residual(const ComplexMatrix& x) const {
  return (x - project(x)).norm();
}

bool LieBasis::brackets_close(double rel) const {
  for (int i = 0; i < dim(); ++i) {
    for (int j = i + 1; j < dim(); ++j) {
      const ComplexMatrix b = bracket(elements_[static_cast<std::size_t>(i)],
                                      elements_[static_cast<std::size_t>(j)]);
      if (residual(b) > rel * (1.0 + b.norm())) {
        return false;
      }
    }
  }
  return true;
}

LieBasis lie_closure(std::span<const ComplexMatrix> generators, const Tolerances& tol) {
  const int n = common_dimension(generators);
  const int full = n * n;
  SpanBuilder sb(n, tol.closure_accept);
  std::deque<std::pair<int, int>> work;

  auto enqueue_new = [&] {
    const int k = sb.dim() - 1;
    for (int t = 0; t < k; ++t) {
      work.emplace_back(k, t);
    }
  };

  for (const auto& g : generators) {
    if (sb.dim() == full) {
      break;
    }
    if (sb.add(validated_skew(g, tol, "generator"))) {
      enqueue_new();
    }
  }
  while (!work.empty() && sb.dim() < full) {
    const auto [i, j] = work.front();
    work.pop_front();
    if (sb.add(bracket(sb.element(i), sb.element(j)))) {
      enqueue_new();
    }
  }

  LieBasis out(n);
  out.elements_ = sb.take_elements();
  out.coords_ = sb.take_coords();
  out.closed_ = true;
  return out;
}

LieBasis unitary_algebra(int n) {
  std::vector<ComplexMatrix> gens;
  for (int j = 0; j < n; ++j) {
    ComplexMatrix d = ComplexMatrix::Zero(n, n);
    d(j, j) = kI;
    gens.push_back(d);
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix a = ComplexMatrix::Zero(n, n);
      a(j, k) = 1.0;
      a(k, j) = -1.0;
      gens.push_back(a);
      ComplexMatrix s = ComplexMatrix::Zero(n, n);
      s(j, k) = kI;
      s(k, j) = kI;
      gens.push_back(s);
    }
  }
  return lie_closure(gens);
}

LieBasis special_unitary_algebra(int n) {
  std::vector<ComplexMatrix> gens;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix a = ComplexMatrix::Zero(n, n);
      a(j, k) = 1.0;
      a(k, j) = -1.0;
      gens.push_back(a);
      ComplexMatrix s = ComplexMatrix::Zero(n, n);
      s(j, k) = kI;
      s(k, j) = kI;
      gens.push_back(s);
    }
  }
  // Generalized Gell-Mann diagonals.
  for (int l = 1; l < n; ++l) {
    ComplexMatrix d = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < l; ++k) {
      d(k, k) = kI;
    }
    d(l, l) = -static_cast<double>(l) * kI;
    gens.push_back(d);
  }
  if (gens.empty()) {
    return LieBasis(n);
  }
  return lie_closure(gens);
}

int centralizer_in_full(const DensityMatrix& d, const Tolerances& tol) {
  int total = 0;
  for (int m : eigenvalue_multiplicities(d, tol)) {
    total += m * m;
  }
  return total;
}

int centralizer_intersection_dim(const LieBasis& l, const DensityMatrix& d,
                                 const Tolerances& tol) {
  if (l.n() != d.size()) {
    std::ostringstream msg;
    msg << "algebra acts on C^" << l.n() << " but density matrix is " << d.size() << "x"
        << d.size();
    throw ShapeError(msg.str());
  }
  // Refuse the same ill-conditioned spectra centralizer_in_full refuses.
  (void)eigenvalue_multiplicities(d, tol);
  if (l.dim() == 0) {
    return 0;
  }
  const ComplexMatrix& dm = d.matrix();
  RealMatrix image(2 * static_cast<Eigen::Index>(l.n()) * l.n(), l.dim());
  for (int k = 0; k < l.dim(); ++k) {
    image.col(k) = real_coords(bracket(l.elements()[static_cast<std::size_t>(k)], dm));
  }
  return l.dim() - numerical_rank(image, dm.norm(), tol);
}

bool contains_scalar(const LieBasis& l) {
  return l.residual(unit_scalar(l.n())) <= 1e-8;
}

LieBasis without_scalar(const LieBasis& l, const Tolerances& tol) {
  if (!contains_scalar(l)) {
    return l;
  }
  const ComplexMatrix s = unit_scalar(l.n());
  std::vector<ComplexMatrix> traceless;
  traceless.reserve(l.elements().size());
  for (const auto& e : l.elements()) {
    traceless.push_back(e - hs_inner(s, e) * s);
  }
  // L = (L intersect su(n)) + span{iI}, and the first summand is bracket-closed.
  LieBasis out = LieBasis::span_of(traceless, tol);
  return l.closed() ? lie_closure(out.elements(), tol) : out;
}

std::vector<BilinearForm> find_invariant_form(const LieBasis& l, FormSymmetry symmetry,
                                              const Tolerances& tol) {
  const int n = l.n();
  const std::vector<ComplexMatrix> params = form_parameter_basis(n, symmetry);
  std::vector<BilinearForm> out;
  if (params.empty()) {
    return out;
  }
  const Eigen::Index block = 2 * static_cast<Eigen::Index>(n) * n;
  const auto cols = static_cast<Eigen::Index>(params.size());
  RealMatrix system(block * std::max(l.dim(), 1), cols);
  system.setZero();
  for (int a = 0; a < l.dim(); ++a) {
    const ComplexMatrix& x = l.elements()[static_cast<std::size_t>(a)];
    for (Eigen::Index k = 0; k < cols; ++k) {
      const ComplexMatrix& m = params[static_cast<std::size_t>(k)];
      system.block(a * block, k, block, 1) = real_coords(x * m + m * x.transpose());
    }
  }

  Eigen::JacobiSVD<RealMatrix> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double threshold =
      static_cast<double>(std::max(system.rows(), system.cols())) * smax * tol.rank_rel;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) {
      ++rank;
    }
  }

  // The real null space is closed under M -> iM; keep a complex-independent subset.
  std::vector<ComplexVector> kept;
  for (Eigen::Index c = rank; c < cols; ++c) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < cols; ++k) {
      m += svd.matrixV()(k, c) * params[static_cast<std::size_t>(k)];
    }
    ComplexVector v = m.reshaped();
    for (const auto& q : kept) {
      v -= q.dot(v) * q;
    }
    for (const auto& q : kept) {
      v -= q.dot(v) * q;
    }
    const double res = v.norm();
    if (res <= 1e-6 * (1.0 + m.norm())) {
      continue;
    }
    v /= res;
    kept.push_back(v);

    ComplexMatrix form = v.reshaped(n, n);
    Eigen::Index r = 0;
    Eigen::Index c2 = 0;
    form.cwiseAbs().maxCoeff(&r, &c2);
    form *= std::conj(form(r, c2)) / std::abs(form(r, c2));
    // Exact symmetry after the phase fix.
    form = symmetry == FormSymmetry::symmetric ? ComplexMatrix(0.5 * (form + form.transpose()))
                                               : ComplexMatrix(0.5 * (form - form.transpose()));
    form /= form.norm();
    out.push_back(BilinearForm{n, form, symmetry, form_nondegenerate(form, tol)});
  }
  return out;
}

bool has_nondegenerate_form(std::span<const BilinearForm> forms, const Tolerances& tol) {
  if (forms.empty()) {
    return false;
  }
  ComplexMatrix combo = ComplexMatrix::Zero(forms.front().n, forms.front().n);
  double weight = 1.0;
  for (const auto& f : forms) {
    if (f.nondegenerate) {
      return true;
    }
    // Incommensurate weights so that no cancellation is structural.
    combo += Complex(weight, 0.5 * weight * weight) * f.matrix;
    weight *= 1.6180339887;
  }
  return form_nondegenerate(combo, tol);
}

LieBasis conjugate_basis(const LieBasis& l, const ComplexMatrix& u) {
  require_square(u, "conjugating matrix");
  if (u.rows() != l.n()) {
    throw ShapeError("conjugating matrix dimension does not match the algebra");
  }
  if (unitarity_defect(u) > 1e-8 * std::sqrt(static_cast<double>(l.n()))) {
    throw ValidationError("conjugating matrix is not unitary");
  }
  LieBasis out(l.n());
  out.closed_ = l.closed_;
  out.coords_.resize(l.coords_.rows(), l.dim());
  for (int k = 0; k < l.dim(); ++k) {
    ComplexMatrix e = u * l.elements()[static_cast<std::size_t>(k)] * u.adjoint();
    e = skew_project(e);
    out.coords_.col(k) = real_coords(e);
    out.elements_.push_back(std::move(e));
  }
  return out;
}

}  // namespace qca
