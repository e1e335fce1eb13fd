#include "qca/analysis.hpp"

#include <cmath>
#include <sstream>

namespace qca {
namespace {

bool all_traceless(const LieBasis& l) {
  for (const auto& e : l.elements()) {
    if (std::abs(e.trace()) > 1e-8) {
      return false;
    }
  }
  return true;
}

std::string dims_note(const char* name, const LieBasis& l) {
  std::ostringstream s;
  s << "dim " << name << " = " << l.dim() << " (n = " << l.n() << ", dim u(n) = " << l.n() * l.n()
    << ")";
  return s.str();
}

// True when B is (numerically) a conjugate of so(4) inside u(4): six
// dimensions and a nondegenerate symmetric invariant form.
bool is_so4_conjugate(const LieBasis& b, const Tolerances& tol) {
  if (b.n() != 4 || b.dim() != 6) {
    return false;
  }
  const auto forms = find_invariant_form(b, FormSymmetry::symmetric, tol);
  return has_nondegenerate_form(forms, tol);
}

SmallTimeReport small_time_from(const LieBasis& b, const LieBasis& l, const Tolerances& tol) {
  SmallTimeReport r;
  r.dim_b = b.dim();
  const int n = b.n();
  const ClassifyResult cb = classify_detailed(b, tol);
  const bool full_l = l.dim() >= n * n - 1 && test_oc(l).controllable;

  {
    std::ostringstream s;
    s << "drift-free algebra B: dim " << b.dim() << ", class " << to_string(cb.label);
    r.diagnostics.push_back(s.str());
  }

  if (cb.label == Classification::transitive_unclassified) {
    r.label = SmallTimeObstruction::inconclusive;
    r.hypothesis = HypothesisStatus::unverified;
    r.diagnostics.push_back(
        "B passes the transitivity test but is not a recognised transitive algebra; "
        "numerical rank is suspect, no obstruction verdict");
    return r;
  }

  if (test_psc(b, tol)) {
    r.label = SmallTimeObstruction::b_transitive;
    if (b.dim() == l.dim()) {
      r.hypothesis = HypothesisStatus::holds;
      r.diagnostics.push_back("B equals L; no proper subalgebra of L contains B");
    } else {
      r.hypothesis = HypothesisStatus::fails;
      r.diagnostics.push_back("B is itself a transitive proper subalgebra of L");
    }
    if (cb.label == Classification::sp_conjugate ||
        cb.label == Classification::sp_conjugate_plus_scalar) {
      r.diagnostics.push_back(
          "B is sp(n/2)-conjugate; the only subalgebra of su(n) properly containing it is su(n)");
    }
    r.diagnostics.push_back(
        "no small-time obstruction from B; this does not establish small-time controllability");
    return r;
  }

  r.label = SmallTimeObstruction::b_not_transitive;
  if (b.dim() == l.dim()) {
    r.hypothesis = HypothesisStatus::holds;
    r.diagnostics.push_back("B equals L; no proper subalgebra of L contains B");
  } else if (full_l && is_so4_conjugate(b, tol)) {
    r.hypothesis = HypothesisStatus::holds;
    r.diagnostics.push_back(
        "B is conjugate to so(4), which is maximal in su(4) and is not sp(2); "
        "B lies in no transitive proper subalgebra");
  } else {
    r.hypothesis = HypothesisStatus::unverified;
    r.diagnostics.push_back(
        "hypothesis not verified: whether B lies in a transitive proper subalgebra of L "
        "has no general decision procedure here");
  }
  if (r.hypothesis == HypothesisStatus::holds && test_psc(l, tol)) {
    r.diagnostics.push_back(
        "B is not transitive and lies in no transitive proper subalgebra: the system is not "
        "state controllable in arbitrarily small time");
  } else {
    r.diagnostics.push_back(
        "B is not transitive: state transfer in arbitrarily small time would require B to "
        "sit inside a transitive proper subalgebra of L");
  }
  return r;
}

}  // namespace

SystemModel::SystemModel(ComplexMatrix drift, std::vector<ComplexMatrix> controls,
                         std::string label, const Tolerances& tol)
    : label_(std::move(label)) {
  if (controls.empty()) {
    throw PreconditionError("system needs at least one control matrix");
  }
  drift_ = validated_skew(drift, tol, "drift");
  controls_.reserve(controls.size());
  for (std::size_t k = 0; k < controls.size(); ++k) {
    const std::string what = "control " + std::to_string(k + 1);
    if (controls[k].rows() != drift_.rows() || controls[k].cols() != drift_.cols()) {
      std::ostringstream msg;
      msg << what << " is " << controls[k].rows() << "x" << controls[k].cols()
          << " but the drift is " << drift_.rows() << "x" << drift_.cols();
      throw ShapeError(msg.str());
    }
    controls_.push_back(validated_skew(controls[k], tol, what.c_str()));
  }
}

std::vector<ComplexMatrix> SystemModel::generators() const {
  std::vector<ComplexMatrix> g;
  g.reserve(controls_.size() + 1);
  g.push_back(drift_);
  g.insert(g.end(), controls_.begin(), controls_.end());
  return g;
}

std::string_view to_string(OcFlavor f) {
  switch (f) {
    case OcFlavor::special_unitary:
      return "special-unitary";
    case OcFlavor::unitary:
      return "unitary";
    case OcFlavor::none:
      break;
  }
  return "none";
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::su_n:
      return "su(n)";
    case Classification::u_n:
      return "u(n)";
    case Classification::sp_conjugate:
      return "sp-conjugate";
    case Classification::sp_conjugate_plus_scalar:
      return "sp-conjugate-plus-scalar";
    case Classification::not_transitive:
      return "not-transitive";
    case Classification::transitive_unclassified:
      return "transitive-unclassified";
  }
  return "not-transitive";
}

std::string_view to_string(SmallTimeObstruction s) {
  switch (s) {
    case SmallTimeObstruction::b_not_transitive:
      return "B-not-transitive";
    case SmallTimeObstruction::b_transitive:
      return "B-transitive";
    case SmallTimeObstruction::inconclusive:
      break;
  }
  return "inconclusive";
}

std::string_view to_string(HypothesisStatus h) {
  switch (h) {
    case HypothesisStatus::holds:
      return "holds";
    case HypothesisStatus::fails:
      return "fails";
    case HypothesisStatus::unverified:
      break;
  }
  return "unverified";
}

DensityMatrix reference_pure_density(int n) {
  return DensityMatrix::pure(StateVector::basis(n, 0));
}

OcVerdict test_oc(const LieBasis& l) {
  const int full = l.n() * l.n();
  if (l.dim() == full) {
    return {true, OcFlavor::unitary};
  }
  if (l.dim() == full - 1 && all_traceless(l)) {
    return {true, OcFlavor::special_unitary};
  }
  return {};
}

bool test_psc(const LieBasis& l, const Tolerances& tol) {
  const int n = l.n();
  const int moved = l.dim() - centralizer_intersection_dim(l, reference_pure_density(n), tol);
  return moved == 2 * n - 2;
}

bool test_esc(const LieBasis& l, const Tolerances& tol) { return test_psc(l, tol); }

bool test_dmc(const LieBasis& l) { return test_oc(l).controllable; }

OrbitDimensions orbit_dimensions(const LieBasis& l, const DensityMatrix& d,
                                 const Tolerances& tol) {
  if (l.n() != d.size()) {
    throw ShapeError("density matrix dimension does not match the algebra");
  }
  OrbitDimensions od;
  od.full = l.n() * l.n() - centralizer_in_full(d, tol);
  od.reached = l.dim() - centralizer_intersection_dim(l, d, tol);
  return od;
}

bool orbit_equality(const LieBasis& l, const DensityMatrix& d, const Tolerances& tol) {
  return orbit_dimensions(l, d, tol).equal();
}

ClassifyResult classify_detailed(const LieBasis& l, const Tolerances& tol) {
  ClassifyResult r;
  const int n = l.n();
  const int dim = l.dim();
  if (dim == n * n) {
    r.label = Classification::u_n;
    return r;
  }
  if (dim == n * n - 1 && all_traceless(l)) {
    r.label = Classification::su_n;
    return r;
  }
  const bool psc = test_psc(l, tol);
  if (psc && n % 2 == 0) {
    const int k = n / 2;
    if (dim == sp_dimension(k) || dim == sp_dimension(k) + 1) {
      const LieBasis core = without_scalar(l, tol);
      const auto forms = find_invariant_form(core, FormSymmetry::antisymmetric, tol);
      if (core.dim() == sp_dimension(k) && has_nondegenerate_form(forms, tol)) {
        r.label = contains_scalar(l) ? Classification::sp_conjugate_plus_scalar
                                     : Classification::sp_conjugate;
        r.diagnostics.push_back(
            "nondegenerate antisymmetric invariant form found (sp(n/2) witness)");
        return r;
      }
    }
  }
  if (!psc) {
    r.label = Classification::not_transitive;
    return r;
  }
  r.label = Classification::transitive_unclassified;
  r.diagnostics.push_back(
      "transitive, unclassified: passes the pure-state test but is neither su(n), u(n) nor "
      "sp-conjugate; suspect a numerical-rank failure");
  return r;
}

Classification classify(const LieBasis& l, const Tolerances& tol) {
  return classify_detailed(l, tol).label;
}

RealMatrix realify(const ComplexMatrix& x) {
  const auto r = x.rows();
  const auto c = x.cols();
  RealMatrix out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = x.real();
  out.topRightCorner(r, c) = -x.imag();
  out.bottomLeftCorner(r, c) = x.imag();
  out.bottomRightCorner(r, c) = x.real();
  return out;
}

RealVector realify_state(const ComplexVector& psi) {
  const auto n = psi.size();
  RealVector out(2 * n);
  out.head(n) = psi.real();
  out.tail(n) = psi.imag();
  return out;
}

RealVector realify_state(const StateVector& psi) { return realify_state(psi.amplitudes()); }

SmallTimeReport small_time_report(const SystemModel& model, const Tolerances& tol) {
  const LieBasis b = lie_closure(model.controls(), tol);
  const LieBasis l = lie_closure(model.generators(), tol);
  return small_time_from(b, l, tol);
}

AnalysisReport analyze(const SystemModel& model, const Tolerances& tol) {
  const LieBasis l = lie_closure(model.generators(), tol);
  const LieBasis b = lie_closure(model.controls(), tol);

  AnalysisReport r;
  r.n = model.n();
  r.dim_l = l.dim();
  r.dim_b = b.dim();
  r.traceless = all_traceless(l);
  r.contains_scalar = contains_scalar(l);
  r.oc = test_oc(l);
  r.psc = test_psc(l, tol);
  r.esc = r.psc;
  r.dmc = r.oc.controllable;

  ClassifyResult cls = classify_detailed(l, tol);
  r.classification = cls.label;

  SmallTimeReport st = small_time_from(b, l, tol);
  r.small_time_obstruction = st.label;
  r.small_time_hypothesis = st.hypothesis;

  r.diagnostics.push_back(dims_note("L", l));
  r.diagnostics.push_back(dims_note("B", b));
  r.diagnostics.push_back("ESC is equivalent to PSC; DMC is equivalent to OC");
  for (auto& d : cls.diagnostics) {
    r.diagnostics.push_back(std::move(d));
  }
  for (auto& d : st.diagnostics) {
    r.diagnostics.push_back(std::move(d));
  }

  if (r.oc.controllable && !r.psc) {
    throw ConditioningError(
        "operator controllable but failed the pure-state test; numerical ranks are unreliable "
        "for this input");
  }
  return r;
}

}  // namespace qca
