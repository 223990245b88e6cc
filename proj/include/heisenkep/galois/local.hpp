#pragma once

#include <complex>
#include <vector>

#include "heisenkep/exactalg/diffop.hpp"
#include "heisenkep/exactalg/roots.hpp"
#include "heisenkep/exactalg/serialize.hpp"

namespace heisenkep {

enum class PointKind { RegularSingular, Irregular };

const char* to_string(PointKind k);

/// Local data shared by all roots of `factor`.  Computations run in Q(i)[t]/(factor);
/// a factor is split whenever a zero divisor shows up, so valuations are constant on it.
struct FiniteSingularity {
  Poly factor;       // monic, square-free
  int multiplicity;  // in the cleared leading coefficient
  PointKind kind;
  /// Indicial polynomial sum_k e_k r(r-1)...(r-k+1); e_k reduced modulo factor.
  std::vector<Poly> indicial;
  /// All e_k are constants, hence the exponents are the same at every root.
  bool uniform = false;
  /// Exponents in Q(i) (uniform case only).
  std::vector<ExactRoot> exponents;
  /// Exponents outside Q(i) (uniform case only).
  int other_exponents = 0;
  std::vector<std::complex<double>> points;

  /// Indicial polynomial in r when uniform.
  Poly indicial_polynomial() const;
};

struct InfinityData {
  PointKind kind;
  /// Top row of L = sum_m t^m Q_m(theta), theta = t D: solutions t^lambda (1 + O(1/t))
  /// need growth_indicial(lambda) = 0.
  int top_power = 0;
  Poly growth_indicial;
  /// alpha = -lambda, exponents in the local variable 1/t.
  std::vector<ExactRoot> exponents;
  int other_exponents = 0;
};

struct SingularityData {
  int order = 0;
  Poly leading;            // cleared leading coefficient
  Poly singular_polynomial;  // its monic square-free part
  std::vector<FiniteSingularity> points;
  InfinityData infinity;

  /// Number of distinct finite singular points.
  int point_count() const;
  Json to_json() const;
};

SingularityData singularity_analysis(const DiffOperator& L);

/// Coefficients Q_m of the theta form, indexed by m - lowest power.
struct ThetaForm {
  int low = 0;
  std::vector<Poly> rows;
  int top() const { return low + static_cast<int>(rows.size()) - 1; }
};
ThetaForm theta_form(const DiffOperator& L);

/// Finite singular points and infinity classified by the Fuchs pole-order criterion.
struct FuchsReport {
  std::vector<std::pair<Poly, PointKind>> finite;
  PointKind infinity;
  bool fuchsian;
  Json to_json() const;
};
FuchsReport fuchsian_check(const DiffOperator& L);

}  // namespace heisenkep
