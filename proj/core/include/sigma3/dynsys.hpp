#pragma once

// The two polynomial dynamical systems on C^4 with coordinates
// (G2, G4, G5, G7) and constant parameters y4, y6, y8, y10, together with
// their two polynomial first integrals I12 and I14.

#include <array>
#include <complex>
#include <utility>

#include "sigma3/poly.hpp"

namespace sigma3 {

// G2, G4, G5, G7, y4, y6, y8, y10 with weights 2,4,5,7,4,6,8,10
const VarTablePtr& g_universe();

enum class SystemId { I, II };
inline const char* system_name(SystemId s) { return s == SystemId::I ? "I" : "II"; }

struct VectorField {
  std::array<Poly, 4> comp;  // dG2, dG4, dG5, dG7
};

VectorField make_system(SystemId which);
// (I12, I14)
std::pair<Poly, Poly> make_integrals();

// directional derivative sum_i comp_i * df/dG_i, exact
Poly lie_derivative(const VectorField& vf, const Poly& f);
// [a, b] acting on coordinates: a(b_i) - b(a_i)
VectorField lie_bracket(const VectorField& a, const VectorField& b);

using State4 = std::array<std::complex<double>, 4>;
using YParams4 = std::array<std::complex<double>, 4>;  // y4, y6, y8, y10

State4 eval_field(const VectorField& vf, const State4& state, const YParams4& y);
std::complex<double> eval_g_poly(const Poly& f, const State4& state, const YParams4& y);

// a vector field or polynomial compiled for repeated numeric evaluation
class CompiledGPoly {
 public:
  CompiledGPoly() = default;
  CompiledGPoly(const Poly& f, const YParams4& y);
  std::complex<double> eval(const State4& s) const;

 private:
  struct Term {
    std::complex<double> c;
    std::array<int, 4> e;
  };
  std::vector<Term> terms_;
};

}  // namespace sigma3
