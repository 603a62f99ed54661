#include "sigma3/dynsys.hpp"

#include <stdexcept>

#include "sigma3/expr.hpp"

namespace sigma3 {

const VarTablePtr& g_universe() {
  static VarTablePtr t = VarTable::make({{"G2", 2},
                                         {"G4", 4},
                                         {"G5", 5},
                                         {"G7", 7},
                                         {"y4", 4},
                                         {"y6", 6},
                                         {"y8", 8},
                                         {"y10", 10}});
  return t;
}

VectorField make_system(SystemId which) {
  const auto& gv = g_universe();
  if (which == SystemId::I) {
    return VectorField{{
        parse_poly("-G5", gv),
        parse_poly("-2*G7", gv),
        parse_poly("-35*G2^4 - 42*G2^2*G4 - 3*G4^2 - 2*y4*(5*G2^2 + G4) + 4*y6*G2 - y8", gv),
        parse_poly("-7*(3*G2^5 + 10*G2^3*G4 + 3*G2*G4^2) - 10*y4*(G2^3 + G2*G4)"
                   " + 2*y6*(3*G2^2 + G4) - 3*y8*G2 + y10",
                   gv),
    }};
  }
  return VectorField{{
      parse_poly("G2*G5 - G7", gv),
      parse_poly("2*(G2*G7 - G4*G5)", gv),
      parse_poly("G5^2 + 14*G2^5 - 28*G2^3*G4 - 18*G2*G4^2 - 8*y4*G2*G4"
                 " + 2*y6*(G2^2 + G4) - 2*y8*G2 + y10",
                 gv),
      parse_poly("-G5*G7 + 21*G2^6 + 35*G2^4*G4 - 21*G2^2*G4^2 - 3*G4^3"
                 " + 2*y4*(5*G2^4 - G4^2) - 2*y6*(3*G2^3 - G2*G4)"
                 " + y8*(3*G2^2 - G4) - y10*G2",
                 gv),
  }};
}

std::pair<Poly, Poly> make_integrals() {
  const auto& gv = g_universe();
  Poly i12 = parse_poly(
      "2*G5*G7 - 7*G2^6 - 35*G2^4*G4 - 21*G2^2*G4^2 - G4^3"
      " - y4*(5*G2^4 + 10*G2^2*G4 + G4^2) + 4*y6*(G2^3 + G2*G4)"
      " - y8*(3*G2^2 + G4) + 2*y10*G2",
      gv);
  Poly i14 = parse_poly(
      "-G7^2 - G4*G5^2 + 2*G2*G5*G7 - 6*G2^7 - 14*G2^5*G4 + 14*G2^3*G4^2 + 6*G2*G4^3"
      " - 4*y4*(G2^5 - G2*G4^2) + y6*(3*G2^4 - 2*G2^2*G4 - G4^2)"
      " - 2*y8*(G2^3 - G2*G4) + y10*(G2^2 - G4)",
      gv);
  return {std::move(i12), std::move(i14)};
}

namespace {
const std::array<const char*, 4> kGNames{"G2", "G4", "G5", "G7"};
}

Poly lie_derivative(const VectorField& vf, const Poly& f) {
  Poly acc(f.vars());
  for (size_t i = 0; i < 4; ++i) acc = acc + vf.comp[i] * f.derivative(kGNames[i]);
  return acc;
}

VectorField lie_bracket(const VectorField& a, const VectorField& b) {
  VectorField r;
  for (size_t i = 0; i < 4; ++i)
    r.comp[i] = lie_derivative(a, b.comp[i]) - lie_derivative(b, a.comp[i]);
  return r;
}

CompiledGPoly::CompiledGPoly(const Poly& f, const YParams4& y) {
  if (!f.vars()->same_as(*g_universe()))
    throw std::invalid_argument("CompiledGPoly: expected the G universe");
  const auto& gv = f.vars();
  std::array<int, 4> gidx{};
  std::array<int, 4> yidx{};
  for (int i = 0; i < 4; ++i) gidx[static_cast<size_t>(i)] = gv->index_of(kGNames[static_cast<size_t>(i)]);
  yidx = {gv->index_of("y4"), gv->index_of("y6"), gv->index_of("y8"), gv->index_of("y10")};
  for (const auto& [m, c] : f.terms()) {
    Term t;
    t.c = c.to_complex();
    for (size_t i = 0; i < 4; ++i) t.e[i] = m[static_cast<size_t>(gidx[i])];
    for (size_t i = 0; i < 4; ++i) {
      int e = m[static_cast<size_t>(yidx[i])];
      for (int k = 0; k < e; ++k) t.c *= y[i];
    }
    if (t.c != std::complex<double>(0.0, 0.0)) terms_.push_back(t);
  }
}

std::complex<double> CompiledGPoly::eval(const State4& s) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& t : terms_) {
    std::complex<double> v = t.c;
    for (size_t i = 0; i < 4; ++i)
      for (int k = 0; k < t.e[i]; ++k) v *= s[i];
    acc += v;
  }
  return acc;
}

std::complex<double> eval_g_poly(const Poly& f, const State4& state, const YParams4& y) {
  return CompiledGPoly(f, y).eval(state);
}

State4 eval_field(const VectorField& vf, const State4& state, const YParams4& y) {
  State4 out;
  for (size_t i = 0; i < 4; ++i) out[i] = CompiledGPoly(vf.comp[i], y).eval(state);
  return out;
}

}  // namespace sigma3
