#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "tautsys/polyalg.hpp"

namespace tautsys {

// Polynomial differential form on C^m, m <= 32. A basis k-form is the wedge of
// the dz_i with bit i set, in increasing index order.
class PolyForm {
 public:
  using Mask = std::uint32_t;

  explicit PolyForm(std::size_t nvars = 0) : nvars_(nvars) {}
  static PolyForm top(std::size_t nvars);  // dz_0 ^ ... ^ dz_{m-1}

  std::size_t nvars() const { return nvars_; }
  const std::map<Mask, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Degree of the form; -1 for the zero form.
  int degree() const;

  void add(Mask m, const LaurentPoly& coeff);
  LaurentPoly coefficient(Mask m) const;

  PolyForm operator+(const PolyForm& o) const;
  PolyForm operator-(const PolyForm& o) const;
  PolyForm operator*(const Rat& c) const;
  bool operator==(const PolyForm& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  std::size_t nvars_;
  std::map<Mask, LaurentPoly> terms_;  // no zero coefficients
};

using VectorField = std::map<std::uint32_t, LaurentPoly>;

PolyForm contract(const PolyForm& form, const VectorField& v);
PolyForm exterior_derivative(const PolyForm& form);
// Cartan: L_v = d i_v + i_v d.
PolyForm lie_derivative(const PolyForm& form, const VectorField& v);

// Stiefel coordinates z_rs (1 <= r <= d, 1 <= s <= n) live at index (r-1)n + (s-1).
std::uint32_t stiefel_index(int r, int s, int n);
// u_ij = sum_l z_il d/dz_jl, generating the left gl_d action.
VectorField gl_d_field(int i, int j, int d, int n);
// Right action of E_ab: sum_r z_ra d/dz_rb.
VectorField gl_n_field(int a, int b, int d, int n);

inline constexpr int kVolformSizeCap = 12;

// i_{u_d} ... i_{u_1} of the top form, with i_{u_j} = i_{u_dj} ... i_{u_1j}.
PolyForm contracted_volume_form(int d, int n);
// Sum over tuples of d-subsets I_r of sign(I_1) ... sign(I_d) p_{I_1} ... p_{I_d}
// times the wedge of dz_rs over s outside I_r, where sign(I) is the sign of the
// shuffle putting I before its complement.
PolyForm closed_form_volume(int d, int n);

// c with a == c * b, if one exists.
std::optional<Rat> proportionality(const PolyForm& a, const PolyForm& b);

struct VolformCheck {
  int d = 0;
  int n = 0;
  std::size_t terms = 0;
  std::optional<Rat> closed_form_ratio;  // contracted = ratio * closed form
  bool sl_invariant = false;
  bool horizontal = false;
  std::optional<Rat> identity_eigenvalue;  // along sum_i u_ii
  std::optional<Rat> character_exponent;   // along u_11

  bool pass() const;
};
VolformCheck check_volume_form(int d, int n);

}  // namespace tautsys
