#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "comblab/series.hpp"
#include "comblab/types.hpp"

// Generating functions of the simple random walk on the 2-dimensional comb.
//
// Every function returns a PowerSeries truncated at the requested order. Unless
// stated otherwise the series variable is z, the step-counting variable: the
// n-th coefficient is a probability or an expectation after n steps.
namespace comblab::genfun {

enum class Variable { z, w, v };

std::string to_string(Variable v);

/// A named series together with the formal variable it is written in. Entries
/// in different variables are never combined without an explicit substitution.
struct GFCatalogEntry {
  std::string name;
  Variable variable;
  PowerSeries series;
};

/// Adds two catalog entries written in the same variable; throws UsageError
/// when the variables differ.
GFCatalogEntry add_entries(const GFCatalogEntry& a, const GFCatalogEntry& b);

/// Substitutes v = inner(z) (or w = inner(z)) into entry, producing a z-series.
GFCatalogEntry substitute(const GFCatalogEntry& entry, const PowerSeries& inner);

// ---------------------------------------------------------------------------
// Green function of the comb, started at the origin.

PowerSeries green_G(std::size_t order);
PowerSeries green_F1(std::size_t order);
PowerSeries green_F2(std::size_t order);

/// G((0,0),(k,l)|z): n-th coefficient is p^(n)((0,0),(k,l)).
/// Requires order >= |k| + |l|.
PowerSeries green(int k, int l, std::size_t order);

/// Excursion GFs along a single tooth, reused by the deviation and span
/// formulas. tooth_return is G~(0,0|z), the GF of tooth paths from the axis
/// back to it that do not use the axis loop.
PowerSeries tooth_return(std::size_t order);

/// Final-excursion factor E(z) = G~(0,0) + 2 sum_{j>=1} G~(0,j).
PowerSeries excursion_E(std::size_t order);

/// w(z) = (1 - sqrt(1 - z^2)) / (2z): the weight of one horizontal step
/// together with the tooth excursion preceding it.
PowerSeries w_of_z(std::size_t order);

/// The solution v, v(0) = 0, of v / (1 + v^2) = w.
PowerSeries catalan_inverse(const PowerSeries& w);

/// v(z) for the horizontal substitution v/(1+v^2) = w(z).
PowerSeries v_horizontal(std::size_t order);
/// v(z) for the vertical substitution v/(1+v^2) = z/2.
PowerSeries v_vertical(std::size_t order);

// ---------------------------------------------------------------------------
// Tridiagonal determinants and bounded one-dimensional path counts.

/// Determinant a_i(x) of the (i+1)x(i+1) tridiagonal matrix with 1 on the
/// diagonal and -x off it; a_{-1} = 1 and a_i = a_{i-1} - x^2 a_{i-2}.
/// Requires i >= -1 and x[0] == 0.
PowerSeries tridiag_det(int i, const PowerSeries& x);

/// a_i(z/2) as a series in z. Requires i >= -1.
PowerSeries a_det(int i, std::size_t order);

/// a_i(z/2) from the closed form (1 - v^{2i+4}) / ((1-v^2)(1+v^2)^{i+1})
/// after substituting v = v_vertical(z).
PowerSeries a_det_closed_form(int i, std::size_t order);

/// Psi_{h,k;l}(x): GF (in the step weight x) of +-1 paths from 0 to l that
/// stay inside [-k, h]. Requires h, k >= 0 and -k <= l <= h.
PowerSeries psi_two_sided(int h, int k, int l, const PowerSeries& x);
/// Same with x = w, the formal variable itself: coefficients are path counts.
PowerSeries psi_two_sided(int h, int k, int l, std::size_t order);

/// sum_{l=-k}^{h} Psi_{h,k;l}(x), computed as a single ratio.
PowerSeries psi_window_total(int h, int k, const PowerSeries& x);

/// psi_h(x) = sum_{|l|<=h} Psi_{h,h;l}(x).
PowerSeries psi_deviation(int h, const PowerSeries& x);

/// psi_h(w) from (1+v^2)(1-v^{h+1})^2 / ((1-v)^2 (1+v^{2h+2})), w = v/(1+v^2),
/// as a series in w.
PowerSeries psi_deviation_closed_form(int h, std::size_t order);

// ---------------------------------------------------------------------------
// Horizontal and vertical maximal deviation.

/// H_h(z) = psi_h(w(z)) E(z); n-th coefficient is P(D_n^x <= h).
PowerSeries deviation_H(int h, std::size_t order);

/// psi^_{h,l}(z); n-th coefficient is P(D_n^y <= h, |S_n^y| = l). 0 <= l <= h.
PowerSeries psi_hat(int h, int l, std::size_t order);
/// psi^_h(z) = sum_l psi^_{h,l}; n-th coefficient is P(D_n^y <= h).
PowerSeries psi_hat_sum(int h, std::size_t order);
/// psi^_h from its closed form in v (v/(1+v^2) = z/2).
PowerSeries psi_hat_sum_closed_form(int h, std::size_t order);

// ---------------------------------------------------------------------------
// Expectations.

/// sum_n E|S_n^x| z^n and sum_n E|S_n^y| z^n.
PowerSeries mean_dist_x_gf(std::size_t order);
PowerSeries mean_dist_y_gf(std::size_t order);

/// sum_n E[D_n^axis] z^n = sum_{h>=0} (1/(1-z) - P-GF of D <= h). The h-sum
/// stops at h = order - 1 because P(D_n > h) = 0 whenever h >= n.
PowerSeries mean_deviation_gf(Axis axis, std::size_t order);

/// The same expectations from the closed forms in v:
///   x: 2 (1+6v^2+v^4)/(1-v)^4 sum_{h>=1} v^h/(1+v^{2h})
///   y: (1+v^2)(1+v)/(1-v)^2 sum_{h>=1} v^h/(1+v^{2h+1})
PowerSeries mean_deviation_closed_form(Axis axis, std::size_t order);

/// sum_n E[m_n^axis] z^n where m_n is the running maximum of the coordinate.
/// E[M_n] = 2 E[m_n].
PowerSeries span_gf_x(std::size_t order);
PowerSeries span_gf_y(std::size_t order);

/// Second routes for the spans:
///   x: (1+6v^2+v^4)/(1-v)^4 * v/(1-v) with v = v_horizontal
///   y: every h from the block tridiagonal system (no closed form)
PowerSeries span_gf_x_closed_form(std::size_t order);
PowerSeries span_gf_y_linear_system(std::size_t order);

/// P-GF of m_n^y <= h from the block tridiagonal system, with the lower
/// barrier at -(order+1) (no restriction below the truncation order).
PowerSeries vertical_max_survival(int h, std::size_t order);

// ---------------------------------------------------------------------------
// Exit time from the infinity-norm ball.

/// Theta_n(z); k-th coefficient is P(T_n^inf > k). Requires n >= 1.
PowerSeries theta_gf(int n, std::size_t order);

/// Bounded tooth excursions used by theta_gf (all in z):
///   G~_n(z)                 tooth returns with |height| <= n
///   sum_{l=0}^n G~_n(0,l|z) final excursion ending anywhere on the tooth
PowerSeries bounded_tooth_return(int n, std::size_t order);
PowerSeries bounded_final_excursion(int n, std::size_t order);

/// Named series exposed to the command line (name, parameters in the name).
std::vector<std::string> catalog_names();

}  // namespace comblab::genfun
