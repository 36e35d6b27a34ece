#include "comblab/genfun.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "comblab/errors.hpp"

namespace comblab::genfun {
namespace {

using PS = PowerSeries;

PS one(std::size_t order) { return PS::constant(Rational(1), order); }
PS zvar(std::size_t order) { return PS::variable(order); }
PS half_z(std::size_t order) { return PS::monomial(Rational(1, 2), 1, order); }

// sqrt(1 - z^2) at the given order.
PS sqrt_one_minus_z2(std::size_t order) {
  return sqrt_series(one(order) - PS::monomial(Rational(1), 2, order));
}

// Table of a_i(x) for i = -1 .. max_i, and the partial sums
// S_h(x) = sum_{l=0}^{h} x^l a_{h-l-1}(x) = a_{h-1} + x S_{h-1}, S_0 = 1.
class TridiagTable {
 public:
  TridiagTable(PS x, int max_i) : x_(std::move(x)) {
    if (sgn(x_[0]) != 0) {
      throw DomainError("tridiagonal determinant: step weight must vanish at 0");
    }
    const std::size_t n = x_.order();
    const PS x2 = mul(x_, x_);
    dets_.reserve(static_cast<std::size_t>(max_i) + 2);
    dets_.push_back(one(n));  // a_{-1}
    if (max_i >= 0) dets_.push_back(one(n));  // a_0
    for (int i = 1; i <= max_i; ++i) {
      dets_.push_back(sub(dets_.back(), mul(x2, dets_[dets_.size() - 2])));
    }
    partial_.reserve(static_cast<std::size_t>(max_i) + 2);
    partial_.push_back(one(n));  // S_0 = a_{-1}
    for (int h = 1; h <= max_i + 1; ++h) {
      partial_.push_back(add(a(h - 1), mul(x_, partial_.back())));
    }
  }

  const PS& x() const { return x_; }
  int max_index() const { return static_cast<int>(dets_.size()) - 2; }

  // a_i for -1 <= i <= max_index().
  const PS& a(int i) const {
    if (i < -1 || i > max_index()) {
      throw UsageError("tridiagonal determinant index " + std::to_string(i) + " out of range");
    }
    return dets_[static_cast<std::size_t>(i + 1)];
  }

  // a_i with the convention a_{-2} = 0, the value the recurrence forces at
  // i = 0. Only used inside the reflecting-origin systems.
  PS a_or_zero(int i) const {
    if (i == -2) return PS(x_.order());
    return a(i);
  }

  // S_h for 0 <= h <= max_index() + 1.
  const PS& partial(int h) const { return partial_.at(static_cast<std::size_t>(h)); }

 private:
  PS x_;
  std::vector<PS> dets_;
  std::vector<PS> partial_;
};

// sum_{l=-k}^{h} Psi_{h,k;l} = (a_{k-1} S_h + a_{h-1} (S_k - a_{k-1})) / a_{h+k}
PS window_total(const TridiagTable& t, int h, int k) {
  const PS numer = add(mul(t.a(k - 1), t.partial(h)), mul(t.a(h - 1), sub(t.partial(k), t.a(k - 1))));
  return div(numer, t.a(h + k));
}

void require_nonneg(int value, const char* what) {
  if (value < 0) {
    throw UsageError(std::string(what) + " must be non-negative, got " + std::to_string(value));
  }
}

// Rational function of v built from polynomials in v, as a v-series.
PS v_power(std::size_t k, std::size_t order) { return PS::monomial(Rational(1), k, order); }

// (1 + 6v^2 + v^4) / (1 - v)^4, the image of 1/(1-z) under v/(1+v^2) = w(z).
PS horizontal_geometric_in_v(std::size_t order) {
  const PS v = v_power(1, order);
  const PS numer = one(order) + Rational(6) * v_power(2, order) + v_power(4, order);
  return div(numer, pow(one(order) - v, 4));
}

// Psi^_h for the vertical running maximum with lower barrier at -k:
//   [a_{h-1} a_{k-1} + (x/2)(S_{h-1} a_{k-1} + S_{k-1} a_{h-1})]
//   / [(1-x) a_{h-1} a_{k-1} - (x^2/2)(a_{h-2} a_{k-1} + a_{k-2} a_{h-1})]
// with x = z/2, S_{-1} = 0 and a_{-2} = 0. This is the Schur complement of
// the block system onto the origin row.
PS vertical_window_survival(const TridiagTable& t, int h, int k) {
  const std::size_t n = t.x().order();
  const PS& x = t.x();
  auto s_prev = [&](int m) { return m <= 0 ? PS(n) : t.partial(m - 1); };
  const PS ah = t.a(h - 1);
  const PS ak = t.a(k - 1);
  const PS numer =
      add(mul(ah, ak), scale(mul(x, add(mul(s_prev(h), ak), mul(s_prev(k), ah))), Rational(1, 2)));
  const PS denom =
      sub(mul(sub(one(n), x), mul(ah, ak)),
          scale(mul(mul(x, x), add(mul(t.a_or_zero(h - 2), ak), mul(t.a_or_zero(k - 2), ah))),
                Rational(1, 2)));
  return div(numer, denom);
}

struct GreenBasis {
  PS G;
  PS F1;
  PS F2;
};

GreenBasis green_basis(std::size_t order) {
  const std::size_t m = order + 1;
  const PS s = sqrt_one_minus_z2(m);
  // G = sqrt(2) / sqrt(1 - z^2 + s) = 1 / sqrt(u),  u = (1 - z^2 + s) / 2
  const PS u = scale(one(m) - PS::monomial(Rational(1), 2, m) + s, Rational(1, 2));
  const PS root_u = sqrt_series(u);
  // sqrt(2) sqrt(1 - z^2 + s) = 2 sqrt(u)
  const PS f1_numer = one(m) + s - scale(root_u, Rational(2));
  return GreenBasis{
      div(one(m), root_u).truncated(order),
      shift_div_z(f1_numer, 1),
      shift_div_z(one(m) - s, 1),
  };
}

}  // namespace

std::string to_string(Variable v) {
  switch (v) {
    case Variable::z: return "z";
    case Variable::w: return "w";
    case Variable::v: return "v";
  }
  return "?";
}

GFCatalogEntry add_entries(const GFCatalogEntry& a, const GFCatalogEntry& b) {
  if (a.variable != b.variable) {
    throw UsageError("cannot add '" + a.name + "' (in " + to_string(a.variable) + ") and '" +
                     b.name + "' (in " + to_string(b.variable) + ") without substitution");
  }
  return GFCatalogEntry{a.name + "+" + b.name, a.variable, add(a.series, b.series)};
}

GFCatalogEntry substitute(const GFCatalogEntry& entry, const PowerSeries& inner) {
  if (entry.variable == Variable::z) {
    throw UsageError("'" + entry.name + "' is already a series in z");
  }
  return GFCatalogEntry{entry.name + "(" + to_string(entry.variable) + "(z))", Variable::z,
                        compose(entry.series, inner)};
}

PowerSeries green_G(std::size_t order) { return green_basis(order).G; }
PowerSeries green_F1(std::size_t order) { return green_basis(order).F1; }
PowerSeries green_F2(std::size_t order) { return green_basis(order).F2; }

PowerSeries green(int k, int l, std::size_t order) {
  const auto ak = static_cast<unsigned>(std::abs(k));
  const auto al = static_cast<unsigned>(std::abs(l));
  if (order < ak + al) {
    throw UsageError("green: order must be at least |k|+|l|");
  }
  const GreenBasis b = green_basis(order);
  PS g = mul(b.G, pow(b.F1, ak));
  if (l != 0) {
    g = scale(mul(g, pow(b.F2, al)), Rational(1, 2));
  }
  return g;
}

PowerSeries tooth_return(std::size_t order) {
  const std::size_t m = order + 2;
  const PS s = sqrt_one_minus_z2(m);
  return shift_div_z(scale(one(m) - s, Rational(2)), 2);
}

PowerSeries excursion_E(std::size_t order) {
  // E = 2(1 - s) / (z (s - 1 + z)) = [2(1-s)/z^2] / [(s - 1 + z)/z]
  const std::size_t m = order + 2;
  const PS s = sqrt_one_minus_z2(m);
  const PS numer = shift_div_z(scale(one(m) - s, Rational(2)), 2);
  const PS denom = shift_div_z(s - one(m) + zvar(m), 1).truncated(order);
  if (denom[0] == 0) {
    throw InternalError("excursion_E: removable singularity did not cancel");
  }
  return div(numer, denom);
}

PowerSeries w_of_z(std::size_t order) {
  const std::size_t m = order + 1;
  return scale(shift_div_z(one(m) - sqrt_one_minus_z2(m), 1), Rational(1, 2));
}

PowerSeries catalan_inverse(const PowerSeries& w) {
  if (sgn(w[0]) != 0) {
    throw DomainError("catalan_inverse: w must have zero constant term");
  }
  // v = w (1 + v^2). The n-th coefficient of the right side only involves
  // v_1 .. v_{n-2}, so the coefficients can be filled in increasing order.
  const std::size_t n = w.order();
  std::vector<Rational> v(n + 1);
  std::vector<Rational> one_plus_v2(n + 1);  // coefficients of 1 + v^2
  one_plus_v2[0] = 1;
  Rational term;
  for (std::size_t m = 1; m <= n; ++m) {
    // (1 + v^2)_{m-1} needs v_1 .. v_{m-2}
    if (m - 1 >= 2) {
      Rational acc;
      for (std::size_t i = 1; i + 1 <= m - 1; ++i) {
        mpq_mul(term.get_mpq_t(), v[i].get_mpq_t(), v[m - 1 - i].get_mpq_t());
        acc += term;
      }
      one_plus_v2[m - 1] = acc;
    }
    Rational acc;
    for (std::size_t j = 1; j <= m; ++j) {
      if (sgn(w[j]) == 0 || sgn(one_plus_v2[m - j]) == 0) continue;
      mpq_mul(term.get_mpq_t(), w[j].get_mpq_t(), one_plus_v2[m - j].get_mpq_t());
      acc += term;
    }
    v[m] = acc;
  }
  return PowerSeries(std::move(v));
}

PowerSeries v_horizontal(std::size_t order) { return catalan_inverse(w_of_z(order)); }
PowerSeries v_vertical(std::size_t order) { return catalan_inverse(half_z(order)); }

PowerSeries tridiag_det(int i, const PowerSeries& x) {
  if (i < -1) {
    throw UsageError("tridiag_det: index must be >= -1, got " + std::to_string(i));
  }
  return TridiagTable(x, i).a(i);
}

PowerSeries a_det(int i, std::size_t order) { return tridiag_det(i, half_z(order)); }

PowerSeries a_det_closed_form(int i, std::size_t order) {
  if (i < -1) {
    throw UsageError("a_det_closed_form: index must be >= -1, got " + std::to_string(i));
  }
  // (1 - v^{2i+4}) / (1 - v^2) = sum_{j=0}^{i+1} v^{2j}
  PS numer(order);
  for (int j = 0; j <= i + 1; ++j) {
    numer = add(numer, v_power(static_cast<std::size_t>(2 * j), order));
  }
  const PS denom = pow(one(order) + v_power(2, order), static_cast<unsigned>(i + 1));
  return compose(div(numer, denom), v_vertical(order));
}

PowerSeries psi_two_sided(int h, int k, int l, const PowerSeries& x) {
  require_nonneg(h, "psi_two_sided: h");
  require_nonneg(k, "psi_two_sided: k");
  if (l < -k || l > h) {
    throw UsageError("psi_two_sided: l must lie in [-k, h]");
  }
  const TridiagTable t(x, h + k);
  const auto steps = static_cast<unsigned>(std::abs(l));
  const PS numer = l >= 0 ? mul(pow(x, steps), mul(t.a(h - l - 1), t.a(k - 1)))
                          : mul(pow(x, steps), mul(t.a(h - 1), t.a(k + l - 1)));
  return div(numer, t.a(h + k));
}

PowerSeries psi_two_sided(int h, int k, int l, std::size_t order) {
  return psi_two_sided(h, k, l, zvar(order));
}

PowerSeries psi_window_total(int h, int k, const PowerSeries& x) {
  require_nonneg(h, "psi_window_total: h");
  require_nonneg(k, "psi_window_total: k");
  return window_total(TridiagTable(x, h + k), h, k);
}

PowerSeries psi_deviation(int h, const PowerSeries& x) { return psi_window_total(h, h, x); }

PowerSeries psi_deviation_closed_form(int h, std::size_t order) {
  require_nonneg(h, "psi_deviation_closed_form: h");
  const auto hp = static_cast<std::size_t>(h);
  const PS v = v_power(1, order);
  const PS numer = mul(one(order) + v_power(2, order), pow(one(order) - v_power(hp + 1, order), 2));
  const PS denom = mul(pow(one(order) - v, 2), one(order) + v_power(2 * hp + 2, order));
  return compose(div(numer, denom), catalan_inverse(zvar(order)));
}

PowerSeries deviation_H(int h, std::size_t order) {
  require_nonneg(h, "deviation_H: h");
  return mul(psi_deviation(h, w_of_z(order)), excursion_E(order));
}

PowerSeries psi_hat(int h, int l, std::size_t order) {
  require_nonneg(h, "psi_hat: h");
  if (l < 0 || l > h) {
    throw UsageError("psi_hat: l must lie in [0, h]");
  }
  const PS x = half_z(order);
  const TridiagTable t(x, h);
  // (1 - z/2) a_{h-1} - (z/2)^2 a_{h-2}; for h = 0 this is the 1x1 system.
  const PS denom = sub(mul(one(order) - x, t.a(h - 1)), mul(mul(x, x), t.a_or_zero(h - 2)));
  return div(mul(pow(x, static_cast<unsigned>(l)), t.a(h - l - 1)), denom);
}

PowerSeries psi_hat_sum(int h, std::size_t order) {
  require_nonneg(h, "psi_hat_sum: h");
  const PS x = half_z(order);
  const TridiagTable t(x, h);
  const PS denom = sub(mul(one(order) - x, t.a(h - 1)), mul(mul(x, x), t.a_or_zero(h - 2)));
  return div(t.partial(h), denom);
}

PowerSeries psi_hat_sum_closed_form(int h, std::size_t order) {
  require_nonneg(h, "psi_hat_sum_closed_form: h");
  const auto hp = static_cast<std::size_t>(h);
  const PS v = v_power(1, order);
  const PS numer = mul(mul(one(order) + v_power(2, order), one(order) - v_power(hp + 1, order)),
                       one(order) - v_power(hp + 2, order));
  const PS denom = mul(pow(one(order) - v, 2), one(order) + v_power(2 * hp + 3, order));
  return compose(div(numer, denom), v_vertical(order));
}

PowerSeries mean_dist_x_gf(std::size_t order) {
  if (order < 2) throw UsageError("mean_dist_x_gf: order must be >= 2");
  const GreenBasis b = green_basis(order);
  const PS u = one(order);
  // 2 G F1 / ((1-F1)^2 (1-F2))
  return scale(div(mul(b.G, b.F1), mul(pow(u - b.F1, 2), u - b.F2)), Rational(2));
}

PowerSeries mean_dist_y_gf(std::size_t order) {
  if (order < 2) throw UsageError("mean_dist_y_gf: order must be >= 2");
  const GreenBasis b = green_basis(order);
  const PS u = one(order);
  // G (1+F1)/(1-F1) F2/(1-F2)^2
  return div(mul(mul(b.G, u + b.F1), b.F2), mul(u - b.F1, pow(u - b.F2, 2)));
}

PowerSeries mean_deviation_gf(Axis axis, std::size_t order) {
  if (order < 1) throw UsageError("mean_deviation_gf: order must be >= 1");
  const int h_max = static_cast<int>(order) - 1;
  const PS geometric = PS::geometric(order);
  PS total(order);
  if (axis == Axis::x) {
    const PS e = excursion_E(order);
    const TridiagTable t(w_of_z(order), 2 * h_max);
    for (int h = 0; h <= h_max; ++h) {
      total = add(total, sub(geometric, mul(window_total(t, h, h), e)));
    }
  } else {
    const PS x = half_z(order);
    const TridiagTable t(x, h_max);
    for (int h = 0; h <= h_max; ++h) {
      const PS denom = sub(mul(one(order) - x, t.a(h - 1)), mul(mul(x, x), t.a_or_zero(h - 2)));
      total = add(total, sub(geometric, div(t.partial(h), denom)));
    }
  }
  return total;
}

PowerSeries mean_deviation_closed_form(Axis axis, std::size_t order) {
  if (order < 1) throw UsageError("mean_deviation_closed_form: order must be >= 1");
  const PS v = v_power(1, order);
  const PS u = one(order);
  PS h_sum(order);
  for (std::size_t h = 1; h <= order; ++h) {
    const std::size_t exponent = axis == Axis::x ? 2 * h : 2 * h + 1;
    h_sum = add(h_sum, div(v_power(h, order), u + v_power(exponent, order)));
  }
  if (axis == Axis::x) {
    const PS in_v = scale(mul(horizontal_geometric_in_v(order), h_sum), Rational(2));
    return compose(in_v, v_horizontal(order));
  }
  const PS prefactor = div(mul(u + v_power(2, order), u + v), pow(u - v, 2));
  return compose(mul(prefactor, h_sum), v_vertical(order));
}

PowerSeries span_gf_x(std::size_t order) {
  if (order < 1) throw UsageError("span_gf_x: order must be >= 1");
  // A path of n <= order steps never reaches -(order+1), so k = order is
  // already the k -> infinity limit at this truncation.
  const int k = static_cast<int>(order);
  const int h_max = static_cast<int>(order) - 1;
  const PS geometric = PS::geometric(order);
  const PS e = excursion_E(order);
  const TridiagTable t(w_of_z(order), h_max + k);
  PS total(order);
  for (int h = 0; h <= h_max; ++h) {
    total = add(total, sub(geometric, mul(window_total(t, h, k), e)));
  }
  return total;
}

PowerSeries span_gf_x_closed_form(std::size_t order) {
  const PS v = v_power(1, order);
  const PS in_v = mul(horizontal_geometric_in_v(order), div(v, one(order) - v));
  return compose(in_v, v_horizontal(order));
}

PowerSeries vertical_max_survival(int h, std::size_t order) {
  require_nonneg(h, "vertical_max_survival: h");
  const int k = static_cast<int>(order) + 1;
  const TridiagTable t(half_z(order), std::max(h, k));
  return vertical_window_survival(t, h, k);
}

PowerSeries span_gf_y_linear_system(std::size_t order) {
  if (order < 1) throw UsageError("span_gf_y_linear_system: order must be >= 1");
  const int k = static_cast<int>(order) + 1;
  const int h_max = static_cast<int>(order) - 1;
  const TridiagTable t(half_z(order), std::max(h_max, k));
  const PS geometric = PS::geometric(order);
  PS total(order);
  for (int h = 0; h <= h_max; ++h) {
    total = add(total, sub(geometric, vertical_window_survival(t, h, k)));
  }
  return total;
}

PowerSeries span_gf_y(std::size_t order) {
  if (order < 1) throw UsageError("span_gf_y: order must be >= 1");
  const PS geometric = PS::geometric(order);
  // h = 0, 1 straight from the block system.
  PS total(order);
  for (int h = 0; h <= std::min(1, static_cast<int>(order) - 1); ++h) {
    total = add(total, sub(geometric, vertical_max_survival(h, order)));
  }
  // h >= 2: 1/(1-z) - Psi^_h = (1+v^2)/(1-v)^2 (1+v) v^{h+1} / (2 - (1-v) v^{2h+2}),
  // summed in v and substituted once.
  const PS v = v_power(1, order);
  const PS u = one(order);
  PS h_sum(order);
  for (std::size_t h = 2; h + 1 <= order; ++h) {
    const PS denom = sub(scale(u, Rational(2)), mul(u - v, v_power(2 * h + 2, order)));
    h_sum = add(h_sum, div(v_power(h + 1, order), denom));
  }
  const PS prefactor = div(mul(u + v_power(2, order), u + v), pow(u - v, 2));
  return add(total, compose(mul(prefactor, h_sum), v_vertical(order)));
}

PowerSeries bounded_tooth_return(int n, std::size_t order) {
  if (n < 1) throw UsageError("bounded_tooth_return: n must be >= 1");
  const PS x = half_z(order);
  const TridiagTable t(x, n);
  // F~_n(1,0) = (z/2) a_{n-2} / a_{n-1}; G~_n = 1 / (1 - (z/2) F~_n(1,0))
  const PS first_return = div(mul(x, t.a(n - 2)), t.a(n - 1));
  return div(one(order), one(order) - mul(x, first_return));
}

PowerSeries bounded_final_excursion(int n, std::size_t order) {
  if (n < 1) throw UsageError("bounded_final_excursion: n must be >= 1");
  const PS x = half_z(order);
  const TridiagTable t(x, n);
  // sum_{l=0}^{n} G~_n (z/2)^l a_{n-l-1} / a_{n-1} = G~_n S_n / a_{n-1}
  return div(mul(bounded_tooth_return(n, order), t.partial(n)), t.a(n - 1));
}

PowerSeries theta_gf(int n, std::size_t order) {
  if (n < 1) throw UsageError("theta_gf: n must be >= 1");
  const PS step_weight = scale(mul(zvar(order), bounded_tooth_return(n, order)), Rational(1, 4));
  return mul(psi_deviation(n, step_weight), bounded_final_excursion(n, order));
}

std::vector<std::string> catalog_names() {
  return {"green-G",        "green-F1",        "green-F2",       "green",
          "excursion-E",    "tooth-return",    "w",              "v-horizontal",
          "v-vertical",     "a-det",           "a-det-closed",   "psi-two-sided",
          "deviation-H",    "psi-hat",         "psi-hat-sum",    "mean-dist-x",
          "mean-dist-y",    "mean-deviation-x", "mean-deviation-y", "span-x",
          "span-y",         "theta"};
}

}  // namespace comblab::genfun
