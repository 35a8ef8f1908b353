#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qwave/cyclofield.hpp"
#include "qwave/poly.hpp"

namespace qwave {

/// F_N(x) = 1 / prod_{k=1}^N (1 - x^k) = sum_{k,l} g_{kl}(x) / (1 - x^k)^l,
/// 1 <= k <= N, 1 <= l <= floor(N/k), deg g_{kl} < k.
class QPFDecomposition {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (k, l)

  explicit QPFDecomposition(unsigned N) : N_(N) {}

  unsigned N() const { return N_; }
  const Poly& g(unsigned k, unsigned l) const;
  void set(unsigned k, unsigned l, Poly g) { terms_[{k, l}] = std::move(g); }
  /// Ordered by (k, l).
  const std::map<Key, Poly>& terms() const { return terms_; }

 private:
  unsigned N_;
  std::map<Key, Poly> terms_;
};

/// Gamma_{hkl}(N): coefficient of x^h in g_{kl}, 0 <= h < k.
class GammaTable {
 public:
  using Key = std::tuple<unsigned, unsigned, unsigned>;  // (h, k, l)

  explicit GammaTable(unsigned N) : N_(N) {}
  explicit GammaTable(const QPFDecomposition& d);

  unsigned N() const { return N_; }
  /// Zero for (h, k, l) outside the table's index range.
  Rational at(unsigned h, unsigned k, unsigned l) const;
  void set(unsigned h, unsigned k, unsigned l, Rational v) { entries_[{h, k, l}] = std::move(v); }
  const std::map<Key, Rational>& entries() const { return entries_; }

 private:
  unsigned N_;
  std::map<Key, Rational> entries_;
};

/// The k = 2 block rewritten over (1 + x)^l: sum_l Gt_{02l} / (1 + x)^l.
struct VariantK2Table {
  unsigned N = 0;
  std::vector<Rational> entries;  // entries[l - 1] = Gt_{02l}(N)

  const Rational& at(unsigned l) const { return entries.at(l - 1); }
};

/// Top-multiplicity coefficient C_{h,k,L}(N), L = floor(N/k), of
/// F_N = sum C / (x - xi)^l at xi = w^h, w = exp(2*pi*i/k).
struct RademacherTop {
  unsigned h = 0, k = 0, N = 0;
  CycloFieldElement value = CycloFieldElement::zero(1);
  std::string real_approx;
  std::string imag_approx;
};

/// h_k^{(N)} = eval(prod_{j != k} Phi_j^{-floor(N/j)}; Phi_k^{floor(N/k)}).
Poly h_component(unsigned N, unsigned k);

/// D_m(x^e) = floor(e/m) x^{e-m}, extended linearly.
Poly dm_derivative(const Poly& h, unsigned m);

/// Levels htilde^{(0..r-1)}, htilde^{(j)} = eval(D_m^j g; 1 - x^m), so that
/// g = sum_j ((-1)^j / j!) htilde^{(j)} (1 - x^m)^j. Requires deg g < r*m.
std::vector<Poly> split_levels(const Poly& g, unsigned m, unsigned r);

QPFDecomposition decompose(unsigned N);
inline GammaTable gamma_table(unsigned N) { return GammaTable(decompose(N)); }

/// Computed from eval((1+x)^{N/2} / prod (1 - x^j); (1+x)^{N/2}) by the direct
/// xgcd route, independently of decompose().
VariantK2Table decompose_variant_k2(unsigned N);

/// Residue-limit value (-xi)^L / (k^L L! prod_{m <= N, k !| m} (1 - xi^m)).
RademacherTop rademacher_top(unsigned h, unsigned k, unsigned N);

/// g_{k,L}(xi) and C_{hkL} * (-k/xi)^L; equal when the decomposition is right.
std::pair<CycloFieldElement, CycloFieldElement> rademacher_link(const QPFDecomposition& d, unsigned h, unsigned k);

}  // namespace qwave
