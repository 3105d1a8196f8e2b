#pragma once

#include <cstdint>

#include "polyforge/incidence.hpp"

namespace polyforge::formulas {

// Zero-extension convention: 0 whenever c < 0, c > n or n < 0. Exact in
// 64 bits up to n = 64; larger values raise Error(BadParams).
std::int64_t binomial(std::int64_t n, std::int64_t c);

// phi_k(d+s,d) = C(d+1,k+1) + C(d,k+1) - C(d+1-s,k+1); 1 <= s <= d.
std::int64_t phi(int k, int d, int s);

// zeta_k(d+s,d) = phi_k(d+s,d) + C(d-1,k) - C(d+1-s,k); 2 <= s <= d.
std::int64_t zeta(int k, int d, int s);

// k-face count of the (d-a)-fold pyramid over T(m) x T(a-m) (d+2 facets).
std::int64_t fk_dplus2_facets(int k, int d, int a, int m);

// k-face count of T_m^{d,d-a}, the (d-a)-fold pyramid over T(m) ⊕ T(a-m)
// (d+2 vertices).
std::int64_t fk_dplus2_vertices(int k, int d, int a, int m);

// k-face count of the d-pentasm: 2d+1 at k = 0, else
// C(d+1,k+1) + C(d,k+1) + C(d-1,k).
std::int64_t fk_pentasm(int k, int d);

// k-face count of Pm(s-1, d+1-s) via the apex/base double sum; equals
// zeta(k,d,s) identically.
std::int64_t fk_pentasm_pyr(int k, int d, int s);

// k-face count of Z(d): 2d-1, d^2+d-3, then C(d+1,k+1)+C(d,k+1)+C(d-1,k).
std::int64_t fk_z(int k, int d);

// f_k(wed_F(P)) = 2 f_k(P) + f_{k-1}(P) - f_k(F) - f_{k-1}(F), for F a facet
// of P; extended-f conventions f_{-1} = f_dim = 1. Valid for k in
// [0 .. dim(P)+1].
std::int64_t fk_wedge_facet(int k, const FVector& fp, const FVector& ff);

// Lower bound for d-polytopes with d+2 vertices and at least d+ℓ facets:
// phi_k(d+2,d) + C(d-1,k-1) - C(d-ℓ+1,k-ℓ+1); 3 <= ℓ <= d, 1 <= k <= d-2.
std::int64_t refined_s2_bound(int k, int d, int ell);

// Monotonicity comparisons of f_k(T_m^{d,d-a}) in m and in a, with the
// strictness conditions they are claimed to meet.
struct Lemma23Result {
  bool applicable_m = false;  // m+1 <= floor(a/2)
  bool leq_m = false;         // f_k(T_m^{d,d-a}) <= f_k(T_{m+1}^{d,d-a})
  bool strict_m = false;
  bool expected_strict_m = false;  // m <= k
  bool applicable_a = false;       // a <= d-1
  bool leq_a = false;              // f_k(T_m^{d,d-a}) <= f_k(T_m^{d,d-(a+1)})
  bool strict_a = false;
  bool expected_strict_a = false;  // a-m <= k

  bool consistent() const {
    bool ok = true;
    if (applicable_m) ok = ok && leq_m && strict_m == expected_strict_m;
    if (applicable_a) ok = ok && leq_a && strict_a == expected_strict_a;
    return ok;
  }
};

Lemma23Result lemma23_predicates(int k, int d, int a, int m);

}  // namespace polyforge::formulas
