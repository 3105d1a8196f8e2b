#include "polyforge/formulas.hpp"

#include <limits>
#include <string>

namespace polyforge::formulas {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t c) {
  if (n < 0 || c < 0 || c > n) return 0;
  if (c > n - c) c = n - c;
  unsigned __int128 value = 1;
  for (std::int64_t i = 1; i <= c; ++i) {
    value = value * static_cast<unsigned __int128>(n - c + i) /
            static_cast<unsigned __int128>(i);
    if (value > static_cast<unsigned __int128>(
                    std::numeric_limits<std::int64_t>::max()))
      throw Error(ErrorCode::BadParams, "binomial(" + std::to_string(n) + "," +
                                            std::to_string(c) +
                                            ") exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(value);
}

std::int64_t phi(int k, int d, int s) {
  require(1 <= s && s <= d, "phi needs 1 <= s <= d");
  require(0 <= k && k <= d - 1, "phi needs 0 <= k <= d-1");
  return binomial(d + 1, k + 1) + binomial(d, k + 1) -
         binomial(d + 1 - s, k + 1);
}

std::int64_t zeta(int k, int d, int s) {
  require(2 <= s && s <= d, "zeta needs 2 <= s <= d");
  require(0 <= k && k <= d - 1, "zeta needs 0 <= k <= d-1");
  return phi(k, d, s) + binomial(d - 1, k) - binomial(d + 1 - s, k);
}

std::int64_t fk_dplus2_facets(int k, int d, int a, int m) {
  require(2 <= a && a <= d, "needs 2 <= a <= d");
  require(1 <= m && m <= a / 2, "needs 1 <= m <= floor(a/2)");
  require(0 <= k && k <= d - 1, "needs 0 <= k <= d-1");
  return binomial(d + 2, k + 2) - binomial(d - a + m + 1, k + 2) -
         binomial(d + 1 - m, k + 2) + binomial(d - a + 1, k + 2);
}

std::int64_t fk_dplus2_vertices(int k, int d, int a, int m) {
  require(2 <= a && a <= d, "needs 2 <= a <= d");
  require(1 <= m && m <= a / 2, "needs 1 <= m <= floor(a/2)");
  require(0 <= k && k <= d - 1, "needs 0 <= k <= d-1");
  return binomial(d + 2, d - k + 1) - binomial(d - a + m + 1, d - k + 1) -
         binomial(d - m + 1, d - k + 1) + binomial(d - a + 1, d - k + 1);
}

std::int64_t fk_pentasm(int k, int d) {
  require(d >= 2, "pentasm needs d >= 2");
  require(0 <= k && k <= d - 1, "needs 0 <= k <= d-1");
  if (k == 0) return 2 * static_cast<std::int64_t>(d) + 1;
  return binomial(d + 1, k + 1) + binomial(d, k + 1) + binomial(d - 1, k);
}

std::int64_t fk_pentasm_pyr(int k, int d, int s) {
  require(2 <= s && s <= d, "needs 2 <= s <= d");
  require(0 <= k && k <= d - 1, "needs 0 <= k <= d-1");
  // Faces split by how many of the d+1-s apexes they use: an i-face of the
  // (s-1)-pentasm plus k-i apexes.
  std::int64_t total = binomial(d + 1 - s, k + 1) +
                       (2 * static_cast<std::int64_t>(s) - 1) *
                           binomial(d + 1 - s, k);
  for (int i = 1; i <= k; ++i) {
    total += binomial(d + 1 - s, k - i) *
             (binomial(s, i + 1) + binomial(s - 1, i + 1) + binomial(s - 2, i));
  }
  return total;
}

std::int64_t fk_z(int k, int d) {
  require(d >= 2, "Z needs d >= 2");
  require(0 <= k && k <= d - 1, "needs 0 <= k <= d-1");
  if (k == 0) return 2 * static_cast<std::int64_t>(d) - 1;
  if (k == 1)
    return static_cast<std::int64_t>(d) * d + d - 3;
  return binomial(d + 1, k + 1) + binomial(d, k + 1) + binomial(d - 1, k);
}

std::int64_t fk_wedge_facet(int k, const FVector& fp, const FVector& ff) {
  if (k < 0 || k > fp.dim + 1)
    throw Error(ErrorCode::RankOutOfRange,
                "k = " + std::to_string(k) + " for a wedge of dimension " +
                    std::to_string(fp.dim + 1));
  return 2 * fp.extended(k) + fp.extended(k - 1) - ff.extended(k) -
         ff.extended(k - 1);
}

std::int64_t refined_s2_bound(int k, int d, int ell) {
  require(3 <= ell && ell <= d, "needs 3 <= l <= d");
  require(1 <= k && k <= d - 2, "needs 1 <= k <= d-2");
  return phi(k, d, 2) + binomial(d - 1, k - 1) -
         binomial(d - ell + 1, k - ell + 1);
}

Lemma23Result lemma23_predicates(int k, int d, int a, int m) {
  require(2 <= a && a <= d, "needs 2 <= a <= d");
  require(1 <= m && m <= a / 2, "needs 1 <= m <= floor(a/2)");
  require(0 <= k && k <= d - 1, "needs 0 <= k <= d-1");
  Lemma23Result r;
  std::int64_t base = fk_dplus2_vertices(k, d, a, m);
  if (m + 1 <= a / 2) {
    std::int64_t next = fk_dplus2_vertices(k, d, a, m + 1);
    r.applicable_m = true;
    r.leq_m = base <= next;
    r.strict_m = base < next;
    r.expected_strict_m = m <= k;
  }
  if (a <= d - 1) {
    std::int64_t next = fk_dplus2_vertices(k, d, a + 1, m);
    r.applicable_a = true;
    r.leq_a = base <= next;
    r.strict_a = base < next;
    r.expected_strict_a = a - m <= k;
  }
  return r;
}

}  // namespace polyforge::formulas
