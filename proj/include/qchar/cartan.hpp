#pragma once

#include <string>
#include <vector>

#include "qchar/laurent.hpp"

namespace qchar {

enum class Family { A, B, C, D, F4, G2, AffineA };

std::string family_name(Family f);

/* Symmetrizable Cartan matrix of one of the built-in families together with
 * its minimal positive symmetrizer.  Node indices are 1-based throughout.
 *
 * Conventions (pinned by the A_{i,l}-expansion tests):
 *   A_n, D_n, AffineA_l : all r_i = 1
 *   B_n : r_i = 2 (i < n), r_n = 1   [C_{n,n-1} = -2]
 *   C_n : r_i = 1 (i < n), r_n = 2   [C_{n-1,n} = -2]
 *   F4  : r = (1,1,2,2), nodes 1,2 short  [C_{2,3} = -2]
 *   G2  : r = (3,1)                   [C_{2,1} = -3]
 * AffineA_l is the (l+1)-node cycle. */
struct CartanData {
  Family family;
  int rank;                            // family parameter (n, or l for A_l~)
  std::vector<std::vector<int>> mat;   // 0-based storage
  std::vector<int> sym;                // 0-based storage

  int n() const { return static_cast<int>(sym.size()); }
  bool affine() const { return family == Family::AffineA; }

  int C(int i, int j) const { return mat[i - 1][j - 1]; }  // 1-based
  int r(int i) const { return sym[i - 1]; }                // 1-based

  /* Nodes j adjacent to i, i.e. C(j,i) < 0. */
  std::vector<int> neighbors_into(int i) const;

  std::string label() const;  // CLI spelling, e.g. "B3", "A2~"
};

/* Throws std::invalid_argument when the rank is invalid for the family
 * (A: n>=1; B,C: n>=2; D: n>=4; F4: n=4; G2: n=2; AffineA: l>=2). */
CartanData build_cartan(Family family, int rank);

/* Parses the CLI family grammar: "A5", "B3", "C4", "D4", "F4", "G2", "A2~". */
CartanData parse_family(const std::string& spec);

/* Quantized Cartan matrix over Laurent polynomials in z:
 * diagonal z^{r_i} + z^{-r_i}, off-diagonal the quantum integer [C_{ij}]_z. */
struct ZLaurentMatrix {
  std::vector<std::vector<LaurentPoly>> entry;  // 0-based
  int n() const { return static_cast<int>(entry.size()); }
};

ZLaurentMatrix quantized_cartan(const CartanData& cd);

/* Quantum integer [l]_z = (z^l - z^{-l}) / (z - z^{-1}). */
LaurentPoly quantum_integer(int l);

/* Exact Laurent determinant (fraction-free elimination). */
LaurentPoly laurent_determinant(const ZLaurentMatrix& m);

/* True iff det C(z) != 0 as an exact Laurent polynomial. */
bool is_invertible(const ZLaurentMatrix& m);

/* The sufficient criterion (C_{ij} < -1 implies -C_{ji} <= r_i); holds for
 * all built-in families and implies invertibility. */
bool invertibility_sufficient(const CartanData& cd);

/* True iff the symmetrized matrix diag(r)C is positive definite, i.e. the
 * (sub)diagram is of finite type. */
bool is_finite_type(const std::vector<std::vector<int>>& c,
                    const std::vector<int>& r);

}  // namespace qchar
