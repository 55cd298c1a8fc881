#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qchar/character.hpp"
#include "qchar/monomial.hpp"

namespace qchar {

/* The consistency condition of the expansion recursion failed: a monomial
 * non-dominant at two nodes received different s_j values.  The theory rules
 * this out, so it signals a bug or an unsupported matrix. */
struct InconsistentAlgorithm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Greedy kernel decomposition did not reach zero: the input is not in the
 * span of the J-kernel elements. */
struct NonzeroResidue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunLimits {
  std::optional<long long> max_height;  // mandatory for affine families
  std::optional<long long> max_terms;
  int threads = 1;
};

/* The s/s_j worklist expansion of a dominant head monomial into the kernel
 * element F(head); equals the full q-character for fundamental heads. */
Character classical_algorithm(const CartanData& cd, const Monomial& head,
                              const RunLimits& limits = {});

/* classical_algorithm on Y_{i,l}; asserts the unique-dominant-monomial
 * property for finite families. */
Character fundamental_qcharacter(const CartanData& cd, int i, int l,
                                 const RunLimits& limits = {});

/* Product of fundamental characters over the factor list (i, l). */
Character standard_qcharacter(const CartanData& cd,
                              const std::vector<std::pair<int, int>>& factors,
                              const RunLimits& limits = {});

/* All shifts translated by c. */
Monomial shift_monomial(const Monomial& m, int c);
Character shift_character(const Character& ch, int c);

/* Kernel element F_J(m): the classical algorithm run on the subdiagram J
 * (relabeled), with every sub-A-inverse step remapped to the full-diagram
 * A_{j,l}^{-1} applied to m.  Requires the J-subdiagram to be finite type. */
Character subdiagram_kernel_element(const CartanData& cd, const Monomial& m,
                                    const NodeSet& J,
                                    const RunLimits& limits = {});

/* L_J(m) via the subdiagram recursion; guarded by the unique-dominant check
 * (the subdiagram output must be a simple character). */
Character restrict_L_J(const CartanData& cd, const Monomial& m,
                       const NodeSet& J, const RunLimits& limits = {});

/* Greedy decomposition of ch into kernel elements with J-dominant heads;
 * throws NonzeroResidue when the residual cannot reach zero. */
std::vector<std::pair<Monomial, long long>> kernel_decompose(
    const CartanData& cd, const Character& ch, const NodeSet& J,
    const RunLimits& limits = {});

}  // namespace qchar
