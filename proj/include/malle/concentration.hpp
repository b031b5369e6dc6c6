#pragma once

#include <string>
#include <vector>

#include "malle/group.hpp"
#include "malle/ramtypes.hpp"
#include "malle/rational.hpp"

namespace malle {

enum class ConcentrationStatus { concentrated, properly_semiconcentrated, not_semiconcentrated };
enum class FittingStatus { nilpotent, concentrated_in_fitting, neither };

std::string to_string(ConcentrationStatus s);
std::string to_string(FittingStatus s);

struct ConcentrationVerdict {
  ConcentrationStatus status = ConcentrationStatus::not_semiconcentrated;
  // Minimal-cardinality cover of the minimum-weight types by abelian normal subgroups;
  // empty when no such cover exists.
  std::vector<ElementSet> witnesses;
  // Smallest proper normal subgroup holding every minimum-weight element (concentrated case).
  ElementSet container;
  FittingStatus fitting_status = FittingStatus::neither;
};

// Proper, nontrivial, abelian normal subgroups ordered by size then lexicographically.
std::vector<ElementSet> abelian_normal_subgroups(const PermutationGroup& G);

// Smallest family (by count, ties broken by subgroup order then canonical order) of the
// candidates whose union contains every listed type. Empty when no family works.
std::vector<ElementSet> minimal_cover(const TypeSystem& ts, const std::vector<std::size_t>& targets,
                                      const std::vector<ElementSet>& candidates);

ConcentrationVerdict classify(const TypeSystem& ts, const WeightFunction& wt);

struct H1urLayer {
  std::size_t order;     // |T cap Z_i(N)| / |T cap Z_{i-1}(N)|
  std::size_t exponent;  // exponent of that section
};

// Layers T cap Z_i(N) / T cap Z_{i-1}(N) along the upper central series of N.
std::vector<H1urLayer> h1ur_chain(const PermutationGroup& G, const ElementSet& N, const ElementSet& T);

// min_j n/a(N) - log2|T_j|/2 + log2|T_j|/(2 m d) for a 2-group N of degree n.
Rational wreath_theta_bound(const PermutationGroup& N, const std::vector<ElementSet>& witnesses, int m,
                            int k_degree);
// The same expression from bare parameters; t_order must be a power of two.
Rational wreath_theta_from_parameters(int n, const Rational& a_N, std::size_t t_order, int m, int k_degree);

struct DirectProductCondition {
  bool holds;           // a_B / m > a_N / n
  Rational cap_exponent;  // n / (m a_N)
};
DirectProductCondition direct_product_condition(int n, int m, const Rational& a_N, const Rational& a_B);

}  // namespace malle
