#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sigma/sigma_theory.hpp"

namespace sigma {

enum class TheoremId { T1_3, TA1, TA2, TB, TC, TD, TE, L2_10 };

std::string to_string(TheoremId id);
/// Accepts "T1.3", "TA1", "TA2", "TB", "TC", "TD", "TE", "L2.10"; throws InvalidArgument.
TheoremId parse_theorem_id(std::string_view text);
std::vector<TheoremId> all_theorems();

/// Hypothesis and conclusion of one theorem instance, evaluated independently.
struct TheoremReport {
  TheoremId id = TheoremId::T1_3;
  Truth hypothesis = Truth::Inconclusive;
  Truth conclusion = Truth::Inconclusive;
  /// False only when both sides are decisive and violate the statement.
  bool consistent = true;
  Json witness = Json::object();
  std::vector<std::pair<std::string, double>> timings;  // seconds per phase
};

/// T1.3, TA1, TC, TD or TE on the analysed group; throws InvalidArgument for
/// the other ids.
TheoremReport verify_structural(SigmaAnalysis& analysis, TheoremId id);
TheoremReport verify_structural(PermGroup const& g, SigmaPartition const& sigma, TheoremId id,
                                HallOptions const& options = {});

/// A1 A2 A3 factorise G pairwise, A1 is sigma-soluble, A2 and A3 are
/// generalized sigma-soluble and the normalizer indices of O^{sigma_i}(A1),
/// O^{sigma_j}(A2), O^{sigma_k}(A3) are pairwise sigma-coprime; then G is
/// generalized sigma-soluble.
TheoremReport verify_theorem_B(PermGroup const& g, SigmaPartition const& sigma, Subgroup const& a1,
                               Subgroup const& a2, Subgroup const& a3, ClassId i, ClassId j, ClassId k);

/// H sigma-semipermutable with respect to `set` implies H^G generalized sigma-soluble.
TheoremReport verify_semipermutable_closure(PermGroup const& g, SigmaPartition const& sigma, Subgroup const& h,
                                            HallSet const& set);

/// A a sigma_i-subgroup and B a sigma_j-subgroup, both nontrivial, with
/// A B^x = B^x A for all x and O_{sigma_i u sigma_j}(G) = 1; then
/// [A^G, B^G] = 1. Throws InvalidArgument unless i != j and the orders fit.
TheoremReport verify_lemma_commutator(PermGroup const& g, SigmaPartition const& sigma, Subgroup const& a,
                                      Subgroup const& b, ClassId i, ClassId j);

}  // namespace sigma
