#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigma/hall.hpp"
#include "sigma/partition.hpp"
#include "sigma/series.hpp"
#include "sigma/truth.hpp"

namespace sigma {

using Json = nlohmann::ordered_json;

/// Every two members permute.
bool is_sigma_basis(HallSet const& set);

/// H permutes with every conjugate of every member of `set` whose order is
/// coprime to |H|. Throws InvalidArgument unless H lies in some member.
bool is_sigma_semipermutable(PermGroup const& g, Subgroup const& h, HallSet const& set);

/// sigma(H/K) and sigma(G/C_G(H/K)) of a chief factor.
ClassSet factor_sigma(ChiefFactorData const& f, SigmaPartition const& sigma);
ClassSet induced_sigma(ChiefFactorData const& f, SigmaPartition const& sigma);

/// Cached evaluation of the sigma-predicates of one group under one
/// partition. Not thread safe; the chief series may be shared between
/// analyses of the same group.
class SigmaAnalysis {
 public:
  SigmaAnalysis(PermGroup g, SigmaPartition sigma, HallOptions options = {},
                std::shared_ptr<ChiefSeries const> series = nullptr);

  PermGroup const& group() const noexcept { return group_; }
  SigmaPartition const& partition() const noexcept { return sigma_; }
  HallOptions const& options() const noexcept { return options_; }

  /// sigma(G)
  ClassSet const& classes() const noexcept { return classes_; }

  ChiefSeries const& chief_series();
  std::shared_ptr<ChiefSeries const> shared_chief_series();

  HallSearch const& hall(ClassId id);
  /// Hall sigma_i-subgroups grouped by conjugacy; needs |G| under the
  /// enumeration cap.
  std::vector<std::vector<Subgroup>> const& hall_classes(ClassId id);
  bool exhaustive() const;

  /// A complete Hall sigma-set from the per-class searches, if sigma_full().
  std::optional<HallSet> complete_set();

  Truth sigma_full();
  bool sigma_soluble();
  Truth generalized_sigma_soluble();
  /// Some complete Hall sigma-set is a sigma-basis.
  Truth sigma_basis_exists();
  /// The sigma-basis found by sigma_basis_exists(), if any.
  std::optional<HallSet> const& basis() const noexcept { return basis_set_; }
  Truth in_class_X();
  /// Chief-factor condition of the abstract's wording: sigma(H/K) =
  /// sigma(G/C) or sigma(H/K) = {i} and G/C is a sigma_i u sigma_j-group.
  Truth x_abstract_variant();
  Truth in_class_H();

  /// Every chief factor with sigma(H/K) = {i} has |sigma(G/C) \ {i}| <= 1.
  bool universal_basis_condition();

  /// Explanations recorded by the predicates above (keyed by predicate).
  Json const& witnesses() const noexcept { return witness_; }

  Json describe(Subgroup const& h) const;
  Json describe(HallSet const& set) const;

 private:
  std::optional<HallSet> basis_from_hints();

  PermGroup group_;
  SigmaPartition sigma_;
  HallOptions options_;
  ClassSet classes_;
  std::shared_ptr<ChiefSeries const> series_;
  std::map<ClassId, HallSearch> hall_;
  std::map<ClassId, std::vector<std::vector<Subgroup>>> hall_classes_;
  std::optional<Truth> full_, generalized_, basis_, x_, x_abstract_, h_;
  std::optional<bool> soluble_;
  std::optional<HallSet> basis_set_;
  Json witness_ = Json::object();
};

Truth is_sigma_full(PermGroup const& g, SigmaPartition const& sigma, HallOptions const& options = {});
bool is_sigma_soluble(PermGroup const& g, SigmaPartition const& sigma);
Truth is_generalized_sigma_soluble(PermGroup const& g, SigmaPartition const& sigma, HallOptions const& options = {});
Truth in_class_X_sigma(PermGroup const& g, SigmaPartition const& sigma, HallOptions const& options = {});
Truth in_class_H_sigma(PermGroup const& g, SigmaPartition const& sigma, HallOptions const& options = {});

}  // namespace sigma
