#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ekrm/chartable.hpp"
#include "ekrm/coset_action.hpp"
#include "ekrm/exact_span.hpp"
#include "ekrm/kernels.hpp"
#include "ekrm/structure.hpp"

namespace ekrm {

struct IntersectingSet {
  std::vector<Permutation> elements;  // sorted
  bool contains_identity = false;
};

/// True iff s r^-1 fixes a point for all s, r in `set` (elements of action.group()).
bool is_intersecting(const CosetAction& action, const std::vector<Permutation>& set);

/// The faithful quotient: the image of G on the coset space acting on its
/// own points, with point 0 the coset H. Natural faithful actions pass through.
CosetAction kernel_reduce(const CosetAction& action);

/// Classes of action.group() containing no element that fixes a point.
std::vector<std::size_t> derangement_classes(const CosetAction& action, const ConjugacyClasses& classes);

struct MaxSetSearch {
  std::size_t max_size = 0;
  std::vector<IntersectingSet> sets;  // all maximum sets containing 1, sorted
  bool exhaustive = true;
  std::uint64_t nodes = 0;
  std::size_t fixer_count = 0;  // |union of conjugates of H|
};

/// All maximum intersecting sets containing 1, as maximum cliques of the
/// graph on the fixer union joined when s r^-1 fixes a point. Requires a
/// faithful action.
MaxSetSearch max_intersecting_sets_containing_identity(const CosetAction& action, const Budget& budget = {},
                                                       Exec exec = Exec::parallel);

struct Shortcut {
  std::string method;   // shortcut:nilpotent-class<=2 | shortcut:regular-normal | shortcut:2-transitive
  std::string witness;  // nilpotency class, generators of N, or the rank
};

/// Structural reasons for the module property, in precedence order,
/// evaluated on the faithful quotient. Empty if none applies.
std::vector<Shortcut> applicable_shortcuts(const CosetAction& action, const Budget& budget = {});
std::optional<Shortcut> shortcut_verdicts(const CosetAction& action, const Budget& budget = {});

struct ModuleWitness {
  IntersectingSet set;
  std::size_t character = 0;  // row of the quotient's table
  Cyclotomic sum;
};

struct Verdict {
  std::uint64_t group_order = 0;
  std::uint64_t subgroup_order = 0;
  std::uint64_t kernel_order = 1;
  std::size_t degree = 0;
  std::uint64_t max_size = 0;  // in G, i.e. quotient size times |K|
  bool ekr = false;
  bool strict_ekr = false;
  bool ekr_module = false;
  bool module_by_enumeration = false;  // character criterion on the enumerated sets alone
  std::string method = "exhaustive";
  bool exhaustive = true;
  std::uint64_t search_nodes = 0;
  std::size_t fixer_count = 0;

  CosetAction quotient;                         // faithful action the sets live in
  std::shared_ptr<const CharacterTable> table;  // of quotient.group()
  std::vector<std::size_t> derangement_classes;
  CharacterSplit characters;                    // C and Y_H for the point stabilizer
  std::vector<IntersectingSet> max_sets_containing_identity;
  std::optional<IntersectingSet> strict_witness;  // a non-canonical maximum set
  std::optional<ModuleWitness> module_witness;
  std::vector<Shortcut> shortcuts;
};

/// Kernel reduction, then shortcuts, then exhaustive enumeration and the
/// character criterion. A shortcut decides ekr_module; enumeration still
/// runs and a disagreement throws std::logic_error.
Verdict ekr_verdicts(const CosetAction& action, const Budget& budget = {}, Exec exec = Exec::parallel);

/// The n^2 canonical sets {t : t(beta) = alpha} of a faithful action, over
/// the permutations the group induces on the points.
class CanonicalFamily {
 public:
  CanonicalFamily(const CosetAction& faithful, const Budget& budget = {});
  std::size_t degree() const { return degree_; }
  const ElementTable& elements() const { return *table_; }
  /// Table indices of {t : t(beta) = alpha}, sorted; this is alpha-coset of
  /// the stabilizer of beta.
  std::vector<ElementTable::Index> member(Point alpha, Point beta) const;
  std::vector<Permutation> member_elements(Point alpha, Point beta) const;

 private:
  std::size_t degree_;
  std::shared_ptr<const ElementTable> table_;
};

/// Span of canonical vectors in Q^|G|, for membership queries. Sets are
/// given as elements of faithful.group().
class CanonicalSpan {
 public:
  explicit CanonicalSpan(const CosetAction& faithful, const Budget& budget = {});
  std::size_t rank() const { return span_.rank(); }
  bool contains(const std::vector<Permutation>& set) const;

 private:
  CosetAction action_;
  CanonicalFamily family_;
  ExactSpan span_;
};

/// Independent check of the module condition for one set by exact rank.
bool span_membership_oracle(const CosetAction& faithful, const std::vector<Permutation>& set,
                            const Budget& budget = {});

/// True iff each ordered pair of points is carried by exactly one element
/// of R. Throws std::invalid_argument unless |R| = degree.
bool verify_regular_subset(const CosetAction& action, const std::vector<Permutation>& r);

/// Preimage in action.group() of a set of quotient elements.
std::vector<Permutation> preimage(const CosetAction& action, const std::vector<Permutation>& quotient_elements,
                                  const Budget& budget = {});

struct WreathSetCheck {
  std::vector<Permutation> w, z, x;  // components in T
  bool size_ok = false;
  bool decomposition_ok = false;  // S0 = (W x Z) u (X x X^-1) pi
  bool components_ok = false;     // 1 in W, Z; W, Z, X maximum intersecting in T
  bool sums_ok = false;           // psi and nu sums on W, Z, X
};

struct WreathReport {
  std::size_t degree = 0;
  std::uint64_t order = 0;
  std::size_t rank = 0;
  std::uint64_t stabilizer_order_t = 0;  // |H| in T
  std::size_t psi = 0;                   // row of T's table with 1 + psi the permutation character
  Verdict verdict;
  std::vector<WreathSetCheck> sets;
  bool all_pass() const;
};

/// Structural checks on T wr S_2 for a 2-transitive T; throws
/// std::invalid_argument if T is not 2-transitive.
WreathReport rank3_wreath_suite(const PermGroup& t, const Budget& budget = {}, Exec exec = Exec::parallel);

nlohmann::json to_json(const IntersectingSet& set);
nlohmann::json to_json(const Verdict& v);

}  // namespace ekrm
