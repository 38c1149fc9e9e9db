#pragma once

// Finite topological spaces described by their closed sets, correspondences
// between them, and monotone maps of closed-set lattices. Points are indices
// 0..n-1 and sets of points are bitmasks.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ncspec {

using PointSet = std::uint32_t;

inline constexpr int kMaxPoints = 20;

inline PointSet full_set(int points) { return points == 32 ? ~PointSet{0} : (PointSet{1} << points) - 1; }
inline bool is_subset(PointSet a, PointSet b) { return (a & ~b) == 0; }
inline bool contains_point(PointSet s, int point) { return ((s >> point) & 1U) != 0; }
int popcount(PointSet s);

/// "{0,2,3}" style rendering.
std::string format_point_set(PointSet s);

class FiniteSpace {
 public:
  /// Throws ValidationError unless the family contains the empty and the full
  /// set and is closed under pairwise union and intersection.
  FiniteSpace(int points, std::vector<PointSet> closed_sets);

  static FiniteSpace discrete(int points);

  int points() const { return data_->points; }
  PointSet full() const { return full_set(data_->points); }
  /// Sorted ascending as integers.
  const std::vector<PointSet>& closed_sets() const { return data_->closed; }
  std::size_t closed_count() const { return data_->closed.size(); }
  bool is_closed(PointSet s) const;
  /// Index of a closed set in closed_sets(); throws if not closed.
  std::size_t index_of(PointSet closed) const;
  /// Smallest closed superset.
  PointSet closure(PointSet s) const;
  /// Largest closed subset.
  PointSet closed_interior(PointSet s) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.data_ == b.data_ || (a.data_->points == b.data_->points && a.data_->closed == b.data_->closed);
  }

 private:
  // Immutable once built; copies of a space share it.
  struct Data {
    int points;
    std::vector<PointSet> closed;
    std::vector<PointSet> closure_table;  // indexed by subset
  };
  std::shared_ptr<const Data> data_;
};

/// A map from the points of a source space to subsets of a target space.
class Correspondence {
 public:
  Correspondence(int source_points, int target_points, std::vector<PointSet> table);

  int source_points() const { return source_points_; }
  int target_points() const { return target_points_; }
  const std::vector<PointSet>& table() const { return table_; }
  PointSet at(int point) const { return table_[static_cast<std::size_t>(point)]; }

  /// cU: union of the images of the points of U.
  PointSet image(PointSet u) const;
  /// c^{-1}V = {u : cu meets V}.
  PointSet preimage(PointSet v) const;
  /// c^[-1]V = {u : cu ⊆ V}.
  PointSet strong_preimage(PointSet v) const;

  bool is_single_valued() const;
  /// First point whose image is not a singleton.
  std::optional<int> single_valued_witness() const;

 private:
  int source_points_;
  int target_points_;
  std::vector<PointSet> table_;
};

/// A map Closed X -> Closed Y tabulated on every closed set of X.
class FunctorOnClosed {
 public:
  FunctorOnClosed(FiniteSpace source, FiniteSpace target, std::vector<PointSet> table);

  const FiniteSpace& source() const { return source_; }
  const FiniteSpace& target() const { return target_; }
  /// table()[k] is the value on source().closed_sets()[k].
  const std::vector<PointSet>& table() const { return table_; }
  PointSet operator()(PointSet closed) const { return table_[source_.index_of(closed)]; }

  /// Witness pair (U, U') with U ⊆ U' but phi U not inside phi U'.
  std::optional<std::pair<PointSet, PointSet>> monotonicity_witness() const;
  bool is_monotone() const { return !monotonicity_witness().has_value(); }

  friend bool operator==(const FunctorOnClosed& a, const FunctorOnClosed& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.table_ == b.table_;
  }

 private:
  FiniteSpace source_;
  FiniteSpace target_;
  std::vector<PointSet> table_;
};

FunctorOnClosed identity_functor(const FiniteSpace& x);

/// Closed V in `target` whose strong preimage is not closed in `source`.
std::optional<PointSet> continuity_witness(const Correspondence& c, const FiniteSpace& source,
                                           const FiniteSpace& target);
inline bool is_continuous(const Correspondence& c, const FiniteSpace& source, const FiniteSpace& target) {
  return !continuity_witness(c, source, target).has_value();
}

/// U -> closure of cU.
FunctorOnClosed phi_upper(const Correspondence& c, const FiniteSpace& source, const FiniteSpace& target);
/// V -> closure of c^[-1]V.
FunctorOnClosed phi_lower(const Correspondence& c, const FiniteSpace& source, const FiniteSpace& target);

struct AdjunctionWitness {
  PointSet u;  // closed in phi's source
  PointSet v;  // closed in phi's target
};

/// Checks phi U ⊆ V <=> U ⊆ psi V over all closed pairs; returns a failing
/// pair, or nullopt when phi is left adjoint to psi.
std::optional<AdjunctionWitness> left_adjoint_witness(const FunctorOnClosed& phi, const FunctorOnClosed& psi);
inline bool is_left_adjoint(const FunctorOnClosed& phi, const FunctorOnClosed& psi) {
  return !left_adjoint_witness(phi, psi).has_value();
}

/// The right adjoint of phi when one exists. The only candidate sends V to
/// the union of the closed U with phi U ⊆ V.
std::optional<FunctorOnClosed> find_right_adjoint(const FunctorOnClosed& phi);

/// Every topology on `points` points (points <= 4), as closed-set families.
std::vector<FiniteSpace> enumerate_topologies(int points);

/// One representative per homeomorphism class.
std::vector<FiniteSpace> topologies_up_to_homeomorphism(int points);

}  // namespace ncspec
