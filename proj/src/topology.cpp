#include "ncspec/topology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "ncspec/scalar.hpp"

namespace ncspec {

int popcount(PointSet s) { return std::popcount(s); }

std::string format_point_set(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (contains_point(s, i)) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  return out + "}";
}

// ---------------------------------------------------------------------------
// FiniteSpace
// ---------------------------------------------------------------------------

FiniteSpace::FiniteSpace(int points, std::vector<PointSet> closed_sets) {
  if (points < 0 || points > kMaxPoints)
    throw ValidationError("finite space: point count must lie in [0, " + std::to_string(kMaxPoints) + "]");
  auto data = std::make_shared<Data>();
  data->points = points;
  data->closed = std::move(closed_sets);
  auto& cs = data->closed;
  auto& table = data->closure_table;
  const PointSet all = full_set(points);
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  for (PointSet s : cs)
    if (!is_subset(s, all)) throw ValidationError("finite space: closed set " + format_point_set(s) + " has stray points");
  if (!std::binary_search(cs.begin(), cs.end(), PointSet{0}))
    throw ValidationError("finite space: the empty set must be closed");
  if (!std::binary_search(cs.begin(), cs.end(), all))
    throw ValidationError("finite space: the whole space must be closed");
  for (PointSet a : cs)
    for (PointSet b : cs) {
      if (!std::binary_search(cs.begin(), cs.end(), a | b))
        throw ValidationError("finite space: union of " + format_point_set(a) + " and " + format_point_set(b) +
                              " is not closed");
      if (!std::binary_search(cs.begin(), cs.end(), a & b))
        throw ValidationError("finite space: intersection of " + format_point_set(a) + " and " + format_point_set(b) +
                              " is not closed");
    }
  table.assign(std::size_t{1} << points, all);
  for (PointSet s = 0; s <= all; ++s) {
    PointSet best = all;
    for (PointSet c : cs)
      if (is_subset(s, c)) best &= c;
    table[s] = best;
    if (s == all) break;
  }
  data_ = std::move(data);
}

FiniteSpace FiniteSpace::discrete(int points) {
  std::vector<PointSet> all;
  for (PointSet s = 0; s <= full_set(points); ++s) {
    all.push_back(s);
    if (s == full_set(points)) break;
  }
  return FiniteSpace(points, std::move(all));
}

bool FiniteSpace::is_closed(PointSet s) const {
  return std::binary_search(data_->closed.begin(), data_->closed.end(), s);
}

std::size_t FiniteSpace::index_of(PointSet closed) const {
  const auto& cs = data_->closed;
  auto it = std::lower_bound(cs.begin(), cs.end(), closed);
  if (it == cs.end() || *it != closed) throw ValidationError(format_point_set(closed) + " is not a closed set");
  return static_cast<std::size_t>(it - cs.begin());
}

PointSet FiniteSpace::closure(PointSet s) const {
  if (!is_subset(s, full())) throw ValidationError("closure: " + format_point_set(s) + " has stray points");
  return data_->closure_table[s];
}

PointSet FiniteSpace::closed_interior(PointSet s) const {
  PointSet best = 0;
  for (PointSet c : data_->closed)
    if (is_subset(c, s)) best |= c;
  return best;
}

// ---------------------------------------------------------------------------
// Correspondence
// ---------------------------------------------------------------------------

Correspondence::Correspondence(int source_points, int target_points, std::vector<PointSet> table)
    : source_points_(source_points), target_points_(target_points), table_(std::move(table)) {
  if (static_cast<int>(table_.size()) != source_points_)
    throw ValidationError("correspondence: one image per source point required");
  for (PointSet t : table_)
    if (!is_subset(t, full_set(target_points_))) throw ValidationError("correspondence: image has stray points");
}

PointSet Correspondence::image(PointSet u) const {
  PointSet out = 0;
  for (int i = 0; i < source_points_; ++i)
    if (contains_point(u, i)) out |= table_[static_cast<std::size_t>(i)];
  return out;
}

PointSet Correspondence::preimage(PointSet v) const {
  PointSet out = 0;
  for (int i = 0; i < source_points_; ++i)
    if ((table_[static_cast<std::size_t>(i)] & v) != 0) out |= PointSet{1} << i;
  return out;
}

PointSet Correspondence::strong_preimage(PointSet v) const {
  PointSet out = 0;
  for (int i = 0; i < source_points_; ++i)
    if (is_subset(table_[static_cast<std::size_t>(i)], v)) out |= PointSet{1} << i;
  return out;
}

std::optional<int> Correspondence::single_valued_witness() const {
  for (int i = 0; i < source_points_; ++i)
    if (popcount(table_[static_cast<std::size_t>(i)]) != 1) return i;
  return std::nullopt;
}

bool Correspondence::is_single_valued() const { return !single_valued_witness().has_value(); }

// ---------------------------------------------------------------------------
// FunctorOnClosed
// ---------------------------------------------------------------------------

FunctorOnClosed::FunctorOnClosed(FiniteSpace source, FiniteSpace target, std::vector<PointSet> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (table_.size() != source_.closed_count())
    throw ValidationError("functor on closed sets: one value per closed set required");
  for (PointSet v : table_)
    if (!target_.is_closed(v)) throw ValidationError("functor on closed sets: value " + format_point_set(v) + " is not closed");
}

std::optional<std::pair<PointSet, PointSet>> FunctorOnClosed::monotonicity_witness() const {
  const auto& cs = source_.closed_sets();
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = 0; b < cs.size(); ++b)
      if (is_subset(cs[a], cs[b]) && !is_subset(table_[a], table_[b])) return std::make_pair(cs[a], cs[b]);
  return std::nullopt;
}

FunctorOnClosed identity_functor(const FiniteSpace& x) { return FunctorOnClosed(x, x, x.closed_sets()); }

std::optional<PointSet> continuity_witness(const Correspondence& c, const FiniteSpace& source, const FiniteSpace& target) {
  for (PointSet v : target.closed_sets())
    if (!source.is_closed(c.strong_preimage(v))) return v;
  return std::nullopt;
}

FunctorOnClosed phi_upper(const Correspondence& c, const FiniteSpace& source, const FiniteSpace& target) {
  std::vector<PointSet> table;
  for (PointSet u : source.closed_sets()) table.push_back(target.closure(c.image(u)));
  return FunctorOnClosed(source, target, std::move(table));
}

FunctorOnClosed phi_lower(const Correspondence& c, const FiniteSpace& source, const FiniteSpace& target) {
  std::vector<PointSet> table;
  for (PointSet v : target.closed_sets()) table.push_back(source.closure(c.strong_preimage(v)));
  return FunctorOnClosed(target, source, std::move(table));
}

std::optional<AdjunctionWitness> left_adjoint_witness(const FunctorOnClosed& phi, const FunctorOnClosed& psi) {
  if (!(phi.source() == psi.target()) || !(phi.target() == psi.source()))
    throw ValidationError("adjunction check: functors do not run between the same pair of spaces");
  const auto& us = phi.source().closed_sets();
  const auto& vs = phi.target().closed_sets();
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (is_subset(phi.table()[i], vs[j]) != is_subset(us[i], psi.table()[j])) return AdjunctionWitness{us[i], vs[j]};
  return std::nullopt;
}

std::optional<FunctorOnClosed> find_right_adjoint(const FunctorOnClosed& phi) {
  const auto& us = phi.source().closed_sets();
  std::vector<PointSet> table;
  for (PointSet v : phi.target().closed_sets()) {
    PointSet best = 0;
    for (std::size_t i = 0; i < us.size(); ++i)
      if (is_subset(phi.table()[i], v)) best |= us[i];
    table.push_back(best);
  }
  FunctorOnClosed psi(phi.target(), phi.source(), std::move(table));
  if (!is_left_adjoint(phi, psi)) return std::nullopt;
  return psi;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

std::vector<FiniteSpace> enumerate_topologies(int points) {
  if (points < 0 || points > 4) throw CapExceeded("enumerate_topologies supports at most 4 points");
  const PointSet all = full_set(points);
  // Families containing the empty and the full set: choose any subset of the
  // remaining 2^n - 2 subsets, then keep the lattices.
  std::vector<PointSet> middle;
  for (PointSet s = 1; s < all; ++s) middle.push_back(s);
  std::vector<FiniteSpace> out;
  const std::uint64_t families = std::uint64_t{1} << middle.size();
  for (std::uint64_t mask = 0; mask < families; ++mask) {
    std::vector<PointSet> closed{0, all};
    for (std::size_t k = 0; k < middle.size(); ++k)
      if ((mask >> k) & 1U) closed.push_back(middle[k]);
    bool lattice = true;
    for (std::size_t a = 0; a < closed.size() && lattice; ++a)
      for (std::size_t b = a + 1; b < closed.size() && lattice; ++b) {
        const PointSet u = closed[a] | closed[b], n = closed[a] & closed[b];
        lattice = std::find(closed.begin(), closed.end(), u) != closed.end() &&
                  std::find(closed.begin(), closed.end(), n) != closed.end();
      }
    if (lattice) out.emplace_back(points, std::move(closed));
  }
  return out;
}

namespace {

PointSet permute(PointSet s, const std::vector<int>& perm) {
  PointSet out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (contains_point(s, static_cast<int>(i))) out |= PointSet{1} << perm[i];
  return out;
}

std::vector<PointSet> canonical_form(const FiniteSpace& x) {
  std::vector<int> perm(static_cast<std::size_t>(x.points()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<PointSet> best;
  do {
    std::vector<PointSet> image;
    for (PointSet c : x.closed_sets()) image.push_back(permute(c, perm));
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = std::move(image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<FiniteSpace> topologies_up_to_homeomorphism(int points) {
  std::set<std::vector<PointSet>> seen;
  std::vector<FiniteSpace> out;
  for (const auto& x : enumerate_topologies(points)) {
    auto key = canonical_form(x);
    if (seen.insert(key).second) out.emplace_back(points, std::move(key));
  }
  return out;
}

}  // namespace ncspec
