#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crc/graded_algebra.hpp"
#include "crc/ratfunc.hpp"

namespace crc {

enum class Space { X, Y };

std::string to_string(Space s);
Space parse_space(const std::string& text);

struct CurveClass {
  Space space = Space::X;
  std::vector<int> coords;

  static CurveClass zero(Space s);
  static CurveClass x(int d) { return {Space::X, {d}}; }
  static CurveClass y(int n, int i) { return {Space::Y, {n, i}}; }

  bool effective() const;
  bool is_zero() const;
  bool leq(const CurveClass& o) const;  // componentwise
  CurveClass operator+(const CurveClass& o) const;
  CurveClass operator-(const CurveClass& o) const;
  std::string to_string() const;
  auto operator<=>(const CurveClass&) const = default;
};

// Every effective class below `bound`, in lexicographic order.
std::vector<CurveClass> classes_below(const CurveClass& bound);

struct InvariantKey {
  std::vector<int> insertions;  // sorted basis indices
  CurveClass beta;

  InvariantKey() = default;
  InvariantKey(std::vector<int> ins, CurveClass b);
  std::size_t points() const { return insertions.size(); }
  auto operator<=>(const InvariantKey&) const = default;
};

// Static data of a target space: cohomology, c1 and divisor pairings on curve classes.
struct SpaceModel {
  Space space;
  std::shared_ptr<const GradedAlgebra> algebra;
  std::vector<Rational> c1;                      // <c1, beta> = sum c1[k] * beta[k]
  std::map<int, std::vector<Rational>> divisors;  // divisor basis index -> pairing with beta coords
  CurveClass default_bound;

  Rational c1_pairing(const CurveClass& beta) const;
  std::optional<Rational> divisor_pairing(int index, const CurveClass& beta) const;
  std::string name(int index) const { return algebra->basis_class(index).name; }
  int index(const std::string& name) const { return algebra->index_of(name); }
};

const SpaceModel& space_model(Space s);

std::string to_string(const SpaceModel& m, const InvariantKey& k);

// Virtual dimension: sum of insertion degrees = dim - 3 + <c1,beta> + points.
bool dimension_filter(Space space, const InvariantKey& key);
// Orbifold only: an even number of twisted insertions.
bool parity_filter(Space space, const InvariantKey& key);
bool passes_filters(Space space, const InvariantKey& key);

// Invariants of a whole ray of classes given in closed form.
struct ClosedFormFamily {
  std::string name;
  std::function<bool(const CurveClass&)> covers;
  std::function<Rational(const InvariantKey&)> value;
  // Sum over the covered classes of value * q1^n, when that is a rational function.
  std::function<std::optional<RationalFunction>(const std::vector<int>&)> generating;
};

// <T1,...,T1>^{n,0} = 6 n^(k-3) (and 6/n^3 with no insertions); everything else on the ray vanishes.
ClosedFormFamily y_multiple_cover_family(const Rational& constant = Rational{6});

class InvariantTable {
 public:
  explicit InvariantTable(Space space);

  Space space() const { return space_; }
  const SpaceModel& model() const { return space_model(space_); }

  void set(const InvariantKey& key, const Rational& value);
  void set(const std::vector<std::string>& names, const CurveClass& beta, const Rational& value);
  void erase(const InvariantKey& key);
  std::optional<Rational> stored(const InvariantKey& key) const;

  // The invariant, or OutOfTableRange when the table does not determine it. Unstored
  // keys with beta != 0 are also resolved through the divisor axiom in either direction.
  Rational value(const InvariantKey& key) const;
  std::optional<Rational> try_value(const InvariantKey& key) const;
  Rational value(const std::vector<std::string>& names, const CurveClass& beta) const;

  void add_family(ClosedFormFamily f) { families_.push_back(std::move(f)); }
  const std::vector<ClosedFormFamily>& families() const { return families_; }
  ClosedFormFamily* family_named(const std::string& name);

  // Every key with beta <= bound and a point count in `points` that is not stored is zero.
  void set_closure(const CurveClass& bound, std::set<int> points);
  void mark_complete(const CurveClass& beta, int points) { complete_.insert({beta, points}); }
  void mark_undetermined(const InvariantKey& key) { undetermined_.insert(key); }

  std::optional<CurveClass> bound() const { return bound_; }
  const std::set<int>& closure_points() const { return closure_points_; }
  const std::map<InvariantKey, Rational>& entries() const { return entries_; }
  const std::set<InvariantKey>& undetermined() const { return undetermined_; }

 private:
  std::optional<Rational> known_zero_or_throw(const InvariantKey& key, bool throwing) const;
  std::optional<Rational> from_divisor_class(const InvariantKey& key) const;

  Space space_;
  std::map<InvariantKey, Rational> entries_;
  std::vector<ClosedFormFamily> families_;
  std::optional<CurveClass> bound_;
  std::set<int> closure_points_;
  std::set<std::pair<CurveClass, int>> complete_;
  std::set<InvariantKey> undetermined_;
  // Divisor-free form -> (stored key -> stored value / divisor factor).
  std::map<InvariantKey, std::map<InvariantKey, Rational>> normalized_;
};

// Removes every divisor insertion: <D1..Dr, rest>^beta = prod <Di,beta> <rest>^beta (beta != 0).
std::pair<Rational, InvariantKey> divisor_normal_form(const InvariantKey& key);

// Removes one divisor insertion: <D, rest>^beta = <D,beta> <rest>^beta.
// With `divisor` >= 0 that class is removed, otherwise the first divisor present.
std::optional<std::pair<Rational, InvariantKey>> divisor_reduce(const InvariantKey& key, int divisor = -1);

// Keys with the given point count, 1 <= beta <= maxDegree, no unit insertion, passing the filters.
std::vector<InvariantKey> enumerate_candidates(Space space, int maxDegree, int points = 3);
std::vector<InvariantKey> keys_at(Space space, const CurveClass& beta, int points, bool allowUnit = false);

struct SeedTables {
  InvariantTable x;
  InvariantTable y;
};

// The published three-point values of both spaces with their default closures.
SeedTables seed_tables();
// The three values computed directly from moduli spaces of orbifold maps.
InvariantTable x_moduli_seeds();
// The two (0,1) two-point values and the multiple-cover family.
InvariantTable y_two_point_seeds();

// {"space": "X", "invariants": [{"insertions": [...], "beta": [...], "value": "p/q"}]}
std::string table_to_json(const InvariantTable& t);
InvariantTable table_from_json(const std::string& text);

}  // namespace crc
