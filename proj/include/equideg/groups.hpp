#pragma once

// Finite groups by multiplication table, subgroups, conjugacy classes and
// projective-linear actions on P^n.
//
// Elements are indices 0..size-1 with the identity at 0. Every element other
// than the identity is stored as gen * pred for one generator and one element
// found earlier, so anything defined on generators extends along these words.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "equideg/cyclo.hpp"
#include "equideg/matrix.hpp"

namespace equideg::groups {

using cyclo::Cyc;
using CycMatrix = linalg::Matrix<Cyc>;

constexpr std::size_t kDefaultGroupBound = 10080;

struct ConjugacyClass {
  int representative;  // least element index in the class
  std::vector<int> members;
  std::size_t size() const { return members.size(); }
};

class FiniteGroup {
 public:
  /// Permutations given as image arrays p[i] (0-based) on a common set.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& perms,
                                       std::size_t bound = kDefaultGroupBound);
  /// Validates and wraps an explicit table. generators may be empty only for the trivial group.
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::vector<int> generators);

  std::size_t size() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int pow(int a, long e) const;
  int conjugate(int g, int t) const { return mul(mul(t, g), inv(t)); }  // t g t^-1
  int order_of(int a) const { return orders_[static_cast<std::size_t>(a)]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const;

  const std::vector<int>& generators() const { return generators_; }
  /// For g != identity: the generator position k and predecessor p with g = generators()[k] * p.
  int word_generator(int g) const { return word_gen_[static_cast<std::size_t>(g)]; }
  int word_predecessor(int g) const { return word_pred_[static_cast<std::size_t>(g)]; }
  /// Elements in an order where every predecessor precedes its successors.
  const std::vector<int>& word_order() const { return word_order_; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(int g) const { return class_index_[static_cast<std::size_t>(g)]; }
  /// Class of g^e as a function of the class of g.
  int power_class(int cls, long e) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

 private:
  FiniteGroup() = default;
  void finish();

  std::size_t n_ = 1;
  std::vector<int> table_{0};
  std::vector<int> inverse_{0};
  std::vector<int> orders_{1};
  int exponent_ = 1;
  std::vector<int> generators_;
  std::vector<int> word_gen_{-1}, word_pred_{-1}, word_order_{0};
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_index_;
  std::vector<std::string> labels_;

  friend struct ClosureBuilder;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Parses "(1 2 3)(4 5)" (1-based) into a 0-based image array of length at least `degree`.
std::vector<int> parse_cycles(const std::string& text, int degree = 0);
/// 1-based cycle notation of a 0-based image array; "()" for the identity.
std::string cycle_string(const std::vector<int>& perm);

class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<int> members);  // validates closure
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup generated_by(GroupPtr parent, const std::vector<int>& elements);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(int g) const;
  /// Position of parent element g in members(), or -1.
  int local_index(int g) const;

  /// The subgroup as a group in its own right; element i corresponds to members()[i].
  const GroupPtr& as_group() const { return as_group_; }

  /// t H t^-1.
  Subgroup conjugated(int t) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<int> members_;
  GroupPtr as_group_;
};

/// A point of P^n with first nonzero coordinate 1.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<Cyc> coords);  // normalizes; throws on all-zero
  const std::vector<Cyc>& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size() - 1; }
  /// Index of the first nonzero coordinate (the canonical chart).
  std::size_t chart() const;
  /// Smallest subfield of Q(zeta_n) containing the coordinates.
  cyclo::SubfieldSpec residue_field(int n) const;
  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

 private:
  std::vector<Cyc> coords_;
};

/// Scales a matrix so its first nonzero entry (row-major) is 1.
CycMatrix normalize_projective(const CycMatrix& m);

class ProjectiveAction {
 public:
  /// Extends per-generator matrices to all of G along words and verifies the cocycle condition.
  ProjectiveAction(GroupPtr group, std::size_t dim, const std::vector<CycMatrix>& generator_matrices);

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const CycMatrix& matrix(int g) const { return matrices_[static_cast<std::size_t>(g)]; }
  /// lambda with M(g) M(h) = lambda M(gh).
  Cyc cocycle(int g, int h) const;

  ProjPoint apply(int g, const ProjPoint& x) const;
  /// M_g x = scalar * x.
  bool fixes(int g, const ProjPoint& x) const;

 private:
  GroupPtr group_;
  std::size_t dim_ = 0;
  std::vector<CycMatrix> matrices_;
};

/// Projective closure of invertible matrices; identity first. Elements are distinct up to scalars.
/// Returns the group and, per element, a representative matrix.
struct MatrixGroup {
  GroupPtr group;
  std::vector<CycMatrix> matrices;
};
MatrixGroup group_from_matrices(const std::vector<CycMatrix>& generators, std::size_t bound = kDefaultGroupBound);

struct Orbit {
  ProjPoint representative;  // least point of the orbit
  std::vector<ProjPoint> points;  // sorted
  Subgroup stabilizer;  // of the representative
};

Orbit orbit_and_stabilizer(const ProjectiveAction& action, const ProjPoint& x);

/// Throws InputError naming (g, x) when pts is not G-stable. Output sorted by representative.
std::vector<Orbit> partition_into_orbits(const ProjectiveAction& action, const std::vector<ProjPoint>& pts);

/// Some t with t . x = y, or -1.
int transporter(const ProjectiveAction& action, const ProjPoint& x, const ProjPoint& y);

}  // namespace equideg::groups
