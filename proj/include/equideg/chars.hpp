#pragma once

// Character tables and the representation ring R(G).
//
// Virtual characters are integer combinations of irreducible complex
// characters. Class functions hold one value per conjugacy class, in the
// class order of the group.

#include <memory>
#include <string>
#include <vector>

#include "equideg/cyclo.hpp"
#include "equideg/groups.hpp"

namespace equideg::chars {

using cyclo::Cyc;
using groups::GroupPtr;
using ClassFunction = std::vector<Cyc>;

class CharacterTable;
using TablePtr = std::shared_ptr<const CharacterTable>;

class CharacterTable {
 public:
  /// Dixon's method; values in Q(zeta_exponent).
  static TablePtr compute(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return irreducibles_.size(); }
  /// Order of the cyclotomic field holding every value.
  int value_order() const { return value_order_; }
  const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }
  const ClassFunction& irreducible(std::size_t i) const { return irreducibles_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  long degree(std::size_t i) const;
  /// The prime used by the modular computation.
  long prime() const { return prime_; }

  /// (1/|G|) sum_g a(g) conj(b(g)).
  Cyc inner_product(const ClassFunction& a, const ClassFunction& b) const;
  /// Class of g^-1 for each class.
  int inverse_class(int cls) const;

 private:
  CharacterTable() = default;
  GroupPtr group_;
  int value_order_ = 1;
  long prime_ = 0;
  std::vector<ClassFunction> irreducibles_;
  std::vector<std::string> labels_;
};

/// Evaluates a class function on an element rather than a class.
Cyc evaluate(const CharacterTable& t, const ClassFunction& f, int g);

class VirtualCharacter {
 public:
  VirtualCharacter(TablePtr table, std::vector<long> coeffs);
  static VirtualCharacter zero(TablePtr table);
  static VirtualCharacter trivial(TablePtr table);
  static VirtualCharacter irreducible(TablePtr table, std::size_t i);
  /// The regular character.
  static VirtualCharacter regular(TablePtr table);

  const TablePtr& table() const { return table_; }
  const std::vector<long>& coeffs() const { return coeffs_; }
  ClassFunction values() const;
  long dimension() const;
  bool is_zero() const;
  /// Combination such as "2*1a + 1b - 3a"; "0" for zero.
  std::string to_string() const;

  VirtualCharacter& operator+=(const VirtualCharacter& o);
  VirtualCharacter& operator-=(const VirtualCharacter& o);
  friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
  friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
  friend VirtualCharacter operator*(long k, VirtualCharacter a);
  VirtualCharacter operator-() const { return -1 * *this; }
  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
    return a.table_ == b.table_ && a.coeffs_ == b.coeffs_;
  }

 private:
  TablePtr table_;
  std::vector<long> coeffs_;
};

/// Throws DomainError("not a virtual character") when some inner product is not an integer.
VirtualCharacter decompose(const ClassFunction& f, const TablePtr& table);

/// Ind_H^G. chi lives on the table of H.as_group(); g_table is the table of H.parent().
VirtualCharacter induce(const groups::Subgroup& h, const VirtualCharacter& chi, const TablePtr& g_table);
/// Res^G_H. chi lives on the table of H.parent(); h_table is the table of H.as_group().
VirtualCharacter restrict(const groups::Subgroup& h, const VirtualCharacter& chi, const TablePtr& h_table);

VirtualCharacter tensor(const VirtualCharacter& a, const VirtualCharacter& b);
VirtualCharacter dual(const VirtualCharacter& a);
/// Symmetric power by Newton's identity d h_d = sum_j p_j h_{d-j}, p_j(g) = chi(g^j).
VirtualCharacter sym_power(const VirtualCharacter& a, int d);
/// Exterior power by d e_d = sum_j (-1)^{j-1} p_j e_{d-j}.
VirtualCharacter ext_power(const VirtualCharacter& a, int d);

/// Class function of an L-linear representation viewed as k-linear: values traced from L to k.
/// Both fields are given inside their ambient cyclotomic fields; values must lie in `from`.
ClassFunction field_trace_values(const ClassFunction& f, const cyclo::SubfieldSpec& from,
                                 const cyclo::SubfieldSpec& to);
VirtualCharacter field_restrict_scalars(const VirtualCharacter& chi, const cyclo::SubfieldSpec& from,
                                        const cyclo::SubfieldSpec& to);
/// Same, for a class function whose values lie in `from` but need not be a character.
VirtualCharacter field_restrict_scalars(const ClassFunction& f, const TablePtr& table,
                                        const cyclo::SubfieldSpec& from, const cyclo::SubfieldSpec& to);

/// Frobenius-Schur indicator (1/|G|) sum chi(g^2) of irreducible i: 1, 0 or -1.
int frobenius_schur(const CharacterTable& t, std::size_t i);

}  // namespace equideg::chars
