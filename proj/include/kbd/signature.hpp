#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kbd {

struct SortDecl {
  std::string name;
  std::vector<std::string> constants;

  friend bool operator==(const SortDecl&, const SortDecl&) = default;
};

struct PredicateDecl {
  std::string name;
  std::vector<std::string> arg_sorts;
  bool abducible = false;

  friend bool operator==(const PredicateDecl&, const PredicateDecl&) = default;
};

// Finite, function-free, sorted vocabulary. Sorts are non-empty and
// pairwise disjoint; every predicate argument sort is declared.
class Signature {
 public:
  void add_sort(const std::string& name, const std::vector<std::string>& constants);
  void add_predicate(const std::string& name, const std::vector<std::string>& arg_sorts,
                     bool abducible);

  const std::vector<SortDecl>& sorts() const { return sorts_; }
  const std::vector<PredicateDecl>& predicates() const { return predicates_; }

  const SortDecl* find_sort(const std::string& name) const;
  const PredicateDecl* find_predicate(const std::string& name) const;
  std::optional<std::string> sort_of(const std::string& constant) const;
  bool is_abducible(const std::string& predicate) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.sorts_ == b.sorts_ && a.predicates_ == b.predicates_;
  }

 private:
  std::vector<SortDecl> sorts_;
  std::vector<PredicateDecl> predicates_;
  std::map<std::string, std::size_t> sort_index_;
  std::map<std::string, std::size_t> predicate_index_;
  std::map<std::string, std::string> constant_sort_;
};

struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;

  friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
  friend bool operator==(const GroundAtom&, const GroundAtom&) = default;
};

std::string to_string(const GroundAtom& atom);

struct GroundLiteral {
  GroundAtom atom;
  bool positive = true;

  // Orders by atom, positive before negative.
  friend std::strong_ordering operator<=>(const GroundLiteral& a, const GroundLiteral& b) {
    if (auto c = a.atom <=> b.atom; c != 0) return c;
    return b.positive <=> a.positive;
  }
  friend bool operator==(const GroundLiteral&, const GroundLiteral&) = default;
};

std::string to_string(const GroundLiteral& literal);

// S+, S- and |S| for a literal set S.
std::set<GroundLiteral> positive_part(const std::vector<GroundLiteral>& literals);
std::set<GroundLiteral> negative_part(const std::vector<GroundLiteral>& literals);
std::set<GroundAtom> atoms_of(const std::vector<GroundLiteral>& literals);

// S is consistent iff S+ and |S-| share no atom.
bool is_consistent(const std::vector<GroundLiteral>& literals);

}  // namespace kbd
