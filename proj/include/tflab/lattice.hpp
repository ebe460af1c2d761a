#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tflab/bits.hpp"
#include "tflab/error.hpp"

namespace tflab {

class Lattice;

/// Opaque element handle. Valid only for the lattice that produced it;
/// every binary operation rejects handles from two different lattices.
struct Elem {
  const Lattice* owner = nullptr;
  int idx = -1;

  bool valid() const { return owner != nullptr && idx >= 0; }
  bool operator==(const Elem&) const = default;
};

/// Finite poset given by cover pairs (lower, upper). The substrate for
/// generating finite distributive lattices as downset lattices.
struct Poset {
  int size = 0;
  std::vector<std::pair<int, int>> covers;

  /// Throws InvalidArgument on out-of-range nodes or a cyclic cover relation.
  void validate() const;

  /// strict_below[i] = set of nodes strictly below node i (transitive).
  std::vector<Bits> strict_below() const;
};

/// How the lattice was declared; needed to print a document back out.
enum class LatticeKind { Powerset, Downsets, Custom };

/// A finite bounded distributive lattice, i.e. a finite frame.
///
/// Construction validates everything the rest of the library relies on:
/// the input relation is a partial order, every pair has a unique meet and
/// join, and the binary distributive law holds for all triples (which at
/// finite scale is exactly the frame law). Meets and joins are precomputed
/// into full tables straight from the order relation; independently, each
/// element is encoded as the bitset of join-irreducibles below it, where
/// meet and join are word-wise AND/OR. The two routes are checked against
/// each other on every pair before construction succeeds, so later
/// law-checking against the tables is not circular.
///
/// Immutable after construction; all operations are pure and safe to share
/// across threads.
class Lattice {
 public:
  /// `leq_pairs` lists (lower, upper) pairs of a partial order on 0..n-1;
  /// reflexive pairs may be omitted. Throws InvalidArgument if the relation
  /// is not a partial order, NotALattice if some pair lacks a meet or join
  /// or there is no bottom/top, NotDistributive (naming a witness triple)
  /// if distributivity fails.
  static std::shared_ptr<const Lattice> build_from_order(
      int n, const std::vector<std::pair<int, int>>& leq_pairs,
      std::vector<std::string> names = {});

  /// The powerset of {1..npoints} ordered by inclusion. Element index i
  /// is the subset whose point-bitmask is i.
  static std::shared_ptr<const Lattice> powerset(int npoints);

  /// Birkhoff representation: the lattice of downsets of a poset, ordered
  /// by inclusion (every finite distributive lattice arises this way).
  /// Elements are named by their node sets, e.g. "{0,2}".
  static std::shared_ptr<const Lattice> birkhoff(const Poset& poset);

  int size() const { return n_; }
  Elem element(int idx) const;
  Elem bottom() const { return {this, bot_}; }
  Elem top() const { return {this, top_}; }

  bool leq(Elem a, Elem b) const;
  Elem meet(Elem a, Elem b) const;
  Elem join(Elem a, Elem b) const;

  /// Empty-family conventions: big_join({}) = bottom, big_meet({}) = top.
  Elem big_join(std::span<const Elem> xs) const;
  Elem big_meet(std::span<const Elem> xs) const;

  /// Largest x with x ∧ a = bottom.
  Elem pseudocomplement(Elem a) const;

  /// a is complemented iff a ∨ a* = top; then the complement is a*.
  bool is_complemented(Elem a) const;
  /// Throws ComplementRequested if a is not complemented.
  Elem complement_of(Elem a) const;

  /// Minimal nonzero elements.
  std::vector<Elem> atoms() const;
  /// Elements with exactly one lower cover.
  std::vector<Elem> join_irreducibles() const;

  const std::string& name(Elem a) const;
  /// Element lookup by canonical name; returns invalid Elem if unknown.
  Elem by_name(const std::string& name) const;

  /// Bitset of join-irreducible positions below a (the downset encoding).
  const Bits& ji_downset(Elem a) const;

  LatticeKind kind() const { return kind_; }
  /// Point count for Powerset, node count for Downsets.
  int decl_size() const { return decl_size_; }
  const Poset& decl_poset() const { return decl_poset_; }

 private:
  Lattice() = default;
  void check_mine(Elem a) const;

  int n_ = 0;
  int bot_ = -1, top_ = -1;
  std::vector<int> meet_, join_;  // n*n tables, row-major
  std::vector<int> pseudo_;
  std::vector<Bits> up_, down_;   // up_[a] = {b : a <= b}
  std::vector<int> ji_;           // join-irreducible element ids, ascending
  std::vector<Bits> enc_;         // enc_[a] over positions of ji_
  std::vector<int> atoms_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::string, int>> name_index_;  // sorted by name

  LatticeKind kind_ = LatticeKind::Custom;
  int decl_size_ = 0;
  Poset decl_poset_;
};

/// Human-readable "a" for diagnostics: the element name.
inline const std::string& name_of(Elem a) { return a.owner->name(a); }

}  // namespace tflab
