#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tflab/lattice.hpp"

namespace tflab {

/// Result of a boolean property check: on failure `witness` points at a
/// counterexample element and `note` explains what went wrong with it.
struct PropCheck {
  bool holds = true;
  Elem witness{};
  std::string note;

  explicit operator bool() const { return holds; }
};

/// The Boolean algebra of clopen elements of a topoframe: the opens whose
/// complement is also open. Closed under meet, join and complement; every
/// member is the join of the algebra's atoms below it.
struct CloPenAlgebra {
  std::vector<Elem> carrier;  // ascending by element index, starts at bottom
  std::vector<Elem> atoms;    // minimal nonzero members

  bool contains(Elem a) const;
};

/// A frame together with a designated subframe tau of complemented
/// elements (the "open" elements; their complements are the "closed"
/// ones). Carries the induced closure, interior and semi-Heyting
/// operators plus the property checks the theorem harness consumes.
///
/// Immutable after validation; all operations are pure.
class Topoframe {
 public:
  /// Checks that tau contains bottom and top, is closed under binary meet
  /// and join (NotSubframe, naming the failing pair), and that every member
  /// is complemented in the lattice (NotComplemented). Duplicates in tau
  /// are tolerated and dropped.
  static std::shared_ptr<const Topoframe> validate(
      std::shared_ptr<const Lattice> lattice, const std::vector<Elem>& tau);

  const Lattice& lattice() const { return *lat_; }
  const std::shared_ptr<const Lattice>& lattice_ptr() const { return lat_; }

  /// Open elements, ascending by element index.
  const std::vector<Elem>& tau() const { return tau_; }
  /// Complements of the open elements, ascending by element index.
  const std::vector<Elem>& tau_closed() const { return tau_closed_; }

  bool is_open(Elem a) const;
  bool is_closed(Elem a) const;
  bool is_clopen(Elem a) const;

  /// Smallest closed element above p (meet of all closed elements above).
  Elem closure(Elem p) const;
  /// Largest open element below p (join of all open elements below).
  Elem interior(Elem p) const;

  /// a ->_tau b = join of every open x with a ∧ x ≤ b. Always open.
  Elem semi_heyting(Elem a, Elem b) const;
  /// a^⊥ = a ->_tau bottom: the pseudocomplement of a inside tau.
  Elem bot_arrow(Elem a) const;

  /// tau is extremally disconnected as a frame in its own right:
  /// a^⊥ ∨ a^⊥⊥ = ⊤ for every open a.
  PropCheck is_ed_tau_frame() const;
  /// The closure of every open element is again open.
  PropCheck is_ed_topoframe() const;
  /// The zero part (all zero-sets of step functions, which at finite scale
  /// is exactly the clopen algebra) sits inside tau.
  PropCheck is_p_topoframe() const;
  /// Every open element is the join of the clopen elements below it.
  PropCheck is_completely_regular() const;

  const CloPenAlgebra& clopen_algebra() const { return clopen_; }

 private:
  Topoframe() = default;

  std::shared_ptr<const Lattice> lat_;
  std::vector<Elem> tau_, tau_closed_;
  Bits open_mask_{0}, closed_mask_{0};
  std::vector<int> closure_, interior_;  // precomputed per element
  CloPenAlgebra clopen_;
};

/// The whole lattice is extremally disconnected as a frame:
/// a* ∨ a** = ⊤ for every element.
PropCheck is_ed_frame(const Lattice& L);

/// Free-function form of Topoframe::validate.
inline std::shared_ptr<const Topoframe> validate_topoframe(
    std::shared_ptr<const Lattice> lattice, const std::vector<Elem>& tau) {
  return Topoframe::validate(std::move(lattice), tau);
}

}  // namespace tflab
