#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tflab/rational.hpp"
#include "tflab/set_descriptor.hpp"
#include "tflab/topoframe.hpp"

namespace tflab {

enum class RingOp { Add, Sub, Mul, Min, Max };

/// An exact rational-valued step function over a topoframe: finitely many
/// pieces (value, carrier) whose carriers are open, pairwise disjoint and
/// join to the top. Canonical form keeps pieces sorted by ascending value
/// with distinct values and no bottom carriers, so equality is structural.
///
/// Functions are immutable; every operation returns a fresh value and
/// rejects operands from two different topoframes.
class StepFunction {
 public:
  struct Piece {
    Rational value;
    Elem carrier;

    bool operator==(const Piece&) const = default;
  };

  /// Canonicalizes (merges equal values by join, drops bottom carriers)
  /// and validates: carriers open and pairwise disjoint, joining to top.
  /// Throws ValidationError when the pieces are not a partition or a
  /// carrier is not open.
  static StepFunction from_pieces(std::shared_ptr<const Topoframe> tf,
                                  std::vector<Piece> pieces);
  static StepFunction constant(std::shared_ptr<const Topoframe> tf,
                               const Rational& r);

  const std::shared_ptr<const Topoframe>& topoframe() const { return tf_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  /// The open element f(X) = join of the carriers whose value lies in X.
  Elem evaluate(const SetDescriptor& X) const;
  /// f({r}): the carrier of value r, or bottom.
  Elem at_singleton(const Rational& r) const;
  /// z(f) = f({0}).
  Elem zero_of() const;
  /// coz(f) = f(R minus {0}) = complement of z(f).
  Elem coz_of() const;

  bool is_zero() const;
  bool is_one() const;

  StepFunction add(const StepFunction& g) const;
  StepFunction sub(const StepFunction& g) const;
  StepFunction mul(const StepFunction& g) const;
  /// Pointwise minimum and maximum.
  StepFunction vmin(const StepFunction& g) const;
  StepFunction vmax(const StepFunction& g) const;
  StepFunction negate() const;
  StepFunction abs() const;
  StepFunction scalar(const Rational& r) const;
  /// f^n for n >= 0; f^0 is the constant one.
  StepFunction pow(int n) const;

  /// True when the two functions live over the same topoframe and agree on
  /// every singleton (equivalently, have identical canonical pieces).
  bool operator==(const StepFunction& g) const;

  /// Pieces as "v@carrier" joined by " ; ", ascending by value.
  std::string to_string() const;

 private:
  StepFunction() = default;

  std::shared_ptr<const Topoframe> tf_;
  std::vector<Piece> pieces_;
};

inline StepFunction make_constant(std::shared_ptr<const Topoframe> tf,
                                  const Rational& r) {
  return StepFunction::constant(std::move(tf), r);
}

StepFunction ring_op(const StepFunction& f, const StepFunction& g, RingOp op);

inline StepFunction negate(const StepFunction& f) { return f.negate(); }
inline StepFunction abs(const StepFunction& f) { return f.abs(); }
inline StepFunction scalar(const Rational& r, const StepFunction& f) {
  return f.scalar(r);
}
inline Elem evaluate(const StepFunction& f, const SetDescriptor& X) {
  return f.evaluate(X);
}
inline Elem zero_of(const StepFunction& f) { return f.zero_of(); }
inline Elem coz_of(const StepFunction& f) { return f.coz_of(); }

/// The idempotent with value 1 on a and 0 on the complement of a.
/// Throws NotClopen unless both a and its complement are open.
StepFunction characteristic(std::shared_ptr<const Topoframe> tf, Elem a);

/// Report of the absorption identities of a finite family: with
/// a = join of the cozeros, every member f satisfies f·f_a^n = f (n up to
/// three; the power is redundant since f_a is idempotent, but checked) and
/// f·f_{a′} = 0, while the complement of a is the meet of the zero sets.
struct AbsorbReport {
  Elem join_coz{};
  bool absorb_each = true;
  bool annihilate_each = true;
  bool complement_is_meet_of_zeros = true;

  bool all() const {
    return absorb_each && annihilate_each && complement_is_meet_of_zeros;
  }
};

AbsorbReport absorb_laws(std::shared_ptr<const Topoframe> tf,
                         const std::vector<StepFunction>& family);

struct UnitCheck {
  bool unit = false;
  std::optional<StepFunction> inverse;
};

/// f is a unit iff its zero set is bottom; the inverse inverts each value.
UnitCheck is_unit(const StepFunction& f);

struct ZeroDivisorCheck {
  bool zero = false;         // f itself is the zero function
  bool zerodivisor = false;  // nonzero with a nonzero annihilating partner
  std::optional<StepFunction> witness;
};

/// Every nonzero nonunit is a zerodivisor, witnessed by the idempotent
/// carried by the zero set.
ZeroDivisorCheck is_zerodivisor(const StepFunction& f);

/// The quasi-inverse g with f = g·f² and z(g) = z(f): reciprocal values
/// on the nonzero pieces, value 0 on the zero set.
StepFunction quasi_inverse(const StepFunction& f);

/// For an idempotent e returns coz(e), the clopen element with
/// e = characteristic(coz(e)). Throws NotIdempotent otherwise.
Elem idempotent_normal_form(const StepFunction& e);

/// From a = x·a² builds the unit u = 1 + a·x² − a·(a·x²) and the
/// idempotent e = a·u. Throws PreconditionFailed unless a = x·a².
std::pair<StepFunction, StepFunction> unit_and_idempotent_from_regular(
    const StepFunction& a, const StepFunction& x);

/// The separating element h of an orthogonal system: h annihilates every
/// member of T while h·f = f² for every f in S. Carrier of a nonzero
/// value v is the join of the S-members' value-v carriers; the zero piece
/// carries the complement of the joined cozeros. S must not contain the
/// zero function (PreconditionFailed); any non-annihilating pair among
/// S ∪ T raises NotOrthogonal.
StepFunction separating_element(std::shared_ptr<const Topoframe> tf,
                                const std::vector<StepFunction>& S,
                                const std::vector<StepFunction>& T);

/// Variant routed through double pseudocomplements: nonzero carriers are
/// replaced by their double pseudocomplement and the zero piece by the
/// pseudocomplement of the joined cozeros. Requires the ambient lattice to
/// be extremally disconnected (EDHypothesisFailed otherwise).
StepFunction separating_element_ed(std::shared_ptr<const Topoframe> tf,
                                   const std::vector<StepFunction>& S,
                                   const std::vector<StepFunction>& T);

/// The idempotent whose cozero is the join of the family's cozeros.
StepFunction countable_coz_join(std::shared_ptr<const Topoframe> tf,
                                const std::vector<StepFunction>& family);

}  // namespace tflab
