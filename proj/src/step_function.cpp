#include "tflab/step_function.hpp"

#include <algorithm>
#include <map>

#include "tflab/error.hpp"

namespace tflab {

namespace {

void check_same_parent(const StepFunction& f, const StepFunction& g) {
  if (f.topoframe().get() != g.topoframe().get())
    fail(Errc::MixedTopoframes,
         "operands live over two different topoframes");
}

const Topoframe& deref(const std::shared_ptr<const Topoframe>& tf) {
  if (!tf) fail(Errc::InvalidArgument, "no topoframe given");
  return *tf;
}

template <class Fn>
StepFunction combine(const StepFunction& f, const StepFunction& g, Fn&& op) {
  check_same_parent(f, g);
  const Lattice& L = f.topoframe()->lattice();
  std::vector<StepFunction::Piece> out;
  for (const auto& [v, a] : f.pieces())
    for (const auto& [w, b] : g.pieces()) {
      Elem c = L.meet(a, b);
      if (!(c == L.bottom())) out.push_back({op(v, w), c});
    }
  return StepFunction::from_pieces(f.topoframe(), std::move(out));
}

}  // namespace

StepFunction StepFunction::from_pieces(std::shared_ptr<const Topoframe> tf,
                                       std::vector<Piece> pieces) {
  const Topoframe& T = deref(tf);
  const Lattice& L = T.lattice();

  std::map<Rational, Elem> merged;
  for (const Piece& p : pieces) {
    if (p.carrier.owner != &L)
      fail(Errc::MixedLattices, "carrier from a different lattice");
    if (p.carrier == L.bottom()) continue;
    auto [it, fresh] = merged.emplace(p.value, p.carrier);
    if (!fresh) it->second = L.join(it->second, p.carrier);
  }

  StepFunction f;
  f.tf_ = std::move(tf);
  for (const auto& [v, a] : merged) {
    if (!T.is_open(a))
      fail(Errc::ValidationError,
           "carrier " + L.name(a) + " of value " + tflab::to_string(v) +
               " is not open");
    f.pieces_.push_back({v, a});
  }
  std::vector<Elem> carriers;
  for (const Piece& p : f.pieces_) carriers.push_back(p.carrier);
  for (size_t i = 0; i < carriers.size(); ++i)
    for (size_t j = i + 1; j < carriers.size(); ++j)
      if (!(L.meet(carriers[i], carriers[j]) == L.bottom()))
        fail(Errc::ValidationError,
             "carriers " + L.name(carriers[i]) + " and " +
                 L.name(carriers[j]) + " overlap");
  if (!(L.big_join(carriers) == L.top()))
    fail(Errc::ValidationError,
         "carriers join to " + L.name(L.big_join(carriers)) +
             " instead of top");
  // Disjointness plus a top join force every carrier to be clopen; a
  // failure here is a bug above, not bad input.
  for (const Piece& p : f.pieces_)
    if (!T.is_clopen(p.carrier))
      fail(Errc::InternalError, "partition carrier is not clopen");
  return f;
}

StepFunction StepFunction::constant(std::shared_ptr<const Topoframe> tf,
                                    const Rational& r) {
  Elem top = deref(tf).lattice().top();
  return from_pieces(std::move(tf), {{r, top}});
}

Elem StepFunction::evaluate(const SetDescriptor& X) const {
  const Lattice& L = tf_->lattice();
  Elem acc = L.bottom();
  for (const Piece& p : pieces_)
    if (X.contains(p.value)) acc = L.join(acc, p.carrier);
  return acc;
}

Elem StepFunction::at_singleton(const Rational& r) const {
  for (const Piece& p : pieces_)
    if (p.value == r) return p.carrier;
  return tf_->lattice().bottom();
}

Elem StepFunction::zero_of() const { return at_singleton(Rational(0)); }

Elem StepFunction::coz_of() const {
  const Lattice& L = tf_->lattice();
  Elem acc = L.bottom();
  for (const Piece& p : pieces_)
    if (p.value != Rational(0)) acc = L.join(acc, p.carrier);
  return acc;
}

bool StepFunction::is_zero() const {
  return *this == constant(tf_, Rational(0));
}

bool StepFunction::is_one() const {
  return *this == constant(tf_, Rational(1));
}

StepFunction StepFunction::add(const StepFunction& g) const {
  return combine(*this, g, [](const Rational& v, const Rational& w) {
    return v + w;
  });
}

StepFunction StepFunction::sub(const StepFunction& g) const {
  return combine(*this, g, [](const Rational& v, const Rational& w) {
    return v - w;
  });
}

StepFunction StepFunction::mul(const StepFunction& g) const {
  return combine(*this, g, [](const Rational& v, const Rational& w) {
    return v * w;
  });
}

StepFunction StepFunction::vmin(const StepFunction& g) const {
  return combine(*this, g, [](const Rational& v, const Rational& w) {
    return std::min(v, w);
  });
}

StepFunction StepFunction::vmax(const StepFunction& g) const {
  return combine(*this, g, [](const Rational& v, const Rational& w) {
    return std::max(v, w);
  });
}

StepFunction StepFunction::negate() const {
  std::vector<Piece> out;
  for (const Piece& p : pieces_) out.push_back({-p.value, p.carrier});
  return from_pieces(tf_, std::move(out));
}

StepFunction StepFunction::abs() const {
  std::vector<Piece> out;
  for (const Piece& p : pieces_)
    out.push_back({p.value < Rational(0) ? -p.value : p.value, p.carrier});
  return from_pieces(tf_, std::move(out));
}

StepFunction StepFunction::scalar(const Rational& r) const {
  std::vector<Piece> out;
  for (const Piece& p : pieces_) out.push_back({r * p.value, p.carrier});
  return from_pieces(tf_, std::move(out));
}

StepFunction StepFunction::pow(int n) const {
  if (n < 0) fail(Errc::InvalidArgument, "negative power of a step function");
  StepFunction acc = constant(tf_, Rational(1));
  for (int i = 0; i < n; ++i) acc = acc.mul(*this);
  return acc;
}

bool StepFunction::operator==(const StepFunction& g) const {
  return tf_.get() == g.tf_.get() && pieces_ == g.pieces_;
}

std::string StepFunction::to_string() const {
  const Lattice& L = tf_->lattice();
  if (pieces_.empty()) return "0@" + L.name(L.top());
  std::string s;
  for (const Piece& p : pieces_) {
    if (!s.empty()) s += " ; ";
    s += tflab::to_string(p.value);
    s += '@';
    s += L.name(p.carrier);
  }
  return s;
}

StepFunction ring_op(const StepFunction& f, const StepFunction& g, RingOp op) {
  switch (op) {
    case RingOp::Add: return f.add(g);
    case RingOp::Sub: return f.sub(g);
    case RingOp::Mul: return f.mul(g);
    case RingOp::Min: return f.vmin(g);
    case RingOp::Max: return f.vmax(g);
  }
  fail(Errc::InvalidArgument, "unknown ring operation");
}

StepFunction characteristic(std::shared_ptr<const Topoframe> tf, Elem a) {
  const Topoframe& T = deref(tf);
  const Lattice& L = T.lattice();
  L.name(a);  // ownership check
  if (!T.is_clopen(a))
    fail(Errc::NotClopen, "element " + L.name(a) +
                              " is not clopen, so it carries no idempotent");
  Elem ac = L.complement_of(a);
  return StepFunction::from_pieces(
      std::move(tf), {{Rational(1), a}, {Rational(0), ac}});
}

AbsorbReport absorb_laws(std::shared_ptr<const Topoframe> tf,
                         const std::vector<StepFunction>& family) {
  const Topoframe& T = deref(tf);
  const Lattice& L = T.lattice();
  for (const StepFunction& f : family)
    if (f.topoframe().get() != &T)
      fail(Errc::MixedTopoframes, "family member over a different topoframe");

  AbsorbReport rep;
  std::vector<Elem> cozs, zeros;
  for (const StepFunction& f : family) {
    cozs.push_back(f.coz_of());
    zeros.push_back(f.zero_of());
  }
  rep.join_coz = L.big_join(cozs);
  if (!T.is_clopen(rep.join_coz))
    fail(Errc::InternalError, "join of cozeros is not clopen");

  StepFunction fa = characteristic(tf, rep.join_coz);
  StepFunction fac = characteristic(tf, L.complement_of(rep.join_coz));
  for (const StepFunction& f : family) {
    for (int n = 1; n <= 3; ++n)
      if (!(f.mul(fa.pow(n)) == f)) rep.absorb_each = false;
    if (!f.mul(fac).is_zero()) rep.annihilate_each = false;
  }
  if (!(L.complement_of(rep.join_coz) == L.big_meet(zeros)))
    rep.complement_is_meet_of_zeros = false;
  return rep;
}

UnitCheck is_unit(const StepFunction& f) {
  const Lattice& L = f.topoframe()->lattice();
  if (!(f.zero_of() == L.bottom())) return {};
  std::vector<StepFunction::Piece> inv;
  for (const auto& [v, a] : f.pieces()) inv.push_back({Rational(1) / v, a});
  return {true, StepFunction::from_pieces(f.topoframe(), std::move(inv))};
}

ZeroDivisorCheck is_zerodivisor(const StepFunction& f) {
  ZeroDivisorCheck out;
  if (f.is_zero()) {
    out.zero = true;
    return out;
  }
  if (is_unit(f).unit) return out;
  StepFunction witness = characteristic(f.topoframe(), f.zero_of());
  if (!f.mul(witness).is_zero() || witness.is_zero())
    fail(Errc::InternalError, "zerodivisor witness does not annihilate");
  out.zerodivisor = true;
  out.witness = witness;
  return out;
}

StepFunction quasi_inverse(const StepFunction& f) {
  const Lattice& L = f.topoframe()->lattice();
  std::vector<StepFunction::Piece> out;
  for (const auto& [v, a] : f.pieces())
    if (v != Rational(0)) out.push_back({Rational(1) / v, a});
  Elem z = f.zero_of();
  if (!(z == L.bottom())) out.push_back({Rational(0), z});
  return StepFunction::from_pieces(f.topoframe(), std::move(out));
}

Elem idempotent_normal_form(const StepFunction& e) {
  if (!(e.mul(e) == e))
    fail(Errc::NotIdempotent, "e² differs from e: " + e.mul(e).to_string());
  Elem coz = e.coz_of();
  if (!(e == characteristic(e.topoframe(), coz)))
    fail(Errc::InternalError, "idempotent is not carried by its cozero");
  return coz;
}

std::pair<StepFunction, StepFunction> unit_and_idempotent_from_regular(
    const StepFunction& a, const StepFunction& x) {
  check_same_parent(a, x);
  if (!(x.mul(a).mul(a) == a))
    fail(Errc::PreconditionFailed,
         "a = x·a² does not hold for a = " + a.to_string() +
             ", x = " + x.to_string());
  StepFunction b = a.mul(x).mul(x);
  StepFunction one = StepFunction::constant(a.topoframe(), Rational(1));
  StepFunction u = one.add(b).sub(a.mul(b));
  StepFunction e = a.mul(u);
  if (!is_unit(u).unit)
    fail(Errc::InternalError, "constructed u is not a unit");
  if (!(e.mul(e) == e))
    fail(Errc::InternalError, "constructed e is not idempotent");
  return {u, e};
}

namespace {

// Shared frontend of the two separating-element constructions: checks
// orthogonality and returns the per-value carrier joins and the joined
// cozero element s.
std::pair<std::map<Rational, Elem>, Elem> separation_carriers(
    const Topoframe& T, const std::vector<StepFunction>& S,
    const std::vector<StepFunction>& T_side) {
  const Lattice& L = T.lattice();
  std::vector<const StepFunction*> all;
  for (const StepFunction& f : S) all.push_back(&f);
  for (const StepFunction& g : T_side) all.push_back(&g);
  for (const StepFunction* f : all)
    if (f->topoframe().get() != &T)
      fail(Errc::MixedTopoframes, "system member over a different topoframe");
  for (const StepFunction& f : S)
    if (f.is_zero())
      fail(Errc::PreconditionFailed,
           "the separated family must not contain the zero function");
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (!all[i]->mul(*all[j]).is_zero())
        fail(Errc::NotOrthogonal, "functions " + all[i]->to_string() +
                                      " and " + all[j]->to_string() +
                                      " have nonzero product");

  std::map<Rational, Elem> carrier;
  Elem s = L.bottom();
  for (const StepFunction& f : S) {
    for (const auto& [v, a] : f.pieces()) {
      if (v == Rational(0)) continue;
      auto [it, fresh] = carrier.emplace(v, a);
      if (!fresh) it->second = L.join(it->second, a);
      s = L.join(s, a);
    }
  }
  return {std::move(carrier), s};
}

}  // namespace

StepFunction separating_element(std::shared_ptr<const Topoframe> tf,
                                const std::vector<StepFunction>& S,
                                const std::vector<StepFunction>& T) {
  const Topoframe& TF = deref(tf);
  const Lattice& L = TF.lattice();
  auto [carrier, s] = separation_carriers(TF, S, T);
  std::vector<StepFunction::Piece> pieces;
  for (const auto& [v, a] : carrier) pieces.push_back({v, a});
  pieces.push_back({Rational(0), L.complement_of(s)});
  return StepFunction::from_pieces(std::move(tf), std::move(pieces));
}

StepFunction separating_element_ed(std::shared_ptr<const Topoframe> tf,
                                   const std::vector<StepFunction>& S,
                                   const std::vector<StepFunction>& T) {
  const Topoframe& TF = deref(tf);
  const Lattice& L = TF.lattice();
  auto ed = is_ed_frame(L);
  if (!ed.holds)
    fail(Errc::EDHypothesisFailed,
         "ambient lattice is not extremally disconnected: " + ed.note);
  auto [carrier, s] = separation_carriers(TF, S, T);
  std::vector<StepFunction::Piece> pieces;
  for (const auto& [v, a] : carrier)
    pieces.push_back({v, L.pseudocomplement(L.pseudocomplement(a))});
  pieces.push_back({Rational(0), L.pseudocomplement(s)});
  return StepFunction::from_pieces(std::move(tf), std::move(pieces));
}

StepFunction countable_coz_join(std::shared_ptr<const Topoframe> tf,
                                const std::vector<StepFunction>& family) {
  const Topoframe& T = deref(tf);
  const Lattice& L = T.lattice();
  Elem b = L.bottom();
  for (const StepFunction& f : family) {
    if (f.topoframe().get() != &T)
      fail(Errc::MixedTopoframes, "family member over a different topoframe");
    b = L.join(b, f.coz_of());
  }
  return characteristic(std::move(tf), b);
}

}  // namespace tflab
