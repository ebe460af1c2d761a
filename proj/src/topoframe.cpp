#include "tflab/topoframe.hpp"

#include <algorithm>

#include "tflab/error.hpp"

namespace tflab {

bool CloPenAlgebra::contains(Elem a) const {
  auto it = std::lower_bound(
      carrier.begin(), carrier.end(), a,
      [](Elem x, Elem y) { return x.idx < y.idx; });
  return it != carrier.end() && *it == a;
}

std::shared_ptr<const Topoframe> Topoframe::validate(
    std::shared_ptr<const Lattice> lattice, const std::vector<Elem>& tau) {
  if (!lattice) fail(Errc::InvalidArgument, "no lattice given");
  const Lattice& L = *lattice;

  auto tf = std::shared_ptr<Topoframe>(new Topoframe());
  tf->lat_ = lattice;
  tf->open_mask_ = Bits(L.size());
  tf->closed_mask_ = Bits(L.size());

  for (Elem t : tau) {
    if (t.owner != &L)
      fail(Errc::MixedLattices, "open element from a different lattice");
    if (t.idx < 0 || t.idx >= L.size())
      fail(Errc::InvalidArgument, "open element index out of range");
    tf->open_mask_.set(t.idx);
  }
  if (!tf->open_mask_.test(L.bottom().idx))
    fail(Errc::NotSubframe, "bottom is not open");
  if (!tf->open_mask_.test(L.top().idx))
    fail(Errc::NotSubframe, "top is not open");

  tf->open_mask_.for_each([&](int i) { tf->tau_.push_back(L.element(i)); });

  for (Elem a : tf->tau_)
    for (Elem b : tf->tau_) {
      Elem m = L.meet(a, b);
      if (!tf->open_mask_.test(m.idx))
        fail(Errc::NotSubframe, "meet of opens " + L.name(a) + " and " +
                                    L.name(b) + " is " + L.name(m) +
                                    ", which is not open");
      Elem j = L.join(a, b);
      if (!tf->open_mask_.test(j.idx))
        fail(Errc::NotSubframe, "join of opens " + L.name(a) + " and " +
                                    L.name(b) + " is " + L.name(j) +
                                    ", which is not open");
    }

  for (Elem t : tf->tau_) {
    if (!L.is_complemented(t))
      fail(Errc::NotComplemented,
           "open element " + L.name(t) + " has no complement");
    Elem c = L.complement_of(t);
    tf->closed_mask_.set(c.idx);
  }
  tf->closed_mask_.for_each(
      [&](int i) { tf->tau_closed_.push_back(L.element(i)); });

  tf->closure_.assign(L.size(), -1);
  tf->interior_.assign(L.size(), -1);
  for (int p = 0; p < L.size(); ++p) {
    Elem pe = L.element(p);
    std::vector<Elem> above, below;
    for (Elem c : tf->tau_closed_)
      if (L.leq(pe, c)) above.push_back(c);
    for (Elem o : tf->tau_)
      if (L.leq(o, pe)) below.push_back(o);
    tf->closure_[p] = L.big_meet(above).idx;
    tf->interior_[p] = L.big_join(below).idx;
  }

  for (Elem t : tf->tau_) {
    Elem c = L.complement_of(t);
    if (tf->open_mask_.test(c.idx)) {
      tf->clopen_.carrier.push_back(t);
    }
  }
  // Internal sanity on B: Boolean-subalgebra closure and atom spanning are
  // theorems here, so a violation means the build above is wrong.
  auto inB = [&](Elem x) {
    return std::binary_search(
        tf->clopen_.carrier.begin(), tf->clopen_.carrier.end(), x,
        [](Elem u, Elem v) { return u.idx < v.idx; });
  };
  for (Elem a : tf->clopen_.carrier) {
    if (!inB(L.complement_of(a)))
      fail(Errc::InternalError, "clopen set not closed under complement");
    for (Elem b : tf->clopen_.carrier)
      if (!inB(L.meet(a, b)) || !inB(L.join(a, b)))
        fail(Errc::InternalError, "clopen set not closed under meet/join");
  }
  for (Elem a : tf->clopen_.carrier) {
    if (a == L.bottom()) continue;
    bool minimal = true;
    for (Elem b : tf->clopen_.carrier)
      if (!(b == L.bottom()) && !(b == a) && L.leq(b, a)) minimal = false;
    if (minimal) tf->clopen_.atoms.push_back(a);
  }
  for (Elem a : tf->clopen_.carrier) {
    std::vector<Elem> under;
    for (Elem at : tf->clopen_.atoms)
      if (L.leq(at, a)) under.push_back(at);
    if (!(L.big_join(under) == a))
      fail(Errc::InternalError,
           "clopen element is not the join of the atoms below it");
  }

  return tf;
}

bool Topoframe::is_open(Elem a) const {
  lattice().name(a);  // ownership + range check
  return open_mask_.test(a.idx);
}

bool Topoframe::is_closed(Elem a) const {
  lattice().name(a);
  return closed_mask_.test(a.idx);
}

bool Topoframe::is_clopen(Elem a) const {
  return is_open(a) && closed_mask_.test(a.idx);
}

Elem Topoframe::closure(Elem p) const {
  lattice().name(p);
  return lattice().element(closure_[p.idx]);
}

Elem Topoframe::interior(Elem p) const {
  lattice().name(p);
  return lattice().element(interior_[p.idx]);
}

Elem Topoframe::semi_heyting(Elem a, Elem b) const {
  const Lattice& L = lattice();
  L.name(a);
  L.name(b);
  Elem acc = L.bottom();
  for (Elem x : tau_)
    if (L.leq(L.meet(a, x), b)) acc = L.join(acc, x);
  return acc;
}

Elem Topoframe::bot_arrow(Elem a) const {
  return semi_heyting(a, lattice().bottom());
}

PropCheck Topoframe::is_ed_tau_frame() const {
  const Lattice& L = lattice();
  for (Elem a : tau_) {
    Elem p = bot_arrow(a);
    Elem pp = bot_arrow(p);
    if (!(L.join(p, pp) == L.top()))
      return {false, a,
              "open " + L.name(a) + " gives " + L.name(p) + " ∨ " +
                  L.name(pp) + " = " + L.name(L.join(p, pp)) + " ≠ top"};
  }
  return {};
}

PropCheck Topoframe::is_ed_topoframe() const {
  const Lattice& L = lattice();
  for (Elem a : tau_) {
    Elem c = closure(a);
    if (!open_mask_.test(c.idx))
      return {false, a,
              "closure of open " + L.name(a) + " is " + L.name(c) +
                  ", which is not open"};
  }
  return {};
}

PropCheck Topoframe::is_p_topoframe() const {
  // The zero sets of step functions are exactly the clopen elements and
  // their complements, which is the clopen algebra again.
  const Lattice& L = lattice();
  for (Elem b : clopen_.carrier) {
    for (Elem z : {b, L.complement_of(b)}) {
      if (!open_mask_.test(z.idx))
        return {false, z, "zero set " + L.name(z) + " is not open"};
    }
  }
  return {};
}

PropCheck Topoframe::is_completely_regular() const {
  const Lattice& L = lattice();
  for (Elem a : tau_) {
    std::vector<Elem> under;
    for (Elem b : clopen_.carrier)
      if (L.leq(b, a)) under.push_back(b);
    Elem j = L.big_join(under);
    if (!(j == a))
      return {false, a,
              "open " + L.name(a) + " is not a join of clopens (join is " +
                  L.name(j) + ")"};
  }
  return {};
}

PropCheck is_ed_frame(const Lattice& L) {
  for (int i = 0; i < L.size(); ++i) {
    Elem a = L.element(i);
    Elem s = L.pseudocomplement(a);
    Elem ss = L.pseudocomplement(s);
    if (!(L.join(s, ss) == L.top()))
      return {false, a,
              "element " + L.name(a) + " gives " + L.name(s) + " ∨ " +
                  L.name(ss) + " = " + L.name(L.join(s, ss)) + " ≠ top"};
  }
  return {};
}

}  // namespace tflab
