#include "tflab/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tflab/error.hpp"

namespace tflab {

namespace {

constexpr int kMaxLatticeSize = 1024;  // keeps the O(n^3) build checks cheap

std::string set_name(uint64_t mask, int base) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if (mask >> i & 1) {
      if (!first) s += ',';
      s += std::to_string(i + base);
      first = false;
    }
  }
  s += '}';
  return s;
}

}  // namespace

void Poset::validate() const {
  if (size < 0) fail(Errc::InvalidArgument, "poset size is negative");
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= size || hi < 0 || hi >= size)
      fail(Errc::InvalidArgument,
           "cover (" + std::to_string(lo) + "," + std::to_string(hi) +
               ") out of range for poset of size " + std::to_string(size));
    if (lo == hi)
      fail(Errc::InvalidArgument,
           "reflexive cover at node " + std::to_string(lo));
  }
  // Cycle check: repeated relaxation of longest path lengths must settle.
  std::vector<int> indeg(size, 0);
  std::vector<std::vector<int>> succ(size);
  for (auto [lo, hi] : covers) {
    succ[lo].push_back(hi);
    indeg[hi]++;
  }
  std::vector<int> stack;
  for (int i = 0; i < size; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int w : succ[v])
      if (--indeg[w] == 0) stack.push_back(w);
  }
  if (seen != size) fail(Errc::InvalidArgument, "cover relation has a cycle");
}

std::vector<Bits> Poset::strict_below() const {
  std::vector<Bits> below(size, Bits(size));
  // Repeated relaxation; poset sizes here are tiny.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [lo, hi] : covers) {
      Bits want = below[lo];
      want.set(lo);
      Bits next = below[hi] | want;
      if (!(next == below[hi])) {
        below[hi] = next;
        changed = true;
      }
    }
  }
  return below;
}

void Lattice::check_mine(Elem a) const {
  if (a.owner != this)
    fail(Errc::MixedLattices, "element does not belong to this lattice");
  if (a.idx < 0 || a.idx >= n_)
    fail(Errc::InvalidArgument, "element index out of range");
}

Elem Lattice::element(int idx) const {
  if (idx < 0 || idx >= n_)
    fail(Errc::InvalidArgument, "element index out of range");
  return {this, idx};
}

bool Lattice::leq(Elem a, Elem b) const {
  check_mine(a);
  check_mine(b);
  return up_[a.idx].test(b.idx);
}

Elem Lattice::meet(Elem a, Elem b) const {
  check_mine(a);
  check_mine(b);
  return {this, meet_[a.idx * n_ + b.idx]};
}

Elem Lattice::join(Elem a, Elem b) const {
  check_mine(a);
  check_mine(b);
  return {this, join_[a.idx * n_ + b.idx]};
}

Elem Lattice::big_join(std::span<const Elem> xs) const {
  int acc = bot_;
  for (Elem x : xs) {
    check_mine(x);
    acc = join_[acc * n_ + x.idx];
  }
  return {this, acc};
}

Elem Lattice::big_meet(std::span<const Elem> xs) const {
  int acc = top_;
  for (Elem x : xs) {
    check_mine(x);
    acc = meet_[acc * n_ + x.idx];
  }
  return {this, acc};
}

Elem Lattice::pseudocomplement(Elem a) const {
  check_mine(a);
  return {this, pseudo_[a.idx]};
}

bool Lattice::is_complemented(Elem a) const {
  check_mine(a);
  return join_[a.idx * n_ + pseudo_[a.idx]] == top_;
}

Elem Lattice::complement_of(Elem a) const {
  if (!is_complemented(a))
    fail(Errc::ComplementRequested,
         "element " + name(a) + " is not complemented");
  return {this, pseudo_[a.idx]};
}

std::vector<Elem> Lattice::atoms() const {
  std::vector<Elem> out;
  for (int i : atoms_) out.push_back({this, i});
  return out;
}

std::vector<Elem> Lattice::join_irreducibles() const {
  std::vector<Elem> out;
  for (int i : ji_) out.push_back({this, i});
  return out;
}

const std::string& Lattice::name(Elem a) const {
  check_mine(a);
  return names_[a.idx];
}

Elem Lattice::by_name(const std::string& name) const {
  auto it = std::lower_bound(
      name_index_.begin(), name_index_.end(), name,
      [](const auto& p, const std::string& s) { return p.first < s; });
  if (it == name_index_.end() || it->first != name) return {};
  return {this, it->second};
}

const Bits& Lattice::ji_downset(Elem a) const {
  check_mine(a);
  return enc_[a.idx];
}

std::shared_ptr<const Lattice> Lattice::build_from_order(
    int n, const std::vector<std::pair<int, int>>& leq_pairs,
    std::vector<std::string> names) {
  if (n <= 0) fail(Errc::InvalidArgument, "lattice needs at least one element");
  if (n > kMaxLatticeSize)
    fail(Errc::BoundExceeded,
         "lattice size " + std::to_string(n) + " exceeds limit " +
             std::to_string(kMaxLatticeSize));

  auto lat = std::shared_ptr<Lattice>(new Lattice());
  Lattice& L = *lat;
  L.n_ = n;
  if (names.empty()) {
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  }
  if (int(names.size()) != n)
    fail(Errc::InvalidArgument, "name list does not match element count");
  L.names_ = std::move(names);

  L.up_.assign(n, Bits(n));
  L.down_.assign(n, Bits(n));
  for (int i = 0; i < n; ++i) L.up_[i].set(i);
  for (auto [lo, hi] : leq_pairs) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      fail(Errc::InvalidArgument, "order pair out of range");
    L.up_[lo].set(hi);
  }

  // Partial-order validation (the caller promised one; diagnose if not).
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && L.up_[a].test(b) && L.up_[b].test(a))
        fail(Errc::InvalidArgument,
             "order is not antisymmetric at " + L.names_[a] + ", " +
                 L.names_[b]);
      if (L.up_[a].test(b) && !L.up_[b].subset_of(L.up_[a]))
        fail(Errc::InvalidArgument,
             "order is not transitive at " + L.names_[a] + " <= " +
                 L.names_[b]);
    }
  for (int a = 0; a < n; ++a)
    L.up_[a].for_each([&](int b) { L.down_[b].set(a); });

  // Bottom and top.
  L.bot_ = L.top_ = -1;
  for (int i = 0; i < n; ++i) {
    if (L.up_[i].count() == n) L.bot_ = i;
    if (L.down_[i].count() == n) L.top_ = i;
  }
  if (L.bot_ < 0) fail(Errc::NotALattice, "no bottom element");
  if (L.top_ < 0) fail(Errc::NotALattice, "no top element");

  // Meet and join tables straight from the order: the meet of a,b is the
  // unique member of the common-lower-bound set that dominates all of it.
  L.meet_.assign(size_t(n) * n, -1);
  L.join_.assign(size_t(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Bits lower = L.down_[a] & L.down_[b];
      int m = -1;
      lower.for_each([&](int x) {
        if (m < 0 && lower.subset_of(L.down_[x])) m = x;
      });
      if (m < 0)
        fail(Errc::NotALattice,
             "pair " + L.names_[a] + ", " + L.names_[b] + " has no meet");
      Bits upper = L.up_[a] & L.up_[b];
      int j = -1;
      upper.for_each([&](int x) {
        if (j < 0 && upper.subset_of(L.up_[x])) j = x;
      });
      if (j < 0)
        fail(Errc::NotALattice,
             "pair " + L.names_[a] + ", " + L.names_[b] + " has no join");
      L.meet_[size_t(a) * n + b] = L.meet_[size_t(b) * n + a] = m;
      L.join_[size_t(a) * n + b] = L.join_[size_t(b) * n + a] = j;
    }

  // Distributivity, with a named witness triple on failure.
  auto mt = [&](int a, int b) { return L.meet_[size_t(a) * n + b]; };
  auto jt = [&](int a, int b) { return L.join_[size_t(a) * n + b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int lhs = mt(a, jt(b, c));
        int rhs = jt(mt(a, b), mt(a, c));
        if (lhs != rhs) {
          std::ostringstream oss;
          oss << "witness a=" << L.names_[a] << " b=" << L.names_[b]
              << " c=" << L.names_[c] << ": a∧(b∨c)=" << L.names_[lhs]
              << " but (a∧b)∨(a∧c)=" << L.names_[rhs];
          fail(Errc::NotDistributive, oss.str());
        }
      }

  // Join-irreducibles: exactly one lower cover.
  for (int x = 0; x < n; ++x) {
    if (x == L.bot_) continue;
    int covers = 0;
    Bits strictly = L.down_[x];
    strictly.reset(x);
    strictly.for_each([&](int y) {
      // y is a lower cover of x iff nothing sits strictly between.
      bool maximal = true;
      strictly.for_each([&](int z) {
        if (z != y && L.up_[y].test(z)) maximal = false;
      });
      if (maximal) ++covers;
    });
    if (covers == 1) L.ji_.push_back(x);
  }

  // Downset encoding over join-irreducibles, cross-checked against the
  // tables pair by pair. In a distributive lattice meet/join must be
  // word-wise AND/OR in this encoding; any mismatch is a build bug.
  int k = int(L.ji_.size());
  L.enc_.assign(n, Bits(k));
  for (int x = 0; x < n; ++x)
    for (int p = 0; p < k; ++p)
      if (L.up_[L.ji_[p]].test(x)) L.enc_[x].set(p);
  std::map<Bits, int> decode;
  for (int x = 0; x < n; ++x) {
    if (!decode.emplace(L.enc_[x], x).second)
      fail(Errc::InternalError, "downset encoding is not injective");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto m = decode.find(L.enc_[a] & L.enc_[b]);
      auto j = decode.find(L.enc_[a] | L.enc_[b]);
      if (m == decode.end() || m->second != mt(a, b) || j == decode.end() ||
          j->second != jt(a, b))
        fail(Errc::InternalError, "downset encoding disagrees with tables");
    }

  // Pseudocomplements: join of everything disjoint from a.
  L.pseudo_.assign(n, L.bot_);
  for (int a = 0; a < n; ++a) {
    int acc = L.bot_;
    for (int x = 0; x < n; ++x)
      if (mt(a, x) == L.bot_) acc = jt(acc, x);
    L.pseudo_[a] = acc;
  }

  for (int x = 0; x < n; ++x)
    if (x != L.bot_ && L.down_[x].count() == 2) L.atoms_.push_back(x);

  for (int i = 0; i < n; ++i) L.name_index_.emplace_back(L.names_[i], i);
  std::sort(L.name_index_.begin(), L.name_index_.end());

  return lat;
}

std::shared_ptr<const Lattice> Lattice::powerset(int npoints) {
  if (npoints < 0 || npoints > 10)
    fail(Errc::BoundExceeded, "powerset carrier limited to 10 points");
  int n = 1 << npoints;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((a & b) == a) pairs.emplace_back(a, b);
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back(set_name(uint64_t(a), 1));
  auto lat = build_from_order(n, pairs, std::move(names));
  auto& L = const_cast<Lattice&>(*lat);
  L.kind_ = LatticeKind::Powerset;
  L.decl_size_ = npoints;
  return lat;
}

std::shared_ptr<const Lattice> Lattice::birkhoff(const Poset& poset) {
  poset.validate();
  if (poset.size > 20)
    fail(Errc::BoundExceeded, "downset lattices limited to 20 poset nodes");
  auto below = poset.strict_below();
  std::vector<uint64_t> masks;
  for (uint64_t m = 0; m < (uint64_t(1) << poset.size); ++m) {
    bool ok = true;
    for (int i = 0; ok && i < poset.size; ++i) {
      if (!(m >> i & 1)) continue;
      below[i].for_each([&](int j) {
        if (!(m >> j & 1)) ok = false;
      });
    }
    if (ok) masks.push_back(m);
  }
  std::vector<std::pair<int, int>> pairs;
  for (size_t a = 0; a < masks.size(); ++a)
    for (size_t b = 0; b < masks.size(); ++b)
      if ((masks[a] & masks[b]) == masks[a]) pairs.emplace_back(int(a), int(b));
  std::vector<std::string> names;
  for (uint64_t m : masks) names.push_back(set_name(m, 0));
  auto lat = build_from_order(int(masks.size()), pairs, std::move(names));
  auto& L = const_cast<Lattice&>(*lat);
  L.kind_ = LatticeKind::Downsets;
  L.decl_size_ = poset.size;
  L.decl_poset_ = poset;
  return lat;
}

}  // namespace tflab
