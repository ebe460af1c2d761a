#include "tflab/enumerate.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "tflab/error.hpp"

namespace tflab {

std::vector<Poset> enumerate_posets(int nodes) {
  if (nodes < 0 || nodes > 4)
    fail(Errc::BoundExceeded, "poset enumeration is limited to 4 nodes");

  // assign each unordered pair one of: incomparable, i<j, j<i, then keep
  // the transitive assignments and emit their cover reductions
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < nodes; ++i)
    for (int j = i + 1; j < nodes; ++j) pairs.emplace_back(i, j);

  std::vector<Poset> out;
  std::vector<int> state(pairs.size(), 0);
  for (;;) {
    bool lt[4][4] = {};
    for (size_t p = 0; p < pairs.size(); ++p) {
      if (state[p] == 1) lt[pairs[p].first][pairs[p].second] = true;
      if (state[p] == 2) lt[pairs[p].second][pairs[p].first] = true;
    }
    bool transitive = true;
    for (int i = 0; i < nodes && transitive; ++i)
      for (int j = 0; j < nodes && transitive; ++j)
        for (int k = 0; k < nodes && transitive; ++k)
          if (lt[i][j] && lt[j][k] && !lt[i][k]) transitive = false;

    if (transitive) {
      Poset p;
      p.size = nodes;
      for (int i = 0; i < nodes; ++i)
        for (int j = 0; j < nodes; ++j) {
          if (!lt[i][j]) continue;
          bool covered = false;
          for (int k = 0; k < nodes && !covered; ++k)
            covered = lt[i][k] && lt[k][j];
          if (!covered) p.covers.emplace_back(i, j);
        }
      p.validate();
      out.push_back(std::move(p));
    }

    size_t pos = 0;
    while (pos < state.size() && state[pos] == 2) state[pos++] = 0;
    if (pos == state.size()) break;
    ++state[pos];
  }
  return out;
}

namespace {

void check_point_bound(int npoints) {
  if (npoints < 0 || npoints > 4)
    fail(Errc::BoundExceeded, "topology enumeration is limited to 4 points");
}

/// Closes a family of subsets under pairwise union and intersection.
uint32_t close_family(uint32_t family, int nsub) {
  for (;;) {
    uint32_t grown = family;
    for (int s = 0; s < nsub; ++s) {
      if (!((family >> s) & 1)) continue;
      for (int t = s + 1; t < nsub; ++t) {
        if (!((family >> t) & 1)) continue;
        grown |= uint32_t(1) << (s | t);
        grown |= uint32_t(1) << (s & t);
      }
    }
    if (grown == family) return family;
    family = grown;
  }
}

}  // namespace

std::vector<uint32_t> enumerate_topology_masks(int npoints) {
  check_point_bound(npoints);
  int nsub = 1 << npoints;
  uint32_t base =
      (uint32_t(1) << 0) | (uint32_t(1) << (nsub - 1));  // empty set, all

  std::set<uint32_t> seen{close_family(base, nsub)};
  std::queue<uint32_t> work;
  work.push(*seen.begin());
  while (!work.empty()) {
    uint32_t fam = work.front();
    work.pop();
    for (int s = 0; s < nsub; ++s) {
      if ((fam >> s) & 1) continue;
      uint32_t next = close_family(fam | (uint32_t(1) << s), nsub);
      if (seen.insert(next).second) work.push(next);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<uint32_t> topology_masks_bruteforce(int npoints) {
  check_point_bound(npoints);
  int nsub = 1 << npoints;
  uint32_t base = (uint32_t(1) << 0) | (uint32_t(1) << (nsub - 1));

  std::vector<uint32_t> out;
  for (uint64_t fam = 0; fam < (uint64_t(1) << nsub); ++fam) {
    if ((fam & base) != base) continue;
    bool closed = true;
    for (int s = 0; s < nsub && closed; ++s) {
      if (!((fam >> s) & 1)) continue;
      for (int t = s + 1; t < nsub && closed; ++t) {
        if (!((fam >> t) & 1)) continue;
        closed = ((fam >> (s | t)) & 1) && ((fam >> (s & t)) & 1);
      }
    }
    if (closed) out.push_back(uint32_t(fam));
  }
  return out;
}

std::vector<std::shared_ptr<const Topoframe>> enumerate_topoframes(
    int npoints) {
  auto L = Lattice::powerset(npoints);  // element index = point bitmask
  std::vector<std::shared_ptr<const Topoframe>> out;
  for (uint32_t mask : enumerate_topology_masks(npoints)) {
    std::vector<Elem> tau;
    for (int s = 0; s < L->size(); ++s)
      if ((mask >> s) & 1) tau.push_back(L->element(s));
    out.push_back(Topoframe::validate(L, tau));
  }
  return out;
}

std::vector<std::shared_ptr<const Topoframe>> enumerate_subframe_topoframes(
    const std::shared_ptr<const Lattice>& L, int max_subframe_size) {
  std::vector<Elem> comp;
  for (int i = 0; i < L->size(); ++i)
    if (L->is_complemented(L->element(i))) comp.push_back(L->element(i));
  if (comp.size() > 20)
    fail(Errc::BoundExceeded,
         "too many complemented elements for subframe enumeration");

  // bottom and top are always complemented and always required; the free
  // choice ranges over the remaining complemented elements
  std::vector<Elem> optional;
  for (Elem e : comp)
    if (!(e == L->bottom()) && !(e == L->top())) optional.push_back(e);

  std::vector<std::vector<Elem>> families;
  for (uint32_t mask = 0; mask < (uint32_t(1) << optional.size()); ++mask) {
    std::vector<Elem> fam{L->bottom()};
    for (size_t i = 0; i < optional.size(); ++i)
      if ((mask >> i) & 1) fam.push_back(optional[i]);
    if (!(L->top() == L->bottom())) fam.push_back(L->top());
    if (int(fam.size()) > max_subframe_size) continue;

    bool closed = true;
    for (size_t i = 0; i < fam.size() && closed; ++i)
      for (size_t j = i + 1; j < fam.size() && closed; ++j) {
        auto has = [&](Elem x) {
          return std::find(fam.begin(), fam.end(), x) != fam.end();
        };
        closed = has(L->meet(fam[i], fam[j])) && has(L->join(fam[i], fam[j]));
      }
    if (closed) families.push_back(std::move(fam));
  }

  std::sort(families.begin(), families.end(),
            [](const std::vector<Elem>& a, const std::vector<Elem>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              for (size_t i = 0; i < a.size(); ++i)
                if (a[i].idx != b[i].idx) return a[i].idx < b[i].idx;
              return false;
            });

  std::vector<std::shared_ptr<const Topoframe>> out;
  out.reserve(families.size());
  for (const auto& fam : families) out.push_back(Topoframe::validate(L, fam));
  return out;
}

}  // namespace tflab
