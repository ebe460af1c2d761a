#include "tflab/set_descriptor.hpp"

#include <algorithm>

namespace tflab {

namespace {

// Orders two lower bounds: which one starts further left. An unbounded
// side starts first; at equal values a closed bound starts first.
bool lo_before(const SpanBound& a, const SpanBound& b) {
  if (!a.value) return b.value.has_value();
  if (!b.value) return false;
  if (*a.value != *b.value) return *a.value < *b.value;
  return a.closed && !b.closed;
}

// Orders two upper bounds: which one ends further right.
bool hi_after(const SpanBound& a, const SpanBound& b) {
  if (!a.value) return b.value.has_value();
  if (!b.value) return false;
  if (*a.value != *b.value) return *a.value > *b.value;
  return a.closed && !b.closed;
}

bool span_empty(const SpanBound& lo, const SpanBound& hi) {
  if (!lo.value || !hi.value) return false;
  if (*lo.value != *hi.value) return *lo.value > *hi.value;
  return !(lo.closed && hi.closed);
}

// True when a span ending at `hi` and one starting at `lo` overlap or
// touch with no rational strictly between them.
bool joins(const SpanBound& hi, const SpanBound& lo) {
  if (!hi.value || !lo.value) return true;
  if (*lo.value != *hi.value) return *lo.value < *hi.value;
  return lo.closed || hi.closed;
}

}  // namespace

bool Span::contains(const Rational& r) const {
  if (lo.value) {
    if (r < *lo.value) return false;
    if (r == *lo.value && !lo.closed) return false;
  }
  if (hi.value) {
    if (r > *hi.value) return false;
    if (r == *hi.value && !hi.closed) return false;
  }
  return true;
}

SetDescriptor SetDescriptor::normalized(std::vector<Span> spans) {
  std::erase_if(spans, [](const Span& s) { return span_empty(s.lo, s.hi); });
  for (Span& s : spans) {
    if (!s.lo.value) s.lo.closed = false;
    if (!s.hi.value) s.hi.closed = false;
  }
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
    return lo_before(a.lo, b.lo);
  });
  SetDescriptor out;
  for (const Span& s : spans) {
    if (!out.spans_.empty() && joins(out.spans_.back().hi, s.lo)) {
      if (hi_after(s.hi, out.spans_.back().hi)) out.spans_.back().hi = s.hi;
    } else {
      out.spans_.push_back(s);
    }
  }
  return out;
}

SetDescriptor SetDescriptor::empty() { return {}; }

SetDescriptor SetDescriptor::all() {
  return normalized({Span{{}, {}}});
}

SetDescriptor SetDescriptor::point(const Rational& r) {
  return normalized({Span{{r, true}, {r, true}}});
}

SetDescriptor SetDescriptor::points(const std::vector<Rational>& rs) {
  std::vector<Span> spans;
  for (const Rational& r : rs) spans.push_back({{r, true}, {r, true}});
  return normalized(std::move(spans));
}

SetDescriptor SetDescriptor::interval(std::optional<Rational> lo,
                                      bool lo_closed,
                                      std::optional<Rational> hi,
                                      bool hi_closed) {
  return normalized(
      {Span{{std::move(lo), lo_closed}, {std::move(hi), hi_closed}}});
}

SetDescriptor SetDescriptor::complement() const {
  std::vector<Span> out;
  SpanBound cursor{};  // unbounded left end
  bool cursor_open_side = false;
  for (const Span& s : spans_) {
    if (s.lo.value) {
      Span gap;
      gap.lo = cursor;
      gap.lo.closed = cursor_open_side;
      gap.hi = {s.lo.value, !s.lo.closed};
      out.push_back(gap);
    }
    if (!s.hi.value) return normalized(std::move(out));
    cursor = s.hi;
    cursor_open_side = !s.hi.closed;
  }
  Span tail;
  tail.lo = cursor;
  tail.lo.closed = cursor_open_side;
  tail.hi = {};
  out.push_back(tail);
  return normalized(std::move(out));
}

SetDescriptor SetDescriptor::unite(const SetDescriptor& other) const {
  std::vector<Span> spans = spans_;
  spans.insert(spans.end(), other.spans_.begin(), other.spans_.end());
  return normalized(std::move(spans));
}

SetDescriptor SetDescriptor::intersect(const SetDescriptor& other) const {
  std::vector<Span> out;
  for (const Span& a : spans_)
    for (const Span& b : other.spans_) {
      Span s;
      s.lo = lo_before(a.lo, b.lo) ? b.lo : a.lo;
      s.hi = hi_after(a.hi, b.hi) ? b.hi : a.hi;
      if (!span_empty(s.lo, s.hi)) out.push_back(s);
    }
  return normalized(std::move(out));
}

bool SetDescriptor::contains(const Rational& r) const {
  for (const Span& s : spans_)
    if (s.contains(r)) return true;
  return false;
}

bool SetDescriptor::is_all() const {
  return spans_.size() == 1 && !spans_[0].lo.value && !spans_[0].hi.value;
}

std::string SetDescriptor::to_string() const {
  if (is_empty()) return "{}";
  if (is_all()) return "R";
  std::string s;
  bool first = true;
  // Adjacent single points group into one brace list.
  size_t i = 0;
  while (i < spans_.size()) {
    if (!first) s += " u ";
    first = false;
    const Span& sp = spans_[i];
    bool pointlike = sp.lo.value && sp.hi.value && *sp.lo.value == *sp.hi.value;
    if (pointlike) {
      s += '{';
      s += tflab::to_string(*sp.lo.value);
      while (i + 1 < spans_.size()) {
        const Span& nx = spans_[i + 1];
        if (nx.lo.value && nx.hi.value && *nx.lo.value == *nx.hi.value) {
          s += ',';
          s += tflab::to_string(*nx.lo.value);
          ++i;
        } else {
          break;
        }
      }
      s += '}';
    } else {
      s += sp.lo.value ? (sp.lo.closed ? "[" : "(") : "(";
      s += sp.lo.value ? tflab::to_string(*sp.lo.value) : "-inf";
      s += ',';
      s += sp.hi.value ? tflab::to_string(*sp.hi.value) : "inf";
      s += sp.hi.value ? (sp.hi.closed ? "]" : ")") : ")";
    }
    ++i;
  }
  return s;
}

}  // namespace tflab
