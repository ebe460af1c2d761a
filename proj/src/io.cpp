#include "tflab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

namespace tflab {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;  // comment to end of line
    size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back({line.substr(start, i - start), int(start) + 1});
  }
  return out;
}

int parse_count(const Token& t, int line) {
  int v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e || v < 0)
    throw ParseError(Errc::SyntaxError, line, t.column,
                     "expected a count, got '" + t.text + "'");
  return v;
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

const StepFunction* ParsedDocument::find(const std::string& name) const {
  for (const auto& [n, f] : functions)
    if (n == name) return &f;
  return nullptr;
}

ParsedDocument parse_document(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(std::move(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) lines.push_back(std::move(cur));
  }

  enum class Decl { None, Powerset, Poset, Order };
  Decl decl = Decl::None;
  int decl_n = 0;
  int decl_line = 1;
  std::vector<std::pair<int, int>> rel;  // covers for poset, leqs for order

  std::shared_ptr<const Lattice> L;
  ParsedDocument doc;

  auto build_lattice = [&]() {
    if (L) return;
    try {
      switch (decl) {
        case Decl::Powerset:
          L = Lattice::powerset(decl_n);
          break;
        case Decl::Poset: {
          Poset p;
          p.size = decl_n;
          p.covers = rel;
          L = Lattice::birkhoff(p);
          break;
        }
        case Decl::Order:
          L = Lattice::build_from_order(decl_n, rel);
          break;
        case Decl::None:
          break;
      }
    } catch (const Error& e) {
      throw ParseError(Errc::ValidationError, decl_line, 1, e.what());
    }
  };

  for (int ln = 1; ln <= int(lines.size()); ++ln) {
    auto toks = tokenize(lines[ln - 1]);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    auto syntax = [&](int column, const std::string& msg) -> ParseError {
      return {Errc::SyntaxError, ln, column, msg};
    };
    auto end_col = [&]() {
      return toks.back().column + int(toks.back().text.size());
    };

    if (kw == "space" || kw == "poset" || kw == "order") {
      if (decl != Decl::None)
        throw syntax(toks[0].column, "duplicate lattice declaration");
      if (kw == "space") {
        if (toks.size() != 3 || toks[1].text != "powerset")
          throw syntax(toks.size() > 1 ? toks[1].column : end_col(),
                       "expected 'space powerset N'");
        decl = Decl::Powerset;
        decl_n = parse_count(toks[2], ln);
      } else {
        if (toks.size() != 2)
          throw syntax(end_col(), "expected '" + kw + " N'");
        decl = kw == "poset" ? Decl::Poset : Decl::Order;
        decl_n = parse_count(toks[1], ln);
      }
      decl_line = ln;
    } else if (kw == "cover" || kw == "leq") {
      if (kw == "cover" && decl != Decl::Poset)
        throw syntax(toks[0].column, "'cover' needs a poset declaration");
      if (kw == "leq" && decl != Decl::Order)
        throw syntax(toks[0].column, "'leq' needs an order declaration");
      if (L) throw syntax(toks[0].column, "'" + kw + "' after the tau line");
      if (toks.size() != 3) throw syntax(end_col(), "expected '" + kw + " i j'");
      rel.emplace_back(parse_count(toks[1], ln), parse_count(toks[2], ln));
    } else if (kw == "tau") {
      if (doc.tf) throw syntax(toks[0].column, "duplicate tau line");
      if (decl == Decl::None)
        throw syntax(toks[0].column, "tau before any lattice declaration");
      build_lattice();
      std::vector<Elem> tau;
      for (size_t i = 1; i < toks.size(); ++i) {
        Elem e = L->by_name(toks[i].text);
        if (!e.valid())
          throw ParseError(Errc::ValidationError, ln, toks[i].column,
                           "unknown element '" + toks[i].text + "'");
        tau.push_back(e);
      }
      try {
        doc.tf = Topoframe::validate(L, tau);
      } catch (const Error& e) {
        throw ParseError(Errc::ValidationError, ln, toks[0].column, e.what());
      }
    } else if (kw == "fn") {
      if (!doc.tf) throw syntax(toks[0].column, "fn before the tau line");
      if (toks.size() < 2 || !valid_identifier(toks[1].text))
        throw syntax(toks.size() > 1 ? toks[1].column : end_col(),
                     "expected a function name");
      if (toks.size() < 3 || toks[2].text != "=")
        throw syntax(toks.size() > 2 ? toks[2].column : end_col(),
                     "expected '='");
      const std::string& name = toks[1].text;
      if (doc.find(name))
        throw ParseError(Errc::ValidationError, ln, toks[1].column,
                         "duplicate function name '" + name + "'");

      std::vector<StepFunction::Piece> pieces;
      bool want_piece = true;
      for (size_t i = 3; i < toks.size(); ++i) {
        if (!want_piece) {
          if (toks[i].text != ";")
            throw syntax(toks[i].column, "expected ';' between pieces");
          want_piece = true;
          continue;
        }
        size_t at = toks[i].text.find('@');
        if (at == std::string::npos || at == 0 ||
            at + 1 == toks[i].text.size())
          throw syntax(toks[i].column, "expected 'value@SET'");
        auto value = parse_rational(toks[i].text.substr(0, at));
        if (!value)
          throw syntax(toks[i].column, "bad rational '" +
                                           toks[i].text.substr(0, at) + "'");
        std::string set = toks[i].text.substr(at + 1);
        Elem carrier = L->by_name(set);
        if (!carrier.valid())
          throw ParseError(Errc::ValidationError, ln,
                           toks[i].column + int(at) + 1,
                           "unknown element '" + set + "'");
        pieces.push_back({*value, carrier});
        want_piece = false;
      }
      if (want_piece) throw syntax(end_col(), "expected a piece");
      try {
        doc.functions.emplace_back(
            name, StepFunction::from_pieces(doc.tf, std::move(pieces)));
      } catch (const Error& e) {
        throw ParseError(Errc::ValidationError, ln, toks[3].column, e.what());
      }
    } else {
      throw syntax(toks[0].column, "unknown keyword '" + kw + "'");
    }
  }

  if (decl == Decl::None)
    throw ParseError(Errc::SyntaxError, 1, 1, "missing lattice declaration");
  if (!doc.tf) {
    build_lattice();  // surface lattice-level problems first
    throw ParseError(Errc::SyntaxError, int(lines.size()) + 1, 1,
                     "missing tau line");
  }
  return doc;
}

std::string print_document(const ParsedDocument& doc) {
  const Lattice& L = doc.tf->lattice();
  std::ostringstream out;
  switch (L.kind()) {
    case LatticeKind::Powerset:
      out << "space powerset " << L.decl_size() << "\n";
      break;
    case LatticeKind::Downsets: {
      out << "poset " << L.decl_size() << "\n";
      auto covers = L.decl_poset().covers;
      std::sort(covers.begin(), covers.end());
      for (auto [i, j] : covers) out << "cover " << i << " " << j << "\n";
      break;
    }
    case LatticeKind::Custom: {
      out << "order " << L.size() << "\n";
      for (int i = 0; i < L.size(); ++i)
        for (int j = 0; j < L.size(); ++j)
          if (i != j && L.leq(L.element(i), L.element(j)))
            out << "leq " << i << " " << j << "\n";
      break;
    }
  }
  out << "tau";
  for (Elem e : doc.tf->tau()) out << " " << L.name(e);
  out << "\n";

  auto fns = doc.functions;
  std::sort(fns.begin(), fns.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [name, f] : fns)
    out << "fn " << name << " = " << f.to_string() << "\n";
  return out.str();
}

SetDescriptor parse_set_descriptor(const std::string& text) {
  size_t pos = 0;
  auto err = [&](const std::string& msg) {
    return ParseError(Errc::SyntaxError, 1, int(pos) + 1, msg);
  };
  auto skip_ws = [&]() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto parse_rat = [&]() -> Rational {
    size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '-' || text[pos] == '/'))
      ++pos;
    auto r = parse_rational(text.substr(start, pos - start));
    if (!r) {
      pos = start;
      throw err("expected a rational");
    }
    return *r;
  };

  std::function<SetDescriptor()> parse_term = [&]() -> SetDescriptor {
    skip_ws();
    if (pos >= text.size()) throw err("expected a set term");
    char c = text[pos];
    if (c == '!') {
      ++pos;
      return parse_term().complement();
    }
    if (c == 'R') {
      ++pos;
      return SetDescriptor::all();
    }
    if (c == '{') {
      ++pos;
      skip_ws();
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        return SetDescriptor::empty();
      }
      std::vector<Rational> pts;
      for (;;) {
        skip_ws();
        pts.push_back(parse_rat());
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == '}') {
          ++pos;
          break;
        }
        throw err("expected ',' or '}'");
      }
      return SetDescriptor::points(pts);
    }
    if (c == '[' || c == '(') {
      bool lo_closed = c == '[';
      ++pos;
      auto bound = [&]() -> std::optional<Rational> {
        skip_ws();
        for (const char* inf : {"-inf", "+inf", "inf"}) {
          size_t len = std::string(inf).size();
          if (text.compare(pos, len, inf) == 0) {
            pos += len;
            return std::nullopt;
          }
        }
        return parse_rat();
      };
      auto lo = bound();
      skip_ws();
      if (pos >= text.size() || text[pos] != ',') throw err("expected ','");
      ++pos;
      auto hi = bound();
      skip_ws();
      if (pos >= text.size() || (text[pos] != ')' && text[pos] != ']'))
        throw err("expected ')' or ']'");
      bool hi_closed = text[pos] == ']';
      ++pos;
      return SetDescriptor::interval(lo, lo_closed, hi, hi_closed);
    }
    throw err(std::string("unexpected '") + c + "'");
  };

  SetDescriptor out = parse_term();
  for (;;) {
    skip_ws();
    if (pos >= text.size()) return out;
    if (text[pos] == 'u') {
      ++pos;
      out = out.unite(parse_term());
      continue;
    }
    throw err("expected 'u' or end of input");
  }
}

std::string instance_id(const Topoframe& tf) {
  const Lattice& L = tf.lattice();
  std::ostringstream id;
  switch (L.kind()) {
    case LatticeKind::Powerset:
      id << "pow" << L.decl_size();
      break;
    case LatticeKind::Downsets: {
      id << "poset" << L.decl_size() << "[";
      auto covers = L.decl_poset().covers;
      std::sort(covers.begin(), covers.end());
      for (size_t i = 0; i < covers.size(); ++i) {
        if (i) id << ",";
        id << covers[i].first << "<" << covers[i].second;
      }
      id << "]";
      break;
    }
    case LatticeKind::Custom: {
      // digest the order by its cover pairs
      id << "order" << L.size() << "[";
      bool first = true;
      for (int i = 0; i < L.size(); ++i)
        for (int j = 0; j < L.size(); ++j) {
          if (i == j || !L.leq(L.element(i), L.element(j))) continue;
          bool covered = false;
          for (int k = 0; k < L.size() && !covered; ++k)
            covered = k != i && k != j && L.leq(L.element(i), L.element(k)) &&
                      L.leq(L.element(k), L.element(j));
          if (covered) continue;
          if (!first) id << ",";
          id << i << "<" << j;
          first = false;
        }
      id << "]";
      break;
    }
  }

  // tau as a bitmask over element indices, hex, high nibble first
  std::vector<bool> bits(L.size(), false);
  for (Elem e : tf.tau()) bits[e.idx] = true;
  std::string hex;
  for (int nib = (L.size() + 3) / 4 - 1; nib >= 0; --nib) {
    int v = 0;
    for (int k = 3; k >= 0; --k) {
      int i = nib * 4 + k;
      v = (v << 1) | (i < L.size() && bits[i] ? 1 : 0);
    }
    hex += "0123456789abcdef"[v];
  }
  size_t keep = hex.find_first_not_of('0');
  hex = keep == std::string::npos ? "0" : hex.substr(keep);
  id << "-t0x" << hex;
  return id.str();
}

namespace {

nlohmann::ordered_json flag_json(const Flag& f) {
  nlohmann::ordered_json j;
  j["value"] = f.value;
  if (f.forced) j["forced"] = true;
  j["note"] = f.note;
  return j;
}

/// Stable (name, flag) listing shared by the JSON and text emitters.
std::vector<std::pair<const char*, const Flag*>> flag_rows(
    const PropertyReport& r) {
  return {
      {"p-topoframe", &r.p_topoframe},
      {"ed-frame", &r.ed_frame},
      {"ed-tau-frame", &r.ed_tau},
      {"ed-topoframe", &r.ed_topoframe},
      {"completely-regular", &r.completely_regular},
      {"atom-product-iso", &r.atom_product_iso},
      {"regular", &r.regular},
      {"countably-kasch", &r.countably_kasch},
      {"baer", &r.baer},
      {"pp", &r.pp},
      {"cs", &r.cs},
      {"countably-selfinjective", &r.countably_selfinjective},
      {"selfinjective", &r.selfinjective},
      {"continuous-regular", &r.continuous_regular},
      {"complete-regular", &r.complete_regular},
  };
}

}  // namespace

nlohmann::ordered_json property_json(const Topoframe& tf,
                                     const PropertyReport& r) {
  (void)tf;
  nlohmann::ordered_json j;
  for (const auto& [name, flag] : flag_rows(r)) j[name] = flag_json(*flag);
  return j;
}

nlohmann::ordered_json theorem_json(const TheoremReport& rep) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rep.rows) {
    nlohmann::ordered_json j;
    j["id"] = row.id;
    j["verdict"] = verdict_name(row.verdict);
    j["note"] = row.note;
    arr.push_back(std::move(j));
  }
  return arr;
}

nlohmann::ordered_json report_json(const Topoframe& tf,
                                   const PropertyReport& props,
                                   const TheoremReport* theorems) {
  const Lattice& L = tf.lattice();
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["instance"] = instance_id(tf);

  nlohmann::ordered_json lat;
  lat["kind"] = L.kind() == LatticeKind::Powerset   ? "powerset"
                : L.kind() == LatticeKind::Downsets ? "poset"
                                                    : "order";
  lat["size"] = L.size();
  j["lattice"] = std::move(lat);

  nlohmann::ordered_json tau = nlohmann::ordered_json::array();
  for (Elem e : tf.tau()) tau.push_back(L.name(e));
  j["tau"] = std::move(tau);

  nlohmann::ordered_json clopen;
  clopen["count"] = props.clopen_count;
  nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
  for (Elem a : tf.clopen_algebra().atoms) atoms.push_back(L.name(a));
  clopen["atoms"] = std::move(atoms);
  j["clopen"] = std::move(clopen);

  j["properties"] = property_json(tf, props);
  if (theorems) j["theorems"] = theorem_json(*theorems);
  return j;
}

std::string property_text(const Topoframe& tf, const PropertyReport& r) {
  const Lattice& L = tf.lattice();
  std::ostringstream out;
  out << "instance " << instance_id(tf) << "\n";
  out << "lattice of " << L.size() << " elements, " << tf.tau().size()
      << " opens, " << r.clopen_count << " clopens with " << r.atom_count
      << " atoms\n";
  for (const auto& [name, flag] : flag_rows(r)) {
    out << "  [" << (flag->value ? 'x' : ' ') << "] " << name;
    if (flag->forced) out << " (forced)";
    out << " -- " << flag->note << "\n";
  }
  return out.str();
}

std::string theorem_text(const TheoremReport& rep) {
  std::ostringstream out;
  for (const auto& row : rep.rows)
    out << "  " << verdict_name(row.verdict) << "  " << row.id << " -- "
        << row.note << "\n";
  return out.str();
}

}  // namespace tflab
