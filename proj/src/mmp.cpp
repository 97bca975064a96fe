#include "orbifano/mmp.hpp"

#include <algorithm>

namespace orbifano {

std::string contraction_name(Contraction t) {
  switch (t) {
    case Contraction::E1: return "E1";
    case Contraction::E2: return "E2";
    case Contraction::E3: return "E3";
    case Contraction::E4: return "E4";
    case Contraction::E5: return "E5";
    case Contraction::E6: return "E6";
  }
  return "?";
}

std::optional<Contraction> contraction_from_name(const std::string& s) {
  for (auto t : {Contraction::E1, Contraction::E2, Contraction::E3, Contraction::E4,
                 Contraction::E5, Contraction::E6})
    if (contraction_name(t) == s) return t;
  return std::nullopt;
}

void MMPState::validate() const {
  if (k < 0 || n2 < 0 || n1 < 0) throw std::invalid_argument("negative basket entry");
  if (k + 2 * n2 + n1 > 6)
    throw std::invalid_argument("basket violates k + 2 n2 + n1 <= 6");
  if (k2y + rho_y != 10)
    throw std::invalid_argument("minimal resolution violates K^2 + rho = 10");
  if (kx2() <= 0) throw std::invalid_argument("anticanonical square must be positive");
  if (rho_x() < 1) throw std::invalid_argument("Picard rank below 1");
}

std::string MMPState::str() const {
  std::string b;
  auto add = [&](const Int& c, const std::string& name) {
    if (c == 0) return;
    if (!b.empty()) b += " + ";
    if (c > 1) b += c.str() + " x ";
    b += name;
  };
  add(k, "1/3(1,1)");
  add(n2, "A2");
  add(n1, "A1");
  if (b.empty()) b = "smooth";
  return "{" + b + "; rhoY=" + rho_y.str() + ", K2Y=" + k2y.str() + "}";
}

bool applicable(const MMPState& s, Contraction t) {
  if (s.rho_x() < 2) return false;  // divisorial contractions need rho >= 2
  switch (t) {
    case Contraction::E1: return false;  // no floating curves in this machine
    case Contraction::E2: return s.n1 >= 1;
    case Contraction::E3: return s.n2 >= 1;
    case Contraction::E4: return s.k >= 1;
    case Contraction::E5: return s.k >= 1 && s.n1 >= 1;
    case Contraction::E6: return s.k >= 2;
  }
  return false;
}

MMPState apply(const MMPState& s, Contraction t) {
  if (!applicable(s, t))
    throw NotApplicable("contraction " + contraction_name(t) + " not applicable at " +
                        s.str());
  MMPState out = s;
  Int drop = 0;  // blow-downs on the minimal resolution
  switch (t) {
    case Contraction::E1:
      drop = 1;
      break;
    case Contraction::E2:
      out.n1 -= 1;
      drop = 2;
      break;
    case Contraction::E3:
      out.n2 -= 1;
      drop = 3;
      break;
    case Contraction::E4:
      out.k -= 1;
      out.n1 += 1;
      drop = 1;
      break;
    case Contraction::E5:
      out.k -= 1;
      out.n1 -= 1;
      drop = 3;
      break;
    case Contraction::E6:
      out.k -= 2;
      out.n2 += 1;
      drop = 1;
      break;
  }
  out.rho_y -= drop;
  out.k2y += drop;
  out.validate();
  return out;
}

std::optional<CyclicQuotient> created_by(Contraction t) {
  if (t == Contraction::E4) return a1_point();
  if (t == Contraction::E6) return a2_point();
  return std::nullopt;
}

namespace {

Basket consumed_by(Contraction t) {
  Basket b;
  switch (t) {
    case Contraction::E1: break;
    case Contraction::E2: b.add(a1_point()); break;
    case Contraction::E3: b.add(a2_point()); break;
    case Contraction::E4: b.add(one_third_1_1()); break;
    case Contraction::E5:
      b.add(one_third_1_1());
      b.add(a1_point());
      break;
    case Contraction::E6: b.add(one_third_1_1(), 2); break;
  }
  return b;
}

}  // namespace

std::vector<Contraction> directed_available(const MMPState& s,
                                            std::optional<Contraction> last) {
  std::vector<Contraction> out;
  for (auto t : {Contraction::E2, Contraction::E3, Contraction::E4, Contraction::E5,
                 Contraction::E6}) {
    if (!applicable(s, t)) continue;
    if (last && t < *last) {
      // an earlier-listed contraction can only follow when it consumes a
      // singularity the previous step created
      auto made = created_by(*last);
      bool consumes_new = false;
      if (made)
        for (const auto& c : consumed_by(t).items)
          if (c == *made) consumes_new = true;
      if (!consumes_new) continue;
    }
    // an A2 contraction never immediately follows a type-E6 contraction
    if (last && *last == Contraction::E6 && t == Contraction::E3) continue;
    out.push_back(t);
  }
  return out;
}

std::string d_surface_name(DSurface d) {
  switch (d) {
    case DSurface::D1: return "D1:P2";
    case DSurface::D2: return "D2:P(1,1,2)";
    case DSurface::D3: return "D3:P(1,2,3)";
    case DSurface::D4: return "D4:P2/mu3";
    case DSurface::D5: return "D5:P(1,1,3)";
  }
  return "?";
}

std::optional<DSurface> match_d_surface(const MMPState& s) {
  struct Row {
    DSurface d;
    Int k, n2, n1, rho_y, k2y;
  };
  static const std::vector<Row> table = {
      {DSurface::D1, 0, 0, 0, 1, 9}, {DSurface::D2, 0, 0, 1, 2, 8},
      {DSurface::D3, 0, 1, 1, 4, 6}, {DSurface::D4, 0, 3, 0, 7, 3},
      {DSurface::D5, 1, 0, 0, 2, 8},
  };
  for (const auto& row : table)
    if (s.k == row.k && s.n2 == row.n2 && s.n1 == row.n1 && s.rho_y == row.rho_y &&
        s.k2y == row.k2y)
      return row.d;
  return std::nullopt;
}

std::optional<ConicBundleEnd> match_conic_bundle(const MMPState& s) {
  if (s.rho_x() != 2) return std::nullopt;
  if (s.n1 % 2 != 0) return std::nullopt;
  if (s.k != s.n2) return std::nullopt;  // each mixed fibre pairs them up
  ConicBundleEnd end;
  end.c1_fibres = s.n1 / 2;
  end.c2_fibres = s.k;
  return end;
}

std::string MMPTerminal::str() const {
  if (kind == RankOne) return d_surface_name(d);
  std::string out = "conic bundle [";
  bool first = true;
  for (Int i = 0; i < fibres.c2_fibres; ++i) {
    if (!first) out += ", ";
    out += "C2";
    first = false;
  }
  for (Int i = 0; i < fibres.c1_fibres; ++i) {
    if (!first) out += ", ";
    out += "C1";
    first = false;
  }
  return out + "]";
}

namespace {

MMPTree build_tree(const MMPState& s, std::optional<Contraction> last,
                   std::vector<Contraction>& path, TreeMode mode,
                   const std::vector<CuratedPrune>& prunes) {
  MMPTree node;
  node.state = s;
  node.edge = last;
  if (auto cb = match_conic_bundle(s))
    node.terminals.push_back({MMPTerminal::ConicBundle, *cb, DSurface::D1});
  if (auto d = match_d_surface(s)) {
    ConicBundleEnd none;
    node.terminals.push_back({MMPTerminal::RankOne, none, *d});
  }
  for (auto t : directed_available(s, last)) {
    path.push_back(t);
    bool pruned = false;
    std::string citation;
    if (mode == TreeMode::Curated) {
      for (const auto& p : prunes)
        if (p.path == path) {
          pruned = true;
          citation = p.citation;
        }
    }
    if (!pruned) {
      MMPTree child = build_tree(apply(s, t), t, path, mode, prunes);
      child.edge = t;
      node.children.push_back(std::move(child));
    } else {
      MMPTree stub;
      stub.state = apply(s, t);
      stub.edge = t;
      stub.pruned_citation = citation;
      // recorded but not expanded; dropped below in curated cleanup
      node.children.push_back(std::move(stub));
    }
    path.pop_back();
  }
  return node;
}

// remove pruned subtrees and, iteratively, dead ends (curated mode)
bool cleanup(MMPTree& node) {
  auto& ch = node.children;
  ch.erase(std::remove_if(ch.begin(), ch.end(),
                          [](MMPTree& c) {
                            if (!c.pruned_citation.empty()) return true;
                            return !cleanup(c);
                          }),
           ch.end());
  return !(node.children.empty() && node.terminals.empty());
}

void mark_dead_ends(MMPTree& node) {
  node.dead_end = node.children.empty() && node.terminals.empty();
  for (auto& c : node.children) mark_dead_ends(c);
}

}  // namespace

MMPTree enumerate_tree(const MMPState& root, TreeMode mode,
                       const std::vector<CuratedPrune>& prunes) {
  root.validate();
  std::vector<Contraction> path;
  MMPTree tree = build_tree(root, std::nullopt, path, mode, prunes);
  if (mode == TreeMode::Curated) cleanup(tree);
  mark_dead_ends(tree);
  return tree;
}

std::vector<std::pair<std::vector<Contraction>, MMPTerminal>>
MMPTree::terminal_paths() const {
  std::vector<std::pair<std::vector<Contraction>, MMPTerminal>> out;
  for (const auto& t : terminals) out.push_back({{}, t});
  for (const auto& c : children) {
    for (auto& [path, t] : c.terminal_paths()) {
      std::vector<Contraction> full = {*c.edge};
      full.insert(full.end(), path.begin(), path.end());
      out.push_back({full, t});
    }
  }
  return out;
}

std::size_t MMPTree::count_dead_ends() const {
  std::size_t n = dead_end ? 1 : 0;
  for (const auto& c : children) n += c.count_dead_ends();
  return n;
}

std::string MMPTree::render(int indent) const {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  std::string out = pad;
  if (edge) out += contraction_name(*edge) + " -> ";
  out += state.str();
  for (const auto& t : terminals) out += "  [" + t.str() + "]";
  if (dead_end) out += "  [dead end]";
  out += "\n";
  for (const auto& c : children) out += c.render(indent + 1);
  return out;
}

}  // namespace orbifano
