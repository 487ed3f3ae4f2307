#include "algebra/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace ncm::alg {

size_t QuiverPresentation::source(const Path& p) const {
  return p.arrows.empty() ? p.vertex : arrows[p.arrows.back()].source;
}

size_t QuiverPresentation::target(const Path& p) const {
  return p.arrows.empty() ? p.vertex : arrows[p.arrows.front()].target;
}

bool QuiverPresentation::composable(const Path& p) const {
  for (size_t i = 0; i + 1 < p.arrows.size(); ++i)
    if (arrows[p.arrows[i]].source != arrows[p.arrows[i + 1]].target) return false;
  return true;
}

std::string QuiverPresentation::vertex_idempotent_label(size_t v) const {
  const std::string& l = vertices[v];
  if (!l.empty() && std::isdigit(static_cast<unsigned char>(l[0]))) return "e" + l;
  return l;
}

std::string QuiverPresentation::path_label(const Path& p) const {
  if (p.arrows.empty()) return vertex_idempotent_label(p.vertex);
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '.';
    s += arrows[p.arrows[i]].label;
  }
  return s;
}

bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.arrows.empty()) return a.vertex < b.vertex;
  return a.arrows < b.arrows;
}

std::vector<Path> enumerate_paths(const QuiverPresentation& pres, size_t max_len, size_t limit) {
  std::vector<Path> out;
  for (size_t v = 0; v < pres.vertices.size(); ++v) out.push_back({v, {}});
  std::vector<Path> layer = out;
  for (size_t len = 1; len <= max_len; ++len) {
    // Extending on the right in arrow order keeps each layer lexicographic.
    std::vector<Path> next;
    if (len == 1) {
      for (size_t a = 0; a < pres.arrows.size(); ++a) next.push_back({pres.arrows[a].source, {uint32_t(a)}});
    } else {
      for (const Path& p : layer)
        for (size_t a = 0; a < pres.arrows.size(); ++a) {
          if (pres.arrows[a].target != pres.source(p)) continue;
          Path q = p;
          q.arrows.push_back(uint32_t(a));
          q.vertex = pres.arrows[a].source;
          next.push_back(std::move(q));
        }
    }
    if (next.empty()) break;
    if (out.size() + next.size() > limit)
      throw Error(ErrorKind::PossiblyInfiniteDimensional,
                  "more than " + std::to_string(limit) + " paths of length <= " + std::to_string(len));
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

namespace {

using PathKey = std::pair<size_t, std::vector<uint32_t>>;

PathKey key_of(const Path& p) { return {p.vertex, p.arrows}; }

Path concat(const QuiverPresentation& pres, const Path& p, const Path& q) {
  if (p.arrows.empty()) return q;
  if (q.arrows.empty()) return p;
  Path r;
  r.arrows = p.arrows;
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  r.vertex = pres.source(q);
  return r;
}

// Relations split into components e_t r e_s (each lies in the ideal).
std::vector<Relation> peirce_components(const QuiverPresentation& pres) {
  std::vector<Relation> out;
  for (const Relation& r : pres.relations) {
    std::map<std::pair<size_t, size_t>, Relation> parts;
    for (const auto& t : r) {
      if (!pres.composable(t.path)) throw Error(ErrorKind::InvalidInput, "relation path is not composable");
      parts[{pres.source(t.path), pres.target(t.path)}].push_back(t);
    }
    for (auto& [k, part] : parts) out.push_back(std::move(part));
  }
  return out;
}

struct Attempt {
  std::vector<Path> normal;
  std::map<PathKey, size_t> normal_index;
  std::map<PathKey, Vec> pivot_expr;  // pivot path -> combination of normal words
  size_t max_len = 0;
};

std::optional<Attempt> try_length(const QuiverPresentation& pres, const std::vector<Relation>& rels, size_t L) {
  const std::vector<Path> paths = enumerate_paths(pres, L);
  const size_t n = paths.size();
  std::map<PathKey, size_t> index;
  for (size_t i = 0; i < n; ++i) index[key_of(paths[i])] = i;

  std::vector<Vec> rows;
  for (const Relation& r : rels) {
    size_t rlen = 0;
    for (const auto& t : r) rlen = std::max(rlen, t.path.length());
    if (rlen > L) continue;
    const size_t s = pres.source(r.front().path);
    const size_t t = pres.target(r.front().path);
    for (const Path& q : paths) {
      if (pres.target(q) != s || q.length() + rlen > L) continue;
      for (const Path& p : paths) {
        if (pres.source(p) != t || p.length() + q.length() + rlen > L) continue;
        Vec row(n);
        for (const auto& term : r) {
          const Path w = concat(pres, p, concat(pres, term.path, q));
          row[n - 1 - index.at(key_of(w))] += term.coeff;
        }
        if (!la::is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }

  std::vector<bool> is_pivot(n, false);
  la::RrefResult rr;
  if (!rows.empty()) {
    rr = la::rref(Mat::from_rows(rows, n));
    for (size_t c : rr.pivots) is_pivot[n - 1 - c] = true;
  }
  for (size_t i = 0; i < n; ++i)
    if (paths[i].length() == L && !is_pivot[i]) return std::nullopt;

  Attempt at;
  at.max_len = L;
  std::vector<size_t> normal_pos(n, SIZE_MAX);
  for (size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) {
      normal_pos[i] = at.normal.size();
      at.normal_index[key_of(paths[i])] = at.normal.size();
      at.normal.push_back(paths[i]);
    }
  for (size_t r = 0; r < rr.pivots.size(); ++r) {
    const size_t pc = rr.pivots[r];
    Vec expr(at.normal.size());
    for (size_t c = pc + 1; c < n; ++c) {
      const Scalar& v = rr.reduced(r, c);
      if (sgn(v) == 0) continue;
      expr[normal_pos[n - 1 - c]] -= v;
    }
    at.pivot_expr[key_of(paths[n - 1 - pc])] = std::move(expr);
  }
  return at;
}

class Reducer {
 public:
  Reducer(const QuiverPresentation& pres, const Attempt& at) : pres_(pres), at_(at) {}

  Vec reduce(const Path& p) {
    const PathKey k = key_of(p);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    Vec out(at_.normal.size());
    if (p.length() <= at_.max_len) {
      if (auto it = at_.normal_index.find(k); it != at_.normal_index.end())
        out[it->second] = 1;
      else
        out = at_.pivot_expr.at(k);
    } else {
      const size_t cut = p.length() - at_.max_len;
      Path prefix{pres_.arrows[p.arrows[cut - 1]].source, {p.arrows.begin(), p.arrows.begin() + cut}};
      Path suffix{p.vertex, {p.arrows.begin() + cut, p.arrows.end()}};
      const Vec s = reduce(suffix);
      for (size_t i = 0; i < s.size(); ++i) {
        if (sgn(s[i]) == 0) continue;
        la::axpy(out, s[i], reduce(concat(pres_, prefix, at_.normal[i])));
      }
    }
    memo_.emplace(k, out);
    return out;
  }

 private:
  const QuiverPresentation& pres_;
  const Attempt& at_;
  std::map<PathKey, Vec> memo_;
};

}  // namespace

QuiverAlgebra algebra_from_quiver(const QuiverPresentation& pres, size_t length_cap, std::string name) {
  for (const Arrow& a : pres.arrows)
    if (a.source >= pres.vertices.size() || a.target >= pres.vertices.size())
      throw Error(ErrorKind::InvalidInput, "arrow " + a.label + " has an unknown endpoint");
  const std::vector<Relation> rels = peirce_components(pres);
  size_t start = 2;
  for (const Relation& r : rels)
    for (const auto& t : r) start = std::max(start, t.path.length());

  for (size_t L = start; L <= length_cap; ++L) {
    std::optional<Attempt> at = try_length(pres, rels, L);
    if (!at) continue;
    const size_t d = at->normal.size();
    Reducer red(pres, *at);
    std::vector<std::vector<SparseVec>> products(d, std::vector<SparseVec>(d));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        const Path& u = at->normal[i];
        const Path& v = at->normal[j];
        if (pres.source(u) != pres.target(v)) continue;
        const Vec r = red.reduce(concat(pres, u, v));
        for (size_t k = 0; k < d; ++k)
          if (sgn(r[k]) != 0) products[i][j].push_back({uint32_t(k), r[k]});
      }
    bool relations_vanish = true;
    for (const Relation& r : rels) {
      Vec sum(d);
      for (const auto& t : r) la::axpy(sum, t.coeff, red.reduce(t.path));
      if (!la::is_zero(sum)) relations_vanish = false;
    }
    if (!relations_vanish) continue;

    std::vector<std::string> labels;
    for (const Path& p : at->normal) labels.push_back(pres.path_label(p));
    Vec unit(d);
    for (size_t v = 0; v < pres.vertices.size(); ++v) la::axpy(unit, 1, red.reduce(Path{v, {}}));

    AlgebraPtr alg;
    try {
      alg = Algebra::from_products(labels, std::move(products), unit, name);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::AssociativityViolation || e.kind() == ErrorKind::UnitViolation) continue;
      throw;
    }
    QuiverAlgebra out;
    out.algebra = alg;
    out.basis_paths = at->normal;
    out.certified_length = L;
    for (size_t v = 0; v < pres.vertices.size(); ++v) out.vertex_elements.push_back(red.reduce(Path{v, {}}));
    for (size_t a = 0; a < pres.arrows.size(); ++a)
      out.arrow_elements.push_back(red.reduce(Path{pres.arrows[a].source, {uint32_t(a)}}));
    return out;
  }
  throw Error(ErrorKind::PossiblyInfiniteDimensional,
              "closure not certified up to path length " + std::to_string(length_cap));
}

}  // namespace ncm::alg
