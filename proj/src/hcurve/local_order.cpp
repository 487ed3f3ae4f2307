#include "hcurve/local_order.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace ncm::hcurve {

size_t LocalOrder::block_of(size_t coord) const {
  size_t acc = 0;
  for (size_t b = 0; b < composition.size(); ++b) {
    acc += composition[b];
    if (coord < acc) return b;
  }
  throw Error(ErrorKind::InvalidInput, "coordinate out of range");
}

long LocalOrder::pattern(size_t r, size_t c) const { return block_of(c) > block_of(r) ? 1 : 0; }

bool LocalOrder::contains(const std::vector<std::optional<long>>& valuations) const {
  if (valuations.size() != n * n) return false;
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c)
      if (const auto& v = valuations[r * n + c]; v && *v < pattern(r, c)) return false;
  return true;
}

LocalOrder local_order(const std::vector<size_t>& composition) {
  if (composition.empty()) throw Error(ErrorKind::EmptyComposition, "composition has no parts");
  LocalOrder h{composition, 0};
  for (size_t p : composition) {
    if (p == 0) throw Error(ErrorKind::InvalidInput, "composition has a zero part");
    h.n += p;
  }
  return h;
}

bool lattice_stable(const LocalOrder& h, const std::vector<long>& v) {
  // Row vectors times H: entry c of x h picks up x_r h_rc.
  for (size_t r = 0; r < h.n; ++r)
    for (size_t c = 0; c < h.n; ++c)
      if (v[r] + h.pattern(r, c) < v[c]) return false;
  return true;
}

LocalStructure local_projectives_and_simples(const LocalOrder& h) {
  LocalStructure s;
  s.order = h;
  const size_t k = h.blocks();
  for (size_t i = 0; i <= k; ++i) {
    Lattice l{i, std::vector<long>(h.n, 0)};
    for (size_t c = 0; c < h.n; ++c)
      if (h.block_of(c) + i >= k) l.valuation[c] = 1;
    s.lattices.push_back(std::move(l));
  }
  s.periodic = true;
  for (long v : s.lattices[k].valuation) s.periodic = s.periodic && v == 1;
  for (size_t i = 0; i < k; ++i) {
    const auto& a = s.lattices[i].valuation;
    const auto& b = s.lattices[i + 1].valuation;
    LocalSimple u;
    u.index = i;
    bool nested = true, torsion = true;
    std::vector<size_t> diff_blocks;
    for (size_t c = 0; c < h.n; ++c) {
      nested = nested && b[c] >= a[c];
      torsion = torsion && b[c] - a[c] <= 1;  // t kills the quotient
      if (b[c] != a[c]) {
        u.dim += size_t(b[c] - a[c]);
        if (diff_blocks.empty() || diff_blocks.back() != h.block_of(c)) diff_blocks.push_back(h.block_of(c));
      }
    }
    u.projective_resolution = nested && lattice_stable(h, a) && lattice_stable(h, b);
    if (diff_blocks.size() == 1) {
      u.block = diff_blocks[0];
      // H acts on U_i through the diagonal block, which is all of Mat(n_b, k).
      u.simple = torsion;
      for (size_t r = 0; r < h.n; ++r)
        for (size_t c = 0; c < h.n; ++c)
          if (h.block_of(r) == u.block && h.block_of(c) == u.block && h.pattern(r, c) != 0) u.simple = false;
    }
    // A nonzero torsion quotient of a torsion-free lattice cannot split off.
    u.split = !(torsion && u.dim > 0);
    u.pd = u.projective_resolution && !u.split ? 1 : 0;
    s.gldim = std::max(s.gldim, u.pd);
    s.simples.push_back(u);
  }
  return s;
}

std::vector<size_t> morita_canonical_form(const std::vector<size_t>& composition) {
  std::vector<size_t> best = composition;
  std::vector<size_t> cur = composition;
  for (size_t i = 1; i < composition.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

std::string composition_string(const std::vector<size_t>& composition) {
  std::string s;
  for (size_t i = 0; i < composition.size(); ++i) s += (i ? "," : "") + std::to_string(composition[i]);
  return s;
}

}  // namespace ncm::hcurve
