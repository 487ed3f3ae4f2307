#include "io/algebra_file.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ncm::io {

namespace {

bool plain_label(const std::string& s) {
  if (s.empty() || !std::isalnum(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

Entry shifted(const Entry& e, size_t offset) { return Entry{e.key, e.value, e.line, e.column + offset}; }

alg::Path parse_path(const alg::QuiverPresentation& q, const std::string& file, const Entry& e,
                     const std::string& text) {
  alg::Path p;
  for (const std::string& part : split_list(text, '.')) {
    size_t a = 0;
    while (a < q.arrows.size() && q.arrows[a].label != part) ++a;
    if (a == q.arrows.size()) fail(file, e, "relation", "unknown arrow '" + part + "' in '" + text + "'");
    p.arrows.push_back(uint32_t(a));
  }
  if (!q.composable(p)) fail(file, e, "relation", "path '" + text + "' is not composable");
  p.vertex = q.source(p);
  return p;
}

void parse_quiver(const Section& s, const std::string& file, AlgebraFile& f) {
  check_keys(s, file, {"vertices", "arrow", "relation"}, {"vertices"});
  const Entry* v = find_entry(s, "vertices");
  if (!v) fail(file, s.line, 1, "quiver", "[quiver] needs 'vertices'");
  f.is_quiver = true;
  auto& q = f.quiver;
  for (const std::string& name : split_list(v->value, ',')) {
    if (!plain_label(name)) fail(file, *v, "quiver", "bad vertex label '" + name + "'");
    if (std::find(q.vertices.begin(), q.vertices.end(), name) != q.vertices.end())
      fail(file, *v, "quiver", "vertex '" + name + "' repeated");
    q.vertices.push_back(name);
  }
  const auto vertex = [&](const Entry& e, const std::string& name) {
    auto it = std::find(q.vertices.begin(), q.vertices.end(), name);
    if (it == q.vertices.end()) fail(file, e, "arrow", "unknown vertex '" + name + "'");
    return size_t(it - q.vertices.begin());
  };
  for (const Entry& e : s.entries) {
    if (e.key != "arrow") continue;
    const size_t colon = e.value.find(':');
    const size_t arrow = e.value.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
      fail(file, e, "arrow", "expected 'label: source -> target'");
    const std::string label = trim(std::string_view(e.value).substr(0, colon));
    if (!plain_label(label) || !std::isalpha(static_cast<unsigned char>(label[0])))
      fail(file, e, "arrow", "bad arrow label '" + label + "'");
    for (const auto& a : q.arrows)
      if (a.label == label) fail(file, e, "arrow", "arrow '" + label + "' repeated");
    const std::string src = trim(std::string_view(e.value).substr(colon + 1, arrow - colon - 1));
    const std::string tgt = trim(std::string_view(e.value).substr(arrow + 2));
    q.arrows.push_back(alg::Arrow{label, vertex(e, src), vertex(e, tgt)});
  }
  for (const Entry& e : s.entries) {
    if (e.key != "relation") continue;
    const size_t eq = e.value.find('=');
    if (eq == std::string::npos || e.value.find('=', eq + 1) != std::string::npos)
      fail(file, e, "relation", "expected 'combination = combination'");
    alg::Relation rel;
    const auto add = [&](const std::string& side, size_t offset, const la::Scalar& sign) {
      for (const Term& t : parse_combination(file, shifted(e, offset), side)) {
        const alg::Path p = parse_path(q, file, e, t.label);
        auto it = std::find_if(rel.begin(), rel.end(), [&](const alg::RelationTerm& r) { return r.path == p; });
        if (it == rel.end()) rel.push_back(alg::RelationTerm{sign * t.coeff, p});
        else it->coeff += sign * t.coeff;
      }
    };
    add(e.value.substr(0, eq), 0, 1);
    add(e.value.substr(eq + 1), eq + 1, -1);
    rel.erase(std::remove_if(rel.begin(), rel.end(), [](const alg::RelationTerm& r) { return la::is_zero(r.coeff); }),
              rel.end());
    if (rel.empty()) fail(file, e, "relation", "relation is trivially zero");
    q.relations.push_back(rel);
  }
}

void parse_structure(const Section& s, const std::string& file, AlgebraFile& f) {
  check_keys(s, file, {"dim", "labels", "unit", "entry"}, {"dim", "labels", "unit"});
  const Entry* d = find_entry(s, "dim");
  if (!d) fail(file, s.line, 1, "structure", "[structure_constants] needs 'dim'");
  f.dim = parse_count(file, *d, d->value);
  if (const Entry* l = find_entry(s, "labels")) {
    f.labels = split_list(l->value, ',');
    if (f.labels.size() != f.dim) fail(file, *l, "structure", "expected " + std::to_string(f.dim) + " labels");
    for (const auto& x : f.labels) {
      if (x.empty() || x.find_first_of(" \t=+*") != std::string::npos || x[0] == '-')
        fail(file, *l, "structure", "bad label '" + x + "'");
      if (std::count(f.labels.begin(), f.labels.end(), x) > 1) fail(file, *l, "structure", "label '" + x + "' repeated");
    }
  } else {
    for (size_t i = 1; i <= f.dim; ++i) f.labels.push_back("b" + std::to_string(i));
  }
  if (const Entry* u = find_entry(s, "unit")) {
    const auto parts = split_list(u->value, ',');
    if (parts.size() != f.dim) fail(file, *u, "structure", "unit needs " + std::to_string(f.dim) + " coordinates");
    la::Vec unit;
    for (const auto& p : parts) unit.push_back(parse_rational(file, *u, p));
    f.unit = unit;
  }
  std::map<std::tuple<size_t, size_t, size_t>, size_t> seen;
  for (const Entry& e : s.entries) {
    if (e.key != "entry") continue;
    std::istringstream ss(e.value);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.size() != 4) fail(file, e, "entry", "expected 'i j k value'");
    StructureEntry se{parse_count(file, e, tok[0]), parse_count(file, e, tok[1]), parse_count(file, e, tok[2]),
                      parse_rational(file, e, tok[3])};
    for (size_t x : {se.i, se.j, se.k})
      if (x < 1 || x > f.dim) fail(file, e, "entry", "index " + std::to_string(x) + " outside 1.." + std::to_string(f.dim));
    if (!seen.emplace(std::make_tuple(se.i, se.j, se.k), e.line).second)
      fail(file, e, "entry", "entry repeated for the same (i, j, k)");
    if (!la::is_zero(se.value)) f.entries.push_back(se);
  }
  std::sort(f.entries.begin(), f.entries.end(), [](const StructureEntry& a, const StructureEntry& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
}

void parse_subalgebra(const Section& s, const std::string& file, AlgebraFile& f) {
  check_keys(s, file, {"name", "element"}, {"name"});
  SubalgebraSpec sub;
  sub.line = s.line;
  const Entry* n = find_entry(s, "name");
  sub.name = n ? n->value : "A";
  for (const Entry& e : s.entries) {
    if (e.key != "element") continue;
    const size_t colon = e.value.find(':');
    if (colon == std::string::npos) fail(file, e, "subalgebra", "expected 'label: combination'");
    const std::string label = trim(std::string_view(e.value).substr(0, colon));
    if (label.empty() || label.find_first_of(" \t,=") != std::string::npos)
      fail(file, e, "subalgebra", "bad label '" + label + "'");
    if (std::find(sub.labels.begin(), sub.labels.end(), label) != sub.labels.end())
      fail(file, e, "subalgebra", "label '" + label + "' repeated");
    sub.labels.push_back(label);
    sub.elements.push_back(parse_combination(file, shifted(e, colon + 1), e.value.substr(colon + 1)));
    sub.element_lines.push_back(e.line);
  }
  if (sub.labels.empty()) fail(file, s.line, 1, "subalgebra", "[subalgebra] needs at least one element");
  f.subalgebra = sub;
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text, const std::string& file) {
  const auto sections = parse_sections(text, file);
  if (sections.empty() || sections[0].name != "meta") fail(file, 1, 1, "meta", "file must start with [meta]");
  AlgebraFile f;
  const Section& meta = sections[0];
  check_keys(meta, file, {"format", "name", "field"}, {"format", "name", "field"});
  const Entry* fmt = find_entry(meta, "format");
  if (!fmt) fail(file, meta.line, 1, "meta", "[meta] needs 'format = 1'");
  if (fmt->value != "1") fail(file, *fmt, "meta", "unsupported format '" + fmt->value + "'");
  if (const Entry* fld = find_entry(meta, "field"); fld && fld->value != "Q")
    fail(file, *fld, "meta", "only field = Q is supported");
  const Entry* name = find_entry(meta, "name");
  f.name = name ? name->value : "unnamed";
  bool body = false;
  for (size_t i = 1; i < sections.size(); ++i) {
    const Section& s = sections[i];
    if (s.name == "quiver" || s.name == "structure_constants") {
      if (body) fail(file, s.line, 1, "body", "only one of [quiver] or [structure_constants] is allowed");
      body = true;
      f.body_line = s.line;
      if (s.name == "quiver") parse_quiver(s, file, f);
      else parse_structure(s, file, f);
    } else if (s.name == "subalgebra") {
      if (!body || f.subalgebra) fail(file, s.line, 1, "subalgebra", "[subalgebra] must follow the algebra, once");
      parse_subalgebra(s, file, f);
    } else {
      fail(file, s.line, 1, "section", "unknown section [" + s.name + "]");
    }
  }
  if (!body) fail(file, meta.line, 1, "body", "missing [quiver] or [structure_constants]");
  return f;
}

std::string emit_algebra_file(const AlgebraFile& f) {
  std::string s = "[meta]\nformat = 1\nname = " + f.name + "\nfield = Q\n\n";
  if (f.is_quiver) {
    const auto& q = f.quiver;
    s += "[quiver]\nvertices = ";
    for (size_t i = 0; i < q.vertices.size(); ++i) s += (i ? ", " : "") + q.vertices[i];
    s += "\n";
    for (const auto& a : q.arrows) s += "arrow = " + a.label + ": " + q.vertices[a.source] + " -> " + q.vertices[a.target] + "\n";
    for (const auto& r : q.relations) {
      std::vector<Term> terms;
      for (const auto& t : r) terms.push_back(Term{t.coeff, q.path_label(t.path)});
      s += "relation = " + format_combination(terms) + " = 0\n";
    }
  } else {
    s += "[structure_constants]\ndim = " + std::to_string(f.dim) + "\nlabels = ";
    for (size_t i = 0; i < f.labels.size(); ++i) s += (i ? ", " : "") + f.labels[i];
    s += "\n";
    if (f.unit) {
      s += "unit = ";
      for (size_t i = 0; i < f.unit->size(); ++i) s += (i ? ", " : "") + la::to_string((*f.unit)[i]);
      s += "\n";
    }
    for (const auto& e : f.entries)
      s += "entry = " + std::to_string(e.i) + " " + std::to_string(e.j) + " " + std::to_string(e.k) + " " +
           la::to_string(e.value) + "\n";
  }
  if (f.subalgebra) {
    s += "\n[subalgebra]\nname = " + f.subalgebra->name + "\n";
    for (size_t i = 0; i < f.subalgebra->labels.size(); ++i)
      s += "element = " + f.subalgebra->labels[i] + ": " + format_combination(f.subalgebra->elements[i]) + "\n";
  }
  return s;
}

AlgebraFile algebra_to_file(const alg::Algebra& a) {
  AlgebraFile f;
  f.name = a.name().empty() ? "unnamed" : a.name();
  f.dim = a.dim();
  f.labels = a.labels();
  f.unit = a.unit();
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j)
      for (const alg::Term& t : a.product(i, j))
        if (!la::is_zero(t.coeff)) f.entries.push_back(StructureEntry{i + 1, j + 1, size_t(t.index) + 1, t.coeff});
  std::sort(f.entries.begin(), f.entries.end(), [](const StructureEntry& x, const StructureEntry& y) {
    return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k);
  });
  return f;
}

LoadedAlgebra build_algebra(const AlgebraFile& f, const std::string& file) {
  LoadedAlgebra out;
  try {
    if (f.is_quiver) {
      out.quiver = alg::algebra_from_quiver(f.quiver, 32, f.name);
      out.algebra = out.quiver->algebra;
    } else {
      const size_t n = f.dim;
      std::vector<std::vector<alg::SparseVec>> products(n, std::vector<alg::SparseVec>(n));
      for (const auto& e : f.entries) products[e.i - 1][e.j - 1].push_back(alg::Term{uint32_t(e.k - 1), e.value});
      la::Vec unit;
      if (f.unit) {
        unit = *f.unit;
      } else {
        // Solve u * b_j = b_j = b_j * u for the unit.
        la::Mat sys(2 * n * n, n);
        la::Vec rhs(2 * n * n);
        for (const auto& e : f.entries) {
          sys((e.j - 1) * n + (e.k - 1), e.i - 1) += e.value;          // u_i b_i b_j
          sys(n * n + (e.i - 1) * n + (e.k - 1), e.j - 1) += e.value;  // b_i u_j b_j
        }
        for (size_t j = 0; j < n; ++j) rhs[j * n + j] = rhs[n * n + j * n + j] = 1;
        auto u = la::solve(sys, rhs);
        if (!u) throw Error(ErrorKind::UnitViolation, "no two-sided unit; give 'unit' explicitly");
        unit = *u;
      }
      out.algebra = alg::Algebra::from_products(f.labels, std::move(products), unit, f.name);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail(file, f.body_line, 1, "algebra", e.what());
  }
  if (f.subalgebra) {
    const auto& sub = *f.subalgebra;
    const auto& labels = out.algebra->labels();
    std::vector<la::Vec> cols;
    for (size_t i = 0; i < sub.elements.size(); ++i) {
      la::Vec v(out.algebra->dim());
      for (const Term& t : sub.elements[i]) {
        auto it = std::find(labels.begin(), labels.end(), t.label);
        if (it == labels.end())
          fail(file, sub.element_lines[i], 1, "subalgebra", "unknown basis label '" + t.label + "'");
        v[size_t(it - labels.begin())] += t.coeff;
      }
      cols.push_back(v);
    }
    out.inclusion = la::Mat::from_columns(cols, out.algebra->dim());
    if (la::rank(out.inclusion) != cols.size()) fail(file, sub.line, 1, "subalgebra", "elements are linearly dependent");
    try {
      out.subalgebra = alg::subalgebra_on_basis(out.algebra, out.inclusion, out.algebra->unit(), sub.labels, sub.name);
    } catch (const Error& e) {
      fail(file, sub.line, 1, "subalgebra", e.what());
    }
  }
  return out;
}

LoadedAlgebra load_algebra(const std::string& path) {
  return build_algebra(parse_algebra_file(read_file(path), path), path);
}

}  // namespace ncm::io
