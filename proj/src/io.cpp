#include "arknit/io.hpp"

#include <set>
#include <sstream>

namespace arknit::io {

namespace {

const char* orientation_name(Orientation o) {
  switch (o) {
    case Orientation::LinearRight: return "linear-right";
    case Orientation::LinearLeft: return "linear-left";
    default: return "zigzag";
  }
}

Orientation orientation_from_name(const std::string& s) {
  if (s == "linear-right") return Orientation::LinearRight;
  if (s == "linear-left") return Orientation::LinearLeft;
  if (s == "zigzag") return Orientation::Zigzag;
  throw ValidationError("unknown orientation '" + s + "'");
}

json finite_to_json(const FiniteQuiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows) arrows.push_back({a.source, a.target, a.label});
  return {{"vertices", q.vertices}, {"arrows", arrows}};
}

const json& field_of(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  throw ValidationError(what + " must be a string");
}

FiniteQuiver finite_from_json(const json& j) {
  FiniteQuiver q;
  for (const auto& v : field_of(j, "vertices")) q.vertices.push_back(as_string(v, "vertex"));
  std::size_t k = 0;
  for (const auto& a : j.value("arrows", json::array())) {
    if (!a.is_array() || a.size() < 2 || a.size() > 3)
      throw ValidationError("arrow " + std::to_string(k) + " must be [source, target] or [source, target, label]");
    std::string label = a.size() == 3 ? as_string(a[2], "arrow label") : "a" + std::to_string(k + 1);
    q.arrows.push_back({as_string(a[0], "arrow source"), as_string(a[1], "arrow target"), label});
    ++k;
  }
  return q;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string family_tag_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::AInf: return "A_inf";
    case FamilyTag::ABiInf: return "A_biinf";
    case FamilyTag::DInf: return "D_inf";
    case FamilyTag::CycleTilde: return "cycle";
    default: return "comb";
  }
}

FamilyTag family_tag_from_name(const std::string& s) {
  if (s == "A_inf") return FamilyTag::AInf;
  if (s == "A_biinf") return FamilyTag::ABiInf;
  if (s == "D_inf") return FamilyTag::DInf;
  if (s == "cycle") return FamilyTag::CycleTilde;
  if (s == "comb") return FamilyTag::Comb;
  throw ValidationError("unknown family tag '" + s + "'");
}

json quiver_to_json(const QuiverSpec& spec) {
  json j{{"kind", spec.kind_name()}};
  if (auto* fq = std::get_if<FiniteQuiver>(&spec.body())) {
    j.update(finite_to_json(*fq));
  } else if (auto* f = std::get_if<FamilySpec>(&spec.body())) {
    j["family"] = {{"tag", family_tag_name(f->tag)},
                   {"orientation", orientation_name(f->orientation)},
                   {"even_sources", f->even_sources},
                   {"cycle_length", f->cycle_length},
                   {"start", f->start},
                   {"prefix", f->prefix}};
  } else {
    const auto& c = std::get<CompositeSpec>(spec.body());
    j.update(finite_to_json(c.base));
    json rays = json::array();
    for (const auto& r : c.rays) rays.push_back({{"attach", r.attach}, {"prefix", r.prefix}, {"first_index", r.first_index}});
    j["rays"] = rays;
  }
  return j;
}

QuiverSpec quiver_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("a quiver must be a JSON object");
  std::string kind = j.value("kind", "finite");
  QuiverSpec spec;
  if (kind == "finite") {
    spec = QuiverSpec(finite_from_json(j));
  } else if (kind == "family") {
    const auto& f = field_of(j, "family");
    FamilySpec fs;
    fs.tag = family_tag_from_name(as_string(field_of(f, "tag"), "family tag"));
    fs.orientation = orientation_from_name(f.value("orientation", "linear-right"));
    fs.even_sources = f.value("even_sources", true);
    fs.cycle_length = f.value("cycle_length", 1);
    fs.start = f.value("start", 0);
    fs.prefix = f.value("prefix", "");
    spec = QuiverSpec(fs);
  } else if (kind == "composite") {
    CompositeSpec c;
    c.base = finite_from_json(j);
    for (const auto& r : j.value("rays", json::array()))
      c.rays.push_back({as_string(field_of(r, "attach"), "ray attachment"), r.value("prefix", "r"), r.value("first_index", 1)});
    spec = QuiverSpec(c);
  } else {
    throw ValidationError("unknown quiver kind '" + kind + "'");
  }
  spec.validate();
  return spec;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const Field& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  if (!j.is_array()) throw ValidationError("a matrix must be a list of rows");
  // an empty matrix may be written as [] or as rows of nothing
  if (rows == 0 || cols == 0) {
    for (const auto& r : j)
      if (!r.is_array() || !r.empty()) throw ValidationError("expected an empty " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    if (!j.empty() && j.size() != rows) throw ValidationError("expected " + std::to_string(rows) + " rows");
    return m;
  }
  if (j.size() != rows) throw ValidationError("expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ValidationError("row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = j[r][c];
      if (e.is_number_integer()) m(r, c) = f.from_int(e.get<long>());
      else if (e.is_string()) m(r, c) = f.parse(e.get<std::string>());
      else throw ValidationError("matrix entries must be exact strings or integers");
    }
  }
  return m;
}

json representation_to_json(const Representation& x) {
  const auto& q = x.quiver();
  json j{{"field", x.field().name()}, {"quiver", quiver_to_json(QuiverSpec(q.as_finite()))}};
  json open_in = json::array(), open_out = json::array();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (q.open_in(v)) open_in.push_back(q.vertices()[v]);
    if (q.open_out(v)) open_out.push_back(q.vertices()[v]);
  }
  if (!open_in.empty()) j["open_in"] = open_in;
  if (!open_out.empty()) j["open_out"] = open_out;
  json dims = json::object(), maps = json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims[q.vertices()[v]] = x.dim(v);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) maps[q.arrows()[a].label] = matrix_to_json(x.map(a));
  j["dims"] = dims;
  j["maps"] = maps;
  return j;
}

Representation representation_from_json(const json& j, const Field& f, int default_level) {
  if (!j.is_object()) throw ValidationError("a representation must be a JSON object");
  auto spec = quiver_from_json(field_of(j, "quiver"));
  int level = j.value("level", default_level);
  QuiverPtr q = truncate_ptr(spec, level);
  if (j.contains("open_in") || j.contains("open_out")) {
    if (!spec.is_finite()) throw ValidationError("open vertex lists are only read for finite windows");
    std::vector<bool> oin(q->vertex_count(), false), oout(q->vertex_count(), false);
    for (const auto& v : j.value("open_in", json::array())) oin[q->index_of(as_string(v, "vertex"))] = true;
    for (const auto& v : j.value("open_out", json::array())) oout[q->index_of(as_string(v, "vertex"))] = true;
    q = std::make_shared<const TruncatedQuiver>(q->vertices(), q->arrows(), level, oout, oin);
  }
  DimVector dims(q->vertex_count(), 0);
  const json dj = j.value("dims", json::object());
  for (const auto& [name, d] : dj.items()) {
    if (!q->contains(name)) throw ValidationError("dimension given for vertex '" + name + "' outside the window");
    if (!d.is_number_integer() || d.get<long>() < 0) throw ValidationError("dimension at '" + name + "' must be a non-negative integer");
    dims[q->index_of(name)] = d.get<std::size_t>();
  }
  std::vector<Matrix> maps;
  const json mj = j.value("maps", json::object());
  std::set<std::string> used;
  for (const auto& a : q->arrows()) {
    std::size_t rows = dims[a.target], cols = dims[a.source];
    auto it = mj.find(a.label);
    if (it == mj.end()) {
      maps.emplace_back(f, rows, cols);
      continue;
    }
    used.insert(a.label);
    try {
      maps.push_back(matrix_from_json(*it, f, rows, cols));
    } catch (const ValidationError& e) {
      throw ValidationError("arrow '" + a.label + "': " + e.what());
    }
  }
  for (const auto& [label, m] : mj.items())
    if (!used.count(label)) throw ValidationError("matrix given for unknown arrow '" + label + "'");
  Representation x(q, f, dims, maps);
  x.validate();
  return x;
}

json morphism_to_json(const Morphism& m) {
  json comps = json::object();
  const auto& q = m.source.quiver();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) comps[q.vertices()[v]] = matrix_to_json(m.components[v]);
  return comps;
}

json almost_split_to_json(const AlmostSplitSequence& s, bool certify) {
  json j{{"left", representation_to_json(s.left)},
         {"middle", representation_to_json(s.middle)},
         {"right", representation_to_json(s.right)},
         {"inclusion", morphism_to_json(s.inclusion)},
         {"projection", morphism_to_json(s.projection)}};
  if (certify) {
    const auto& c = s.certificate;
    j["certificate"] = {{"ext_dim", c.ext_dim},
                        {"coboundary_rank", c.coboundary_rank},
                        {"augmented_rank", c.augmented_rank},
                        {"radical_generators", c.radical_generators},
                        {"nonsplit", c.nonsplit()},
                        {"exact", s.is_exact()}};
  }
  return j;
}

json model_to_json(const ARComponentModel& m) {
  json vs = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& v = m.vertex(i);
    json marks = json::array();
    if (v.projective) marks.push_back("projective");
    if (v.injective) marks.push_back("injective");
    if (v.simple) marks.push_back("simple");
    if (v.open_in) marks.push_back("open-in");
    if (v.open_out) marks.push_back("open-out");
    if (!v.reliable) marks.push_back("unreliable");
    json jv{{"id", i}, {"component", v.component}, {"n", v.n}, {"x", v.x}, {"label", v.label}, {"marks", marks}};
    if (v.dimvec && m.window) {
      json d = json::object();
      for (std::size_t k = 0; k < v.dimvec->size(); ++k)
        if ((*v.dimvec)[k]) d[m.window->vertices()[k]] = (*v.dimvec)[k];
      jv["dimvec"] = d;
    }
    vs.push_back(jv);
  }
  json arrows = json::array(), taus = json::array();
  for (const auto& [a, b] : m.arrows()) arrows.push_back({a, b});
  for (std::size_t i = 0; i < m.size(); ++i)
    if (auto t = m.tau(i)) taus.push_back({i, *t});
  return {{"shape", m.shape}, {"partial", m.partial}, {"notes", m.notes},
          {"vertices", vs},   {"arrows", arrows},     {"tau", taus}};
}

std::string model_to_dot(const ARComponentModel& m) {
  std::ostringstream out;
  out << "digraph \"" << escape_dot(m.shape) << "\" {\n  rankdir=LR;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& v = m.vertex(i);
    out << "  v" << i << " [label=\"" << escape_dot(v.label.empty() ? "(" + std::to_string(v.n) + "," + v.x + ")" : v.label)
        << "\"";
    if (v.simple) out << ", shape=circle";
    if (v.boundary()) out << ", fontcolor=gray";
    out << "];\n";
  }
  for (const auto& [a, b] : m.arrows()) out << "  v" << a << " -> v" << b << ";\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    if (auto t = m.tau(i)) out << "  v" << i << " -> v" << *t << " [style=dashed, arrowhead=none, constraint=false];\n";
  out << "}\n";
  return out.str();
}

std::string quiver_to_dot(const TruncatedQuiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    out << "  \"" << escape_dot(q.vertices()[v]) << "\"";
    if (q.open_in(v) || q.open_out(v)) out << " [style=dashed]";
    out << ";\n";
  }
  for (const auto& a : q.arrows())
    out << "  \"" << escape_dot(q.vertices()[a.source]) << "\" -> \"" << escape_dot(q.vertices()[a.target])
        << "\" [label=\"" << escape_dot(a.label) << "\"];\n";
  out << "}\n";
  return out.str();
}

json tube_object_to_json(const TubeCategory& c, const TubeObject& t) {
  auto u = normalize(c, t);
  return {{"top", u.top}, {"length", u.length}, {"rank", c.rank_string()}, {"name", u.to_string()}};
}

}  // namespace arknit::io
