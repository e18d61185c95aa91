#include "torslat/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace torslat {

namespace {

bool catalog_order(const Module& a, const Module& b) {
  if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
  if (a.dims() != b.dims()) return a.dims() > b.dims();
  return a.mats() > b.mats();
}

std::string compact_dims(const std::vector<int>& dims) {
  const bool small = std::all_of(dims.begin(), dims.end(), [](int d) { return d < 10; });
  std::string s;
  for (std::size_t v = 0; v < dims.size(); ++v) {
    if (!small && v > 0) s += '.';
    s += std::to_string(dims[v]);
  }
  return s;
}

void assign_names(Catalog& cat) {
  cat.names.clear();
  std::map<std::vector<int>, int> multiplicity;
  for (const auto& m : cat.ind) ++multiplicity[m.dims()];
  std::map<std::vector<int>, int> used;
  for (const auto& m : cat.ind) {
    std::string name = compact_dims(m.dims());
    if (multiplicity[m.dims()] > 1) name += static_cast<char>('a' + used[m.dims()]++);
    cat.names.push_back(std::move(name));
  }
}

}  // namespace

std::optional<int> Catalog::find(const Module& m, const Limits& limits) const {
  for (std::size_t i = 0; i < ind.size(); ++i)
    if (ind[i].dims() == m.dims() && is_isomorphic(ind[i], m, limits)) return static_cast<int>(i);
  return std::nullopt;
}

Multiset Catalog::classify(const Module& m, const Limits& limits) const {
  Multiset out;
  for (const auto& part : decompose(m, limits)) {
    auto idx = find(part, limits);
    if (!idx) {
      std::ostringstream msg;
      msg << "indecomposable with dimension vector " << compact_dims(part.dims()) << " is missing from the catalog";
      throw Error(ErrorKind::NotClosed, msg.str());
    }
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Mask Catalog::support(const Multiset& ms) const {
  Mask m(size());
  for (int i : ms) m.set(i);
  return m;
}

int Catalog::simple_index(int vertex) const {
  auto idx = find(simple_module(algebra, vertex));
  if (!idx) throw Error(ErrorKind::NotClosed, "simple module missing from catalog");
  return *idx;
}

Mask Catalog::simples() const {
  Mask m(size());
  for (int v = 0; v < algebra->vertex_count(); ++v) m.set(simple_index(v));
  return m;
}

std::string Catalog::dim_vector_string(int i) const {
  std::string s = "(";
  const auto& d = ind[i].dims();
  for (std::size_t v = 0; v < d.size(); ++v) s += (v ? "," : "") + std::to_string(d[v]);
  return s + ")";
}

std::string Catalog::mask_name(const Mask& m) const {
  if (m.none()) return "0";
  std::string s = "{";
  bool first = true;
  for (int i : m.members()) {
    s += (first ? "" : ",") + names[i];
    first = false;
  }
  return s + "}";
}

std::optional<Mask> Catalog::parse_mask(const std::string& raw) const {
  std::string text;
  for (char c : raw)
    if (c != '{' && c != '}' && c != ' ' && c != '\t') text += c;
  if (text.empty() || text == "0" || text == "\xE2\x88\x85") return empty_mask();
  if (text == "full" || text == "all") return full_mask();
  Mask m(size());
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    std::optional<int> idx;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == tok) idx = static_cast<int>(i);
    if (!idx && tok.size() >= 2 && (tok[0] == 'S' || tok[0] == 'P')) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(tok.substr(1), &used) - 1;
        if (used == tok.size() - 1 && v >= 0 && v < algebra->vertex_count())
          idx = find(tok[0] == 'S' ? simple_module(algebra, v) : projective_module(algebra, v));
      } catch (const std::exception&) {
      }
    }
    if (!idx) return std::nullopt;
    m.set(*idx);
  }
  return m;
}

void Catalog::rebuild_derived() {
  const std::size_t n = size();
  hom_out.assign(n, Mask(n));
  hom_in.assign(n, Mask(n));
  quotient_support.assign(n, Mask(n));
  sub_support.assign(n, Mask(n));
  proper_subfactors.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (hom_nonzero[i][j]) {
        hom_out[i].set(static_cast<int>(j));
        hom_in[j].set(static_cast<int>(i));
      }
    for (const auto& q : quotients[i]) quotient_support[i] |= support(q);
    for (const auto& sf : subfactors[i]) {
      sub_support[i] |= support(sf.sub);
      if (!sf.sub.empty() && !sf.quotient.empty())
        proper_subfactors[i].push_back({support(sf.sub), support(sf.quotient)});
    }
  }
}

Catalog enumerate_indecomposables(std::shared_ptr<const Algebra> algebra, const Limits& limits) {
  Catalog cat;
  cat.algebra = algebra;
  cat.dim_bound = limits.dim_bound;

  auto absorb = [&](const Module& m) {
    for (const auto& part : decompose(m, limits)) {
      if (part.total_dim() > limits.dim_bound)
        throw Error(ErrorKind::NotClosed, "indecomposable of dimension vector " + compact_dims(part.dims()) +
                                              " exceeds the dimension bound " + std::to_string(limits.dim_bound) +
                                              " (algebra not representation-finite at this bound)");
      if (!cat.find(part, limits)) cat.ind.push_back(part);
    }
  };

  for (int v = 0; v < algebra->vertex_count(); ++v) absorb(simple_module(algebra, v));

  std::set<std::pair<std::size_t, std::size_t>> done_pairs;
  std::size_t subquotients_done = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t before = cat.ind.size();
    for (; subquotients_done < cat.ind.size(); ++subquotients_done) {
      const Module x = cat.ind[subquotients_done];
      for (const auto& sub : submodules(x, limits)) {
        absorb(sub.module);
        absorb(quotient_by(x, sub.bases).module);
      }
    }
    const std::size_t n = cat.ind.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!done_pairs.insert({i, j}).second) continue;
        const Module q = cat.ind[i];
        const Module u = cat.ind[j];
        for (const auto& z : all_extensions(q, u, limits)) absorb(z);
      }
    changed = cat.ind.size() != before || subquotients_done < cat.ind.size() || done_pairs.size() < cat.ind.size() * cat.ind.size();
  }

  std::stable_sort(cat.ind.begin(), cat.ind.end(), catalog_order);
  assign_names(cat);
  return cat;
}

void build_tables(Catalog& cat, const Limits& limits) {
  const std::size_t n = cat.size();
  cat.hom_nonzero.assign(n, std::vector<bool>(n, false));
  cat.brick.assign(n, false);
  cat.quotients.assign(n, {});
  cat.subfactors.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cat.hom_nonzero[i][j] = !hom_basis(cat.ind[i], cat.ind[j]).empty();
    cat.brick[i] = is_brick(cat.ind[i], limits);
    std::set<SubfactorPair> pairs;
    std::set<Multiset> quots;
    for (const auto& sub : submodules(cat.ind[i], limits)) {
      SubfactorPair sf{cat.classify(sub.module, limits), cat.classify(quotient_by(cat.ind[i], sub.bases).module, limits)};
      quots.insert(sf.quotient);
      pairs.insert(std::move(sf));
    }
    cat.quotients[i].assign(quots.begin(), quots.end());
    cat.subfactors[i].assign(pairs.begin(), pairs.end());
  }
  cat.rebuild_derived();
}

Catalog build_catalog(std::shared_ptr<const Algebra> algebra, const Limits& limits) {
  Catalog cat = enumerate_indecomposables(std::move(algebra), limits);
  build_tables(cat, limits);
  return cat;
}

using nlohmann::json;

std::string catalog_to_json(const Catalog& cat) {
  const AlgebraSpec& spec = cat.algebra->spec();
  json alg;
  alg["name"] = spec.name;
  alg["vertices"] = spec.quiver.vertex_count;
  alg["prime"] = spec.prime;
  json arrows = json::array();
  for (const auto& a : spec.quiver.arrows) arrows.push_back({{"name", a.name}, {"source", a.source + 1}, {"target", a.target + 1}});
  alg["arrows"] = arrows;
  alg["relations"] = spec.relations;

  json ind = json::array();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const Module& m = cat.ind[i];
    json mats = json::array();
    for (const auto& mat : m.mats()) {
      json rows = json::array();
      for (int r = 0; r < mat.rows; ++r) {
        std::vector<int> row;
        for (int c = 0; c < mat.cols; ++c) row.push_back(mat(r, c));
        rows.push_back(row);
      }
      mats.push_back(rows);
    }
    ind.push_back({{"name", cat.names[i]}, {"dims", m.dims()}, {"matrices", mats}});
  }

  json doc;
  doc["algebra"] = alg;
  doc["dim_bound"] = cat.dim_bound;
  doc["indecomposables"] = ind;
  json hom = json::array();
  for (const auto& row : cat.hom_nonzero) {
    std::vector<int> r;
    for (bool b : row) r.push_back(b ? 1 : 0);
    hom.push_back(r);
  }
  doc["hom_nonzero"] = hom;
  std::vector<int> bricks;
  for (bool b : cat.brick) bricks.push_back(b ? 1 : 0);
  doc["bricks"] = bricks;
  doc["quotients"] = cat.quotients;
  json sfs = json::array();
  for (const auto& list : cat.subfactors) {
    json l = json::array();
    for (const auto& sf : list) l.push_back(json::array({sf.sub, sf.quotient}));
    sfs.push_back(l);
  }
  doc["subfactors"] = sfs;
  return doc.dump(1) + "\n";
}

Catalog catalog_from_json(const std::string& text, const Limits& limits) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::BadSpec, std::string("catalog JSON: ") + e.what());
  }
  try {
    AlgebraSpec spec;
    const json& alg = doc.at("algebra");
    spec.name = alg.at("name").get<std::string>();
    spec.quiver.vertex_count = alg.at("vertices").get<int>();
    spec.prime = alg.at("prime").get<int>();
    for (const auto& a : alg.at("arrows"))
      spec.quiver.arrows.push_back({a.at("source").get<int>() - 1, a.at("target").get<int>() - 1, a.at("name").get<std::string>()});
    spec.relations = alg.at("relations").get<std::vector<std::vector<std::string>>>();

    Catalog cat;
    cat.algebra = build_algebra(spec, limits.path_bound);
    cat.dim_bound = doc.at("dim_bound").get<int>();
    for (const auto& m : doc.at("indecomposables")) {
      auto dims = m.at("dims").get<std::vector<int>>();
      std::vector<Matrix> mats;
      const auto& jm = m.at("matrices");
      for (int a = 0; a < cat.algebra->arrow_count(); ++a) {
        const Arrow& ar = cat.algebra->arrow(a);
        Matrix mat(dims.at(ar.target), dims.at(ar.source));
        const auto& rows = jm.at(a);
        if (static_cast<int>(rows.size()) != mat.rows) throw Error(ErrorKind::BadSpec, "catalog JSON: matrix shape mismatch");
        for (int r = 0; r < mat.rows; ++r) {
          auto row = rows.at(r).get<std::vector<int>>();
          if (static_cast<int>(row.size()) != mat.cols) throw Error(ErrorKind::BadSpec, "catalog JSON: matrix shape mismatch");
          for (int c = 0; c < mat.cols; ++c) mat(r, c) = cat.algebra->field().reduce(row[c]);
        }
        mats.push_back(std::move(mat));
      }
      cat.ind.emplace_back(cat.algebra, std::move(dims), std::move(mats));
      cat.names.push_back(m.at("name").get<std::string>());
    }
    for (const auto& row : doc.at("hom_nonzero")) {
      std::vector<bool> r;
      for (int b : row.get<std::vector<int>>()) r.push_back(b != 0);
      cat.hom_nonzero.push_back(std::move(r));
    }
    for (int b : doc.at("bricks").get<std::vector<int>>()) cat.brick.push_back(b != 0);
    cat.quotients = doc.at("quotients").get<std::vector<std::vector<Multiset>>>();
    for (const auto& list : doc.at("subfactors")) {
      std::vector<SubfactorPair> l;
      for (const auto& sf : list) l.push_back({sf.at(0).get<Multiset>(), sf.at(1).get<Multiset>()});
      cat.subfactors.push_back(std::move(l));
    }
    const std::size_t n = cat.ind.size();
    if (cat.hom_nonzero.size() != n || cat.brick.size() != n || cat.quotients.size() != n || cat.subfactors.size() != n)
      throw Error(ErrorKind::BadSpec, "catalog JSON: table sizes do not match the indecomposable list");
    cat.rebuild_derived();
    return cat;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::BadSpec, std::string("catalog JSON: ") + e.what());
  }
}

MorphismAtlas::MorphismAtlas(const Catalog& cat, const Limits& limits) : n_(cat.size()), records_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const Module& x = cat.ind[i];
      const Module& y = cat.ind[j];
      auto& recs = records_[i * n_ + j];
      for_each_in_span(hom_basis(x, y), x, y, limits.enum_budget, ErrorKind::IsoSearchBlowup, [&](const Morphism& f) {
        const auto kic = kernel_image_cokernel(f);
        MorphismRecord r;
        r.zero = f.is_zero();
        r.epi = f.is_surjective();
        r.mono = f.is_injective();
        r.kernel = cat.classify(kic.kernel.module, limits);
        r.image = cat.classify(kic.image.module, limits);
        r.cokernel = cat.classify(kic.cokernel.module, limits);
        recs.push_back(std::move(r));
        return true;
      });
    }
}

std::size_t MorphismAtlas::morphism_count() const {
  std::size_t c = 0;
  for (const auto& r : records_) c += r.size();
  return c;
}

}  // namespace torslat
