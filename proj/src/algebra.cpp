#include "torslat/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace torslat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::BadRelation: return "BadRelation";
    case ErrorKind::PathBlowup: return "PathBlowup";
    case ErrorKind::DecomposeBlowup: return "DecomposeBlowup";
    case ErrorKind::IsoSearchBlowup: return "IsoSearchBlowup";
    case ErrorKind::SubspaceBlowup: return "SubspaceBlowup";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::LatticeBlowup: return "LatticeBlowup";
    case ErrorKind::LabelNotUnique: return "LabelNotUnique";
    case ErrorKind::LabelNotBrick: return "LabelNotBrick";
    case ErrorKind::DualityMismatch: return "DualityMismatch";
    case ErrorKind::NotWide: return "NotWide";
    case ErrorKind::NotWideInterval: return "NotWideInterval";
    case ErrorKind::NotAnInterval: return "NotAnInterval";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::AuditFailed: return "AuditFailed";
  }
  return "Error";
}

std::optional<int> Quiver::arrow_index(std::string_view name) const {
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].name == name) return static_cast<int>(a);
  return std::nullopt;
}

namespace {

int parse_int(const std::string& token, int line_no) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadSpec, "line " + std::to_string(line_no) + ": expected integer, got '" + token + "'");
  }
}

}  // namespace

AlgebraSpec parse_algebra_spec(std::string_view text, std::string name) {
  AlgebraSpec spec;
  spec.name = std::move(name);
  bool have_vertices = false;
  bool have_prime = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    const auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    if (tok[0] == "vertices") {
      if (tok.size() != 2 || have_vertices) throw Error(ErrorKind::BadSpec, where() + "expected a single 'vertices N'");
      spec.quiver.vertex_count = parse_int(tok[1], line_no);
      if (spec.quiver.vertex_count <= 0) throw Error(ErrorKind::BadSpec, where() + "vertex count must be positive");
      have_vertices = true;
    } else if (tok[0] == "arrow") {
      if (tok.size() != 4) throw Error(ErrorKind::BadSpec, where() + "expected 'arrow <name> <src> <dst>'");
      spec.quiver.arrows.push_back({parse_int(tok[2], line_no) - 1, parse_int(tok[3], line_no) - 1, tok[1]});
    } else if (tok[0] == "relation") {
      if (tok.size() < 2) throw Error(ErrorKind::BadSpec, where() + "empty relation");
      spec.relations.emplace_back(tok.begin() + 1, tok.end());
    } else if (tok[0] == "prime") {
      if (tok.size() != 2 || have_prime) throw Error(ErrorKind::BadSpec, where() + "expected a single 'prime p'");
      spec.prime = parse_int(tok[1], line_no);
      have_prime = true;
    } else if (tok[0] == "name") {
      if (tok.size() != 2) throw Error(ErrorKind::BadSpec, where() + "expected 'name <id>'");
      if (spec.name.empty()) spec.name = tok[1];
    } else {
      throw Error(ErrorKind::BadSpec, where() + "unknown directive '" + tok[0] + "'");
    }
  }
  if (!have_vertices) throw Error(ErrorKind::BadSpec, "missing 'vertices' line");
  return spec;
}

AlgebraSpec load_algebra_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadSpec, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem.erase(0, slash + 1);
  if (auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0) stem.erase(dot);
  auto spec = parse_algebra_spec(buf.str());
  if (spec.name.empty()) spec.name = stem;
  return spec;
}

std::string format_algebra_spec(const AlgebraSpec& spec) {
  std::ostringstream out;
  if (!spec.name.empty()) out << "name " << spec.name << "\n";
  out << "vertices " << spec.quiver.vertex_count << "\n";
  for (const auto& a : spec.quiver.arrows) out << "arrow " << a.name << " " << a.source + 1 << " " << a.target + 1 << "\n";
  for (const auto& r : spec.relations) {
    out << "relation";
    for (const auto& n : r) out << " " << n;
    out << "\n";
  }
  out << "prime " << spec.prime << "\n";
  return out.str();
}

std::string Algebra::path_name(const Path& p) const {
  if (p.arrows.empty()) return "e" + std::to_string(p.start + 1);
  std::string s;
  for (int a : p.arrows) s += quiver_.arrows[a].name;
  return s;
}

namespace {

bool contains_relation_suffix(const std::vector<int>& path, const std::vector<std::vector<int>>& relations) {
  for (const auto& rel : relations) {
    if (rel.size() > path.size()) continue;
    if (std::equal(rel.begin(), rel.end(), path.end() - static_cast<std::ptrdiff_t>(rel.size()))) return true;
  }
  return false;
}

}  // namespace

std::shared_ptr<const Algebra> build_algebra(const AlgebraSpec& spec, std::size_t path_bound) {
  const Quiver& q = spec.quiver;
  if (q.vertex_count <= 0) throw Error(ErrorKind::BadSpec, "vertex count must be positive");
  if (!is_prime(spec.prime) || spec.prime > max_prime)
    throw Error(ErrorKind::BadSpec, "prime must be one of 2, 3, 5, 7 (got " + std::to_string(spec.prime) + ")");
  std::set<std::string> names;
  for (const auto& a : q.arrows) {
    if (a.source < 0 || a.source >= q.vertex_count || a.target < 0 || a.target >= q.vertex_count)
      throw Error(ErrorKind::BadSpec, "arrow '" + a.name + "' has an endpoint outside 1.." + std::to_string(q.vertex_count));
    if (!names.insert(a.name).second) throw Error(ErrorKind::BadSpec, "duplicate arrow name '" + a.name + "'");
  }

  std::vector<std::vector<int>> relations;
  for (const auto& rel : spec.relations) {
    std::string text;
    for (const auto& n : rel) text += (text.empty() ? "" : " ") + n;
    if (rel.size() < 2) throw Error(ErrorKind::BadRelation, "relation '" + text + "' has length < 2");
    std::vector<int> idx;
    for (const auto& n : rel) {
      auto a = q.arrow_index(n);
      if (!a) throw Error(ErrorKind::BadRelation, "relation '" + text + "' uses unknown arrow '" + n + "'");
      idx.push_back(*a);
    }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      if (q.arrows[idx[i]].target != q.arrows[idx[i + 1]].source)
        throw Error(ErrorKind::BadRelation, "relation '" + text + "' is not a composable path");
    relations.push_back(std::move(idx));
  }

  // Arrows sorted by name so that each BFS level comes out lexicographic.
  std::vector<int> by_name(q.arrows.size());
  for (std::size_t a = 0; a < by_name.size(); ++a) by_name[a] = static_cast<int>(a);
  std::sort(by_name.begin(), by_name.end(), [&](int a, int b) { return q.arrows[a].name < q.arrows[b].name; });

  std::vector<Path> basis;
  for (int v = 0; v < q.vertex_count; ++v) basis.push_back({v, {}});
  std::vector<Path> level;
  for (int a : by_name) level.push_back({q.arrows[a].source, {a}});
  while (!level.empty()) {
    std::vector<Path> survivors;
    for (auto& p : level)
      if (!contains_relation_suffix(p.arrows, relations)) survivors.push_back(std::move(p));
    for (const auto& p : survivors) {
      basis.push_back(p);
      if (basis.size() > path_bound)
        throw Error(ErrorKind::PathBlowup, "more than " + std::to_string(path_bound) +
                                               " paths survive the relations (algebra infinite-dimensional or too large)");
    }
    std::vector<Path> next;
    for (const auto& p : survivors) {
      const int end = p.end(q);
      for (int a : by_name) {
        if (q.arrows[a].source != end) continue;
        Path ext = p;
        ext.arrows.push_back(a);
        next.push_back(std::move(ext));
      }
    }
    // Keep lexicographic order on arrow-name sequences within the level.
    std::stable_sort(next.begin(), next.end(), [&](const Path& x, const Path& y) {
      return std::lexicographical_compare(x.arrows.begin(), x.arrows.end(), y.arrows.begin(), y.arrows.end(),
                                          [&](int a, int b) { return q.arrows[a].name < q.arrows[b].name; });
    });
    level = std::move(next);
  }
  return std::shared_ptr<const Algebra>(new Algebra(spec, std::move(relations), std::move(basis)));
}

}  // namespace torslat
