#include "gsemi/qalg.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace gsemi {

int Quiver::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == id) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_index(const std::string& id) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == id) return static_cast<int>(i);
  return -1;
}

std::vector<int> Quiver::arrows_into(int v) const {
  std::vector<int> r;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].tgt == v) r.push_back(static_cast<int>(i));
  return r;
}

std::vector<int> Quiver::arrows_out_of(int v) const {
  std::vector<int> r;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].src == v) r.push_back(static_cast<int>(i));
  return r;
}

bool Quiver::is_acyclic() const {
  std::vector<int> indeg(vertices.size(), 0);
  for (const auto& a : arrows) ++indeg[a.tgt];
  std::vector<int> queue;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (indeg[v] == 0) queue.push_back(static_cast<int>(v));
  std::size_t seen = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++seen;
    for (int a : arrows_out_of(v))
      if (--indeg[arrows[a].tgt] == 0) queue.push_back(arrows[a].tgt);
  }
  return seen == vertices.size();
}

bool Quiver::underlying_connected() const {
  if (vertices.empty()) return true;
  std::vector<bool> seen(vertices.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& a : arrows) {
      if (a.src == v && !seen[a.tgt]) { seen[a.tgt] = true; stack.push_back(a.tgt); }
      if (a.tgt == v && !seen[a.src]) { seen[a.src] = true; stack.push_back(a.src); }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<std::vector<int>> Quiver::source_layers() const {
  std::vector<int> indeg(vertices.size(), 0);
  for (const auto& a : arrows) ++indeg[a.tgt];
  std::vector<bool> placed(vertices.size(), false);
  std::vector<std::vector<int>> layers;
  std::size_t total = 0;
  while (total < vertices.size()) {
    std::vector<int> layer;
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (!placed[v] && indeg[v] == 0) layer.push_back(static_cast<int>(v));
    if (layer.empty()) throw ValidationError("source_layers: quiver is not acyclic");
    for (int v : layer) {
      placed[v] = true;
      ++total;
      for (int a : arrows_out_of(v)) --indeg[arrows[a].tgt];
    }
    layers.push_back(std::move(layer));
  }
  return layers;
}

Path Path::of_arrows(std::vector<int> traversal) {
  Path p;
  p.arrows_ = std::move(traversal);
  return p;
}

std::string Path::label(const Quiver& q) const {
  if (is_trivial()) return "e_" + q.vertices[base_];
  std::string s;
  for (auto it = arrows_.rbegin(); it != arrows_.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += q.arrows[*it].id;
  }
  return s;
}

bool BoundQuiverAlgebra::in_ideal(int first, int second) const {
  for (const auto& [f, s] : relations)
    if (f == first && s == second) return true;
  return false;
}

std::vector<int> BoundQuiverAlgebra::killers_of(int alpha) const {
  std::vector<int> r;
  for (const auto& [f, s] : relations)
    if (s == alpha) r.push_back(f);
  return r;
}

std::vector<int> BoundQuiverAlgebra::killed_after(int alpha) const {
  std::vector<int> r;
  for (const auto& [f, s] : relations)
    if (f == alpha) r.push_back(s);
  return r;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) { out.push_back(cur); cur.clear(); }
    else cur += c;
  }
  out.push_back(cur);
  return out;
}

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

BoundQuiverAlgebra parse_algebra(const std::string& text) {
  BoundQuiverAlgebra alg;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_vertices = false;
  std::vector<std::tuple<std::string, std::string, int>> pending_relations;  // beta, alpha, line

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;

    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected `key: ...`");
    std::string key = trim(line.substr(0, colon));
    std::string rest = trim(line.substr(colon + 1));

    if (key != "vertices" && !saw_vertices)
      throw ParseError("line " + std::to_string(lineno) + ": `vertices:` must come first");

    if (key == "vertices") {
      saw_vertices = true;
      std::istringstream vs(rest);
      std::string tok;
      while (vs >> tok) {
        if (!valid_token(tok))
          throw ParseError("line " + std::to_string(lineno) + ": bad vertex id `" + tok + "`");
        if (alg.quiver.vertex_index(tok) >= 0)
          throw ValidationError("duplicate vertex id `" + tok + "`");
        alg.quiver.vertices.push_back(tok);
      }
    } else if (key == "arrows") {
      for (const std::string& entry_raw : split(rest, ',')) {
        std::string entry = trim(entry_raw);
        if (entry.empty()) continue;
        auto c2 = entry.find(':');
        if (c2 == std::string::npos)
          throw ParseError("line " + std::to_string(lineno) + ": arrow needs `name: src -> tgt`");
        std::string name = trim(entry.substr(0, c2));
        std::string ends = trim(entry.substr(c2 + 1));
        auto arr = ends.find("->");
        if (arr == std::string::npos)
          throw ParseError("line " + std::to_string(lineno) + ": arrow needs `src -> tgt`");
        std::string src = trim(ends.substr(0, arr));
        std::string tgt = trim(ends.substr(arr + 2));
        if (!valid_token(name) || !valid_token(src) || !valid_token(tgt))
          throw ParseError("line " + std::to_string(lineno) + ": bad arrow entry `" + entry + "`");
        if (alg.quiver.arrow_index(name) >= 0)
          throw ValidationError("duplicate arrow id `" + name + "`");
        int si = alg.quiver.vertex_index(src);
        int ti = alg.quiver.vertex_index(tgt);
        if (si < 0) throw ValidationError("arrow `" + name + "`: unknown vertex `" + src + "`");
        if (ti < 0) throw ValidationError("arrow `" + name + "`: unknown vertex `" + tgt + "`");
        alg.quiver.arrows.push_back({name, si, ti});
      }
    } else if (key == "relations") {
      for (const std::string& entry_raw : split(rest, ',')) {
        std::string entry = trim(entry_raw);
        if (entry.empty()) continue;
        std::vector<std::string> parts = split(entry, '*');
        for (auto& p : parts) p = trim(p);
        if (parts.size() != 2)
          throw NonQuadraticError("relation `" + entry + "` is not a length-2 path");
        // entry is beta*alpha: the path that traverses alpha, then beta.
        pending_relations.emplace_back(parts[0], parts[1], lineno);
      }
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key `" + key + "`");
    }
  }

  if (!saw_vertices) throw ParseError("missing `vertices:` line");

  for (const auto& [beta, alpha, ln] : pending_relations) {
    int ai = alg.quiver.arrow_index(alpha);
    int bi = alg.quiver.arrow_index(beta);
    if (ai < 0) throw ValidationError("relation on line " + std::to_string(ln) +
                                      ": unknown arrow `" + alpha + "`");
    if (bi < 0) throw ValidationError("relation on line " + std::to_string(ln) +
                                      ": unknown arrow `" + beta + "`");
    if (alg.quiver.arrows[ai].tgt != alg.quiver.arrows[bi].src)
      throw ValidationError("relation `" + beta + "*" + alpha + "` is not composable");
    if (alg.in_ideal(ai, bi))
      throw ValidationError("duplicate relation `" + beta + "*" + alpha + "`");
    alg.relations.emplace_back(ai, bi);
  }

  validate_algebra(alg);
  return alg;
}

BoundQuiverAlgebra parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open `" + path + "`");
  std::ostringstream ss;
  ss << in.rdbuf();
  BoundQuiverAlgebra alg = parse_algebra(ss.str());
  auto slash = path.find_last_of('/');
  alg.name = slash == std::string::npos ? path : path.substr(slash + 1);
  return alg;
}

void validate_algebra(const BoundQuiverAlgebra& alg) {
  const Quiver& q = alg.quiver;
  for (const auto& a : q.arrows)
    if (a.src < 0 || a.src >= static_cast<int>(q.vertices.size()) || a.tgt < 0 ||
        a.tgt >= static_cast<int>(q.vertices.size()))
      throw ValidationError("arrow `" + a.id + "` has undeclared endpoints");
  for (const auto& [f, s] : alg.relations)
    if (q.arrows[f].tgt != q.arrows[s].src)
      throw ValidationError("relation is not composable");

  // Finite dimensionality: the graph on arrows with an edge a -> b whenever
  // the composite (a, b) survives I must be acyclic.
  int n = static_cast<int>(q.arrows.size());
  std::vector<std::vector<int>> next(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (q.arrows[a].tgt == q.arrows[b].src && !alg.in_ideal(a, b)) next[a].push_back(b);
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::function<void(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w : next[v]) {
      if (state[w] == 1)
        throw InfiniteDimensionalError("nonzero cycle through arrow `" + q.arrows[w].id + "`");
      if (state[w] == 0) dfs(w);
    }
    state[v] = 2;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0) dfs(v);
}

bool path_is_nonzero(const BoundQuiverAlgebra& alg, const Path& p) {
  const auto& arr = p.arrows();
  for (std::size_t i = 0; i + 1 < arr.size(); ++i) {
    if (alg.quiver.arrows[arr[i]].tgt != alg.quiver.arrows[arr[i + 1]].src) return false;
    if (alg.in_ideal(arr[i], arr[i + 1])) return false;
  }
  return true;
}

std::optional<Path> compose_paths(const BoundQuiverAlgebra& alg, const Path& p, const Path& q) {
  if (q.target(alg.quiver) != p.source(alg.quiver))
    throw NotComposableError("compose_paths: target of q differs from source of p");
  if (q.is_trivial()) return p;
  if (p.is_trivial()) return q;
  std::vector<int> traversal = q.arrows();
  traversal.insert(traversal.end(), p.arrows().begin(), p.arrows().end());
  Path r = Path::of_arrows(std::move(traversal));
  if (!path_is_nonzero(alg, r)) return std::nullopt;
  return r;
}

std::vector<Path> enumerate_nonzero_paths(const BoundQuiverAlgebra& alg) {
  const Quiver& q = alg.quiver;
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) frontier.push_back(Path::trivial(static_cast<int>(v)));
  while (!frontier.empty()) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    std::vector<Path> next;
    for (const Path& pth : frontier) {
      int end = pth.target(q);
      for (int b : q.arrows_out_of(end)) {
        if (!pth.is_trivial() && alg.in_ideal(pth.arrows().back(), b)) continue;
        std::vector<int> tr = pth.arrows();
        tr.push_back(b);
        next.push_back(Path::of_arrows(std::move(tr)));
      }
    }
    if (out.size() > 100000) throw InfiniteDimensionalError("path enumeration exploded");
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.is_trivial()) return q.vertices[a.base()] < q.vertices[b.base()];
    std::vector<std::string> ia, ib;
    for (int x : a.arrows()) ia.push_back(q.arrows[x].id);
    for (int x : b.arrows()) ib.push_back(q.arrows[x].id);
    return ia < ib;
  });
  return out;
}

BoundQuiverAlgebra opposite_algebra(const BoundQuiverAlgebra& alg) {
  BoundQuiverAlgebra op;
  op.quiver.vertices = alg.quiver.vertices;
  for (const auto& a : alg.quiver.arrows) op.quiver.arrows.push_back({a.id, a.tgt, a.src});
  for (const auto& [f, s] : alg.relations) op.relations.emplace_back(s, f);
  op.field_char = alg.field_char;
  op.name = alg.name.empty() ? "" : alg.name + ".op";
  validate_algebra(op);
  return op;
}

}  // namespace gsemi
