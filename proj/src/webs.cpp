#include "spechtweb/webs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spechtweb {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::logic_error("web invariant: " + what); }

}  // namespace

// ---------------------------------------------------------------------------
// Web basics

Web Web::from_parts(int boundary_points, int loops, std::vector<Vertex> vertices,
                    std::vector<Half> halves) {
  Web w;
  w.boundary_n_ = boundary_points;
  w.loops_ = loops;
  w.vertices_ = std::move(vertices);
  w.halves_ = std::move(halves);
  w.validate();
  return w;
}

int Web::degree(int v) const {
  int h0 = vertices_[static_cast<size_t>(v)].first;
  if (h0 < 0) return 0;
  int d = 0, h = h0;
  do {
    ++d;
    h = halves_[static_cast<size_t>(h)].next;
  } while (h != h0);
  return d;
}

std::vector<int> Web::rotation(int v) const {
  std::vector<int> r;
  int h0 = vertices_[static_cast<size_t>(v)].first;
  if (h0 < 0) return r;
  int h = h0;
  do {
    r.push_back(h);
    h = halves_[static_cast<size_t>(h)].next;
  } while (h != h0);
  return r;
}

int Web::boundary_vertex(int pos) const {
  for (size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].kind == VertexKind::boundary && vertices_[v].boundary_pos == pos)
      return static_cast<int>(v);
  throw std::invalid_argument("no such boundary position");
}

int Web::crossing_count() const {
  int c = 0;
  for (const Vertex& v : vertices_)
    if (v.kind == VertexKind::crossing) ++c;
  return c;
}

std::vector<int> Web::crossing_vertices() const {
  std::vector<int> out;
  for (size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].kind == VertexKind::crossing) out.push_back(static_cast<int>(v));
  return out;
}

long long Web::measure() const {
  long long internal = 0;
  for (const Vertex& v : vertices_)
    if (v.kind != VertexKind::boundary) ++internal;
  return internal + static_cast<long long>(halves_.size()) / 2 + loops_;
}

// Face orbits of h -> twin(rot_next(h)).
namespace {

std::vector<std::vector<int>> face_orbits(const Web& w) {
  std::vector<std::vector<int>> faces;
  std::vector<char> seen(static_cast<size_t>(w.half_count()), 0);
  for (int h0 = 0; h0 < w.half_count(); ++h0) {
    if (seen[static_cast<size_t>(h0)]) continue;
    std::vector<int> orbit;
    int h = h0;
    do {
      seen[static_cast<size_t>(h)] = 1;
      orbit.push_back(h);
      h = w.half(w.half(h).next).twin;
    } while (h != h0);
    faces.push_back(std::move(orbit));
  }
  return faces;
}

}  // namespace

void Web::validate() const {
  if (loops_ < 0) fail("negative loop count");
  std::vector<int> deg(vertices_.size(), 0);
  for (size_t h = 0; h < halves_.size(); ++h) {
    const Half& a = halves_[h];
    if (a.twin < 0 || a.twin >= half_count() || a.twin == static_cast<int>(h))
      fail("twin out of range or self");
    if (halves_[static_cast<size_t>(a.twin)].twin != static_cast<int>(h)) fail("twin not involutive");
    if (halves_[static_cast<size_t>(a.twin)].out == a.out) fail("twin flags not opposite");
    if (a.vertex < 0 || a.vertex >= vertex_count()) fail("half with bad vertex");
    if (a.next < 0 || a.next >= half_count() ||
        halves_[static_cast<size_t>(a.next)].vertex != a.vertex)
      fail("rotation leaves vertex");
    ++deg[static_cast<size_t>(a.vertex)];
  }
  std::vector<char> bpos_seen(static_cast<size_t>(boundary_n_), 0);
  for (size_t v = 0; v < vertices_.size(); ++v) {
    const Vertex& vx = vertices_[v];
    std::vector<int> rot = rotation(static_cast<int>(v));
    if (static_cast<int>(rot.size()) != deg[v]) fail("rotation cycle does not cover vertex");
    switch (vx.kind) {
      case VertexKind::boundary: {
        if (deg[v] != 1) fail("boundary vertex degree != 1");
        if (halves_[static_cast<size_t>(rot[0])].out) fail("boundary edge oriented out of the line");
        if (vx.boundary_pos < 1 || vx.boundary_pos > boundary_n_) fail("boundary position out of range");
        if (bpos_seen[static_cast<size_t>(vx.boundary_pos) - 1]) fail("duplicate boundary position");
        bpos_seen[static_cast<size_t>(vx.boundary_pos) - 1] = 1;
        break;
      }
      case VertexKind::internal: {
        if (deg[v] != 3) fail("internal vertex degree != 3");
        bool o = halves_[static_cast<size_t>(rot[0])].out;
        for (int h : rot)
          if (halves_[static_cast<size_t>(h)].out != o) fail("internal vertex with mixed orientations");
        break;
      }
      case VertexKind::crossing: {
        if (deg[v] != 4) fail("crossing vertex degree != 4");
        int in = 0;
        for (int h : rot)
          if (!halves_[static_cast<size_t>(h)].out) ++in;
        if (in != 2) fail("crossing without two inflows");
        if (halves_[static_cast<size_t>(rot[0])].out == halves_[static_cast<size_t>(rot[2])].out ||
            halves_[static_cast<size_t>(rot[1])].out == halves_[static_cast<size_t>(rot[3])].out)
          fail("crossing strand does not pass through");
        break;
      }
    }
  }
  for (char s : bpos_seen)
    if (!s) fail("missing boundary position");

  // Planarity: V - E + F == 2 * #components.
  if (!vertices_.empty()) {
    std::vector<int> comp(vertices_.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (comp[static_cast<size_t>(x)] != x)
        x = comp[static_cast<size_t>(x)] = comp[static_cast<size_t>(comp[static_cast<size_t>(x)])];
      return x;
    };
    for (const Half& a : halves_) {
      int ra = find(a.vertex), rb = find(halves_[static_cast<size_t>(a.twin)].vertex);
      if (ra != rb) comp[static_cast<size_t>(ra)] = rb;
    }
    std::set<int> roots;
    for (size_t v = 0; v < vertices_.size(); ++v) {
      if (deg[v] == 0) fail("isolated vertex");
      roots.insert(find(static_cast<int>(v)));
    }
    long long euler = static_cast<long long>(vertices_.size()) -
                      static_cast<long long>(halves_.size()) / 2 +
                      static_cast<long long>(face_orbits(*this).size());
    if (euler != 2 * static_cast<long long>(roots.size())) fail("Euler formula violated");
  }
}

// ---------------------------------------------------------------------------
// Canonical encoding

namespace {

char kind_tag(const Web& w, int v) {
  const Web::Vertex& vx = w.vertex(v);
  if (vx.kind == Web::VertexKind::boundary) return 'b';
  if (vx.kind == Web::VertexKind::crossing) return 'x';
  return w.half(vx.first).out ? 's' : 'k';  // source / sink
}

std::vector<int> rotation_from(const Web& w, int v, int entry) {
  std::vector<int> r;
  int h = entry;
  do {
    r.push_back(h);
    h = w.half(h).next;
  } while (h != entry);
  return r;
}

// Breadth-first encoding of the component containing `root`, entered via
// half-edge `root_entry` at it.  Marks the component in `visited`.
std::string encode_component(const Web& w, int root, int root_entry, std::vector<char>& visited) {
  std::vector<int> id(static_cast<size_t>(w.vertex_count()), -1);
  std::vector<int> entry(static_cast<size_t>(w.vertex_count()), -1);
  std::vector<int> order;
  int next_id = 0;
  id[static_cast<size_t>(root)] = next_id++;
  entry[static_cast<size_t>(root)] = root_entry;
  order.push_back(root);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    for (int h : rotation_from(w, v, entry[static_cast<size_t>(v)])) {
      int far = w.half(h).twin;
      int t = w.half(far).vertex;
      if (id[static_cast<size_t>(t)] == -1) {
        id[static_cast<size_t>(t)] = next_id++;
        entry[static_cast<size_t>(t)] = far;
        order.push_back(t);
      }
    }
  }
  std::ostringstream os;
  for (int v : order) {
    visited[static_cast<size_t>(v)] = 1;
    os << kind_tag(w, v);
    if (w.vertex(v).kind == Web::VertexKind::boundary) os << w.vertex(v).boundary_pos;
    os << '[';
    for (int h : rotation_from(w, v, entry[static_cast<size_t>(v)])) {
      int far = w.half(h).twin;
      int t = w.half(far).vertex;
      auto rt = rotation_from(w, t, entry[static_cast<size_t>(t)]);
      int slot = static_cast<int>(std::find(rt.begin(), rt.end(), far) - rt.begin());
      os << id[static_cast<size_t>(t)] << '.' << slot << '.' << (w.half(h).out ? '1' : '0') << ' ';
    }
    os << ']';
  }
  return os.str();
}

}  // namespace

std::string Web::canonical_encoding() const {
  std::string out = "B" + std::to_string(boundary_n_) + ";L" + std::to_string(loops_) + ";";
  std::vector<char> visited(vertices_.size(), 0);
  for (int p = 1; p <= boundary_n_; ++p) {
    int bv = boundary_vertex(p);
    if (visited[static_cast<size_t>(bv)]) continue;
    out += "|";
    out += encode_component(*this, bv, vertices_[static_cast<size_t>(bv)].first, visited);
  }
  // Closed components (transient during reduction) have no anchor; their
  // canonical start is the least encoding over all entry choices.  Face
  // placement of a closed component never affects the value and is not
  // recorded.
  std::vector<std::string> closed;
  for (size_t v = 0; v < vertices_.size(); ++v) {
    if (visited[v]) continue;
    std::vector<char> comp(vertices_.size(), 0);
    (void)encode_component(*this, static_cast<int>(v), vertices_[v].first, comp);
    std::string best;
    for (size_t u = 0; u < vertices_.size(); ++u) {
      if (!comp[u]) continue;
      for (int h : rotation(static_cast<int>(u))) {
        std::vector<char> scratch(vertices_.size(), 0);
        std::string enc = encode_component(*this, static_cast<int>(u), h, scratch);
        if (best.empty() || enc < best) best = enc;
      }
    }
    for (size_t u = 0; u < vertices_.size(); ++u)
      if (comp[u]) visited[u] = 1;
    closed.push_back(std::move(best));
  }
  std::sort(closed.begin(), closed.end());
  for (const std::string& c : closed) out += "|C:" + c;
  return out;
}

// ---------------------------------------------------------------------------
// Builder

WebBuilder::WebBuilder(int boundary_points) : boundary_n_(boundary_points) {
  if (boundary_points < 0) throw std::invalid_argument("negative boundary size");
}

int WebBuilder::add(Web::VertexKind kind, bool out, std::vector<Nbr> nbrs) {
  if (nbrs.size() != 3) throw std::invalid_argument("internal vertex needs 3 neighbours");
  pending_.push_back(Pending{kind, std::move(nbrs), std::vector<bool>(3, out)});
  return boundary_n_ + static_cast<int>(pending_.size()) - 1;
}

int WebBuilder::crossing(std::vector<Nbr> nbrs, std::vector<bool> out_flags) {
  if (nbrs.size() != 4 || out_flags.size() != 4)
    throw std::invalid_argument("crossing needs 4 neighbours and 4 flags");
  pending_.push_back(Pending{Web::VertexKind::crossing, std::move(nbrs), std::move(out_flags)});
  return boundary_n_ + static_cast<int>(pending_.size()) - 1;
}

Web WebBuilder::build() const {
  Web w;
  w.boundary_n_ = boundary_n_;
  w.loops_ = loops_;
  for (int p = 1; p <= boundary_n_; ++p)
    w.vertices_.push_back(Web::Vertex{Web::VertexKind::boundary, p, -1});
  for (const Pending& pd : pending_)
    w.vertices_.push_back(Web::Vertex{pd.kind, 0, -1});

  std::map<int, int> open_edge;  // edge id -> first half seen
  for (size_t k = 0; k < pending_.size(); ++k) {
    const Pending& pd = pending_[k];
    int v = boundary_n_ + static_cast<int>(k);
    std::vector<int> mine;
    for (size_t s = 0; s < pd.nbrs.size(); ++s) {
      int h = static_cast<int>(w.halves_.size());
      w.halves_.push_back(Web::Half{-1, v, -1, pd.out[s]});
      mine.push_back(h);
      const Nbr& nb = pd.nbrs[s];
      if (nb.is_boundary) {
        if (nb.value < 1 || nb.value > boundary_n_) throw std::invalid_argument("bad boundary tag");
        int bv = nb.value - 1;
        if (w.vertices_[static_cast<size_t>(bv)].first != -1)
          throw std::invalid_argument("boundary position attached twice");
        if (!pd.out[s]) throw std::invalid_argument("boundary edge must flow into the line");
        int bh = static_cast<int>(w.halves_.size());
        w.halves_.push_back(Web::Half{h, bv, bh, false});
        w.halves_[static_cast<size_t>(h)].twin = bh;
        w.vertices_[static_cast<size_t>(bv)].first = bh;
      } else {
        auto it = open_edge.find(nb.value);
        if (it == open_edge.end()) {
          open_edge[nb.value] = h;
        } else {
          int other = it->second;
          if (w.halves_[static_cast<size_t>(other)].twin != -1)
            throw std::invalid_argument("edge id used more than twice");
          if (w.halves_[static_cast<size_t>(other)].out == pd.out[s])
            throw std::invalid_argument("edge with matching flow at both ends");
          w.halves_[static_cast<size_t>(h)].twin = other;
          w.halves_[static_cast<size_t>(other)].twin = h;
        }
      }
    }
    for (size_t s = 0; s < mine.size(); ++s)
      w.halves_[static_cast<size_t>(mine[s])].next = mine[(s + 1) % mine.size()];
    w.vertices_[static_cast<size_t>(v)].first = mine[0];
  }
  for (const auto& [id, h] : open_edge)
    if (w.halves_[static_cast<size_t>(h)].twin == -1)
      throw std::invalid_argument("edge id used only once");
  for (int p = 0; p < boundary_n_; ++p)
    if (w.vertices_[static_cast<size_t>(p)].first == -1)
      throw std::invalid_argument("boundary position not attached");
  w.validate();
  return w;
}

// ---------------------------------------------------------------------------
// WebSum / Schedule

void WebSum::add(const Web& w, const Int& c) {
  if (c == 0) return;
  std::string key = w.canonical_encoding();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), Term{w, c});
  } else {
    it->second.coeff += c;
    if (it->second.coeff == 0) terms_.erase(it);
  }
}

void WebSum::add(const WebSum& other) {
  for (const auto& [k, t] : other.terms_) add(t.web, t.coeff);
}

void WebSum::add_scaled(const WebSum& other, const Int& c) {
  for (const auto& [k, t] : other.terms_) add(t.web, t.coeff * c);
}

Int WebSum::coeff(const std::string& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Int(0) : it->second.coeff;
}

bool WebSum::operator==(const WebSum& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (const auto& [k, t] : terms_) {
    auto it = other.terms_.find(k);
    if (it == other.terms_.end() || it->second.coeff != t.coeff) return false;
  }
  return true;
}

size_t Schedule::pick(size_t count) {
  if (!rng_ || count <= 1) return 0;
  return std::uniform_int_distribution<size_t>(0, count - 1)(*rng_);
}

// ---------------------------------------------------------------------------
// Rewriting machinery

struct WebOps {
  static void set_loops(Web& w, int l) { w.loops_ = l; }

  // Removes a gadget (the given vertices and all their halves) and splices
  // the external strands according to the port pairing.  Chains that close
  // onto themselves become free circle components.
  static void splice_ports(Web& w, const std::vector<int>& ports, const std::vector<int>& partner) {
    auto in_ports = [&](int h) {
      return std::find(ports.begin(), ports.end(), h) != ports.end();
    };
    auto partner_of = [&](int h) -> int {
      for (size_t i = 0; i < ports.size(); ++i)
        if (ports[i] == h) return partner[i];
      fail("port pairing incomplete");
    };
    std::set<int> done;
    for (int p : ports) {
      if (done.count(p)) continue;
      int x = w.halves_[static_cast<size_t>(p)].twin;
      if (in_ports(x)) continue;  // interior of a chain or part of a cycle
      int cur = p;
      while (true) {
        done.insert(cur);
        int q = partner_of(cur);
        done.insert(q);
        int y = w.halves_[static_cast<size_t>(q)].twin;
        if (!in_ports(y)) {
          if (w.halves_[static_cast<size_t>(x)].out == w.halves_[static_cast<size_t>(y)].out)
            fail("splice would join parallel flows");
          w.halves_[static_cast<size_t>(x)].twin = y;
          w.halves_[static_cast<size_t>(y)].twin = x;
          break;
        }
        cur = y;
      }
    }
    for (int p : ports) {
      if (done.count(p)) continue;
      int cur = p;
      do {
        done.insert(cur);
        int q = partner_of(cur);
        done.insert(q);
        cur = w.halves_[static_cast<size_t>(q)].twin;
      } while (cur != p && !done.count(cur));
      w.loops_ += 1;
    }
  }

  static Web compact(const Web& w, const std::vector<char>& dead_vertex,
                     const std::vector<char>& dead_half) {
    Web r;
    r.boundary_n_ = w.boundary_n_;
    r.loops_ = w.loops_;
    std::vector<int> vmap(w.vertices_.size(), -1), hmap(w.halves_.size(), -1);
    for (size_t v = 0; v < w.vertices_.size(); ++v)
      if (!dead_vertex[v]) {
        vmap[v] = static_cast<int>(r.vertices_.size());
        r.vertices_.push_back(w.vertices_[v]);
      }
    for (size_t h = 0; h < w.halves_.size(); ++h)
      if (!dead_half[h]) {
        hmap[h] = static_cast<int>(r.halves_.size());
        r.halves_.push_back(w.halves_[h]);
      }
    for (Web::Half& a : r.halves_) {
      a.twin = hmap[static_cast<size_t>(a.twin)];
      a.vertex = vmap[static_cast<size_t>(a.vertex)];
      a.next = hmap[static_cast<size_t>(a.next)];
      if (a.twin < 0 || a.vertex < 0 || a.next < 0) fail("dangling reference after compaction");
    }
    for (Web::Vertex& v : r.vertices_) {
      v.first = hmap[static_cast<size_t>(v.first)];
      if (v.first < 0) fail("vertex lost its rotation");
    }
    return r;
  }

  static Web remove_gadget(const Web& w0, const std::vector<int>& gadget_vertices,
                           const std::vector<int>& ports, const std::vector<int>& partner) {
    Web w = w0;
    splice_ports(w, ports, partner);
    std::vector<char> dv(w.vertices_.size(), 0), dh(w.halves_.size(), 0);
    for (int v : gadget_vertices) {
      dv[static_cast<size_t>(v)] = 1;
      for (int h : w0.rotation(v)) dh[static_cast<size_t>(h)] = 1;
    }
    return compact(w, dv, dh);
  }

  // Bigon face [h1, h2] between two internal vertices; the -2 factor is
  // applied by the caller.
  static Web apply_bigon(const Web& w, const std::vector<int>& orbit) {
    int h1 = orbit[0], h2 = orbit[1];
    int u = w.half(h1).vertex, v = w.half(h2).vertex;
    if (u == v) fail("bigon with one vertex");
    std::set<int> bigon_halves = {h1, h2, w.half(h1).twin, w.half(h2).twin};
    int tu = -1, tv = -1;
    for (int h : w.rotation(u))
      if (!bigon_halves.count(h)) tu = h;
    for (int h : w.rotation(v))
      if (!bigon_halves.count(h)) tv = h;
    if (tu < 0 || tv < 0) fail("bigon vertices without third edges");
    return remove_gadget(w, {u, v}, {tu, tv}, {tv, tu});
  }

  // Square face [h0..h3]: the four external edges reconnect in the two
  // planar ways, adjacent corners paired.
  static std::array<Web, 2> apply_square(const Web& w, const std::vector<int>& orbit) {
    std::array<int, 4> corner{}, third{};
    std::set<int> square_halves;
    for (int i = 0; i < 4; ++i) {
      corner[static_cast<size_t>(i)] = w.half(orbit[static_cast<size_t>(i)]).vertex;
      square_halves.insert(orbit[static_cast<size_t>(i)]);
      square_halves.insert(w.half(orbit[static_cast<size_t>(i)]).twin);
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (corner[static_cast<size_t>(i)] == corner[static_cast<size_t>(j)])
          fail("square with repeated corner");
    for (int i = 0; i < 4; ++i) {
      third[static_cast<size_t>(i)] = -1;
      for (int h : w.rotation(corner[static_cast<size_t>(i)]))
        if (!square_halves.count(h)) third[static_cast<size_t>(i)] = h;
      if (third[static_cast<size_t>(i)] < 0) fail("square corner without external edge");
    }
    std::vector<int> gadget(corner.begin(), corner.end());
    std::vector<int> ports(third.begin(), third.end());
    Web a = remove_gadget(w, gadget, ports, {third[1], third[0], third[3], third[2]});
    Web b = remove_gadget(w, gadget, ports, {third[3], third[2], third[1], third[0]});
    return {a, b};
  }

  // Slots of a crossing relabelled so the two inflowing strand ends are
  // e3, e0 with e0 following e3 counterclockwise.  Returns {e0, e1, e2, e3}.
  static std::array<int, 4> slots_of(const Web& w, int p) {
    std::vector<int> rot = w.rotation(p);
    if (rot.size() != 4) fail("crossing without four slots");
    int j = -1;
    for (int i = 0; i < 4; ++i) {
      bool in_a = !w.half(rot[static_cast<size_t>(i)]).out;
      bool in_b = !w.half(rot[static_cast<size_t>((i + 1) % 4)]).out;
      if (in_a && in_b) j = i;
    }
    if (j < 0) throw std::invalid_argument("incompatible orientation pattern at crossing");
    return {rot[static_cast<size_t>((j + 1) % 4)], rot[static_cast<size_t>((j + 2) % 4)],
            rot[static_cast<size_t>((j + 3) % 4)], rot[static_cast<size_t>(j)]};
  }

  static Web uncross(const Web& w, int p) {
    auto e = slots_of(w, p);
    return remove_gadget(w, {p}, {e[0], e[1], e[2], e[3]}, {e[1], e[0], e[3], e[2]});
  }

  // The fork--join summand: a sink absorbing the two inflows, a source
  // emitting the two outflows, joined by a middle edge.
  static Web fork_join(const Web& w0, int p) {
    Web w = w0;
    auto e = slots_of(w, p);
    int u = static_cast<int>(w.vertices_.size());
    w.vertices_.push_back(Web::Vertex{Web::VertexKind::internal, 0, -1});
    int vv = static_cast<int>(w.vertices_.size());
    w.vertices_.push_back(Web::Vertex{Web::VertexKind::internal, 0, -1});
    int a3 = static_cast<int>(w.halves_.size());
    w.halves_.push_back(Web::Half{-1, u, -1, false});   // a3: inflow e3
    w.halves_.push_back(Web::Half{-1, u, -1, false});   // a0: inflow e0
    w.halves_.push_back(Web::Half{-1, u, -1, false});   // mu: middle, into the sink
    w.halves_.push_back(Web::Half{-1, vv, -1, true});   // b1: outflow e1
    w.halves_.push_back(Web::Half{-1, vv, -1, true});   // b2: outflow e2
    w.halves_.push_back(Web::Half{-1, vv, -1, true});   // mw: middle, out of the source
    int a0 = a3 + 1, mu = a3 + 2, b1 = a3 + 3, b2 = a3 + 4, mw = a3 + 5;
    auto link3 = [&](int x, int y, int z) {
      w.halves_[static_cast<size_t>(x)].next = y;
      w.halves_[static_cast<size_t>(y)].next = z;
      w.halves_[static_cast<size_t>(z)].next = x;
    };
    link3(a3, a0, mu);
    link3(b1, b2, mw);
    w.vertices_[static_cast<size_t>(u)].first = a3;
    w.vertices_[static_cast<size_t>(vv)].first = b1;
    w.halves_[static_cast<size_t>(mu)].twin = mw;
    w.halves_[static_cast<size_t>(mw)].twin = mu;
    int port_new[4] = {a0, b1, b2, a3};  // indexed like e0..e3
    for (int i = 0; i < 4; ++i) {
      int far = w.halves_[static_cast<size_t>(e[static_cast<size_t>(i)])].twin;
      int as_slot = -1;
      for (int j = 0; j < 4; ++j)
        if (e[static_cast<size_t>(j)] == far) as_slot = j;
      int mine = port_new[i];
      int other = as_slot >= 0 ? port_new[as_slot] : far;
      w.halves_[static_cast<size_t>(mine)].twin = other;
      w.halves_[static_cast<size_t>(other)].twin = mine;
    }
    std::vector<char> dv(w.vertices_.size(), 0), dh(w.halves_.size(), 0);
    dv[static_cast<size_t>(p)] = 1;
    for (int h : w0.rotation(p)) dh[static_cast<size_t>(h)] = 1;
    return compact(w, dv, dh);
  }

  // Stacks the i <-> i+1 swap under the web as a crossing vertex between
  // the old boundary stubs and the boundary line.
  static CrossingDiagram stack(const Web& w0, int i) {
    Web w = w0;
    int bvi = w.boundary_vertex(i);
    int bvj = w.boundary_vertex(i + 1);
    int bi = w.vertices_[static_cast<size_t>(bvi)].first;
    int bj = w.vertices_[static_cast<size_t>(bvj)].first;
    int fi = w.halves_[static_cast<size_t>(bi)].twin;
    int fj = w.halves_[static_cast<size_t>(bj)].twin;
    int p = static_cast<int>(w.vertices_.size());
    w.vertices_.push_back(Web::Vertex{Web::VertexKind::crossing, 0, -1});
    int ur = static_cast<int>(w.halves_.size());
    w.halves_.push_back(Web::Half{fj, p, -1, false});  // up-right, strand from old stub i+1
    w.halves_.push_back(Web::Half{fi, p, -1, false});  // up-left, strand from old stub i
    w.halves_.push_back(Web::Half{bi, p, -1, true});   // down-left, to boundary i
    w.halves_.push_back(Web::Half{bj, p, -1, true});   // down-right, to boundary i+1
    int ul = ur + 1, dl = ur + 2, dr = ur + 3;
    w.halves_[static_cast<size_t>(ur)].next = ul;
    w.halves_[static_cast<size_t>(ul)].next = dl;
    w.halves_[static_cast<size_t>(dl)].next = dr;
    w.halves_[static_cast<size_t>(dr)].next = ur;
    w.vertices_[static_cast<size_t>(p)].first = ur;
    w.halves_[static_cast<size_t>(fj)].twin = ur;
    w.halves_[static_cast<size_t>(fi)].twin = ul;
    w.halves_[static_cast<size_t>(bi)].twin = dl;
    w.halves_[static_cast<size_t>(bj)].twin = dr;
    w.validate();
    return w;
  }
};

namespace {

// Faces all of whose corners are plain internal vertices, of size two
// (bigon) or four (square).  Faces touching the boundary or a crossing are
// never rewritten.
std::vector<std::vector<int>> reducible_faces(const Web& w) {
  std::vector<std::vector<int>> out;
  for (auto& orbit : face_orbits(w)) {
    if (orbit.size() != 2 && orbit.size() != 4) continue;
    bool pure = true;
    for (int h : orbit)
      if (w.vertex(w.half(h).vertex).kind != Web::VertexKind::internal) pure = false;
    if (pure) out.push_back(std::move(orbit));
  }
  return out;
}

Int pow3(int k) {
  Int r = 1;
  for (int i = 0; i < k; ++i) r *= 3;
  return r;
}

}  // namespace

std::array<CrossingDiagram, 2> resolve_crossing(const CrossingDiagram& d, int which) {
  std::vector<int> xs = d.crossing_vertices();
  if (which < 0 || which >= static_cast<int>(xs.size()))
    throw std::invalid_argument("no such crossing");
  int p = xs[static_cast<size_t>(which)];
  Web a = WebOps::fork_join(d, p);
  Web b = WebOps::uncross(d, p);
  a.validate();
  b.validate();
  return {a, b};
}

WebSum resolve_and_reduce(const CrossingDiagram& d0, const Int& c0, Schedule sched) {
  std::map<std::string, std::pair<Web, Int>> work;
  auto push = [&work](Web w, Int c) {
    if (c == 0) return;
    if (w.loops() > 0) {  // circle components evaluate to 3 each
      c *= pow3(w.loops());
      WebOps::set_loops(w, 0);
    }
    std::string key = w.canonical_encoding();
    auto it = work.find(key);
    if (it == work.end()) {
      work.emplace(std::move(key), std::make_pair(std::move(w), std::move(c)));
    } else {
      it->second.second += c;
      if (it->second.second == 0) work.erase(it);
    }
  };
  push(d0, c0);
  WebSum out;
  while (!work.empty()) {
    auto it = work.begin();
    std::advance(it, static_cast<long>(sched.pick(work.size())));
    Web w = std::move(it->second.first);
    Int c = std::move(it->second.second);
    work.erase(it);

    long long before = w.measure();
    auto faces = reducible_faces(w);
    if (!faces.empty()) {
      const auto& f = faces[sched.pick(faces.size())];
      if (f.size() == 2) {
        Web r = WebOps::apply_bigon(w, f);
        if (r.measure() >= before) fail("bigon rewrite did not shrink");
        push(std::move(r), c * -2);
      } else {
        auto [r1, r2] = WebOps::apply_square(w, f);
        if (r1.measure() >= before || r2.measure() >= before) fail("square rewrite did not shrink");
        push(std::move(r1), c);
        push(std::move(r2), c);
      }
      continue;
    }
    auto xs = w.crossing_vertices();
    if (!xs.empty()) {
      auto [a, b] = resolve_crossing(w, static_cast<int>(sched.pick(xs.size())));
      push(std::move(a), c);
      push(std::move(b), c);
      continue;
    }
    w.validate();
    out.add(w, c);
  }
  return out;
}

WebSum reduce(const Web& w, Schedule sched) { return resolve_and_reduce(w, 1, sched); }

bool is_non_elliptic(const Web& w) {
  if (!w.is_plain()) throw std::invalid_argument("is_non_elliptic expects a plain web");
  return w.loops() == 0 && reducible_faces(w).empty();
}

std::vector<int> reducible_face_sizes(const Web& w) {
  std::vector<int> out;
  for (const auto& f : reducible_faces(w)) out.push_back(static_cast<int>(f.size()));
  std::sort(out.begin(), out.end());
  return out;
}

Web tripod_row(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  WebBuilder b(3 * n);
  for (int k = 1; k <= n; ++k)
    b.source({WebBuilder::B(3 * k - 1), WebBuilder::B(3 * k), WebBuilder::B(3 * k - 2)});
  return b.build();
}

CrossingDiagram stack_crossing(const Web& w, int i) {
  if (i < 1 || i + 1 > w.boundary_points())
    throw std::invalid_argument("generator index out of range");
  return WebOps::stack(w, i);
}

WebSum act_web(const WebSum& s, int i, Schedule sched) {
  WebSum out;
  for (const auto& [k, t] : s.terms())
    out.add(resolve_and_reduce(stack_crossing(t.web, i), t.coeff, sched));
  return out;
}

WebSum act_web(const Web& w, int i, Schedule sched) {
  return resolve_and_reduce(stack_crossing(w, i), 1, sched);
}

// ---------------------------------------------------------------------------
// Geometric embedding of fork diagrams

namespace {

struct Chord {
  int x, y;      // endpoints on the line, x < y
  int arc;       // index of the owning arc
  bool is_left;  // left arc flows toward x, right arc toward y
};

struct ChordCrossing {
  int c1, c2;          // chord indices, chord[c1].x < chord[c2].x
  long long num, den;  // horizontal position of the crossing point
  int vertex = -1;     // builder vertex id
};

// Two arches over diameters (x1,y1), (x2,y2) meet where
// X = (x2*y2 - x1*y1) / ((x2+y2) - (x1+y1)); the denominator is positive
// when x1 < x2 < y1 < y2.
ChordCrossing make_crossing(const std::vector<Chord>& chords, int i, int j) {
  int a = i, b = j;
  if (chords[static_cast<size_t>(a)].x > chords[static_cast<size_t>(b)].x) std::swap(a, b);
  const Chord& c1 = chords[static_cast<size_t>(a)];
  const Chord& c2 = chords[static_cast<size_t>(b)];
  long long num = static_cast<long long>(c2.x) * c2.y - static_cast<long long>(c1.x) * c1.y;
  long long den = (c2.x + c2.y) - (c1.x + c1.y);
  return ChordCrossing{a, b, num, den, -1};
}

}  // namespace

CrossingDiagram embed_fork(const ForkDiagram& d) {
  std::vector<Chord> chords;
  for (int k = 0; k < d.arc_count(); ++k) {
    const Arc& a = d.arc(k);
    chords.push_back(Chord{a.left, a.middle, k, true});
    chords.push_back(Chord{a.middle, a.right, k, false});
  }
  std::vector<ChordCrossing> crossings;
  for (size_t i = 0; i < chords.size(); ++i)
    for (size_t j = i + 1; j < chords.size(); ++j) {
      if (chords[i].arc == chords[j].arc) continue;
      if (interleaves(chords[i].x, chords[i].y, chords[j].x, chords[j].y))
        crossings.push_back(make_crossing(chords, static_cast<int>(i), static_cast<int>(j)));
    }

  // Crossings met by each chord, ordered from its left endpoint; ties
  // (concurrent arches) are broken by the other chord's endpoints, which
  // differs from any geometric perturbation by triangle moves only.
  std::vector<std::vector<int>> along(chords.size());
  for (size_t c = 0; c < crossings.size(); ++c) {
    along[static_cast<size_t>(crossings[c].c1)].push_back(static_cast<int>(c));
    along[static_cast<size_t>(crossings[c].c2)].push_back(static_cast<int>(c));
  }
  for (size_t ch = 0; ch < chords.size(); ++ch) {
    std::sort(along[ch].begin(), along[ch].end(), [&](int a, int b) {
      const ChordCrossing& ca = crossings[static_cast<size_t>(a)];
      const ChordCrossing& cb = crossings[static_cast<size_t>(b)];
      long long lhs = ca.num * cb.den, rhs = cb.num * ca.den;
      if (lhs != rhs) return lhs < rhs;
      int oa = ca.c1 == static_cast<int>(ch) ? ca.c2 : ca.c1;
      int ob = cb.c1 == static_cast<int>(ch) ? cb.c2 : cb.c1;
      return std::make_pair(chords[static_cast<size_t>(oa)].x, chords[static_cast<size_t>(oa)].y) <
             std::make_pair(chords[static_cast<size_t>(ob)].x, chords[static_cast<size_t>(ob)].y);
    });
  }

  WebBuilder b(d.points());
  using NB = WebBuilder::Nbr;
  int next_edge = 1;
  // pieces[ch][t] = edge tag of the t-th piece of the chord, west to east;
  // extreme pieces whose far end is the boundary are tagged B there.
  std::vector<std::vector<NB>> pieces(chords.size());
  for (size_t ch = 0; ch < chords.size(); ++ch) {
    const Chord& c = chords[ch];
    size_t k = along[ch].size();
    int boundary_end = c.is_left ? c.x : c.y;  // the non-tripod end
    bool boundary_is_west = c.is_left;
    for (size_t t = 0; t <= k; ++t) {
      bool touches_boundary = (boundary_is_west && t == 0) || (!boundary_is_west && t == k);
      pieces[ch].push_back(touches_boundary ? WebBuilder::B(boundary_end)
                                            : WebBuilder::E(next_edge++));
    }
  }

  // Tripods: counterclockwise rotation [stem, right arc, left arc].
  for (int k = 0; k < d.arc_count(); ++k) {
    const Arc& a = d.arc(k);
    const auto& right_pieces = pieces[static_cast<size_t>(2 * k + 1)];
    const auto& left_pieces = pieces[static_cast<size_t>(2 * k)];
    b.source({WebBuilder::B(a.middle), right_pieces.front(), left_pieces.back()});
  }

  // Crossings: counterclockwise rotation [C east, D east, C west, D west]
  // where C is the chord whose left endpoint is smaller.  A left arc flows
  // toward its west end, a right arc toward its east end.
  for (size_t cx = 0; cx < crossings.size(); ++cx) {
    const ChordCrossing& cr = crossings[cx];
    auto piece_index = [&](int ch) {
      const auto& list = along[static_cast<size_t>(ch)];
      return static_cast<size_t>(std::find(list.begin(), list.end(), static_cast<int>(cx)) -
                                 list.begin());
    };
    size_t i1 = piece_index(cr.c1), i2 = piece_index(cr.c2);
    NB c_west = pieces[static_cast<size_t>(cr.c1)][i1];
    NB c_east = pieces[static_cast<size_t>(cr.c1)][i1 + 1];
    NB d_west = pieces[static_cast<size_t>(cr.c2)][i2];
    NB d_east = pieces[static_cast<size_t>(cr.c2)][i2 + 1];
    bool c_flows_west = chords[static_cast<size_t>(cr.c1)].is_left;
    bool d_flows_west = chords[static_cast<size_t>(cr.c2)].is_left;
    // out flags per slot: a west-flowing strand leaves via its west slot
    b.crossing({c_east, d_east, c_west, d_west},
               {!c_flows_west, !d_flows_west, c_flows_west, d_flows_west});
  }
  return b.build();
}

WebSum web_of_fork(const ForkDiagram& d, Schedule sched) {
  return resolve_and_reduce(embed_fork(d), 1, sched);
}

WebSum web_of_fork_via_action(const ForkDiagram& d) {
  int n = d.arc_count();
  std::vector<int> images(static_cast<size_t>(3 * n));
  for (int k = 0; k < n; ++k) {
    const Arc& a = d.arc(k);
    images[static_cast<size_t>(3 * k)] = a.left;
    images[static_cast<size_t>(3 * k + 1)] = a.middle;
    images[static_cast<size_t>(3 * k + 2)] = a.right;
  }
  Permutation sigma = Permutation::from_one_line(std::move(images));
  WebSum s;
  s.add(tripod_row(n), 1);
  for (int i : sigma.reduced_word()) s = act_web(s, i);
  return s;
}

Web top_web(const ForkDiagram& m) {
  if (!is_m_diagram(m)) throw std::invalid_argument("top_web expects an M-diagram");
  Web w = embed_fork(m);
  while (w.crossing_count() > 0) w = WebOps::fork_join(w, w.crossing_vertices().front());
  w.validate();
  if (!is_non_elliptic(w)) fail("fork-join resolution of an M-diagram was not reduced");
  return w;
}

}  // namespace spechtweb
